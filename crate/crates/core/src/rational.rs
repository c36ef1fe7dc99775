//! Exact nonnegative activities and cross-powered comparisons.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Pow, Signed};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parses `"3"`, `"-2"`, `"1/2"` or `"0.25"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let err = || Error::Rational(format!("cannot parse {text:?} as a rational"));
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| err())?;
        let scale = Pow::pow(BigInt::from(10), frac.len() as u32);
        return Ok(Rational::new(digits, scale));
    }
    let r: Rational = t.parse().map_err(|_| err())?;
    Ok(r)
}

/// `a` for integers, `a/b` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn require_nonnegative(r: &Rational) -> Result<()> {
    if r.is_negative() {
        return Err(Error::NegativeActivity(format_rational(r)));
    }
    Ok(())
}

/// Both sides of a cross-powered comparison, kept for auditing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoweredComparison {
    /// `lhs^rhs_exp`.
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational,
    /// `rhs^lhs_exp`.
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
    #[serde(skip)]
    pub ordering: Ordering,
}

pub(crate) fn ser_rational<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// Orders `lhs^(1/lhs_exp)` against `rhs^(1/rhs_exp)` by comparing
/// `lhs^rhs_exp` with `rhs^lhs_exp` exactly.
pub fn compare_powered(
    lhs: &Rational,
    lhs_exp: u32,
    rhs: &Rational,
    rhs_exp: u32,
) -> Result<PoweredComparison> {
    require_nonnegative(lhs)?;
    require_nonnegative(rhs)?;
    if lhs_exp == 0 || rhs_exp == 0 {
        return Err(Error::Parameter("root exponents must be positive".into()));
    }
    let l = Pow::pow(lhs, rhs_exp);
    let r = Pow::pow(rhs, lhs_exp);
    let ordering = l.cmp(&r);
    Ok(PoweredComparison {
        lhs: l,
        rhs: r,
        ordering,
    })
}
