//! Dense univariate and sparse bivariate polynomials with big-integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

/// `coeffs[k]` is the coefficient of `λ^k`. Never has a trailing zero; the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::new(vec![c.into()])
    }

    /// `c λ^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        IntPolynomial::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `λ^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, mut e: u64) -> IntPolynomial {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * x + Rational::from_integer(c.clone())
        })
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.sign() != num_bigint::Sign::Minus)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, var: &str) -> fmt::Result {
    let neg = c.sign() == num_bigint::Sign::Minus;
    let mag = if neg { -c } else { c.clone() };
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    if var.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{var}")
    } else {
        write!(f, "{mag}{var}")
    }
}

/// Ascending powers of `λ`: `1 + 6λ + 6λ² + 2λ³`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ{}", superscript(k)),
            };
            write_term(f, first, c, &var)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

/// Outcome of a coefficientwise comparison `p <= q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Termwise {
    /// `slack[k] = q_k - p_k >= 0` for every `k`.
    Holds {
        #[serde(serialize_with = "ser_bigints")]
        slack: Vec<BigInt>,
    },
    /// The least `k` with `p_k > q_k`.
    Fails {
        index: usize,
        #[serde(serialize_with = "ser_bigint")]
        lhs: BigInt,
        #[serde(serialize_with = "ser_bigint")]
        rhs: BigInt,
    },
}

impl Termwise {
    pub fn holds(&self) -> bool {
        matches!(self, Termwise::Holds { .. })
    }
}

pub(crate) fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let strings: Vec<String> = v.iter().map(ToString::to_string).collect();
    strings.serialize(s)
}

/// Checks `coeff_k(p) <= coeff_k(q)` for every `k`, missing coefficients
/// being zero.
pub fn coeffwise_leq(p: &IntPolynomial, q: &IntPolynomial) -> Termwise {
    let len = p.coeffs.len().max(q.coeffs.len());
    let mut slack = Vec::with_capacity(len);
    for k in 0..len {
        let (a, b) = (p.coeff(k), q.coeff(k));
        if a > b {
            return Termwise::Fails {
                index: k,
                lhs: a,
                rhs: b,
            };
        }
        slack.push(b - a);
    }
    Termwise::Holds { slack }
}

/// Sparse polynomial in `μ` and `λ`; key `(j, k)` is the coefficient of
/// `μ^j λ^k`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, BigInt::one());
        p
    }

    /// Adds `c μ^j λ^k` in place.
    pub fn add_term(&mut self, j: usize, k: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((j, k)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(j, k));
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (j, k, c) in terms {
            p.add_term(j, k, c);
        }
        p
    }

    pub fn coeff(&self, j: usize, k: usize) -> BigInt {
        self.coeffs.get(&(j, k)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in `(j, k)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.coeffs.iter().map(|(&(j, k), c)| (j, k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn pow(&self, mut e: u64) -> BivariatePolynomial {
        let mut base = self.clone();
        let mut acc = BivariatePolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exchanges the roles of `μ` and `λ`.
    pub fn swapped(&self) -> BivariatePolynomial {
        BivariatePolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(j, k), c)| ((k, j), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `μ = λ`.
    pub fn diagonal(&self) -> IntPolynomial {
        let len = self
            .coeffs
            .keys()
            .map(|&(j, k)| j + k + 1)
            .max()
            .unwrap_or(0);
        let mut out = vec![BigInt::zero(); len];
        for (&(j, k), c) in &self.coeffs {
            out[j + k] += c;
        }
        IntPolynomial::new(out)
    }

    pub fn eval(&self, mu: &Rational, lam: &Rational) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, (&(j, k), c)| {
                acc + Rational::from_integer(c.clone())
                    * Pow::pow(mu, j as u32)
                    * Pow::pow(lam, k as u32)
            })
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(j, k), c) in &rhs.coeffs {
            out.add_term(j, k, c.clone());
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(j1, k1), a) in &self.coeffs {
            for (&(j2, k2), b) in &rhs.coeffs {
                out.add_term(j1 + j2, k1 + k2, a * b);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let power = |name: &str, e: usize| match e {
            0 => String::new(),
            1 => name.to_string(),
            _ => format!("{name}{}", superscript(e)),
        };
        // Ascending total degree, then ascending power of μ.
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by_key(|(&(j, k), _)| (j + k, std::cmp::Reverse(j)));
        for (i, (&(j, k), c)) in terms.into_iter().enumerate() {
            let var = format!("{}{}", power("μ", j), power("λ", k));
            write_term(f, i == 0, c, &var)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePolynomial({self})")
    }
}

/// Serialized as `[[j, k, "coeff"], ...]`.
impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<(usize, usize, String)> = self
            .coeffs
            .iter()
            .map(|(&(j, k), c)| (j, k, c.to_string()))
            .collect();
        triples.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let triples = Vec::<(usize, usize, String)>::deserialize(d)?;
        let mut p = BivariatePolynomial::zero();
        for (j, k, c) in triples {
            p.add_term(j, k, c.parse().map_err(D::Error::custom)?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn basic_arithmetic() {
        assert_eq!(p(&[1, 1]).pow(0), IntPolynomial::one());
        assert_eq!(p(&[1, 3]).pow(2), p(&[1, 6, 9]));
        assert_eq!(&IntPolynomial::zero() * &p(&[2, 5]), IntPolynomial::zero());
        assert_eq!(&p(&[1, 2, 3]) + &p(&[0, 0, -3]), p(&[1, 2]));
        assert_eq!(p(&[0, 0, 0]), IntPolynomial::zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(p(&[1, 5, 5]).degree(), Some(2));
    }

    #[test]
    fn evaluation() {
        let q = p(&[1, 3]);
        assert_eq!(
            q.eval(&parse_rational("1").unwrap()),
            parse_rational("4").unwrap()
        );
        assert_eq!(
            q.eval(&parse_rational("1/2").unwrap()),
            parse_rational("5/2").unwrap()
        );
        assert_eq!(
            IntPolynomial::zero().eval(&parse_rational("7/3").unwrap()),
            Rational::zero()
        );
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 6, 6, 2]).to_string(), "1 + 6λ + 6λ² + 2λ³");
        assert_eq!(
            p(&[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 12]).to_string(),
            "λ + 12λ¹¹"
        );
        assert_eq!(p(&[1, -2]).to_string(), "1 - 2λ");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        let b = BivariatePolynomial::from_terms([
            (0, 0, 1.into()),
            (1, 0, 2.into()),
            (0, 1, 2.into()),
            (2, 0, 1.into()),
            (0, 2, 1.into()),
        ]);
        assert_eq!(b.to_string(), "1 + 2μ + 2λ + μ² + λ²");
    }

    #[test]
    fn termwise() {
        assert!(coeffwise_leq(&p(&[1, 2]), &p(&[1, 3])).holds());
        assert_eq!(
            coeffwise_leq(&p(&[1, 4]), &p(&[1, 3])),
            Termwise::Fails {
                index: 1,
                lhs: 4.into(),
                rhs: 3.into()
            }
        );
        let q = p(&[1, 5, 5]);
        assert_eq!(
            coeffwise_leq(&q, &q),
            Termwise::Holds {
                slack: vec![0.into(); 3]
            }
        );
        assert!(!coeffwise_leq(&p(&[1, 0, 1]), &p(&[1, 9])).holds());
    }

    #[test]
    fn json_shapes() {
        let s = serde_json::to_string(&p(&[1, 6, 6, 2])).unwrap();
        assert_eq!(s, r#"["1","6","6","2"]"#);
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p(&[1, 6, 6, 2]));

        let b = BivariatePolynomial::from_terms([(0, 0, 1.into()), (2, 1, 5.into())]);
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"[[0,0,"1"],[2,1,"5"]]"#);
        let back: BivariatePolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn bivariate_ops() {
        let x =
            BivariatePolynomial::from_terms([(0, 0, 1.into()), (1, 0, 1.into()), (0, 1, 1.into())]);
        let sq = x.pow(2);
        assert_eq!(sq.coeff(1, 1), 2.into());
        assert_eq!(sq.diagonal(), p(&[1, 2]).pow(2));
        assert_eq!(sq.swapped(), sq);
        let half = parse_rational("1/2").unwrap();
        let two = parse_rational("2").unwrap();
        assert_eq!(sq.eval(&half, &two), parse_rational("49/4").unwrap());
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-50i64..50, 0..6).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn pow_adds_exponents(a in arb_poly(), x in 0u64..4, y in 0u64..4) {
            prop_assert_eq!(a.pow(x + y), &a.pow(x) * &a.pow(y));
        }

        #[test]
        fn eval_is_multiplicative(a in arb_poly(), b in arb_poly(), num in -5i64..5, den in 1i64..5) {
            let x = Rational::new(num.into(), den.into());
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
