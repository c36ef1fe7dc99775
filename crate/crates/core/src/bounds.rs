//! Exact checks of the regular-graph bounds.
//!
//! Each check produces a [`BoundReport`] holding both sides of an exact
//! comparison. A bound of the form `X <= Y^{N/2d}` is decided by comparing
//! `X^{2d}` with `Y^N`; the report stores those powered values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{full_set, members, Bipartition, Graph};
use crate::graph6::write_graph6;
use crate::hom::{hom_distribution, TargetGraph, TargetGraphJson};
use crate::indset::{bipartite_profile, independence_count, independence_polynomial};
use crate::poly::{coeffwise_leq, BivariatePolynomial, IntPolynomial, Termwise};
use crate::rational::{
    compare_powered, format_rational, require_nonnegative, ser_rational, Rational,
};

/// Default bound on `n` for the pair-counting half of the double-cover check.
pub const PAIR_COUNT_MAX_N: usize = 13;

/// Components beyond which only sampled orientations are checked.
pub const ORIENTATION_EXHAUSTIVE_MAX_COMPONENTS: usize = 10;
pub const ORIENTATION_SAMPLES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BoundId {
    #[serde(rename = "THM1")]
    Thm1,
    #[serde(rename = "COR1")]
    Cor1,
    #[serde(rename = "EQ3_EDGE")]
    Eq3Edge,
    #[serde(rename = "EQ4_BIWEIGHTED")]
    Eq4Biweighted,
    #[serde(rename = "EQ5_CHAIN")]
    Eq5Chain,
    #[serde(rename = "EQ6_TERMWISE")]
    Eq6Termwise,
    #[serde(rename = "EQ7_HOM")]
    Eq7Hom,
    #[serde(rename = "EQ8_HOM_WEIGHTED")]
    Eq8HomWeighted,
}

impl BoundId {
    pub const ALL: [BoundId; 8] = [
        BoundId::Thm1,
        BoundId::Cor1,
        BoundId::Eq3Edge,
        BoundId::Eq4Biweighted,
        BoundId::Eq5Chain,
        BoundId::Eq6Termwise,
        BoundId::Eq7Hom,
        BoundId::Eq8HomWeighted,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BoundId::Thm1 => "THM1",
            BoundId::Cor1 => "COR1",
            BoundId::Eq3Edge => "EQ3_EDGE",
            BoundId::Eq4Biweighted => "EQ4_BIWEIGHTED",
            BoundId::Eq5Chain => "EQ5_CHAIN",
            BoundId::Eq6Termwise => "EQ6_TERMWISE",
            BoundId::Eq7Hom => "EQ7_HOM",
            BoundId::Eq8HomWeighted => "EQ8_HOM_WEIGHTED",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    /// Accepts the full id or its short form (`EQ3` for `EQ3_EDGE`).
    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        BoundId::ALL
            .into_iter()
            .find(|b| b.name() == up || b.name().split('_').next() == Some(up.as_str()))
            .ok_or_else(|| Error::Parameter(format!("unknown bound {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Strict,
    Equality,
    Violation,
}

impl Verdict {
    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Verdict::Strict,
            Ordering::Equal => Verdict::Equality,
            Ordering::Greater => Verdict::Violation,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Strict => "strict",
            Verdict::Equality => "equality",
            Verdict::Violation => "violation",
        })
    }
}

/// Whether the instance lies where the bound is a theorem. A violation in
/// the proved regime means the code is wrong; in the conjectured regime it
/// is a finding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Proved,
    Conjectured,
}

/// Parameters of one check; absent fields do not apply.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "ser_opt_rational"
    )]
    pub lambda: Option<Rational>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "ser_opt_rational"
    )]
    pub mu: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<TargetGraphJson>,
    /// Left side of the bipartition used, as a vertex list.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<usize>>,
}

fn ser_opt_rational<S: serde::Serializer>(
    r: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => ser_rational(r, s),
        None => s.serialize_none(),
    }
}

impl Params {
    /// Compact `key=value` rendering used for ordering and CSV.
    pub fn render(&self) -> String {
        let mut parts = vec![format!("n={}", self.n)];
        if let Some(d) = self.d {
            parts.push(format!("d={d}"));
        }
        if let Some(mu) = &self.mu {
            parts.push(format!("mu={}", format_rational(mu)));
        }
        if let Some(l) = &self.lambda {
            parts.push(format!("lambda={}", format_rational(l)));
        }
        if let Some(t) = &self.target {
            parts.push(format!(
                "target={}",
                serde_json::to_string(t).expect("target serializes")
            ));
        }
        if let Some(left) = &self.left {
            let items: Vec<String> = left.iter().map(ToString::to_string).collect();
            parts.push(format!("left={}", items.join(",")));
        }
        parts.join(";")
    }
}

/// Extra evidence attached to some checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Detail {
    /// Coefficientwise comparison; `lhs`/`rhs` are the values at `λ = 1`.
    Termwise {
        lhs_poly: IntPolynomial,
        rhs_poly: IntPolynomial,
        outcome: Termwise,
    },
    /// Coefficientwise comparison in `(μ, λ)`.
    BivariateTermwise {
        lhs_poly: BivariatePolynomial,
        rhs_poly: BivariatePolynomial,
        #[serde(skip_serializing_if = "Option::is_none")]
        first_violation: Option<(usize, usize)>,
    },
    /// Independent sets of the double cover counted against pairs `(A, B)`
    /// with `A` independent from `B`, size by size.
    PairCount { holds: bool },
    /// Orientations of the components that were checked; the report keeps
    /// the largest left-hand side.
    Orientations { checked: usize, exhaustive: bool },
}

/// Outcome of one exact inequality check `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound: BoundId,
    pub graph6: String,
    pub params: Params,
    pub verdict: Verdict,
    pub regime: Regime,
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
    /// How `lhs` and `rhs` were formed, e.g. `P^4 vs R^5`.
    pub form: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Detail>,
}

impl BoundReport {
    /// A violation inside the proved regime.
    pub fn is_bug(&self) -> bool {
        self.verdict == Verdict::Violation && self.regime == Regime::Proved
    }

    /// A violation of a conjectured bound.
    pub fn is_finding(&self) -> bool {
        self.verdict == Verdict::Violation && self.regime == Regime::Conjectured
    }

    /// The verdict agrees with the stored values and evidence.
    pub fn is_consistent(&self) -> bool {
        match &self.detail {
            Some(Detail::Termwise { outcome, .. }) => match outcome {
                Termwise::Fails { .. } => self.verdict == Verdict::Violation,
                Termwise::Holds { slack } => {
                    let expect = if slack.iter().all(Zero::is_zero) {
                        Verdict::Equality
                    } else {
                        Verdict::Strict
                    };
                    self.verdict == expect && self.lhs <= self.rhs
                }
            },
            Some(Detail::BivariateTermwise {
                first_violation, ..
            }) => first_violation.is_some() == (self.verdict == Verdict::Violation),
            Some(Detail::PairCount { holds: false }) => self.verdict == Verdict::Violation,
            _ => self.verdict == Verdict::from_ordering(self.lhs.cmp(&self.rhs)),
        }
    }
}

fn base_params(g: &Graph) -> Params {
    Params {
        n: g.n(),
        ..Params::default()
    }
}

fn positive_degree(g: &Graph) -> Result<usize> {
    let d = g.require_regular()?;
    if d == 0 {
        return Err(Error::Parameter("bounds need degree d >= 1".into()));
    }
    Ok(d)
}

fn exponent(x: usize) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::Parameter("exponent too large".into()))
}

/// `a^p vs b^q`, with fractional bases in parentheses.
fn powered_form(a: &Rational, p: usize, b: &Rational, q: usize) -> String {
    let base = |r: &Rational| {
        if r.is_integer() {
            format_rational(r)
        } else {
            format!("({})", format_rational(r))
        }
    };
    format!("{}^{p} vs {}^{q}", base(a), base(b))
}

fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// `2(1+λ)^d - 1`, the independence polynomial of `K_{d,d}`.
pub fn extremal_polynomial(d: usize) -> IntPolynomial {
    let one_plus = IntPolynomial::from_i64s(&[1, 1]).pow(d as u64);
    &(&one_plus * &IntPolynomial::constant(2)) + &IntPolynomial::constant(-1)
}

/// `P(λ, G)^{2d}` against `(2(1+λ)^d - 1)^N` for `d`-regular `G`.
pub fn check_theorem1(g: &Graph, lam: &Rational) -> Result<BoundReport> {
    theorem1_report(g, lam, BoundId::Thm1)
}

/// [`check_theorem1`] at `λ = 1`: `i(G)^{2d}` against `(2^{d+1} - 1)^N`.
pub fn check_corollary1(g: &Graph) -> Result<BoundReport> {
    theorem1_report(g, &Rational::one(), BoundId::Cor1)
}

fn theorem1_report(g: &Graph, lam: &Rational, bound: BoundId) -> Result<BoundReport> {
    require_nonnegative(lam)?;
    let d = positive_degree(g)?;
    let value = independence_polynomial(g).eval(lam);
    let extremal = extremal_polynomial(d).eval(lam);
    let n = g.n();
    let cmp = compare_powered(&value, exponent(n)?, &extremal, exponent(2 * d)?)?;
    Ok(BoundReport {
        bound,
        graph6: write_graph6(g),
        params: Params {
            d: Some(d),
            lambda: (bound == BoundId::Thm1).then(|| lam.clone()),
            ..base_params(g)
        },
        verdict: Verdict::from_ordering(cmp.ordering),
        regime: Regime::Proved,
        form: powered_form(&value, 2 * d, &extremal, n),
        lhs: cmp.lhs,
        rhs: cmp.rhs,
        detail: None,
    })
}

/// `Σ_{A indep. from B} λ^{|A|+|B|}` by direct enumeration of all `4^n`
/// pairs.
pub fn pair_polynomial(g: &Graph) -> Result<IntPolynomial> {
    pair_polynomial_with_limit(g, PAIR_COUNT_MAX_N)
}

pub fn pair_polynomial_with_limit(g: &Graph, max_n: usize) -> Result<IntPolynomial> {
    let n = g.n();
    if n > max_n {
        return Err(Error::TooLarge {
            what: "pair counting",
            n,
            max: max_n,
        });
    }
    let mut hist = vec![0u64; 2 * n + 1];
    let all = full_set(n);
    for a in 0..=all {
        let blocked = g.neighborhood(a);
        let size_a = a.count_ones() as usize;
        for b in 0..=all {
            if blocked & b == 0 {
                hist[size_a + b.count_ones() as usize] += 1;
            }
        }
    }
    Ok(IntPolynomial::new(
        hist.into_iter().map(BigInt::from).collect(),
    ))
}

/// The double-cover step: `P(λ, G)^2 <= P(λ, G x K_2)`, and for `n <= 13`
/// the identity between independent sets of `G x K_2` and pairs `(A, B)`
/// with `A` independent from `B`. `G` need not be regular.
pub fn check_chain_eq5(g: &Graph, lam: &Rational) -> Result<BoundReport> {
    let pairs = if g.n() <= PAIR_COUNT_MAX_N {
        Some(pair_polynomial(g)?)
    } else {
        None
    };
    chain_eq5_with_pairs(g, lam, pairs.as_ref())
}

/// [`check_chain_eq5`] with a precomputed pair polynomial.
pub fn chain_eq5_with_pairs(
    g: &Graph,
    lam: &Rational,
    pairs: Option<&IntPolynomial>,
) -> Result<BoundReport> {
    require_nonnegative(lam)?;
    let cover = g.double_cover()?;
    let cover_poly = independence_polynomial(&cover);
    let square = independence_polynomial(g).eval(lam).pow(2u32);
    let cover_value = cover_poly.eval(lam);
    let mut verdict = Verdict::from_ordering(square.cmp(&cover_value));
    let detail = pairs.map(|p| {
        let holds = *p == cover_poly;
        if !holds {
            verdict = Verdict::Violation;
        }
        Detail::PairCount { holds }
    });
    Ok(BoundReport {
        bound: BoundId::Eq5Chain,
        graph6: write_graph6(g),
        params: Params {
            lambda: Some(lam.clone()),
            d: g.regular_degree(),
            ..base_params(g)
        },
        verdict,
        regime: Regime::Proved,
        form: "P(G)^2 vs P(G x K2)".into(),
        lhs: square,
        rhs: cover_value,
        detail,
    })
}

/// `i(G)^L` against `Π_{uv} (2^{d(u)} + 2^{d(v)} - 1)^{L/(d(u)d(v))}`, with
/// `L` the least common multiple of the `d(u)d(v)`. Proved regime for
/// maximum degree at most 5.
pub fn check_edge_weighted_eq3(g: &Graph) -> Result<BoundReport> {
    if g.has_isolated_vertex() {
        return Err(Error::Contract(
            "edge-weighted bound needs a graph without isolated vertices".into(),
        ));
    }
    let degrees = g.degrees();
    let edges = g.edges();
    let lcm = edges.iter().fold(BigInt::one(), |acc, &(u, v)| {
        acc.lcm(&BigInt::from(degrees[u] * degrees[v]))
    });
    let l: u32 = lcm
        .try_into()
        .map_err(|_| Error::Parameter("degree lcm too large".into()))?;
    let count = independence_count(g);
    let lhs = Pow::pow(&count, l);
    let mut rhs = BigInt::one();
    for &(u, v) in &edges {
        let (du, dv) = (degrees[u], degrees[v]);
        let factor: BigInt = (BigInt::one() << du) + (BigInt::one() << dv) - 1;
        rhs *= Pow::pow(&factor, l / (du * dv) as u32);
    }
    let lhs = Rational::from_integer(lhs);
    let rhs = Rational::from_integer(rhs);
    Ok(BoundReport {
        bound: BoundId::Eq3Edge,
        graph6: write_graph6(g),
        params: Params {
            d: g.regular_degree(),
            ..base_params(g)
        },
        verdict: Verdict::from_ordering(lhs.cmp(&rhs)),
        regime: if g.max_degree() <= 5 {
            Regime::Proved
        } else {
            Regime::Conjectured
        },
        form: format!("{count}^{l} vs prod over edges"),
        lhs,
        rhs,
        detail: None,
    })
}

/// `(1+μ)^d + (1+λ)^d - 1`.
fn biweighted_extremal(d: usize, mu: &Rational, lam: &Rational) -> Rational {
    let one = Rational::one();
    Pow::pow(&(&one + mu), d as u32) + Pow::pow(&(&one + lam), d as u32) - one
}

/// `Σ_I μ^{|I ∩ left|} λ^{|I ∩ right|}` against
/// `((1+μ)^d + (1+λ)^d - 1)^{N/2d}` for one bipartition of a bipartite
/// `d`-regular graph.
pub fn check_biweighted_eq4(
    g: &Graph,
    bp: &Bipartition,
    mu: &Rational,
    lam: &Rational,
) -> Result<BoundReport> {
    require_nonnegative(mu)?;
    require_nonnegative(lam)?;
    let d = positive_degree(g)?;
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let profile = bipartite_profile(g, bp)?;
    let value = profile.bivar.eval(mu, lam);
    biweighted_report(g, d, bp.left, value, mu, lam, None)
}

fn biweighted_report(
    g: &Graph,
    d: usize,
    left: u64,
    value: Rational,
    mu: &Rational,
    lam: &Rational,
    detail: Option<Detail>,
) -> Result<BoundReport> {
    let extremal = biweighted_extremal(d, mu, lam);
    let n = g.n();
    let cmp = compare_powered(&value, exponent(n)?, &extremal, exponent(2 * d)?)?;
    Ok(BoundReport {
        bound: BoundId::Eq4Biweighted,
        graph6: write_graph6(g),
        params: Params {
            d: Some(d),
            mu: Some(mu.clone()),
            lambda: Some(lam.clone()),
            left: Some(members(left).collect()),
            ..base_params(g)
        },
        verdict: Verdict::from_ordering(cmp.ordering),
        regime: Regime::Proved,
        form: powered_form(&value, 2 * d, &extremal, n),
        lhs: cmp.lhs,
        rhs: cmp.rhs,
        detail,
    })
}

/// Per-component profiles of a bipartite graph under its canonical
/// bipartition, used to evaluate every side orientation cheaply.
pub struct ComponentProfiles {
    /// Component vertex set, its canonical left side, and its profile.
    parts: Vec<(u64, u64, BivariatePolynomial)>,
}

impl ComponentProfiles {
    pub fn new(g: &Graph) -> Result<Self> {
        let mut parts = Vec::new();
        for comp in g.connected_components() {
            let bp = g.canonical_bipartition(comp).ok_or(Error::NotBipartite)?;
            let sub = g.induced(comp);
            let local = sub
                .graph
                .canonical_bipartition(sub.graph.vertex_set())
                .ok_or(Error::NotBipartite)?;
            let profile = bipartite_profile(&sub.graph, &local)?;
            parts.push((comp, bp.left, profile.bivar));
        }
        Ok(ComponentProfiles { parts })
    }

    pub fn components(&self) -> usize {
        self.parts.len()
    }

    /// Orientation masks to check: all `2^(c-1)` up to a global swap when
    /// there are few components, otherwise the canonical one and a fixed
    /// pseudo-random sample.
    pub fn orientations(&self) -> (Vec<u64>, bool) {
        let c = self.parts.len();
        if c == 0 {
            return (vec![0], true);
        }
        if c <= ORIENTATION_EXHAUSTIVE_MAX_COMPONENTS {
            return ((0..1u64 << (c - 1)).map(|m| m << 1).collect(), true);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x0b1e_c7ed);
        let mut masks = vec![0u64];
        masks.extend((0..ORIENTATION_SAMPLES).map(|_| rng.gen::<u64>() & full_set(c) & !1));
        (masks, false)
    }

    /// Left side of the whole graph when the components set in `flips` are
    /// swapped.
    pub fn left_side(&self, flips: u64) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, (comp, left, _))| {
                if flips >> i & 1 == 1 {
                    comp & !left
                } else {
                    *left
                }
            })
            .fold(0, |acc, s| acc | s)
    }

    /// Profile value at `(μ, λ)` for each component, unflipped and flipped.
    fn values(&self, mu: &Rational, lam: &Rational) -> Vec<(Rational, Rational)> {
        self.parts
            .iter()
            .map(|(_, _, p)| (p.eval(mu, lam), p.eval(lam, mu)))
            .collect()
    }
}

/// [`check_biweighted_eq4`] over the side orientations of every component;
/// returns the report with the largest left-hand side.
pub fn check_biweighted_all_orientations(
    g: &Graph,
    mu: &Rational,
    lam: &Rational,
) -> Result<BoundReport> {
    let profiles = ComponentProfiles::new(g)?;
    biweighted_all_orientations_with(g, &profiles, mu, lam)
}

pub fn biweighted_all_orientations_with(
    g: &Graph,
    profiles: &ComponentProfiles,
    mu: &Rational,
    lam: &Rational,
) -> Result<BoundReport> {
    require_nonnegative(mu)?;
    require_nonnegative(lam)?;
    let d = positive_degree(g)?;
    let values = profiles.values(mu, lam);
    let (masks, exhaustive) = profiles.orientations();
    let mut worst: Option<(Rational, u64)> = None;
    for &mask in &masks {
        let value = values
            .iter()
            .enumerate()
            .fold(Rational::one(), |acc, (i, (plain, flipped))| {
                acc * if mask >> i & 1 == 1 { flipped } else { plain }
            });
        if worst.as_ref().is_none_or(|(w, _)| value > *w) {
            worst = Some((value, mask));
        }
    }
    let (value, mask) = worst.expect("at least one orientation");
    biweighted_report(
        g,
        d,
        profiles.left_side(mask),
        value,
        mu,
        lam,
        Some(Detail::Orientations {
            checked: masks.len(),
            exhaustive,
        }),
    )
}

/// Coefficientwise comparison of `P(λ, d·G)` with `P(λ, (N/2)·K_{d,d})`:
/// `P^d` against `(2(1+λ)^d - 1)^{N/2}` for even `N`, and `P^{2d}` against
/// `(2(1+λ)^d - 1)^N` for odd `N`.
pub fn check_termwise_eq6(g: &Graph) -> Result<BoundReport> {
    let d = positive_degree(g)?;
    let n = g.n();
    let p = independence_polynomial(g);
    let extremal = extremal_polynomial(d);
    let (lhs_poly, rhs_poly, form) = if n.is_multiple_of(2) {
        (
            p.pow(d as u64),
            extremal.pow(n as u64 / 2),
            format!("P^{d} vs R^{}", n / 2),
        )
    } else {
        (
            p.pow(2 * d as u64),
            extremal.pow(n as u64),
            format!("P^{} vs R^{n}", 2 * d),
        )
    };
    let outcome = coeffwise_leq(&lhs_poly, &rhs_poly);
    let verdict = match &outcome {
        Termwise::Fails { .. } => Verdict::Violation,
        Termwise::Holds { slack } if slack.iter().all(Zero::is_zero) => Verdict::Equality,
        Termwise::Holds { .. } => Verdict::Strict,
    };
    Ok(BoundReport {
        bound: BoundId::Eq6Termwise,
        graph6: write_graph6(g),
        params: Params {
            d: Some(d),
            ..base_params(g)
        },
        verdict,
        regime: Regime::Conjectured,
        form,
        lhs: Rational::from_integer(lhs_poly.eval_at_one()),
        rhs: Rational::from_integer(rhs_poly.eval_at_one()),
        detail: Some(Detail::Termwise {
            lhs_poly,
            rhs_poly,
            outcome,
        }),
    })
}

/// First `(j, k)` in order where `p` has the larger coefficient.
pub fn bivariate_termwise_violation(
    p: &BivariatePolynomial,
    q: &BivariatePolynomial,
) -> Option<(usize, usize)> {
    p.terms()
        .find(|&(j, k, c)| *c > q.coeff(j, k))
        .map(|(j, k, _)| (j, k))
}

/// The two-variable analogue of [`check_termwise_eq6`] for a bipartite
/// `d`-regular `G` with even `N`: the profile of `d·G` against that of
/// `(N/2)·K_{d,d}`, both under canonical bipartitions.
pub fn check_termwise_biweighted(g: &Graph) -> Result<BoundReport> {
    let d = positive_degree(g)?;
    let n = g.n();
    if n % 2 == 1 {
        return Err(Error::Parameter(
            "bivariate termwise check needs even N".into(),
        ));
    }
    let copies = g.copies(d)?;
    let bp = copies
        .canonical_bipartition(copies.vertex_set())
        .ok_or(Error::NotBipartite)?;
    let lhs_poly = bipartite_profile(&copies, &bp)?.bivar;
    let k = Graph::complete_bipartite(d, d)?;
    let kbp = k
        .canonical_bipartition(k.vertex_set())
        .expect("K_{d,d} is bipartite");
    let rhs_poly = bipartite_profile(&k, &kbp)?.bivar.pow(n as u64 / 2);
    let first_violation = bivariate_termwise_violation(&lhs_poly, &rhs_poly);
    let verdict = if first_violation.is_some() {
        Verdict::Violation
    } else if lhs_poly == rhs_poly {
        Verdict::Equality
    } else {
        Verdict::Strict
    };
    let one = Rational::one();
    Ok(BoundReport {
        bound: BoundId::Eq6Termwise,
        graph6: write_graph6(g),
        params: Params {
            d: Some(d),
            left: Some(members(bp.left).collect()),
            ..base_params(g)
        },
        verdict,
        regime: Regime::Conjectured,
        form: format!("profile({d}·G) vs profile({}·K{d},{d})", n / 2),
        lhs: lhs_poly.eval(&one, &one),
        rhs: rhs_poly.eval(&one, &one),
        detail: Some(Detail::BivariateTermwise {
            lhs_poly,
            rhs_poly,
            first_violation,
        }),
    })
}

/// `Z^Λ(G, H)^{2d}` against `Z^Λ(K_{d,d}, H)^N`. Proved for bipartite `G`;
/// for other `G` the outcome explores the open case.
pub fn check_hom_bounds(g: &Graph, h: &TargetGraph) -> Result<BoundReport> {
    let d = positive_degree(g)?;
    let n = g.n();
    let z = hom_distribution(g, h)?.weighted_total(h.activities());
    let k = Graph::complete_bipartite(d, d)?;
    let zk = hom_distribution(&k, h)?.weighted_total(h.activities());
    let cmp = compare_powered(&z, exponent(n)?, &zk, exponent(2 * d)?)?;
    Ok(BoundReport {
        bound: if h.is_unweighted() {
            BoundId::Eq7Hom
        } else {
            BoundId::Eq8HomWeighted
        },
        graph6: write_graph6(g),
        params: Params {
            d: Some(d),
            target: Some(TargetGraphJson::from(h)),
            ..base_params(g)
        },
        verdict: Verdict::from_ordering(cmp.ordering),
        regime: if g.is_bipartite() {
            Regime::Proved
        } else {
            Regime::Conjectured
        },
        form: powered_form(&z, 2 * d, &zk, n),
        lhs: cmp.lhs,
        rhs: cmp.rhs,
        detail: None,
    })
}

/// Activity grid used when none is given: `{0, 1/2, 1, 2, 10}`.
pub fn default_activity_grid() -> Vec<Rational> {
    vec![
        Rational::zero(),
        Rational::new(BigInt::one(), BigInt::from(2)),
        Rational::one(),
        int(2),
        int(10),
    ]
}
