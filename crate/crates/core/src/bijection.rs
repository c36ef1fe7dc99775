//! Pairs of vertex sets and the size-preserving involution that exchanges
//! pairs of independent sets with pairs that are independent from each
//! other.
//!
//! Families, for a graph `G`:
//! - `K(G)`: pairs `(A, B)` with `G[A ∪ B]` bipartite.
//! - `J(G)`: pairs in `K(G)` with no edge between `A` and `B`.
//! - `I(G) x I(G)`: pairs with `A` and `B` both independent.
//!
//! With `(W1, W2)` the canonical bipartition of `W = A ∪ B`, the involution
//! sends `(A, B)` to `((A ∩ W1) ∪ (B ∩ W2), (A ∩ W2) ∪ (B ∩ W1))`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{full_set, members, size, Bipartition, Graph, VertexSet};
use crate::graph6::write_graph6;
use crate::indset::independence_polynomial;
use crate::poly::IntPolynomial;

/// Default bound on `n` for exhaustive pair enumeration (`4^n` pairs).
pub const FAMILY_MAX_N: usize = 13;

/// An ordered pair of vertex sets. The sets may overlap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexPair {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl VertexPair {
    pub fn new(a: VertexSet, b: VertexSet) -> Self {
        VertexPair { a, b }
    }

    /// `|A| + |B|`.
    pub fn size(&self) -> usize {
        size(self.a) + size(self.b)
    }

    pub fn union(&self) -> VertexSet {
        self.a | self.b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    KFamily,
    JFamily,
    IProduct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairFamily {
    pub kind: FamilyKind,
    pub members: Vec<VertexPair>,
}

/// True iff no edge of `g` has one end in `a` and the other in `b`.
pub fn is_independent_from(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    g.neighborhood(a) & b == 0
}

pub fn in_family(g: &Graph, kind: FamilyKind, p: VertexPair) -> bool {
    match kind {
        FamilyKind::KFamily => g.canonical_bipartition(p.union()).is_some(),
        FamilyKind::JFamily => {
            is_independent_from(g, p.a, p.b) && g.canonical_bipartition(p.union()).is_some()
        }
        FamilyKind::IProduct => g.is_independent(p.a) && g.is_independent(p.b),
    }
}

fn check_size(g: &Graph, max_n: usize) -> Result<()> {
    if g.n() > max_n {
        return Err(Error::TooLarge {
            what: "pair family enumeration",
            n: g.n(),
            max: max_n,
        });
    }
    Ok(())
}

/// Visits every pair `(A, B)` with `A ∪ B = w`.
fn for_each_pair_covering(w: VertexSet, mut f: impl FnMut(VertexPair)) {
    let mut a = w;
    loop {
        let only_b = w & !a;
        let mut shared = a;
        loop {
            f(VertexPair::new(a, only_b | shared));
            if shared == 0 {
                break;
            }
            shared = (shared - 1) & a;
        }
        if a == 0 {
            break;
        }
        a = (a - 1) & w;
    }
}

/// Every pair of vertex subsets in the given family, sorted.
pub fn enumerate_family(g: &Graph, kind: FamilyKind) -> Result<PairFamily> {
    enumerate_family_with_limit(g, kind, FAMILY_MAX_N)
}

pub fn enumerate_family_with_limit(
    g: &Graph,
    kind: FamilyKind,
    max_n: usize,
) -> Result<PairFamily> {
    check_size(g, max_n)?;
    let mut members = Vec::new();
    for w in 0..=full_set(g.n()) {
        let bipartite = g.canonical_bipartition(w).is_some();
        if kind != FamilyKind::IProduct && !bipartite {
            continue;
        }
        for_each_pair_covering(w, |p| {
            let keep = match kind {
                FamilyKind::KFamily => true,
                FamilyKind::JFamily => is_independent_from(g, p.a, p.b),
                FamilyKind::IProduct => g.is_independent(p.a) && g.is_independent(p.b),
            };
            if keep {
                members.push(p);
            }
        });
    }
    members.sort_unstable();
    Ok(PairFamily { kind, members })
}

fn apply(bp: &Bipartition, p: VertexPair) -> VertexPair {
    VertexPair::new(
        (p.a & bp.left) | (p.b & bp.right),
        (p.a & bp.right) | (p.b & bp.left),
    )
}

/// The involution on `K(G)`. Fails if `G[A ∪ B]` is not bipartite.
pub fn involution(g: &Graph, p: VertexPair) -> Result<VertexPair> {
    let bp = g
        .canonical_bipartition(p.union())
        .ok_or_else(|| Error::Contract("involution is defined only on K(G)".into()))?;
    Ok(apply(&bp, p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySizes {
    pub k: u64,
    pub j: u64,
    pub i_product: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub pair: VertexPair,
    pub image: VertexPair,
}

/// Result of [`verify_lemma`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub graph6: String,
    pub checks: Vec<CheckOutcome>,
    pub family_sizes: FamilySizes,
    pub polynomial_identity: bool,
    /// `Σ_{(A,B) ∈ J(G)} λ^{|A|+|B|}`.
    pub j_polynomial: IntPolynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub const CHECK_INVOLUTION: &str = "involution";
pub const CHECK_SIZE: &str = "size_preserved";
pub const CHECK_EXCHANGE: &str = "exchanges_i_product_and_j";
pub const CHECK_POLYNOMIAL: &str = "j_polynomial_is_square";
pub const CHECK_UNION: &str = "union_preserved";
pub const CHECK_I_IN_K: &str = "i_product_within_k";

/// Exhaustively checks, over `K(G)`: the map is an involution that keeps
/// `A ∪ B` and `|A| + |B|`, it swaps `I(G) x I(G)` with `J(G)`, and
/// `Σ_J λ^{|A|+|B|} = P(λ, G)^2`.
pub fn verify_lemma(g: &Graph) -> Result<LemmaReport> {
    verify_lemma_with_limit(g, FAMILY_MAX_N)
}

pub fn verify_lemma_with_limit(g: &Graph, max_n: usize) -> Result<LemmaReport> {
    check_size(g, max_n)?;
    let n = g.n();
    let subsets = 1usize << n;
    let adj = g.adjacency();
    // Per-subset neighborhood and independence tables.
    let mut nbhd = vec![0u64; subsets];
    let mut independent = vec![true; subsets];
    for s in 1..subsets {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        nbhd[s] = nbhd[rest] | adj[v];
        independent[s] = independent[rest] && adj[v] & s as u64 == 0;
    }

    let mut counterexample: Option<Counterexample> = None;
    let mut failed = [false; 4];
    let mut note = |idx: usize, check: &'static str, pair, image| {
        failed[idx] = true;
        if counterexample.is_none() {
            counterexample = Some(Counterexample { check, pair, image });
        }
    };
    let mut sizes = FamilySizes {
        k: 0,
        j: 0,
        i_product: 0,
    };
    let mut j_hist = vec![0u64; 2 * n + 1];

    for w in 0..subsets as u64 {
        let Some(bp) = g.canonical_bipartition(w) else {
            continue;
        };
        for_each_pair_covering(w, |p| {
            sizes.k += 1;
            let image = apply(&bp, p);
            if image.union() != w {
                note(0, CHECK_UNION, p, image);
            } else if apply(&bp, image) != p {
                note(0, CHECK_INVOLUTION, p, image);
            }
            if image.size() != p.size() {
                note(1, CHECK_SIZE, p, image);
            }
            let in_i = |q: VertexPair| independent[q.a as usize] && independent[q.b as usize];
            let in_j = |q: VertexPair| nbhd[q.a as usize] & q.b == 0;
            if in_i(p) {
                sizes.i_product += 1;
                if !in_j(image) {
                    note(2, CHECK_EXCHANGE, p, image);
                }
            }
            if in_j(p) {
                sizes.j += 1;
                j_hist[p.size()] += 1;
                if !in_i(image) {
                    note(2, CHECK_EXCHANGE, p, image);
                }
            }
        });
    }

    let j_polynomial = IntPolynomial::new(j_hist.into_iter().map(BigInt::from).collect());
    let square = independence_polynomial(g).pow(2);
    let polynomial_identity = j_polynomial == square;
    let i_squared = square.eval_at_one();
    let checks = vec![
        CheckOutcome {
            name: CHECK_INVOLUTION,
            passed: !failed[0],
        },
        CheckOutcome {
            name: CHECK_SIZE,
            passed: !failed[1],
        },
        CheckOutcome {
            name: CHECK_EXCHANGE,
            passed: !failed[2],
        },
        CheckOutcome {
            name: CHECK_POLYNOMIAL,
            passed: polynomial_identity,
        },
        CheckOutcome {
            name: CHECK_I_IN_K,
            passed: BigInt::from(sizes.i_product) == i_squared,
        },
    ];
    Ok(LemmaReport {
        graph6: write_graph6(g),
        checks,
        family_sizes: sizes,
        polynomial_identity,
        j_polynomial,
        counterexample,
    })
}

/// Members of `set`, for messages.
pub fn describe_set(set: VertexSet) -> String {
    let items: Vec<String> = members(set).map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_graph;
    use crate::graph::bit;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().fold(0, |acc, &v| acc | bit(v))
    }

    #[test]
    fn independence_between_sets() {
        let k2 = Graph::complete(2).unwrap();
        assert!(!is_independent_from(&k2, set(&[0]), set(&[1])));
        assert!(is_independent_from(&k2, set(&[0]), set(&[0])));
        let c5 = Graph::cycle(5).unwrap();
        assert!(!is_independent_from(&c5, set(&[0, 2]), set(&[4])));
        assert!(is_independent_from(&c5, set(&[0, 2]), set(&[0, 2])));
    }

    #[test]
    fn family_sizes() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(
            enumerate_family(&k2, FamilyKind::IProduct)
                .unwrap()
                .members
                .len(),
            9
        );
        assert_eq!(
            enumerate_family(&k2, FamilyKind::JFamily)
                .unwrap()
                .members
                .len(),
            9
        );
        let k3 = Graph::complete(3).unwrap();
        let kfam = enumerate_family(&k3, FamilyKind::KFamily).unwrap();
        assert_eq!(kfam.members.len(), 37);
        assert!(kfam.members.iter().all(|p| p.union() != 0b111));
        assert!(enumerate_family(&Graph::empty(14).unwrap(), FamilyKind::KFamily).is_err());
    }

    #[test]
    fn family_inclusions_against_predicates() {
        let g = Graph::cycle(5).unwrap();
        let k = enumerate_family(&g, FamilyKind::KFamily).unwrap().members;
        let j = enumerate_family(&g, FamilyKind::JFamily).unwrap().members;
        let i2 = enumerate_family(&g, FamilyKind::IProduct).unwrap().members;
        assert!(j.iter().all(|p| k.binary_search(p).is_ok()));
        assert!(i2.iter().all(|p| k.binary_search(p).is_ok()));
        for kind in [
            FamilyKind::KFamily,
            FamilyKind::JFamily,
            FamilyKind::IProduct,
        ] {
            let fam = enumerate_family(&g, kind).unwrap().members;
            let brute: Vec<_> = (0..32u64)
                .flat_map(|a| (0..32u64).map(move |b| VertexPair::new(a, b)))
                .filter(|&p| in_family(&g, kind, p))
                .collect();
            assert_eq!(fam, brute, "{kind:?}");
        }
    }

    #[test]
    fn involution_examples() {
        let k2 = Graph::complete(2).unwrap();
        let image = involution(&k2, VertexPair::new(set(&[0]), set(&[1]))).unwrap();
        assert_eq!(image, VertexPair::new(set(&[0, 1]), 0));
        assert!(in_family(&k2, FamilyKind::JFamily, image));

        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            involution(&c6, VertexPair::new(0, 0)).unwrap(),
            VertexPair::new(0, 0)
        );
        let image = involution(&c6, VertexPair::new(set(&[0, 2, 4]), set(&[1, 3, 5]))).unwrap();
        assert_eq!(image, VertexPair::new(c6.vertex_set(), 0));
        assert!(in_family(&c6, FamilyKind::JFamily, image));

        let k3 = Graph::complete(3).unwrap();
        assert!(involution(&k3, VertexPair::new(set(&[0, 1]), set(&[2]))).is_err());
    }

    #[test]
    fn lemma_small_graphs() {
        let report = verify_lemma(&Graph::complete(2).unwrap()).unwrap();
        assert!(report.passed());
        assert_eq!(report.family_sizes.j, 9);
        assert_eq!(report.family_sizes.i_product, 9);

        let report = verify_lemma(&Graph::complete(3).unwrap()).unwrap();
        assert!(report.passed());
        assert_eq!(
            report.j_polynomial,
            IntPolynomial::from_i64s(&[1, 3]).pow(2)
        );
        assert_eq!(report.family_sizes.k, 37);

        let report = verify_lemma(&Graph::cycle(5).unwrap()).unwrap();
        assert!(report.passed());
        assert_eq!(
            report.j_polynomial,
            IntPolynomial::from_i64s(&[1, 5, 5]).pow(2)
        );
        assert!(report.counterexample.is_none());
    }

    #[test]
    fn involution_on_random_k_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..500 {
            let n = rng.gen_range(1..=10);
            let g = random_graph(n, 0.3, &mut rng).unwrap();
            let p = VertexPair::new(
                rng.gen::<u64>() & g.vertex_set(),
                rng.gen::<u64>() & g.vertex_set(),
            );
            let Ok(image) = involution(&g, p) else {
                assert!(!in_family(&g, FamilyKind::KFamily, p));
                continue;
            };
            assert_eq!(image.union(), p.union());
            assert_eq!(image.size(), p.size());
            assert_eq!(involution(&g, image).unwrap(), p);
            if in_family(&g, FamilyKind::IProduct, p) {
                assert!(in_family(&g, FamilyKind::JFamily, image));
            }
            if in_family(&g, FamilyKind::JFamily, p) {
                assert!(in_family(&g, FamilyKind::IProduct, image));
            }
        }
    }

    #[test]
    fn lemma_json_shape() {
        let report = verify_lemma(&Graph::complete(2).unwrap()).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["polynomial_identity"], true);
        assert_eq!(v["family_sizes"]["j"], 9);
        assert!(v.get("counterexample").is_none());
        assert_eq!(v["checks"][0]["name"], CHECK_INVOLUTION);
    }
}
