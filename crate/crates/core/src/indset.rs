//! Independence polynomials and bipartite side profiles.
//!
//! The kernel splits the vertex set into connected components, multiplies
//! the component polynomials, and within a component branches on a vertex
//! `v` of maximum degree (smallest index on ties):
//!
//! ```text
//! P(G) = P(G - v) + w(v) * P(G - N[v])
//! ```
//!
//! Results are memoized on the component bitset for the duration of one
//! call. Counts stay in `u128`: every coefficient is at most `C(64, 32)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, full_set, members, size, Bipartition, Graph, VertexSet};
use crate::graph6::write_graph6;
use crate::poly::{BivariatePolynomial, IntPolynomial};

/// Largest graph the brute-force oracle accepts by default.
pub const BRUTE_FORCE_MAX_N: usize = 26;

/// How selected vertices are weighted while counting.
trait Grading {
    type Counts: Clone;

    fn one(&self) -> Self::Counts;
    /// Generating function of an edgeless vertex set.
    fn edgeless(&self, set: VertexSet) -> Self::Counts;
    fn mul(&self, a: &Self::Counts, b: &Self::Counts) -> Self::Counts;
    /// `a + w(v) * b`.
    fn add_selected(&self, a: Self::Counts, b: &Self::Counts, v: usize) -> Self::Counts;
}

struct Univariate;

impl Grading for Univariate {
    type Counts = Vec<u128>;

    fn one(&self) -> Vec<u128> {
        vec![1]
    }

    fn edgeless(&self, set: VertexSet) -> Vec<u128> {
        binomial_row(size(set))
    }

    fn mul(&self, a: &Vec<u128>, b: &Vec<u128>) -> Vec<u128> {
        let mut out = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn add_selected(&self, mut a: Vec<u128>, b: &Vec<u128>, _v: usize) -> Vec<u128> {
        if a.len() < b.len() + 1 {
            a.resize(b.len() + 1, 0);
        }
        for (k, &y) in b.iter().enumerate() {
            a[k + 1] += y;
        }
        a
    }
}

/// `counts[j][k]`: `j` selected vertices on the left, `k` on the right.
struct Bivariate {
    left: VertexSet,
}

type Table = Vec<Vec<u128>>;

fn table_get(t: &Table, j: usize, k: usize) -> u128 {
    t.get(j).and_then(|row| row.get(k)).copied().unwrap_or(0)
}

impl Grading for Bivariate {
    type Counts = Table;

    fn one(&self) -> Table {
        vec![vec![1]]
    }

    fn edgeless(&self, set: VertexSet) -> Table {
        let a = binomial_row(size(set & self.left));
        let b = binomial_row(size(set & !self.left));
        a.iter()
            .map(|&x| b.iter().map(|&y| x * y).collect())
            .collect()
    }

    fn mul(&self, a: &Table, b: &Table) -> Table {
        let rows = a.len() + b.len() - 1;
        let cols = a.iter().map(Vec::len).max().unwrap_or(1)
            + b.iter().map(Vec::len).max().unwrap_or(1)
            - 1;
        let mut out = vec![vec![0u128; cols]; rows];
        for (j1, ra) in a.iter().enumerate() {
            for (k1, &x) in ra.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j2, rb) in b.iter().enumerate() {
                    for (k2, &y) in rb.iter().enumerate() {
                        out[j1 + j2][k1 + k2] += x * y;
                    }
                }
            }
        }
        out
    }

    fn add_selected(&self, a: Table, b: &Table, v: usize) -> Table {
        let (dj, dk) = if self.left & bit(v) != 0 {
            (1, 0)
        } else {
            (0, 1)
        };
        let rows = a.len().max(b.len() + dj);
        let cols = a
            .iter()
            .map(Vec::len)
            .chain(b.iter().map(|r| r.len() + dk))
            .max()
            .unwrap_or(1);
        let mut out = vec![vec![0u128; cols]; rows];
        for (j, row) in out.iter_mut().enumerate() {
            for (k, slot) in row.iter_mut().enumerate() {
                *slot = table_get(&a, j, k);
                if j >= dj && k >= dk {
                    *slot += table_get(b, j - dj, k - dk);
                }
            }
        }
        out
    }
}

fn binomial_row(m: usize) -> Vec<u128> {
    let mut row = vec![1u128];
    for _ in 0..m {
        let mut next = vec![1u128; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row
}

struct Kernel<'g, W: Grading> {
    adj: &'g [VertexSet],
    grading: W,
    memo: HashMap<VertexSet, W::Counts>,
}

impl<W: Grading> Kernel<'_, W> {
    fn count(&mut self, set: VertexSet) -> W::Counts {
        if members(set).all(|v| self.adj[v] & set == 0) {
            return self.grading.edgeless(set);
        }
        let mut acc = self.grading.one();
        let mut rest = set;
        while rest != 0 {
            let comp = self.component(rest);
            rest &= !comp;
            let c = self.component_counts(comp);
            acc = self.grading.mul(&acc, &c);
        }
        acc
    }

    fn component(&self, within: VertexSet) -> VertexSet {
        let mut comp = within & within.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let reach = members(frontier).fold(0, |acc, v| acc | self.adj[v]) & within & !comp;
            comp |= reach;
            frontier = reach;
        }
        comp
    }

    fn component_counts(&mut self, comp: VertexSet) -> W::Counts {
        if comp & (comp - 1) == 0 {
            return self.grading.edgeless(comp);
        }
        if let Some(hit) = self.memo.get(&comp) {
            return hit.clone();
        }
        let mut branch = 0;
        let mut best = 0;
        for v in members(comp) {
            let d = size(self.adj[v] & comp);
            if d > best {
                best = d;
                branch = v;
            }
        }
        let without = self.count(comp & !bit(branch));
        let with = self.count(comp & !bit(branch) & !self.adj[branch]);
        let out = self.grading.add_selected(without, &with, branch);
        self.memo.insert(comp, out.clone());
        out
    }
}

fn to_poly(counts: &[u128]) -> IntPolynomial {
    IntPolynomial::new(counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// `P(λ, G) = Σ_{I independent} λ^{|I|}`.
pub fn independence_polynomial(g: &Graph) -> IntPolynomial {
    independence_polynomial_within(g, g.vertex_set())
}

/// Independence polynomial of `G[set]`.
pub fn independence_polynomial_within(g: &Graph, set: VertexSet) -> IntPolynomial {
    let mut kernel = Kernel {
        adj: g.adjacency(),
        grading: Univariate,
        memo: HashMap::new(),
    };
    to_poly(&kernel.count(set & g.vertex_set()))
}

/// `i(G)`, the number of independent sets.
pub fn independence_count(g: &Graph) -> BigInt {
    independence_polynomial(g).eval_at_one()
}

/// Histogram of independent sets by size over all `2^n` subsets.
pub fn brute_force_polynomial(g: &Graph) -> Result<IntPolynomial> {
    brute_force_polynomial_with_limit(g, BRUTE_FORCE_MAX_N)
}

pub fn brute_force_polynomial_with_limit(g: &Graph, max_n: usize) -> Result<IntPolynomial> {
    let n = g.n();
    if n > max_n || n > 40 {
        return Err(Error::TooLarge {
            what: "brute-force independent set enumeration",
            n,
            max: max_n.min(40),
        });
    }
    let adj = g.adjacency();
    let mut hist = vec![0u64; n + 1];
    'subsets: for subset in 0..=full_set(n) {
        let mut rest = subset;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if adj[v] & subset != 0 {
                continue 'subsets;
            }
            rest &= rest - 1;
        }
        hist[subset.count_ones() as usize] += 1;
    }
    Ok(IntPolynomial::new(
        hist.into_iter().map(BigInt::from).collect(),
    ))
}

/// Independence polynomial with its graph6 fingerprint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub graph6: String,
    pub poly: IntPolynomial,
    #[serde(serialize_with = "crate::poly::ser_bigint")]
    pub count: BigInt,
}

impl IndependenceResult {
    pub fn compute(g: &Graph) -> Self {
        let poly = independence_polynomial(g);
        IndependenceResult {
            graph6: write_graph6(g),
            count: poly.eval_at_one(),
            poly,
        }
    }
}

/// `Σ_I μ^{|I ∩ left|} λ^{|I ∩ right|}` for a bipartition of the whole graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteProfile {
    pub bivar: BivariatePolynomial,
    pub bipartition: Bipartition,
}

pub fn bipartite_profile(g: &Graph, bp: &Bipartition) -> Result<BipartiteProfile> {
    bp.validate(g)?;
    if bp.over != g.vertex_set() {
        return Err(Error::Contract(
            "profile needs a bipartition of every vertex".into(),
        ));
    }
    let mut kernel = Kernel {
        adj: g.adjacency(),
        grading: Bivariate { left: bp.left },
        memo: HashMap::new(),
    };
    let table = kernel.count(g.vertex_set());
    let bivar = BivariatePolynomial::from_terms(table.iter().enumerate().flat_map(|(j, row)| {
        row.iter()
            .enumerate()
            .map(move |(k, &c)| (j, k, BigInt::from(c)))
    }));
    Ok(BipartiteProfile {
        bivar,
        bipartition: *bp,
    })
}
