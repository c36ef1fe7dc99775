//! Simple undirected graphs over a fixed universe of at most 64 vertices.
//!
//! Vertex sets are `u64` bitsets; vertex `v` is bit `v`. Every constructor
//! checks symmetry and the absence of self-loops.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, one bit per vertex.
pub type VertexSet = u64;

#[inline]
pub const fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// The set `{0, .., n-1}`.
#[inline]
pub const fn full_set(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the members of `set` in increasing order.
#[inline]
pub fn members(set: VertexSet) -> Members {
    Members(set)
}

#[derive(Clone, Copy, Debug)]
pub struct Members(VertexSet);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

#[inline]
pub fn size(set: VertexSet) -> usize {
    set.count_ones() as usize
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            needed: n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbor bitsets, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        check_capacity(n)?;
        let universe = full_set(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !universe != 0 {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} has neighbors outside 0..{n}"
                )));
            }
            if row & bit(v) != 0 {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {v}")));
            }
            for u in members(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(Error::InvalidGraph(format!(
                        "adjacency not symmetric between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbor bitsets, indexed by vertex.
    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        size(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|&a| size(a)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in members(self.adj[u] & !full_set(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// True iff no edge joins two members of `set`.
    #[inline]
    pub fn is_independent(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.adj[v] & set == 0)
    }

    /// Union of the neighborhoods of the members of `set`.
    #[inline]
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        members(set).fold(0, |acc, v| acc | self.adj[v])
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn require_regular(&self) -> Result<usize> {
        self.regular_degree().ok_or(Error::NotRegular)
    }

    /// Connected components of `G[within]`, ordered by their minimum vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.vertex_set();
        let mut out = Vec::new();
        while rest != 0 {
            let root = rest & rest.wrapping_neg();
            let mut comp = root;
            let mut frontier = root;
            while frontier != 0 {
                let next = self.neighborhood(frontier) & within & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_set())
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced by `set`, relabeled to `0..|set|` in increasing order.
    pub fn induced(&self, set: VertexSet) -> InducedSubgraph {
        let set = set & self.vertex_set();
        let labels: Vec<usize> = members(set).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let adj = labels
            .iter()
            .map(|&v| members(self.adj[v] & set).fold(0, |acc, u| acc | bit(index[u])))
            .collect();
        InducedSubgraph {
            graph: Graph::from_adjacency_unchecked(adj),
            labels,
        }
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Parameter(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::Parameter("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut adj = vec![0; self.n];
        for v in 0..self.n {
            adj[perm[v]] = members(self.adj[v]).fold(0, |acc, u| acc | bit(perm[u]));
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// `K_{a,b}`: left side `0..a`, right side `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        if a == 0 || b == 0 {
            return Err(Error::Parameter(format!(
                "K({a},{b}) needs both sides nonempty"
            )));
        }
        check_capacity(a + b)?;
        let left = full_set(a);
        let right = full_set(a + b) & !left;
        let adj = (0..a + b)
            .map(|v| if v < a { right } else { left })
            .collect();
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// The cycle `0 - 1 - .. - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Parameter(format!(
                "C({n}) needs at least 3 vertices"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The path on `n >= 1` vertices.
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Parameter("P(0) has no vertices".into()));
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_capacity(n)?;
        let all = full_set(n);
        Ok(Graph::from_adjacency_unchecked(
            (0..n).map(|v| all & !bit(v)).collect(),
        ))
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen graph is valid")
    }

    /// Disjoint union; the components of `gs[0]` keep their labels, later
    /// graphs are shifted past the earlier ones.
    pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
        let total: usize = gs.iter().map(|g| g.n).sum();
        check_capacity(total)?;
        let mut adj = Vec::with_capacity(total);
        let mut offset = 0;
        for g in gs {
            adj.extend(g.adj.iter().map(|&a| a << offset));
            offset += g.n;
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// `t` disjoint copies of `self`.
    pub fn copies(&self, t: usize) -> Result<Graph> {
        Graph::disjoint_union(&vec![self.clone(); t])
    }

    /// Bipartite double cover `G x K_2`. Vertex `(v, i)` is `v + i*n`.
    pub fn double_cover(&self) -> Result<Graph> {
        let n = self.n;
        check_capacity(2 * n)?;
        let mut adj = vec![0; 2 * n];
        for v in 0..n {
            adj[v] = self.adj[v] << n;
            adj[v + n] = self.adj[v];
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Deterministic 2-colouring of `G[w]`.
    ///
    /// Each component of `G[w]` is explored breadth-first from its
    /// minimum-index vertex, which goes to `left`. Returns `None` when an odd
    /// cycle is found. The result depends only on `(self, w)`.
    pub fn canonical_bipartition(&self, w: VertexSet) -> Option<Bipartition> {
        let w = w & self.vertex_set();
        let mut left = 0u64;
        let mut right = 0u64;
        let mut queue = VecDeque::new();
        let mut rest = w;
        while rest != 0 {
            let root = rest.trailing_zeros() as usize;
            left |= bit(root);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let (same, other) = if left & bit(v) != 0 {
                    (left, &mut right)
                } else {
                    (right, &mut left)
                };
                let nbrs = self.adj[v] & w;
                if nbrs & same != 0 {
                    return None;
                }
                let fresh = nbrs & !*other;
                *other |= fresh;
                queue.extend(members(fresh));
            }
            rest &= !(left | right);
        }
        Some(Bipartition {
            left,
            right,
            over: w,
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.canonical_bipartition(self.vertex_set()).is_some()
    }

    /// True iff every component is `K_{d,d}` for the given `d >= 1`.
    pub fn is_union_of_complete_bipartite(&self, d: usize) -> bool {
        if d == 0 {
            return false;
        }
        self.connected_components().into_iter().all(|comp| {
            if size(comp) != 2 * d {
                return false;
            }
            match self.canonical_bipartition(comp) {
                Some(bp) => {
                    size(bp.left) == d
                        && members(bp.left).all(|v| self.adj[v] == bp.right)
                        && members(bp.right).all(|v| self.adj[v] == bp.left)
                }
                None => false,
            }
        })
    }
}

/// A 2-colouring `over = left ∪ right` with both sides independent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
    pub over: VertexSet,
}

impl Bipartition {
    /// Checks the bipartition invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.left & self.right != 0 || self.left | self.right != self.over {
            return Err(Error::Contract(
                "bipartition sides must partition the covered set".into(),
            ));
        }
        if self.over & !g.vertex_set() != 0 {
            return Err(Error::Contract("bipartition covers non-vertices".into()));
        }
        if !g.is_independent(self.left) || !g.is_independent(self.right) {
            return Err(Error::Contract(
                "bipartition side is not independent".into(),
            ));
        }
        Ok(())
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            left: self.right,
            right: self.left,
            over: self.over,
        }
    }
}

/// An induced subgraph together with the original label of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[i]` is the original vertex behind relabeled vertex `i`.
    pub labels: Vec<usize>,
}
