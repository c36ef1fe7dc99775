//! Graph generation: canonical forms, regular graphs, all graphs up to
//! isomorphism, and seeded random graphs.

use std::cmp::Ordering;
use std::collections::HashSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{bit, full_set, members, size, Graph, VertexSet};

/// Default bound on `n` for [`enumerate_regular`].
pub const REGULAR_MAX_N: usize = 12;

/// The relabeling of `g` whose upper-triangle adjacency string, read column
/// by column as in graph6, is lexicographically smallest.
///
/// Two graphs are isomorphic iff their canonical forms are equal. The search
/// builds the ordering one position at a time, keeps only vertices whose new
/// column is minimal, drops prefixes already worse than the best leaf, and
/// skips a vertex when swapping it with a smaller candidate is an
/// automorphism.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let adj = g.adjacency();
    let mut swappable = vec![0u64; n];
    for u in 0..n {
        for w in u + 1..n {
            if adj[u] & !bit(w) == adj[w] & !bit(u) {
                swappable[w] |= bit(u);
            }
        }
    }
    let mut search = CanonSearch {
        adj,
        swappable,
        order: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        best_cols: Vec::new(),
        best_order: Vec::new(),
    };
    search.run(full_set(n), &vec![0u64; n]);

    let mut perm = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm).expect("search yields a permutation")
}

struct CanonSearch<'a> {
    adj: &'a [VertexSet],
    swappable: Vec<VertexSet>,
    order: Vec<usize>,
    cols: Vec<u64>,
    best_cols: Vec<u64>,
    best_order: Vec<usize>,
}

impl CanonSearch<'_> {
    fn run(&mut self, unplaced: VertexSet, colval: &[u64]) {
        if unplaced == 0 {
            if self.best_order.is_empty() || self.cols < self.best_cols {
                self.best_cols.clone_from(&self.cols);
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        let min = members(unplaced)
            .map(|x| colval[x])
            .min()
            .expect("nonempty");
        self.cols.push(min);
        let depth = self.cols.len();
        if self.best_order.is_empty() || self.cols[..] <= self.best_cols[..depth] {
            let ties = members(unplaced)
                .filter(|&x| colval[x] == min)
                .fold(0u64, |acc, x| acc | bit(x));
            let mut next = vec![0u64; colval.len()];
            for x in members(ties) {
                if self.swappable[x] & ties != 0 {
                    continue;
                }
                for (y, slot) in next.iter_mut().enumerate() {
                    *slot = (colval[y] << 1) | ((self.adj[y] >> x) & 1);
                }
                self.order.push(x);
                self.run(unplaced & !bit(x), &next);
                self.order.pop();
            }
        }
        self.cols.pop();
    }
}

/// True iff `g` and `h` are isomorphic.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && {
            let mut dg = g.degrees();
            let mut dh = h.degrees();
            dg.sort_unstable();
            dh.sort_unstable();
            dg == dh
        }
        && canonical_form(g) == canonical_form(h)
}

fn cmp_graphs(a: &Graph, b: &Graph) -> Ordering {
    a.n()
        .cmp(&b.n())
        .then_with(|| a.adjacency().cmp(b.adjacency()))
}

/// Streams `d`-regular graphs on `n` labeled vertices.
///
/// With `dedup` the stream holds exactly one graph per isomorphism class;
/// otherwise it holds every labeled `d`-regular graph exactly once.
pub fn enumerate_regular(n: usize, d: usize, dedup: bool) -> Result<RegularGraphs> {
    enumerate_regular_with_limit(n, d, dedup, REGULAR_MAX_N)
}

/// As [`enumerate_regular`] with an explicit guard on `n`.
pub fn enumerate_regular_with_limit(
    n: usize,
    d: usize,
    dedup: bool,
    max_n: usize,
) -> Result<RegularGraphs> {
    if n > max_n {
        return Err(Error::TooLarge {
            what: "regular graph enumeration",
            n,
            max: max_n,
        });
    }
    if n == 0 || d >= n {
        return Err(Error::Parameter(format!(
            "need 0 <= d < n, got n = {n}, d = {d}"
        )));
    }
    if (n * d) % 2 == 1 {
        return Err(Error::Parameter(format!(
            "no {d}-regular graph on {n} vertices: n*d is odd"
        )));
    }
    let mut gen = RegularGraphs {
        n,
        d,
        dedup,
        stack: Vec::new(),
        seen: HashSet::new(),
    };
    let adj = vec![0u64; n];
    let options = gen.options(&adj, 0);
    gen.stack.push(Frame {
        adj,
        v: 0,
        options,
        next: 0,
    });
    Ok(gen)
}

struct Frame {
    adj: Vec<VertexSet>,
    v: usize,
    options: Vec<VertexSet>,
    next: usize,
}

/// Iterator returned by [`enumerate_regular`].
pub struct RegularGraphs {
    n: usize,
    d: usize,
    dedup: bool,
    stack: Vec<Frame>,
    seen: HashSet<Graph>,
}

impl RegularGraphs {
    /// Neighbor sets that vertex `v` may still take among later vertices.
    fn options(&self, adj: &[VertexSet], v: usize) -> Vec<VertexSet> {
        let (n, d) = (self.n, self.d);
        let need = d - size(adj[v]);
        let later = full_set(n) & !full_set(v + 1);
        let cands: Vec<usize> = members(later).filter(|&w| size(adj[w]) < d).collect();
        if cands.len() < need {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(need);
        self.combinations(adj, v, &cands, 0, need, &mut pick, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn combinations(
        &self,
        adj: &[VertexSet],
        v: usize,
        cands: &[usize],
        from: usize,
        need: usize,
        pick: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        if pick.len() == need {
            let chosen = pick.iter().fold(0u64, |acc, &w| acc | bit(w));
            if self.dedup && !self.prefix_of_twins(adj, cands, chosen) {
                return;
            }
            if self.completable(adj, v, chosen) {
                out.push(chosen);
            }
            return;
        }
        let remaining = need - pick.len();
        for i in from..=cands.len() - remaining {
            pick.push(cands[i]);
            self.combinations(adj, v, cands, i + 1, need, pick, out);
            pick.pop();
        }
    }

    /// Later vertices with identical current neighborhoods are
    /// interchangeable, so only index-order prefixes of each class are kept.
    fn prefix_of_twins(&self, adj: &[VertexSet], cands: &[usize], chosen: VertexSet) -> bool {
        members(chosen).all(|w| {
            cands
                .iter()
                .take_while(|&&u| u < w)
                .all(|&u| adj[u] != adj[w] || chosen & bit(u) != 0)
        })
    }

    fn completable(&self, adj: &[VertexSet], v: usize, chosen: VertexSet) -> bool {
        let d = self.d;
        let later = full_set(self.n) & !full_set(v + 1);
        let open: Vec<(usize, usize)> = members(later)
            .map(|w| {
                let deg = size(adj[w]) + (chosen >> w & 1) as usize;
                (w, d - deg)
            })
            .filter(|&(_, r)| r > 0)
            .collect();
        let total: usize = open.iter().map(|&(_, r)| r).sum();
        if total % 2 == 1 {
            return false;
        }
        open.iter().all(|&(w, r)| {
            let partners = open
                .iter()
                .filter(|&&(u, _)| u != w && adj[w] & bit(u) == 0)
                .count();
            r <= partners
        })
    }
}

impl Iterator for RegularGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let top = self.stack.last_mut()?;
            if top.next == top.options.len() {
                self.stack.pop();
                continue;
            }
            let chosen = top.options[top.next];
            top.next += 1;
            let v = top.v;
            let mut adj = top.adj.clone();
            adj[v] |= chosen;
            for w in members(chosen) {
                adj[w] |= bit(v);
            }
            if v + 1 == self.n {
                let g = Graph::from_adjacency_unchecked(adj);
                if !self.dedup || self.seen.insert(canonical_form(&g)) {
                    return Some(g);
                }
                continue;
            }
            let options = self.options(&adj, v + 1);
            self.stack.push(Frame {
                adj,
                v: v + 1,
                options,
                next: 0,
            });
        }
    }
}

/// Every graph on `n` vertices up to isomorphism, as canonical forms sorted
/// by adjacency. Built by attaching a new vertex in every possible way to
/// each graph on `n - 1` vertices.
pub fn enumerate_all(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).expect("empty graph")];
    for m in 1..=n {
        level = extend_by_vertex(&level, m);
    }
    level
}

/// All graphs with at most `n` vertices up to isomorphism, by vertex count.
pub fn enumerate_all_up_to(n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(0).expect("empty graph")]];
    for m in 1..=n {
        let next = extend_by_vertex(&levels[m - 1], m);
        levels.push(next);
    }
    levels
}

fn extend_by_vertex(prev: &[Graph], m: usize) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for h in prev {
        let mut adj = h.adjacency().to_vec();
        adj.push(0);
        for nbrs in 0..=full_set(m - 1) {
            let mut a = adj.clone();
            a[m - 1] = nbrs;
            for u in members(nbrs) {
                a[u] |= bit(m - 1);
            }
            let g = canonical_form(&Graph::from_adjacency_unchecked(a));
            if seen.insert(g.clone()) {
                out.push(g);
            }
        }
    }
    out.sort_by(cmp_graphs);
    out
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut g = vec![0u64; n];
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::Capacity {
            needed: n,
            max: crate::graph::MAX_VERTICES,
        });
    }
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g[i] |= bit(j);
                g[j] |= bit(i);
            }
        }
    }
    Ok(Graph::from_adjacency_unchecked(g))
}
