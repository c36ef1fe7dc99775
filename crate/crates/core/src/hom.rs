//! Homomorphism counts `G -> H` graded by weight class.
//!
//! A weight class is the vector `(|f⁻¹(0)|, .., |f⁻¹(m-1)|)`; a homomorphism
//! in class `e` has weight `Π λ_i^{e_i}`. Counting by class keeps every
//! statement about weights exact and independent of the activities.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, VertexSet};
use crate::rational::{format_rational, parse_rational, Rational};

/// Default bound on the size of a connected component that is enumerated
/// directly.
pub const HOM_COMPONENT_MAX_N: usize = 20;

/// Target graph `H`: loops allowed, every vertex carrying a positive
/// activity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetGraph {
    adj: Vec<VertexSet>,
    activities: Vec<Rational>,
}

impl TargetGraph {
    /// `adj[i]` may contain `i` itself (a loop).
    pub fn new(adj: Vec<VertexSet>, activities: Vec<Rational>) -> Result<Self> {
        let m = adj.len();
        if m == 0 || m > 32 {
            return Err(Error::Parameter(format!(
                "target graphs need 1..=32 vertices, got {m}"
            )));
        }
        if activities.len() != m {
            return Err(Error::Parameter(format!(
                "{} activities for {m} target vertices",
                activities.len()
            )));
        }
        for (i, &row) in adj.iter().enumerate() {
            if row >> m != 0 {
                return Err(Error::InvalidGraph(format!(
                    "target vertex {i} has out-of-range neighbors"
                )));
            }
            for j in members(row) {
                if adj[j] & bit(i) == 0 {
                    return Err(Error::InvalidGraph(format!(
                        "target adjacency not symmetric between {i} and {j}"
                    )));
                }
            }
        }
        if let Some(bad) = activities.iter().find(|a| **a <= Rational::zero()) {
            return Err(Error::Parameter(format!(
                "activities must be positive, got {}",
                format_rational(bad)
            )));
        }
        Ok(TargetGraph { adj, activities })
    }

    /// Loopless graph with all activities 1.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        Self::new(g.adjacency().to_vec(), vec![Rational::one(); g.n()])
    }

    /// The independent-set target: vertex 0 ("in", activity `λ`) joined to
    /// vertex 1 ("out", activity 1, looped). Homomorphisms into it are
    /// independent sets, with `f⁻¹(0)` the set.
    pub fn independent_set(lam: Rational) -> Result<Self> {
        Self::new(vec![0b10, 0b11], vec![lam, Rational::one()])
    }

    /// One looped vertex.
    pub fn looped_vertex(activity: Rational) -> Result<Self> {
        Self::new(vec![0b1], vec![activity])
    }

    pub fn with_activities(&self, activities: Vec<Rational>) -> Result<Self> {
        Self::new(self.adj.clone(), activities)
    }

    pub fn m(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn activities(&self) -> &[Rational] {
        &self.activities
    }

    pub fn is_unweighted(&self) -> bool {
        self.activities.iter().all(One::is_one)
    }

    pub fn has_loop(&self, i: usize) -> bool {
        self.adj[i] & bit(i) != 0
    }
}

/// `{"m": 3, "adj": [[1, 2], [0, 2], [0, 1]], "loops": [], "activities": ["1", "1", "1"]}`.
/// `adj[i]` lists the neighbors of `i`; loops may be given in `loops` or as
/// `i` in `adj[i]`. Missing activities default to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetGraphJson {
    pub m: usize,
    pub adj: Vec<Vec<usize>>,
    #[serde(default)]
    pub loops: Vec<usize>,
    #[serde(default)]
    pub activities: Vec<String>,
}

impl TargetGraphJson {
    pub fn into_target(self) -> Result<TargetGraph> {
        if self.adj.len() != self.m {
            return Err(Error::Parameter(format!(
                "adj has {} rows for m = {}",
                self.adj.len(),
                self.m
            )));
        }
        let mut adj = vec![0u64; self.m];
        for (i, row) in self.adj.iter().enumerate() {
            for &j in row {
                if j >= self.m {
                    return Err(Error::Parameter(format!(
                        "target neighbor {j} out of range"
                    )));
                }
                adj[i] |= bit(j);
            }
        }
        for &v in &self.loops {
            if v >= self.m {
                return Err(Error::Parameter(format!("loop at {v} out of range")));
            }
            adj[v] |= bit(v);
        }
        let activities = if self.activities.is_empty() {
            vec![Rational::one(); self.m]
        } else {
            self.activities
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_>>()?
        };
        TargetGraph::new(adj, activities)
    }
}

impl From<&TargetGraph> for TargetGraphJson {
    fn from(h: &TargetGraph) -> Self {
        let m = h.m();
        TargetGraphJson {
            m,
            adj: (0..m)
                .map(|i| members(h.adj[i] & !bit(i)).collect())
                .collect(),
            loops: (0..m).filter(|&i| h.has_loop(i)).collect(),
            activities: h.activities.iter().map(format_rational).collect(),
        }
    }
}

pub fn read_target_json(json: &str) -> Result<TargetGraph> {
    let parsed: TargetGraphJson =
        serde_json::from_str(json).map_err(|e| Error::Parameter(format!("target JSON: {e}")))?;
    parsed.into_target()
}

/// Homomorphism counts keyed by weight class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightClassDistribution {
    target: Vec<VertexSet>,
    classes: BTreeMap<Vec<u32>, BigUint>,
}

impl WeightClassDistribution {
    /// Distribution of the empty source graph: the empty map, class zero.
    pub fn identity(h: &TargetGraph) -> Self {
        let mut classes = BTreeMap::new();
        classes.insert(vec![0; h.m()], BigUint::one());
        WeightClassDistribution {
            target: h.adj.clone(),
            classes,
        }
    }

    pub fn classes(&self) -> &BTreeMap<Vec<u32>, BigUint> {
        &self.classes
    }

    /// Count in class `e`, zero if absent.
    pub fn count(&self, class: &[u32]) -> BigUint {
        self.classes.get(class).cloned().unwrap_or_default()
    }

    /// `|Hom(G, H)|`.
    pub fn total(&self) -> BigUint {
        self.classes.values().sum()
    }

    /// `Σ_e count(e) Π λ_i^{e_i}`.
    pub fn weighted_total(&self, activities: &[Rational]) -> Rational {
        self.classes
            .iter()
            .fold(Rational::zero(), |acc, (class, count)| {
                let weight = class
                    .iter()
                    .zip(activities)
                    .fold(Rational::one(), |w, (&e, a)| w * Pow::pow(a, e));
                acc + weight * Rational::from_integer(BigInt::from(count.clone()))
            })
    }

    fn same_target(&self, other: &Self) -> Result<()> {
        if self.target != other.target {
            return Err(Error::TargetMismatch);
        }
        Ok(())
    }
}

/// `{"class": [..], "count": "36"}` entries in class order.
impl Serialize for WeightClassDistribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            class: &'a [u32],
            count: String,
        }
        let entries: Vec<Entry> = self
            .classes
            .iter()
            .map(|(class, count)| Entry {
                class,
                count: count.to_string(),
            })
            .collect();
        entries.serialize(s)
    }
}

/// Counts `Hom(g, h)` by weight class.
///
/// Each component is enumerated by backtracking in breadth-first order from
/// its minimum vertex, so every vertex after the first has an assigned
/// neighbor constraining its image; components are then combined by
/// convolution.
pub fn hom_distribution(g: &Graph, h: &TargetGraph) -> Result<WeightClassDistribution> {
    hom_distribution_with_limit(g, h, HOM_COMPONENT_MAX_N)
}

pub fn hom_distribution_with_limit(
    g: &Graph,
    h: &TargetGraph,
    max_component: usize,
) -> Result<WeightClassDistribution> {
    let comps = g.connected_components();
    if let Some(big) = comps
        .iter()
        .find(|c| c.count_ones() as usize > max_component)
    {
        return Err(Error::TooLarge {
            what: "homomorphism backtracking (per component)",
            n: big.count_ones() as usize,
            max: max_component,
        });
    }
    let mut acc = WeightClassDistribution::identity(h);
    let mut cache: HashMap<Graph, WeightClassDistribution> = HashMap::new();
    for comp in comps {
        let sub = g.induced(comp).graph;
        let dist = match cache.get(&sub) {
            Some(d) => d.clone(),
            None => {
                let d = component_distribution(&sub, h);
                cache.insert(sub, d.clone());
                d
            }
        };
        acc = distribution_convolve(&acc, &dist)?;
    }
    Ok(acc)
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = 0u64;
    for root in 0..g.n() {
        if seen & bit(root) != 0 {
            continue;
        }
        seen |= bit(root);
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let fresh = g.neighbors(order[i]) & !seen;
            seen |= fresh;
            order.extend(members(fresh));
            i += 1;
        }
    }
    order
}

struct HomSearch<'a> {
    order: Vec<usize>,
    /// For position `p`, the earlier positions adjacent to it.
    back: Vec<Vec<usize>>,
    target: &'a [VertexSet],
    image: Vec<usize>,
    class: Vec<u32>,
    hist: HashMap<Vec<u32>, u128>,
}

impl HomSearch<'_> {
    fn allowed(&self, pos: usize) -> VertexSet {
        let m = self.target.len();
        self.back[pos]
            .iter()
            .fold(crate::graph::full_set(m), |acc, &q| {
                acc & self.target[self.image[q]]
            })
    }

    fn run(&mut self, pos: usize) {
        let allowed = self.allowed(pos);
        if pos + 1 == self.order.len() {
            for i in members(allowed) {
                self.class[i] += 1;
                *self.hist.entry(self.class.clone()).or_default() += 1;
                self.class[i] -= 1;
            }
            return;
        }
        for i in members(allowed) {
            self.image[pos] = i;
            self.class[i] += 1;
            self.run(pos + 1);
            self.class[i] -= 1;
        }
    }
}

fn component_distribution(g: &Graph, h: &TargetGraph) -> WeightClassDistribution {
    if g.n() == 0 {
        return WeightClassDistribution::identity(h);
    }
    let order = bfs_order(g);
    let mut position = vec![0; g.n()];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(p, &v)| {
            members(g.neighbors(v))
                .map(|u| position[u])
                .filter(|&q| q < p)
                .collect()
        })
        .collect();
    let mut search = HomSearch {
        back,
        target: &h.adj,
        image: vec![0; g.n()],
        class: vec![0; h.m()],
        hist: HashMap::new(),
        order,
    };
    search.run(0);
    WeightClassDistribution {
        target: h.adj.clone(),
        classes: search
            .hist
            .into_iter()
            .map(|(k, v)| (k, BigUint::from(v)))
            .collect(),
    }
}

/// Distribution of a disjoint union from the distributions of its parts.
pub fn distribution_convolve(
    d1: &WeightClassDistribution,
    d2: &WeightClassDistribution,
) -> Result<WeightClassDistribution> {
    d1.same_target(d2)?;
    let mut classes: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
    for (c1, n1) in &d1.classes {
        for (c2, n2) in &d2.classes {
            let class: Vec<u32> = c1.iter().zip(c2).map(|(a, b)| a + b).collect();
            *classes.entry(class).or_default() += n1 * n2;
        }
    }
    Ok(WeightClassDistribution {
        target: d1.target.clone(),
        classes,
    })
}

/// Distribution of `t` disjoint copies, `t >= 1`.
pub fn distribution_power(d: &WeightClassDistribution, t: u32) -> Result<WeightClassDistribution> {
    if t == 0 {
        return Err(Error::Parameter("distribution power needs t >= 1".into()));
    }
    let mut base = d.clone();
    let mut acc: Option<WeightClassDistribution> = None;
    let mut e = t;
    while e > 0 {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => distribution_convolve(&a, &base)?,
            });
        }
        e >>= 1;
        if e > 0 {
            base = distribution_convolve(&base, &base)?;
        }
    }
    Ok(acc.expect("t >= 1"))
}

/// `Z^Λ(G, H) = Σ_{f ∈ Hom(G, H)} Π_v λ_{f(v)}`.
pub fn partition_function(g: &Graph, h: &TargetGraph) -> Result<Rational> {
    Ok(hom_distribution(g, h)?.weighted_total(h.activities()))
}

/// Whether a weight-preserving injection `source -> target` exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Domination {
    Holds,
    Fails {
        class: Vec<u32>,
        source_count: String,
        target_count: String,
    },
}

impl Domination {
    pub fn holds(&self) -> bool {
        matches!(self, Domination::Holds)
    }
}

/// An injection fixing every weight class exists iff each class of the
/// source is no larger than the same class of the target. Reports the first
/// violating class in class order.
pub fn injection_domination(
    source: &WeightClassDistribution,
    target: &WeightClassDistribution,
) -> Result<Domination> {
    source.same_target(target)?;
    for (class, count) in &source.classes {
        let available = target.count(class);
        if *count > available {
            return Ok(Domination::Fails {
                class: class.clone(),
                source_count: count.to_string(),
                target_count: available.to_string(),
            });
        }
    }
    Ok(Domination::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_graph;
    use crate::indset::independence_polynomial;
    use crate::rational::parse_rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k3_target() -> TargetGraph {
        TargetGraph::from_graph(&Graph::complete(3).unwrap()).unwrap()
    }

    /// Every map `V(G) -> V(H)`, kept when it sends edges to edges.
    fn brute_distribution(g: &Graph, h: &TargetGraph) -> BTreeMap<Vec<u32>, BigUint> {
        let (n, m) = (g.n(), h.m());
        let mut out: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
        let total = m.pow(n as u32);
        for code in 0..total {
            let mut f = vec![0; n];
            let mut c = code;
            for slot in f.iter_mut() {
                *slot = c % m;
                c /= m;
            }
            if g.edges()
                .iter()
                .all(|&(u, v)| h.adjacency()[f[u]] & bit(f[v]) != 0)
            {
                let mut class = vec![0u32; m];
                for &i in &f {
                    class[i] += 1;
                }
                *out.entry(class).or_default() += 1u32;
            }
        }
        out
    }

    #[test]
    fn triangle_into_triangle() {
        let d = hom_distribution(&Graph::complete(3).unwrap(), &k3_target()).unwrap();
        assert_eq!(d.classes().len(), 1);
        assert_eq!(d.count(&[1, 1, 1]), BigUint::from(6u32));
    }

    #[test]
    fn looped_vertex_absorbs_everything() {
        let h = TargetGraph::looped_vertex(Rational::one()).unwrap();
        let d = hom_distribution(&Graph::complete(2).unwrap(), &h).unwrap();
        assert_eq!(d.total(), BigUint::one());
        let z = partition_function(&Graph::petersen(), &h).unwrap();
        assert_eq!(z, Rational::one());
    }

    #[test]
    fn hexagon_and_two_triangles() {
        let c6 = Graph::cycle(6).unwrap();
        let d = hom_distribution(&c6, &k3_target()).unwrap();
        assert_eq!(d.total(), BigUint::from(66u32));
        assert_eq!(d.count(&[2, 2, 2]), BigUint::from(24u32));
        assert_eq!(d.classes(), &brute_distribution(&c6, &k3_target()));

        let two = Graph::complete(3).unwrap().copies(2).unwrap();
        let d = hom_distribution(&two, &k3_target()).unwrap();
        assert_eq!(d.classes().len(), 1);
        assert_eq!(d.count(&[2, 2, 2]), BigUint::from(36u32));
    }

    #[test]
    fn convolution_algebra() {
        let single = hom_distribution(&Graph::complete(3).unwrap(), &k3_target()).unwrap();
        let sq = distribution_power(&single, 2).unwrap();
        assert_eq!(sq.count(&[2, 2, 2]), BigUint::from(36u32));
        assert_eq!(distribution_power(&single, 1).unwrap(), single);
        let id = WeightClassDistribution::identity(&k3_target());
        assert_eq!(distribution_convolve(&single, &id).unwrap(), single);
        let empty = hom_distribution(&Graph::empty(0).unwrap(), &k3_target()).unwrap();
        assert_eq!(empty, id);

        let other = TargetGraph::independent_set(Rational::one()).unwrap();
        let d2 = hom_distribution(&Graph::complete(2).unwrap(), &other).unwrap();
        assert_eq!(
            distribution_convolve(&single, &d2),
            Err(Error::TargetMismatch)
        );
    }

    #[test]
    fn injection_examples() {
        let k3 = Graph::complete(3).unwrap();
        let tri = hom_distribution(&k3, &k3_target()).unwrap();
        let hex = hom_distribution(&k3.double_cover().unwrap(), &k3_target()).unwrap();

        let source = distribution_power(&tri, 2).unwrap();
        match injection_domination(&source, &hex).unwrap() {
            Domination::Fails {
                class,
                source_count,
                target_count,
            } => {
                assert_eq!(class, vec![2, 2, 2]);
                assert_eq!(source_count, "36");
                assert_eq!(target_count, "24");
            }
            Domination::Holds => panic!("one copy cannot inject"),
        }

        let source = distribution_power(&tri, 10).unwrap();
        assert_eq!(source.count(&[10, 10, 10]), BigUint::from(60_466_176u32));
        let target = distribution_power(&hex, 5).unwrap();
        assert!(injection_domination(&source, &target).unwrap().holds());
        assert!(injection_domination(&hex, &hex).unwrap().holds());
    }

    #[test]
    fn independent_set_target_matches_polynomial() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let lam = parse_rational("3/7").unwrap();
        let h = TargetGraph::independent_set(lam.clone()).unwrap();
        for _ in 0..100 {
            let n = rng.gen_range(1..=8);
            let g = random_graph(n, 0.4, &mut rng).unwrap();
            let d = hom_distribution(&g, &h).unwrap();
            let poly = independence_polynomial(&g);
            for (class, count) in d.classes() {
                assert_eq!(BigInt::from(count.clone()), poly.coeff(class[0] as usize));
            }
            assert_eq!(d.classes().len(), poly.coeffs().len());
            assert_eq!(partition_function(&g, &h).unwrap(), poly.eval(&lam));
        }
        let k2 = Graph::complete(2).unwrap();
        let z = partition_function(&k2, &h).unwrap();
        assert_eq!(z, Rational::one() + lam * Rational::from_integer(2.into()));
    }

    #[test]
    fn matches_brute_force_on_small_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..150 {
            let n = rng.gen_range(0..=7);
            let m = rng.gen_range(1..=4);
            let g = random_graph(n, 0.4, &mut rng).unwrap();
            let mut adj = vec![0u64; m];
            for i in 0..m {
                for j in i..m {
                    if rng.gen_bool(0.5) {
                        adj[i] |= bit(j);
                        adj[j] |= bit(i);
                    }
                }
            }
            let h = TargetGraph::new(adj, vec![Rational::one(); m]).unwrap();
            let d = hom_distribution(&g, &h).unwrap();
            let brute = brute_distribution(&g, &h);
            assert_eq!(d.classes(), &brute);
        }
    }

    #[test]
    fn multiplicative_over_unions() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let h = TargetGraph::from_graph(&Graph::cycle(5).unwrap()).unwrap();
        for _ in 0..20 {
            let a = random_graph(rng.gen_range(1..6), 0.5, &mut rng).unwrap();
            let b = random_graph(rng.gen_range(1..6), 0.5, &mut rng).unwrap();
            let u = Graph::disjoint_union(&[a.clone(), b.clone()]).unwrap();
            let joined = distribution_convolve(
                &hom_distribution(&a, &h).unwrap(),
                &hom_distribution(&b, &h).unwrap(),
            )
            .unwrap();
            assert_eq!(hom_distribution(&u, &h).unwrap(), joined);
        }
    }

    #[test]
    fn weighted_partition_function() {
        let z = partition_function(&Graph::complete(3).unwrap(), &k3_target()).unwrap();
        assert_eq!(z, Rational::from_integer(6.into()));
        let weighted = k3_target()
            .with_activities(vec![
                parse_rational("2").unwrap(),
                parse_rational("1/3").unwrap(),
                parse_rational("5").unwrap(),
            ])
            .unwrap();
        let z = partition_function(&Graph::complete(3).unwrap(), &weighted).unwrap();
        assert_eq!(z, parse_rational("20").unwrap());
    }

    #[test]
    fn target_validation_and_json() {
        assert!(TargetGraph::new(vec![0b10, 0b00], vec![Rational::one(); 2]).is_err());
        assert!(TargetGraph::independent_set(Rational::zero()).is_err());
        let json = r#"{"m": 2, "adj": [[1], [0]], "loops": [1], "activities": ["1/2", "1"]}"#;
        let h = read_target_json(json).unwrap();
        assert_eq!(
            h,
            TargetGraph::independent_set(parse_rational("1/2").unwrap()).unwrap()
        );
        let back = serde_json::to_string(&TargetGraphJson::from(&h)).unwrap();
        assert_eq!(read_target_json(&back).unwrap(), h);
        let dist = hom_distribution(&Graph::complete(2).unwrap(), &h).unwrap();
        assert_eq!(
            serde_json::to_string(&dist).unwrap(),
            r#"[{"class":[0,2],"count":"1"},{"class":[1,1],"count":"2"}]"#
        );
    }

    #[test]
    fn component_size_guard() {
        let big = Graph::cycle(21).unwrap();
        assert!(matches!(
            hom_distribution(&big, &k3_target()),
            Err(Error::TooLarge { .. })
        ));
        // Many small components are fine.
        let many = Graph::complete(3).unwrap().copies(12).unwrap();
        let d = hom_distribution(&many, &k3_target()).unwrap();
        assert_eq!(d.total(), BigUint::from(6u32).pow(12u32));
    }
}
