//! Runs bound checks over a stream of graphs and aggregates the outcomes.

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    biweighted_all_orientations_with, chain_eq5_with_pairs, check_corollary1,
    check_edge_weighted_eq3, check_hom_bounds, check_termwise_eq6, check_theorem1,
    default_activity_grid, pair_polynomial, BoundId, BoundReport, ComponentProfiles, Verdict,
    PAIR_COUNT_MAX_N,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::hom::TargetGraph;
use crate::rational::{format_rational, Rational};

/// What to check and where.
#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub bounds: Vec<BoundId>,
    /// Activity grid for `λ`, and for `μ` in the biweighted check.
    pub lambdas: Vec<Rational>,
    /// Targets for the homomorphism bounds. Unweighted targets feed
    /// `EQ7_HOM`, weighted ones `EQ8_HOM_WEIGHTED`.
    pub targets: Vec<TargetGraph>,
}

impl ScanConfig {
    pub fn new(bounds: Vec<BoundId>) -> Self {
        let lambdas = default_activity_grid();
        let targets = default_targets(&lambdas);
        ScanConfig {
            bounds,
            lambdas,
            targets,
        }
    }

    pub fn with_lambdas(mut self, lambdas: Vec<Rational>) -> Self {
        self.targets = default_targets(&lambdas);
        self.lambdas = lambdas;
        self
    }

    pub fn with_targets(mut self, targets: Vec<TargetGraph>) -> Self {
        self.targets = targets;
        self
    }
}

/// `K_3`, plus the independent-set target at every positive grid point.
pub fn default_targets(lambdas: &[Rational]) -> Vec<TargetGraph> {
    let k3 = TargetGraph::from_graph(&Graph::complete(3).expect("K_3")).expect("K_3 target");
    let positive = lambdas
        .iter()
        .filter(|l| *l > &Rational::from_integer(0.into()))
        .map(|l| TargetGraph::independent_set(l.clone()).expect("positive activity"));
    std::iter::once(k3).chain(positive).collect()
}

/// A check that could not run on a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkipNote {
    pub graph6: String,
    pub bound: BoundId,
    pub reason: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    pub strict: usize,
    pub equality: usize,
    pub violation: usize,
    pub skipped: usize,
}

/// Aggregate of a scan; checks are ordered by graph6 certificate, bound,
/// then parameters, whatever order the work finished in.
#[derive(Clone, Debug, Default)]
pub struct ScanReport {
    pub graphs: usize,
    pub checks: Vec<BoundReport>,
    pub skipped: Vec<SkipNote>,
}

impl ScanReport {
    pub fn counts(&self) -> BTreeMap<BoundId, VerdictCounts> {
        let mut counts: BTreeMap<BoundId, VerdictCounts> = BTreeMap::new();
        for r in &self.checks {
            let c = counts.entry(r.bound).or_default();
            match r.verdict {
                Verdict::Strict => c.strict += 1,
                Verdict::Equality => c.equality += 1,
                Verdict::Violation => c.violation += 1,
            }
        }
        for s in &self.skipped {
            counts.entry(s.bound).or_default().skipped += 1;
        }
        counts
    }

    pub fn equality_cases(&self) -> impl Iterator<Item = &BoundReport> {
        self.checks
            .iter()
            .filter(|r| r.verdict == Verdict::Equality)
    }

    /// Violations where the bound is a theorem: these indict the code.
    pub fn proved_violations(&self) -> impl Iterator<Item = &BoundReport> {
        self.checks.iter().filter(|r| r.is_bug())
    }

    /// Violations of conjectured bounds.
    pub fn findings(&self) -> impl Iterator<Item = &BoundReport> {
        self.checks.iter().filter(|r| r.is_finding())
    }

    pub fn has_proved_violation(&self) -> bool {
        self.proved_violations().next().is_some()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Json<'a> {
            graphs: usize,
            counts: BTreeMap<BoundId, VerdictCounts>,
            equality_cases: Vec<&'a BoundReport>,
            proved_violations: Vec<&'a BoundReport>,
            findings: Vec<&'a BoundReport>,
            skipped: &'a [SkipNote],
            checks: &'a [BoundReport],
        }
        let json = Json {
            graphs: self.graphs,
            counts: self.counts(),
            equality_cases: self.equality_cases().collect(),
            proved_violations: self.proved_violations().collect(),
            findings: self.findings().collect(),
            skipped: &self.skipped,
            checks: &self.checks,
        };
        serde_json::to_string_pretty(&json).expect("scan report serializes")
    }

    /// One row per check: bound, graph6, params, verdict, lhs, rhs, regime.
    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "bound_id", "graph6", "params", "verdict", "lhs", "rhs", "regime",
        ])?;
        for r in &self.checks {
            w.write_record([
                r.bound.name().to_string(),
                r.graph6.clone(),
                r.params.render(),
                r.verdict.to_string(),
                format_rational(&r.lhs),
                format_rational(&r.rhs),
                match r.regime {
                    crate::bounds::Regime::Proved => "proved".to_string(),
                    crate::bounds::Regime::Conjectured => "conjectured".to_string(),
                },
            ])?;
        }
        w.flush()
    }
}

/// Runs every configured check on every graph. Per-item precondition
/// failures become [`SkipNote`]s; they never abort the scan.
pub fn scan<I: IntoIterator<Item = Graph>>(graphs: I, config: &ScanConfig) -> ScanReport {
    let graphs: Vec<Graph> = graphs.into_iter().collect();
    let per_graph: Vec<(Vec<BoundReport>, Vec<SkipNote>)> =
        graphs.par_iter().map(|g| scan_graph(g, config)).collect();
    let mut report = ScanReport {
        graphs: graphs.len(),
        ..ScanReport::default()
    };
    for (checks, skipped) in per_graph {
        report.checks.extend(checks);
        report.skipped.extend(skipped);
    }
    report
        .checks
        .sort_by_cached_key(|r| (r.graph6.clone(), r.bound, r.params.render()));
    report
        .skipped
        .sort_by(|a, b| (&a.graph6, a.bound).cmp(&(&b.graph6, b.bound)));
    report
}

fn scan_graph(g: &Graph, config: &ScanConfig) -> (Vec<BoundReport>, Vec<SkipNote>) {
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let graph6 = write_graph6(g);
    let mut record = |bound: BoundId, outcome: Result<Vec<BoundReport>>| match outcome {
        Ok(rs) => checks.extend(rs),
        Err(e) => skipped.push(SkipNote {
            graph6: graph6.clone(),
            bound,
            reason: e.to_string(),
        }),
    };
    let lambdas = &config.lambdas;
    for &bound in &config.bounds {
        let outcome = match bound {
            BoundId::Thm1 => lambdas.iter().map(|l| check_theorem1(g, l)).collect(),
            BoundId::Cor1 => check_corollary1(g).map(|r| vec![r]),
            BoundId::Eq3Edge => check_edge_weighted_eq3(g).map(|r| vec![r]),
            BoundId::Eq4Biweighted => biweighted_grid(g, lambdas),
            BoundId::Eq5Chain => chain_grid(g, lambdas),
            BoundId::Eq6Termwise => check_termwise_eq6(g).map(|r| vec![r]),
            BoundId::Eq7Hom | BoundId::Eq8HomWeighted => {
                let weighted = bound == BoundId::Eq8HomWeighted;
                let targets: Vec<&TargetGraph> = config
                    .targets
                    .iter()
                    .filter(|h| h.is_unweighted() != weighted)
                    .collect();
                if targets.is_empty() {
                    Err(Error::Parameter("no target graph for this bound".into()))
                } else {
                    targets
                        .into_iter()
                        .map(|h| check_hom_bounds(g, h))
                        .collect()
                }
            }
        };
        record(bound, outcome);
    }
    (checks, skipped)
}

fn biweighted_grid(g: &Graph, lambdas: &[Rational]) -> Result<Vec<BoundReport>> {
    g.require_regular()?;
    let profiles = ComponentProfiles::new(g)?;
    let mut out = Vec::with_capacity(lambdas.len() * lambdas.len());
    for mu in lambdas {
        for lam in lambdas {
            out.push(biweighted_all_orientations_with(g, &profiles, mu, lam)?);
        }
    }
    Ok(out)
}

fn chain_grid(g: &Graph, lambdas: &[Rational]) -> Result<Vec<BoundReport>> {
    let pairs = if g.n() <= PAIR_COUNT_MAX_N {
        Some(pair_polynomial(g)?)
    } else {
        None
    };
    lambdas
        .iter()
        .map(|l| chain_eq5_with_pairs(g, l, pairs.as_ref()))
        .collect()
}
