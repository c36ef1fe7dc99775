//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so that every criterion reports even
//! when an earlier one fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hardcore::bijection::verify_lemma;
use hardcore::bounds::{
    check_biweighted_all_orientations, check_chain_eq5, check_corollary1, check_edge_weighted_eq3,
    check_termwise_eq6, check_theorem1, default_activity_grid, extremal_polynomial, BoundReport,
    Detail, Regime, Verdict,
};
use hardcore::generate::{enumerate_all_up_to, enumerate_regular, isomorphic, random_graph};
use hardcore::hom::{
    distribution_power, hom_distribution, injection_domination, partition_function, TargetGraph,
};
use hardcore::indset::{
    bipartite_profile, brute_force_polynomial, independence_count, independence_polynomial,
};
use hardcore::rational::parse_rational;
use hardcore::{Graph, IntPolynomial, Rational};
use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(s: &str) -> Rational {
    parse_rational(s).expect("rational literal")
}

fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

/// Every labelled graph on at most 6 vertices, then 1000 random graphs on
/// 7 to 12 vertices.
fn small_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 0..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push(Graph::from_edges(n, &edges).expect("valid edges"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let n = rng.gen_range(7..=12);
        let p = rng.gen_range(0.15..0.6);
        out.push(random_graph(n, p, &mut rng).expect("small graph"));
    }
    out
}

/// The d-regular sweep: (2, n <= 12), (3, n <= 10), (4, n <= 9).
fn regular_sweep() -> Vec<(usize, Graph)> {
    let mut out = Vec::new();
    for (d, max_n) in [(2usize, 12usize), (3, 10), (4, 9)] {
        for n in d + 1..=max_n {
            if n * d % 2 == 1 {
                continue;
            }
            for g in enumerate_regular(n, d, true).expect("within guard") {
                out.push((d, g));
            }
        }
    }
    out
}

fn union_of_kdd(g: &Graph, d: usize) -> bool {
    let n = g.n();
    n.is_multiple_of(2 * d)
        && isomorphic(
            g,
            &Graph::complete_bipartite(d, d)
                .and_then(|k| k.copies(n / (2 * d)))
                .expect("small graph"),
        )
}

fn certificate(r: &BoundReport) -> String {
    format!(
        "{} {} [{}] {} lhs={} rhs={}",
        r.bound,
        r.graph6,
        r.params.render(),
        r.verdict,
        r.lhs,
        r.rhs
    )
}

fn criterion1() -> Outcome {
    for d in 1..=8 {
        let k = Graph::complete_bipartite(d, d).map_err(|e| e.to_string())?;
        let two_pow = IntPolynomial::from_i64s(&[1, 1]).pow(d as u64);
        let expected = &(&two_pow * &IntPolynomial::constant(2)) + &IntPolynomial::constant(-1);
        let p = independence_polynomial(&k);
        ensure!(p == expected, "P(K{d},{d}) = {p}, expected {expected}");
        ensure!(
            extremal_polynomial(d) == expected,
            "extremal polynomial differs at d={d}"
        );
        let count = independence_count(&k);
        ensure!(
            count == (BigInt::from(1) << (d + 1)) - 1,
            "i(K{d},{d}) = {count}"
        );
    }
    Ok("d = 1..8".into())
}

fn criterion2(corpus: &[Graph]) -> Outcome {
    for g in corpus {
        let r = verify_lemma(g).map_err(|e| e.to_string())?;
        ensure!(
            r.passed(),
            "{} failed: {}",
            r.graph6,
            serde_json::to_string(&r).expect("serializable")
        );
    }
    Ok(format!("{} graphs", corpus.len()))
}

fn criterion3(corpus: &[Graph]) -> Outcome {
    for g in corpus {
        let fast = independence_polynomial(g);
        let slow = brute_force_polynomial(g).map_err(|e| e.to_string())?;
        ensure!(fast == slow, "{g:?}: {fast} vs {slow}");
    }
    Ok(format!("{} graphs", corpus.len()))
}

fn criterion4(sweep: &[(usize, Graph)]) -> Outcome {
    let lambdas = [q("1/2"), q("1"), q("2")];
    let mut equalities = 0;
    for (d, g) in sweep {
        let extremal = union_of_kdd(g, *d);
        let mut reports: Vec<BoundReport> = lambdas
            .iter()
            .map(|l| check_theorem1(g, l))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        reports.push(check_corollary1(g).map_err(|e| e.to_string())?);
        for r in &reports {
            ensure!(
                r.verdict != Verdict::Violation,
                "violation: {}",
                certificate(r)
            );
            ensure!(r.is_consistent(), "inconsistent: {}", certificate(r));
            ensure!(
                (r.verdict == Verdict::Equality) == extremal,
                "equality mismatch (union of K_dd: {extremal}): {}",
                certificate(r)
            );
        }
        equalities += usize::from(extremal);
    }
    Ok(format!(
        "{} graphs, {equalities} equality graphs, all unions of K_d,d",
        sweep.len()
    ))
}

fn criterion5() -> Outcome {
    let levels = enumerate_all_up_to(8);
    let mut checked = 0;
    for g in levels.iter().flatten() {
        for lam in ["0", "1/2", "1", "3"] {
            let r = check_chain_eq5(g, &q(lam)).map_err(|e| e.to_string())?;
            ensure!(
                r.verdict != Verdict::Violation,
                "violation: {}",
                certificate(&r)
            );
            ensure!(
                r.detail == Some(Detail::PairCount { holds: true }),
                "pair count identity fails for {}",
                r.graph6
            );
        }
        checked += 1;
    }
    ensure!(checked >= 5000, "only {checked} graphs");
    let r =
        check_chain_eq5(&Graph::complete(3).expect("K_3"), &q("1")).map_err(|e| e.to_string())?;
    ensure!(
        r.rhs == q("18") && r.lhs == q("16"),
        "K3: {} vs {}",
        r.rhs,
        r.lhs
    );
    Ok(format!(
        "{checked} graphs on <= 8 vertices; i(K3xK2) = 18 >= 16"
    ))
}

fn criterion6() -> Outcome {
    let k3 = Graph::complete(3).map_err(|e| e.to_string())?;
    let h = TargetGraph::from_graph(&k3).map_err(|e| e.to_string())?;
    let single = hom_distribution(&k3, &h).map_err(|e| e.to_string())?;
    let two = hom_distribution(&k3.copies(2).expect("2K3"), &h).map_err(|e| e.to_string())?;
    let hex = hom_distribution(&k3.double_cover().expect("C6"), &h).map_err(|e| e.to_string())?;
    let balanced = [2u32, 2, 2];
    ensure!(
        two.count(&balanced) == BigUint::from(36u32),
        "2K3: {}",
        two.count(&balanced)
    );
    ensure!(
        hex.count(&balanced) == BigUint::from(24u32),
        "C6: {}",
        hex.count(&balanced)
    );
    let mut detail = Vec::new();
    for l in [1u32, 5, 6] {
        let source = distribution_power(&single, 2 * l).map_err(|e| e.to_string())?;
        let target = distribution_power(&hex, l).map_err(|e| e.to_string())?;
        let holds = injection_domination(&source, &target)
            .map_err(|e| e.to_string())?
            .holds();
        ensure!(holds == (l >= 5), "domination at l={l}: {holds}");
        if l == 5 {
            let count = source.count(&[10, 10, 10]);
            ensure!(
                count == BigUint::from(60_466_176u32),
                "source count {count}"
            );
        }
        detail.push(format!("l={l} {}", if holds { "holds" } else { "fails" }));
    }
    Ok(format!("36, 24, {}, 36^5 = 60466176", detail.join(", ")))
}

fn criterion7() -> Outcome {
    let hex_pair = Graph::complete(3)
        .and_then(|k| k.double_cover())
        .and_then(|c| c.copies(2))
        .map_err(|e| e.to_string())?;
    let k22 = Graph::complete_bipartite(2, 2)
        .and_then(|k| k.copies(3))
        .map_err(|e| e.to_string())?;
    let mut got = Vec::new();
    for g in [&hex_pair, &k22] {
        let bp = g
            .canonical_bipartition(g.vertex_set())
            .ok_or("not bipartite")?;
        got.push(
            bipartite_profile(g, &bp)
                .map_err(|e| e.to_string())?
                .bivar
                .coeff(3, 3),
        );
    }
    ensure!(
        got == [BigInt::from(2), BigInt::from(0)],
        "coefficients {got:?}"
    );
    Ok("coefficient (3,3): 2 for 2(K3xK2), 0 for 3K2,2".into())
}

fn criterion8(sweep: &[(usize, Graph)]) -> Outcome {
    let grid = default_activity_grid();
    let mut graphs = 0;
    let mut checks = 0;
    for (_, g) in sweep.iter().filter(|(_, g)| g.is_bipartite()) {
        graphs += 1;
        for mu in &grid {
            for lam in &grid {
                let r = check_biweighted_all_orientations(g, mu, lam).map_err(|e| e.to_string())?;
                ensure!(
                    r.verdict != Verdict::Violation,
                    "violation: {}",
                    certificate(&r)
                );
                match r.detail {
                    Some(Detail::Orientations {
                        exhaustive: true, ..
                    }) => {}
                    ref other => return Err(format!("orientations not exhaustive: {other:?}")),
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{graphs} bipartite graphs, {checks} grid points"))
}

fn criterion9() -> Outcome {
    let levels = enumerate_all_up_to(8);
    let mut checked = 0;
    for g in levels.iter().flatten() {
        if g.n() < 2 || !g.is_connected() || g.max_degree() > 5 {
            continue;
        }
        let r = check_edge_weighted_eq3(g).map_err(|e| e.to_string())?;
        ensure!(r.regime == Regime::Proved, "regime for {}", r.graph6);
        ensure!(
            r.verdict != Verdict::Violation,
            "violation: {}",
            certificate(&r)
        );
        checked += 1;
    }
    Ok(format!("{checked} connected graphs, exhaustive"))
}

fn criterion10(sweep: &[(usize, Graph)]) -> Outcome {
    let mut findings = Vec::new();
    for (_, g) in sweep {
        let r = check_termwise_eq6(g).map_err(|e| e.to_string())?;
        ensure!(r.is_consistent(), "inconsistent: {}", certificate(&r));
        if r.verdict == Verdict::Violation {
            findings.push(certificate(&r));
        } else {
            let cor = check_corollary1(g).map_err(|e| e.to_string())?;
            ensure!(
                cor.verdict != Verdict::Violation,
                "termwise holds but the count bound fails: {}",
                certificate(&cor)
            );
        }
    }
    for f in &findings {
        println!("    FINDING {f}");
    }
    Ok(format!(
        "{} graphs, {} findings",
        sweep.len(),
        findings.len()
    ))
}

fn criterion11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.7);
        let g = random_graph(n, p, &mut rng).map_err(|e| e.to_string())?;
        let lam = Rational::new(rng.gen_range(1..=20).into(), rng.gen_range(1..=10).into());
        let h = TargetGraph::independent_set(lam.clone()).map_err(|e| e.to_string())?;
        let z = partition_function(&g, &h).map_err(|e| e.to_string())?;
        let poly = independence_polynomial(&g);
        ensure!(
            z == poly.eval(&lam),
            "{g:?} at {lam}: {z} vs {}",
            poly.eval(&lam)
        );
        let dist = hom_distribution(&g, &h).map_err(|e| e.to_string())?;
        for k in 0..=n {
            let count = dist.count(&[k as u32, (n - k) as u32]);
            ensure!(
                BigInt::from(count.clone()) == poly.coeff(k),
                "{g:?}: size {k} has {count} maps, {} sets",
                poly.coeff(k)
            );
        }
    }
    Ok("1000 random graphs".into())
}

fn criterion12() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_hardcore"))
        .arg("paper-numbers")
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "exit status {:?}", out.status.code());
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    ensure!(!text.contains("MISMATCH"), "mismatch in:\n{text}");
    let mut rows: Vec<String> = (1..=8u32)
        .map(|d| {
            format!(
                "i(K{d},{d}) = 2^{} - 1 | {v} | {v} | ok",
                d + 1,
                v = (1u32 << (d + 1)) - 1
            )
        })
        .collect();
    rows.extend(
        [
            "Hom(2·K3, K3) balanced class | 36 | 36 | ok",
            "Hom(K3×K2, K3) balanced class | 24 | 24 | ok",
            "injection Hom(2·K3, K3) -> Hom(1·K3×K2, K3) | fails | fails | ok",
            "injection Hom(10·K3, K3) -> Hom(5·K3×K2, K3) | holds | holds | ok",
            "injection Hom(12·K3, K3) -> Hom(6·K3×K2, K3) | holds | holds | ok",
            "Hom(10·K3, K3) balanced class = 36^5 | 60466176 | 60466176 | ok",
            "2·(K3×K2) independent sets with 3 per side | 2 | 2 | ok",
            "3·K2,2 independent sets with 3 per side | 0 | 0 | ok",
        ]
        .map(String::from),
    );
    for row in &rows {
        ensure!(text.lines().any(|l| l == row), "missing row {row:?}");
    }
    let polys = text
        .lines()
        .filter(|l| l.starts_with("P(λ, K") && l.ends_with("| ok"))
        .count();
    ensure!(polys == 8, "{polys} polynomial rows");
    Ok(format!("exit 0, {} rows checked", rows.len() + polys))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = small_corpus();
    let sweep = regular_sweep();
    println!(
        "corpus: {} small graphs, {} regular graphs ({:.1?})",
        corpus.len(),
        sweep.len(),
        start.elapsed()
    );
    type Check<'a> = Box<dyn FnOnce() -> Outcome + 'a>;
    let criteria: Vec<(u32, &str, Option<Duration>, Check)> = vec![
        (
            1,
            "extremal values of K_d,d",
            Some(Duration::from_secs(1)),
            Box::new(criterion1),
        ),
        (
            2,
            "pair-family lemma",
            None,
            Box::new(|| criterion2(&corpus)),
        ),
        (
            3,
            "branching equals subset oracle",
            None,
            Box::new(|| criterion3(&corpus)),
        ),
        (
            4,
            "regular sweep, equality on unions of K_d,d",
            Some(minutes(30)),
            Box::new(|| criterion4(&sweep)),
        ),
        (
            5,
            "double cover chain and pair count",
            None,
            Box::new(criterion5),
        ),
        (
            6,
            "homomorphism class counts and injections",
            Some(minutes(1)),
            Box::new(criterion6),
        ),
        (
            7,
            "biweighted (3,3) coefficients",
            Some(Duration::from_secs(1)),
            Box::new(criterion7),
        ),
        (
            8,
            "biweighted sweep over all orientations",
            Some(minutes(30)),
            Box::new(|| criterion8(&sweep)),
        ),
        (
            9,
            "edge-weighted bound, max degree <= 5",
            Some(minutes(60)),
            Box::new(criterion9),
        ),
        (
            10,
            "termwise exploration",
            Some(minutes(30)),
            Box::new(|| criterion10(&sweep)),
        ),
        (
            11,
            "independent-set target encoding",
            None,
            Box::new(criterion11),
        ),
        (
            12,
            "paper-numbers subcommand",
            Some(minutes(1)),
            Box::new(criterion12),
        ),
    ];
    let mut failed = 0;
    for (id, title, budget, check) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = t.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.1?}, budget {b:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {title}: {detail} ({elapsed:.1?})"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {title}: {why} ({elapsed:.1?})");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
