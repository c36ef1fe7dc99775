use std::fmt::Write as _;
use std::io::Write;

use hardcore::bijection::{describe_set, verify_lemma_with_limit, FAMILY_MAX_N};
use hardcore::bounds::{
    biweighted_all_orientations_with, chain_eq5_with_pairs, check_biweighted_eq4, check_corollary1,
    check_edge_weighted_eq3, check_hom_bounds, check_termwise_biweighted, check_termwise_eq6,
    check_theorem1, default_activity_grid, pair_polynomial_with_limit, BoundId, BoundReport,
    ComponentProfiles, Detail, Regime, PAIR_COUNT_MAX_N,
};
use hardcore::claims::paper_numbers;
use hardcore::generate::{enumerate_regular_with_limit, REGULAR_MAX_N};
use hardcore::graph6::{write_graph6, EdgeList};
use hardcore::hom::{hom_distribution, TargetGraph, TargetGraphJson};
use hardcore::indset::{
    bipartite_profile, brute_force_polynomial_with_limit, independence_polynomial,
    BRUTE_FORCE_MAX_N,
};
use hardcore::rational::format_rational;
use hardcore::scan::{default_targets, scan, ScanConfig, ScanReport};
use hardcore::{Bipartition, Graph, IntPolynomial, Rational, Termwise};
use serde::Serialize;

use crate::input::{
    load_graphs, load_target, max_n_override, parse_rational_flag, parse_rational_list,
    parse_usize_list,
};
use crate::{Cli, CliError, Command, Format, TargetArgs};

pub enum Status {
    Clean,
    ProvedViolation,
}

impl Status {
    fn from_bug(bug: bool) -> Self {
        if bug {
            Status::ProvedViolation
        } else {
            Status::Clean
        }
    }
}

pub fn run(cli: &Cli) -> Result<Status, CliError> {
    let mut out = String::new();
    let status = match &cli.command {
        Command::Poly {
            graph,
            lambda,
            brute_force,
        } => poly(
            &mut out,
            cli.format,
            &graph.input,
            lambda.as_deref(),
            *brute_force,
        )?,
        Command::Profile { graph, left } => {
            profile(&mut out, cli.format, &graph.input, left.as_deref())?
        }
        Command::Lemma { graph } => lemma(&mut out, cli.format, &graph.input)?,
        Command::DoubleCover { graph } => double_cover(&mut out, cli.format, &graph.input)?,
        Command::Hom { graph, target } => hom(&mut out, cli.format, &graph.input, target)?,
        Command::Check {
            bound,
            graph,
            lambda,
            mu,
            left,
            bivariate,
            target,
        } => {
            let bound: BoundId = bound
                .parse()
                .map_err(|e| CliError::Usage(format!("--bound: {e}")))?;
            let opts = CheckOptions {
                lambdas: lambda
                    .as_deref()
                    .map(|l| parse_rational_list("lambda", l))
                    .transpose()?,
                mus: mu
                    .as_deref()
                    .map(|m| parse_rational_list("mu", m))
                    .transpose()?,
                left: left
                    .as_deref()
                    .map(|l| parse_usize_list("left", l))
                    .transpose()?,
                bivariate: *bivariate,
                target,
            };
            check(&mut out, cli.format, bound, &graph.input, &opts)?
        }
        Command::Scan {
            n,
            d,
            input,
            lambda,
            bounds,
            jobs,
            no_dedup,
        } => {
            if let Some(j) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads((*j).max(1))
                    .build_global()
                    .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
            }
            let graphs = match (input, n, d) {
                (Some(src), _, _) => load_graphs(src)?,
                (None, Some(n), Some(d)) => enumerate(n, *d, !no_dedup)?,
                _ => {
                    return Err(CliError::Usage(
                        "scan needs --n and --d, or an input".into(),
                    ))
                }
            };
            let bounds = match bounds {
                Some(b) => b
                    .split(',')
                    .map(|s| {
                        s.parse()
                            .map_err(|e| CliError::Usage(format!("--bounds: {e}")))
                    })
                    .collect::<Result<Vec<BoundId>, _>>()?,
                None => BoundId::ALL.to_vec(),
            };
            let mut config = ScanConfig::new(bounds);
            if let Some(l) = lambda {
                config = config.with_lambdas(parse_rational_list("lambda", l)?);
            }
            let report = scan(graphs, &config);
            render_scan(&mut out, cli.format, &report)?;
            Status::from_bug(report.has_proved_violation())
        }
        Command::PaperNumbers => {
            let table = paper_numbers()?;
            match cli.format {
                Format::Json => out.push_str(&to_json_pretty(&table)),
                Format::Csv => {
                    let mut w = csv_writer();
                    w.write_record(["claim", "expected", "computed", "status"])
                        .map_err(csv_err)?;
                    for r in &table.rows {
                        w.write_record([
                            r.claim.as_str(),
                            r.expected.as_deref().unwrap_or(""),
                            r.computed.as_str(),
                            r.status(),
                        ])
                        .map_err(csv_err)?;
                    }
                    out.push_str(&finish_csv(w)?);
                }
                Format::Human => {
                    out.push_str("claim | expected | computed | match\n");
                    for r in &table.rows {
                        let _ = writeln!(out, "{r}");
                    }
                }
            }
            Status::from_bug(!table.all_match())
        }
    };
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|e| CliError::Io(format!("stdout: {e}")))?;
    Ok(status)
}

fn limit(default: usize) -> Result<usize, CliError> {
    Ok(max_n_override()?.unwrap_or(default))
}

fn enumerate(n: &str, d: usize, dedup: bool) -> Result<Vec<Graph>, CliError> {
    let bad = || CliError::Usage(format!("--n: {n:?} is not N or LO..HI"));
    let (lo, hi, single) = match n.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
            false,
        ),
        None => {
            let v: usize = n.trim().parse().map_err(|_| bad())?;
            (v, v, true)
        }
    };
    let max_n = limit(REGULAR_MAX_N)?;
    let mut graphs = Vec::new();
    for n in lo..=hi {
        // Inside a range, orders with no d-regular graph are simply empty.
        if !single && (d >= n || n * d % 2 == 1) {
            continue;
        }
        graphs.extend(enumerate_regular_with_limit(n, d, dedup, max_n)?);
    }
    Ok(graphs)
}

fn to_json_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn json_line<T: Serialize>(out: &mut String, v: &T) {
    out.push_str(&serde_json::to_string(v).expect("serializable"));
    out.push('\n');
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Io(format!("csv: {e}"))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Io(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn coefficient_list(p: &IntPolynomial) -> String {
    p.coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn poly(
    out: &mut String,
    format: Format,
    source: &str,
    lambda: Option<&str>,
    brute_force: bool,
) -> Result<Status, CliError> {
    #[derive(Serialize)]
    struct Row {
        graph6: String,
        n: usize,
        poly: IntPolynomial,
        count: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        lambda: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        value: Option<String>,
    }
    let lam = lambda
        .map(|l| parse_rational_flag("lambda", l))
        .transpose()?;
    let max_n = limit(BRUTE_FORCE_MAX_N)?;
    let mut rows = Vec::new();
    for g in load_graphs(source)? {
        let p = if brute_force {
            brute_force_polynomial_with_limit(&g, max_n)?
        } else {
            independence_polynomial(&g)
        };
        rows.push(Row {
            graph6: write_graph6(&g),
            n: g.n(),
            count: p.eval_at_one().to_string(),
            value: lam.as_ref().map(|l| format_rational(&p.eval(l))),
            lambda: lam.as_ref().map(format_rational),
            poly: p,
        });
    }
    match format {
        Format::Json => rows.iter().for_each(|r| json_line(out, r)),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["graph6", "n", "coefficients", "count", "lambda", "value"])
                .map_err(csv_err)?;
            for r in &rows {
                w.write_record([
                    r.graph6.clone(),
                    r.n.to_string(),
                    coefficient_list(&r.poly),
                    r.count.clone(),
                    r.lambda.clone().unwrap_or_default(),
                    r.value.clone().unwrap_or_default(),
                ])
                .map_err(csv_err)?;
            }
            out.push_str(&finish_csv(w)?);
        }
        Format::Human => {
            for r in &rows {
                let _ = writeln!(out, "graph6: {}", r.graph6);
                let _ = writeln!(out, "P(λ) = {}", r.poly);
                let _ = writeln!(out, "i = {}", r.count);
                if let (Some(l), Some(v)) = (&r.lambda, &r.value) {
                    let _ = writeln!(out, "P({l}) = {v}");
                }
            }
        }
    }
    Ok(Status::Clean)
}

fn bipartition_from_left(g: &Graph, left: &[usize]) -> Result<Bipartition, CliError> {
    let mut l = 0u64;
    for &v in left {
        if v >= g.n() {
            return Err(CliError::Usage(format!("--left: vertex {v} out of range")));
        }
        l |= 1 << v;
    }
    let bp = Bipartition {
        left: l,
        right: g.vertex_set() & !l,
        over: g.vertex_set(),
    };
    bp.validate(g)?;
    Ok(bp)
}

fn profile(
    out: &mut String,
    format: Format,
    source: &str,
    left: Option<&str>,
) -> Result<Status, CliError> {
    let left = left.map(|l| parse_usize_list("left", l)).transpose()?;
    let mut csv_rows = csv_writer();
    if format == Format::Csv {
        csv_rows
            .write_record(["graph6", "j", "k", "coefficient"])
            .map_err(csv_err)?;
    }
    for g in load_graphs(source)? {
        let bp = match &left {
            Some(l) => bipartition_from_left(&g, l)?,
            None => g
                .canonical_bipartition(g.vertex_set())
                .ok_or(hardcore::Error::NotBipartite)?,
        };
        let profile = bipartite_profile(&g, &bp)?;
        let graph6 = write_graph6(&g);
        match format {
            Format::Json => {
                #[derive(Serialize)]
                struct Row<'a> {
                    graph6: &'a str,
                    left: Vec<usize>,
                    right: Vec<usize>,
                    profile: &'a hardcore::BivariatePolynomial,
                }
                json_line(
                    out,
                    &Row {
                        graph6: &graph6,
                        left: hardcore::graph::members(bp.left).collect(),
                        right: hardcore::graph::members(bp.right).collect(),
                        profile: &profile.bivar,
                    },
                );
            }
            Format::Csv => {
                for (j, k, c) in profile.bivar.terms() {
                    csv_rows
                        .write_record([graph6.clone(), j.to_string(), k.to_string(), c.to_string()])
                        .map_err(csv_err)?;
                }
            }
            Format::Human => {
                let _ = writeln!(out, "graph6: {graph6}");
                let _ = writeln!(out, "left (μ): {}", describe_set(bp.left));
                let _ = writeln!(out, "right (λ): {}", describe_set(bp.right));
                let _ = writeln!(out, "profile = {}", profile.bivar);
            }
        }
    }
    if format == Format::Csv {
        out.push_str(&finish_csv(csv_rows)?);
    }
    Ok(Status::Clean)
}

fn lemma(out: &mut String, format: Format, source: &str) -> Result<Status, CliError> {
    let max_n = limit(FAMILY_MAX_N)?;
    let mut failed = false;
    let mut w = csv_writer();
    if format == Format::Csv {
        w.write_record(["graph6", "check", "passed"])
            .map_err(csv_err)?;
    }
    for g in load_graphs(source)? {
        let report = verify_lemma_with_limit(&g, max_n)?;
        failed |= !report.passed();
        match format {
            Format::Json => json_line(out, &report),
            Format::Csv => {
                for c in &report.checks {
                    w.write_record([
                        report.graph6.as_str(),
                        c.name,
                        if c.passed { "true" } else { "false" },
                    ])
                    .map_err(csv_err)?;
                }
            }
            Format::Human => {
                let _ = writeln!(out, "graph6: {}", report.graph6);
                for c in &report.checks {
                    let _ = writeln!(
                        out,
                        "  {}: {}",
                        c.name,
                        if c.passed { "pass" } else { "FAIL" }
                    );
                }
                let s = &report.family_sizes;
                let _ = writeln!(
                    out,
                    "  |K| = {}, |J| = {}, |I|^2 = {}",
                    s.k, s.j, s.i_product
                );
                let _ = writeln!(out, "  Σ_J λ^size = {}", report.j_polynomial);
                if let Some(c) = &report.counterexample {
                    let _ = writeln!(
                        out,
                        "  counterexample: {}",
                        serde_json::to_string(c).expect("serializable")
                    );
                }
            }
        }
    }
    if format == Format::Csv {
        out.push_str(&finish_csv(w)?);
    }
    Ok(Status::from_bug(failed))
}

fn double_cover(out: &mut String, format: Format, source: &str) -> Result<Status, CliError> {
    let mut w = csv_writer();
    if format == Format::Csv {
        w.write_record(["graph6", "cover_graph6"])
            .map_err(csv_err)?;
    }
    for g in load_graphs(source)? {
        let cover = g.double_cover()?;
        let (src, dst) = (write_graph6(&g), write_graph6(&cover));
        match format {
            Format::Json => {
                #[derive(Serialize)]
                struct Row {
                    graph6: String,
                    cover_graph6: String,
                    cover: EdgeList,
                }
                json_line(
                    out,
                    &Row {
                        graph6: src,
                        cover_graph6: dst,
                        cover: EdgeList::from(&cover),
                    },
                );
            }
            Format::Csv => w.write_record([src, dst]).map_err(csv_err)?,
            Format::Human => {
                let _ = writeln!(out, "{dst}");
            }
        }
    }
    if format == Format::Csv {
        out.push_str(&finish_csv(w)?);
    }
    Ok(Status::Clean)
}

fn target_from(args: &TargetArgs) -> Result<Option<TargetGraph>, CliError> {
    match &args.target {
        Some(t) => load_target(t, args.loops.as_deref(), args.activities.as_deref()).map(Some),
        None if args.loops.is_some() || args.activities.is_some() => Err(CliError::Usage(
            "--loops and --activities need --target".into(),
        )),
        None => Ok(None),
    }
}

fn class_label(class: &[u32]) -> String {
    let parts: Vec<String> = class.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn hom(
    out: &mut String,
    format: Format,
    source: &str,
    args: &TargetArgs,
) -> Result<Status, CliError> {
    let h = target_from(args)?.ok_or_else(|| CliError::Usage("hom needs --target".into()))?;
    let mut w = csv_writer();
    if format == Format::Csv {
        w.write_record(["graph6", "class", "count"])
            .map_err(csv_err)?;
    }
    for g in load_graphs(source)? {
        let dist = hom_distribution(&g, &h)?;
        let z = dist.weighted_total(h.activities());
        let graph6 = write_graph6(&g);
        match format {
            Format::Json => {
                #[derive(Serialize)]
                struct Row<'a> {
                    graph6: &'a str,
                    target: TargetGraphJson,
                    distribution: &'a hardcore::hom::WeightClassDistribution,
                    total: String,
                    partition_function: String,
                }
                json_line(
                    out,
                    &Row {
                        graph6: &graph6,
                        target: TargetGraphJson::from(&h),
                        distribution: &dist,
                        total: dist.total().to_string(),
                        partition_function: format_rational(&z),
                    },
                );
            }
            Format::Csv => {
                for (class, count) in dist.classes() {
                    w.write_record([graph6.clone(), class_label(class), count.to_string()])
                        .map_err(csv_err)?;
                }
            }
            Format::Human => {
                let _ = writeln!(out, "graph6: {graph6}");
                for (class, count) in dist.classes() {
                    let _ = writeln!(out, "  class {}: {count}", class_label(class));
                }
                let _ = writeln!(out, "|Hom| = {}", dist.total());
                let _ = writeln!(out, "Z = {}", format_rational(&z));
            }
        }
    }
    if format == Format::Csv {
        out.push_str(&finish_csv(w)?);
    }
    Ok(Status::Clean)
}

struct CheckOptions<'a> {
    lambdas: Option<Vec<Rational>>,
    mus: Option<Vec<Rational>>,
    left: Option<Vec<usize>>,
    bivariate: bool,
    target: &'a TargetArgs,
}

fn check(
    out: &mut String,
    format: Format,
    bound: BoundId,
    source: &str,
    opts: &CheckOptions,
) -> Result<Status, CliError> {
    let one = vec![Rational::from_integer(1.into())];
    let lambdas = opts.lambdas.clone().unwrap_or(one);
    let mus = opts.mus.clone().unwrap_or_else(|| lambdas.clone());
    let targets = match target_from(opts.target)? {
        Some(h) => vec![h],
        None => {
            let grid = opts.lambdas.clone().unwrap_or_else(default_activity_grid);
            let weighted = bound == BoundId::Eq8HomWeighted;
            default_targets(&grid)
                .into_iter()
                .filter(|h| h.is_unweighted() != weighted)
                .collect()
        }
    };
    let pair_limit = limit(PAIR_COUNT_MAX_N)?;
    let graphs = load_graphs(source)?;
    let mut report = ScanReport {
        graphs: graphs.len(),
        ..ScanReport::default()
    };
    for g in &graphs {
        match bound {
            BoundId::Thm1 => {
                for l in &lambdas {
                    report.checks.push(check_theorem1(g, l)?);
                }
            }
            BoundId::Cor1 => report.checks.push(check_corollary1(g)?),
            BoundId::Eq3Edge => report.checks.push(check_edge_weighted_eq3(g)?),
            BoundId::Eq4Biweighted => {
                let fixed = opts
                    .left
                    .as_ref()
                    .map(|l| bipartition_from_left(g, l))
                    .transpose()?;
                let profiles = match fixed {
                    Some(_) => None,
                    None => Some(ComponentProfiles::new(g)?),
                };
                for mu in &mus {
                    for lam in &lambdas {
                        report.checks.push(match (&fixed, &profiles) {
                            (Some(bp), _) => check_biweighted_eq4(g, bp, mu, lam)?,
                            (None, Some(p)) => biweighted_all_orientations_with(g, p, mu, lam)?,
                            (None, None) => unreachable!("profiles built when no side is fixed"),
                        });
                    }
                }
            }
            BoundId::Eq5Chain => {
                let pairs = if g.n() <= pair_limit {
                    Some(pair_polynomial_with_limit(g, pair_limit)?)
                } else {
                    None
                };
                for l in &lambdas {
                    report
                        .checks
                        .push(chain_eq5_with_pairs(g, l, pairs.as_ref())?);
                }
            }
            BoundId::Eq6Termwise => report.checks.push(if opts.bivariate {
                check_termwise_biweighted(g)?
            } else {
                check_termwise_eq6(g)?
            }),
            BoundId::Eq7Hom | BoundId::Eq8HomWeighted => {
                for h in &targets {
                    report.checks.push(check_hom_bounds(g, h)?);
                }
            }
        }
    }
    match format {
        Format::Json => {
            for r in &report.checks {
                json_line(out, r);
            }
        }
        Format::Csv => {
            let mut buf = Vec::new();
            report
                .write_csv(&mut buf)
                .map_err(|e| CliError::Io(format!("csv: {e}")))?;
            out.push_str(&String::from_utf8(buf).expect("csv output is utf-8"));
        }
        Format::Human => {
            for r in &report.checks {
                human_report(out, r);
            }
        }
    }
    Ok(Status::from_bug(report.has_proved_violation()))
}

fn regime_label(r: Regime) -> &'static str {
    match r {
        Regime::Proved => "proved",
        Regime::Conjectured => "conjectured",
    }
}

fn human_report(out: &mut String, r: &BoundReport) {
    let tag = if r.is_bug() {
        " BUG"
    } else if r.is_finding() {
        " FINDING"
    } else {
        ""
    };
    let _ = writeln!(
        out,
        "{} {} [{}]: {} ({}){tag}",
        r.bound,
        r.graph6,
        r.params.render(),
        r.verdict,
        regime_label(r.regime)
    );
    let _ = writeln!(out, "  {}", r.form);
    let _ = writeln!(out, "  lhs {}", format_rational(&r.lhs));
    let _ = writeln!(out, "  rhs {}", format_rational(&r.rhs));
    match &r.detail {
        Some(Detail::Termwise {
            outcome: Termwise::Fails { index, lhs, rhs },
            ..
        }) => {
            let _ = writeln!(out, "  coefficient of λ^{index}: {lhs} > {rhs}");
        }
        Some(Detail::BivariateTermwise {
            lhs_poly,
            rhs_poly,
            first_violation: Some((j, k)),
        }) => {
            let _ = writeln!(
                out,
                "  coefficient of μ^{j}λ^{k}: {} > {}",
                lhs_poly.coeff(*j, *k),
                rhs_poly.coeff(*j, *k)
            );
        }
        Some(Detail::PairCount { holds }) => {
            let _ = writeln!(
                out,
                "  pair count identity: {}",
                if *holds { "holds" } else { "FAILS" }
            );
        }
        Some(Detail::Orientations {
            checked,
            exhaustive,
        }) => {
            let how = if *exhaustive { "all" } else { "sampled" };
            let _ = writeln!(out, "  orientations: {checked} ({how}), worst shown");
        }
        _ => {}
    }
}

fn render_scan(out: &mut String, format: Format, report: &ScanReport) -> Result<(), CliError> {
    match format {
        Format::Json => {
            out.push_str(&report.to_json());
            out.push('\n');
        }
        Format::Csv => {
            let mut buf = Vec::new();
            report
                .write_csv(&mut buf)
                .map_err(|e| CliError::Io(format!("csv: {e}")))?;
            out.push_str(&String::from_utf8(buf).expect("csv output is utf-8"));
        }
        Format::Human => {
            let _ = writeln!(out, "graphs: {}", report.graphs);
            for (bound, c) in report.counts() {
                let _ = writeln!(
                    out,
                    "{bound}: strict {}, equality {}, violation {}, skipped {}",
                    c.strict, c.equality, c.violation, c.skipped
                );
            }
            let sections: [(&str, Vec<&BoundReport>); 3] = [
                ("equality cases", report.equality_cases().collect()),
                ("proved violations", report.proved_violations().collect()),
                ("findings", report.findings().collect()),
            ];
            for (title, items) in sections {
                let _ = writeln!(out, "{title}: {}", items.len());
                for r in items {
                    let _ = writeln!(out, "  {} {} [{}]", r.bound, r.graph6, r.params.render());
                }
            }
            let _ = writeln!(out, "skipped: {}", report.skipped.len());
            for s in &report.skipped {
                let _ = writeln!(out, "  {} {}: {}", s.bound, s.graph6, s.reason);
            }
        }
    }
    Ok(())
}
