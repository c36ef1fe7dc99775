//! Graph and target sources, and the size-guard override.

use std::io::Read;
use std::path::Path;

use hardcore::graph6::{read_edge_list, read_graph6};
use hardcore::hom::{read_target_json, TargetGraph};
use hardcore::rational::parse_rational;
use hardcore::{Graph, Rational};

use crate::expr::{looks_like_expr, parse_expr};
use crate::CliError;

pub const MAX_N_VAR: &str = "HARDCORE_MAX_N";

/// Value of `HARDCORE_MAX_N`, which replaces every default size guard.
pub fn max_n_override() -> Result<Option<usize>, CliError> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{MAX_N_VAR}={v:?} is not a vertex count"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(CliError::Usage(format!("{MAX_N_VAR}: {e}"))),
    }
}

/// A graph source is `-` (graph6 or edge-list JSON on stdin), a
/// constructor expression, or a file holding graph6 lines or an edge-list
/// JSON object.
pub fn load_graphs(source: &str) -> Result<Vec<Graph>, CliError> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        return parse_graph_text(&text, "stdin");
    }
    if looks_like_expr(source) {
        return parse_expr(source)
            .map(|g| vec![g])
            .map_err(|e| CliError::Usage(format!("{source:?}: {e}")));
    }
    let path = Path::new(source);
    if !path.is_file() {
        return Err(CliError::Usage(format!(
            "{source:?} is neither a constructor expression nor a readable file"
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{source}: {e}")))?;
    parse_graph_text(&text, source)
}

fn parse_graph_text(text: &str, origin: &str) -> Result<Vec<Graph>, CliError> {
    if text.trim_start().starts_with('{') {
        return read_edge_list(text)
            .map(|g| vec![g])
            .map_err(|e| CliError::Usage(format!("{origin}: {e}")));
    }
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            read_graph6(line.trim_end())
                .map_err(|e| CliError::Usage(format!("{origin} line {}: {e}", i + 1)))
        })
        .collect()
}

pub fn parse_rational_flag(flag: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

/// Comma-separated rationals.
pub fn parse_rational_list(flag: &str, text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .map(|s| parse_rational_flag(flag, s))
        .collect()
}

pub fn parse_usize_list(flag: &str, text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("--{flag}: {s:?} is not a vertex index")))
        })
        .collect()
}

/// `indset:λ`, a target JSON file, or a constructor expression with
/// optional loops and activities.
pub fn load_target(
    target: &str,
    loops: Option<&str>,
    activities: Option<&str>,
) -> Result<TargetGraph, CliError> {
    let usage = |e: hardcore::Error| CliError::Usage(format!("--target {target:?}: {e}"));
    if let Some(lam) = target.strip_prefix("indset:") {
        if loops.is_some() || activities.is_some() {
            return Err(CliError::Usage(
                "--loops and --activities do not apply to indset targets".into(),
            ));
        }
        return TargetGraph::independent_set(parse_rational_flag("target", lam)?).map_err(usage);
    }
    let base = if looks_like_expr(target) {
        let g = parse_expr(target).map_err(|e| CliError::Usage(format!("--target: {e}")))?;
        TargetGraph::from_graph(&g).map_err(usage)?
    } else {
        let text = std::fs::read_to_string(target)
            .map_err(|e| CliError::Usage(format!("--target {target:?}: {e}")))?;
        read_target_json(&text).map_err(usage)?
    };
    let mut adj = base.adjacency().to_vec();
    if let Some(loops) = loops {
        for v in parse_usize_list("loops", loops)? {
            if v >= adj.len() {
                return Err(CliError::Usage(format!("--loops: vertex {v} out of range")));
            }
            adj[v] |= 1 << v;
        }
    }
    let acts = match activities {
        Some(a) => parse_rational_list("activities", a)?,
        None => base.activities().to_vec(),
    };
    TargetGraph::new(adj, acts).map_err(usage)
}
