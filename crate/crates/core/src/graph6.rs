//! graph6 text encoding and the `{"n", "edges"}` JSON edge list.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn read_graph6(line: &str) -> Result<Graph> {
    let mut base = 0;
    let mut text = line.trim_end_matches(['\n', '\r']);
    if let Some(rest) = text.strip_prefix(HEADER) {
        text = rest;
        base = HEADER.len();
    }
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(
            base + pos,
            format!(
                "byte 0x{:02x} outside the printable range 63..=126",
                bytes[pos]
            ),
        ));
    }
    let (n, body_start) = match bytes.first() {
        None => return Err(parse_err(base, "empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(parse_err(
                    base + 1,
                    "graphs above 258047 vertices are unsupported",
                ));
            }
            if bytes.len() < 4 {
                return Err(parse_err(base + bytes.len(), "truncated vertex count"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(parse_err(
            base,
            format!("{n} vertices exceeds the universe of {MAX_VERTICES}"),
        ));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != need {
        return Err(parse_err(
            base + body_start + body.len().min(need),
            format!(
                "expected {need} data bytes for {n} vertices, found {}",
                body.len()
            ),
        ));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[need - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(parse_err(
                base + body_start + need - 1,
                "nonzero padding bits",
            ));
        }
    }
    Graph::from_adjacency(adj)
}

/// Encodes `g` as a graph6 line without a trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ascii")
}

/// JSON edge list `{"n": 3, "edges": [[0, 1], [1, 2]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        EdgeList {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<&EdgeList> for Graph {
    type Error = Error;

    fn try_from(list: &EdgeList) -> Result<Graph> {
        let edges: Vec<_> = list.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(list.n, &edges).map_err(|e| Error::EdgeList(e.to_string()))
    }
}

pub fn read_edge_list(json: &str) -> Result<Graph> {
    let list: EdgeList = serde_json::from_str(json).map_err(|e| Error::EdgeList(e.to_string()))?;
    Graph::try_from(&list)
}

pub fn write_edge_list(g: &Graph) -> String {
    serde_json::to_string(&EdgeList::from(g)).expect("edge list serializes")
}
