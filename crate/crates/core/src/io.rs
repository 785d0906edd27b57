//! Reading and writing colored graphs.
//!
//! ECG v1 text:
//!
//! ```text
//! # comments start with '#'
//! ecg <n> <k>
//! <u> <v> <color>     one line per pair, vertices 0-based, colors positive
//! ```
//!
//! JSON: `{"n": <n>, "edges": [[u, v, color], ...]}`.
//!
//! Writers emit pairs in lexicographic order with the original color labels,
//! so reading and writing again reproduces the same bytes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{ColoredGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON graph: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// JSON form of a colored graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[u64; 3]>,
}

impl GraphJson {
    pub fn from_graph(g: &ColoredGraph) -> Self {
        Self { n: g.n(), edges: g.pairs().map(|(u, v, c)| [u as u64, v as u64, g.label_of(c)]).collect() }
    }

    pub fn to_graph(&self) -> Result<ColoredGraph, IoError> {
        if self.n == 1 && self.edges.is_empty() {
            return Ok(ColoredGraph::singleton());
        }
        let n = self.n;
        let assignments = self.edges.iter().map(|&[u, v, c]| (to_vertex(u, n), to_vertex(v, n), c));
        Ok(ColoredGraph::from_assignments(n, assignments)?)
    }
}

/// Out-of-range ids map to `n`, which graph construction rejects.
fn to_vertex(x: u64, n: usize) -> usize {
    usize::try_from(x).unwrap_or(n).min(n)
}

pub fn write_ecg(g: &ColoredGraph) -> String {
    let mut out = format!("ecg {} {}\n", g.n(), g.k());
    for (u, v, c) in g.pairs() {
        out.push_str(&format!("{u} {v} {}\n", g.label_of(c)));
    }
    out
}

pub fn read_ecg(text: &str) -> Result<ColoredGraph, IoError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut assignments = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let err = |message: String| IoError::Parse { line, message };
        if header.is_none() {
            if fields.len() != 3 || fields[0] != "ecg" {
                return Err(err(format!("expected header `ecg <n> <k>`, found {content:?}")));
            }
            let n = parse_field(fields[1], "n").map_err(err)?;
            let k = parse_field(fields[2], "k").map_err(err)?;
            header = Some((n as usize, k as usize, line));
            continue;
        }
        if fields.len() != 3 {
            return Err(err(format!("expected `<u> <v> <color>`, found {content:?}")));
        }
        let u = parse_field(fields[0], "u").map_err(err)?;
        let v = parse_field(fields[1], "v").map_err(err)?;
        let c = parse_field(fields[2], "color").map_err(err)?;
        assignments.push((u, v, c, line));
    }
    let (n, k, header_line) = header.ok_or(IoError::Parse { line: 1, message: "missing `ecg` header".into() })?;
    if n == 0 {
        return Err(IoError::Graph(GraphError::Empty));
    }
    // report problems against file lines before handing over to the constructor
    for &(u, v, c, line) in &assignments {
        let message = if u as usize >= n || v as usize >= n {
            Some(format!("vertex out of range for n = {n}"))
        } else if u == v {
            Some(format!("self loop at vertex {u}"))
        } else if c == 0 {
            Some("colors must be positive".to_string())
        } else {
            None
        };
        if let Some(message) = message {
            return Err(IoError::Parse { line, message });
        }
    }
    let g = if n == 1 && assignments.is_empty() {
        ColoredGraph::singleton()
    } else {
        ColoredGraph::from_assignments(n, assignments.iter().map(|&(u, v, c, _)| (u as usize, v as usize, c)))?
    };
    if g.k() != k {
        return Err(IoError::Parse {
            line: header_line,
            message: format!("header declares {k} colors but {} are used", g.k()),
        });
    }
    Ok(g)
}

fn parse_field(tok: &str, what: &str) -> Result<u64, String> {
    tok.parse::<u64>().map_err(|_| format!("{what} must be a non-negative integer, found {tok:?}"))
}

pub fn write_json(g: &ColoredGraph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("graph serializes")
}

pub fn read_json(text: &str) -> Result<ColoredGraph, IoError> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
    parsed.to_graph()
}

/// Reads either format, choosing JSON when the first non-blank character is
/// `{`.
pub fn read_graph(text: &str) -> Result<ColoredGraph, IoError> {
    if text.trim_start().starts_with('{') {
        read_json(text)
    } else {
        read_ecg(text)
    }
}
