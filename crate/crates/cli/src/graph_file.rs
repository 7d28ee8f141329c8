//! The plain-text graph format:
//!
//! ```text
//! gcm 1
//! nodes 3
//! edge 1 2 1 2
//! ```
//!
//! `edge i j p q` sets M_ij = -p and M_ji = -q. Blank lines and lines
//! starting with `#` are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use numgame_core::{CatalogId, GcmError, GcmGraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphFileError {
    #[error("syntax error on line {line}: {message}")]
    SyntaxError { line: usize, message: String },
    #[error("invalid GCM: {0}")]
    InvalidGcm(#[from] GcmError),
    #[error("{0}")]
    Catalog(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

fn syntax(line: usize, message: impl Into<String>) -> GraphFileError {
    GraphFileError::SyntaxError {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<GcmGraph, GraphFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing `gcm 1` header"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["gcm", "1"] {
        return Err(syntax(ln, "expected `gcm 1`"));
    }
    let (ln, nodes_line) = lines
        .next()
        .ok_or_else(|| syntax(ln + 1, "missing `nodes <n>` line"))?;
    let n = match nodes_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["nodes", n] => n
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| syntax(ln, "node count must be a positive integer"))?,
        _ => return Err(syntax(ln, "expected `nodes <n>`")),
    };

    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (ln, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let ["edge", rest @ ..] = parts.as_slice() else {
            return Err(syntax(ln, format!("unexpected `{line}`")));
        };
        if rest.len() != 4 {
            return Err(syntax(ln, "expected `edge <i> <j> <p> <q>`"));
        }
        let nums: Vec<i64> = rest
            .iter()
            .map(|s| s.parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| syntax(ln, "edge fields must be integers"))?;
        let (i, j, p, q) = (nums[0], nums[1], nums[2], nums[3]);
        if i < 1 || j < 1 || i as usize > n || j as usize > n {
            return Err(syntax(ln, format!("node index out of range 1..{n}")));
        }
        if i == j {
            return Err(syntax(ln, "an edge needs two distinct nodes"));
        }
        if p < 1 || q < 1 {
            return Err(syntax(ln, "amplitudes p and q must be positive"));
        }
        let (i, j) = (i as usize, j as usize);
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(syntax(ln, format!("duplicate edge between {i} and {j}")));
        }
        edges.push((i, j, p, q));
    }
    Ok(GcmGraph::from_edges(n, &edges)?)
}

/// Canonical text with edges in increasing (i, j) order, i < j.
pub fn print_graph(g: &GcmGraph) -> String {
    let mut out = format!("gcm 1\nnodes {}\n", g.n());
    for (i, j, p, q) in g.amplitude_edges() {
        writeln!(out, "edge {i} {j} {p} {q}").expect("writing to a string");
    }
    out
}

/// Resolves `@Name` through the catalog, anything else as a file path.
pub fn load_graph(spec: &str) -> Result<GcmGraph, GraphFileError> {
    if let Some(name) = spec.strip_prefix('@') {
        let id = CatalogId::parse(name).map_err(|e| GraphFileError::Catalog(e.to_string()))?;
        return id
            .build()
            .map_err(|e| GraphFileError::Catalog(e.to_string()));
    }
    let text = std::fs::read_to_string(spec).map_err(|e| GraphFileError::Io {
        path: spec.to_string(),
        message: e.to_string(),
    })?;
    parse_graph(&text)
}
