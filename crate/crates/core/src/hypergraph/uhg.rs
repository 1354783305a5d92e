//! The "UHG v1" text format.
//!
//! ```text
//! # optional comment lines
//! uhg <k> <n> <m>
//! <k space-separated 0-based vertex ids>   (m lines)
//! ```

use super::{BuildError, UniformHypergraph};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UhgError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: BuildError,
    },
}

pub fn parse_uhg(text: &str) -> Result<UniformHypergraph, UhgError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) =
        lines.next().ok_or(UhgError::Syntax { line: 1, msg: "missing `uhg <k> <n> <m>` header".into() })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 || fields[0] != "uhg" {
        return Err(UhgError::Syntax { line: header_line, msg: format!("expected `uhg <k> <n> <m>`, got `{header}`") });
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| UhgError::Syntax { line: header_line, msg: format!("`{s}` is not a nonnegative integer") })
    };
    let (k, n, m) = (num(fields[1])?, num(fields[2])?, num(fields[3])?);

    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(UhgError::Syntax { line, msg: format!("more than the declared {m} edge lines") });
        }
        let edge = body
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| UhgError::Syntax { line, msg: format!("`{t}` is not a vertex id") })
            })
            .collect::<Result<Vec<_>, _>>()?;
        edges.push(edge);
        edge_lines.push(line);
    }
    if edges.len() != m {
        return Err(UhgError::EdgeCount { expected: m, found: edges.len() });
    }
    UniformHypergraph::build(k, n, edges).map_err(|source| {
        let edge = match &source {
            BuildError::WrongCardinality { edge, .. }
            | BuildError::RepeatedVertex { edge, .. }
            | BuildError::VertexOutOfRange { edge, .. }
            | BuildError::DuplicateEdge { edge, .. } => Some(*edge),
            _ => None,
        };
        UhgError::Invalid { line: edge.map_or(header_line, |e| edge_lines[e]), source }
    })
}

pub fn write_uhg(g: &UniformHypergraph) -> String {
    let mut out = format!("uhg {} {} {}\n", g.k(), g.n(), g.m());
    for edge in g.edges() {
        let mut first = true;
        for v in edge {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
    out
}
