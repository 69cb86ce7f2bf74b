//! Line-oriented gain graph files.
//!
//! ```text
//! # comment
//! vertices 3
//! edge 1 2 0
//! edge 2 3 -1/2
//! ```
//!
//! The first non-blank line declares the vertex count; each `edge` line adds
//! the next edge id. Gains are integers or `p/q` and are stored in lowest terms.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::gain_graph::{GainGraph, GraphError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_gain(token: &str) -> Option<Rational> {
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let num: BigInt = parse_int(num)?;
    let den: BigInt = parse_int(den)?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_index(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, format!("invalid {what} `{token}`")));
    }
    token
        .parse()
        .map_err(|_| err(line, format!("invalid {what} `{token}`")))
}

pub fn parse(text: &str) -> Result<GainGraph, ParseError> {
    let mut graph: Option<GainGraph> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match (&mut graph, tokens[0]) {
            (None, "vertices") => {
                if tokens.len() != 2 {
                    return Err(err(line, "expected `vertices <count>`"));
                }
                let count = parse_index(tokens[1], line, "vertex count")?;
                graph = Some(GainGraph::new(count).map_err(|e| err(line, e.to_string()))?);
            }
            (None, other) => {
                return Err(err(
                    line,
                    format!("expected `vertices <count>` before `{other}`"),
                ))
            }
            (Some(_), "vertices") => return Err(err(line, "duplicate `vertices` line")),
            (Some(g), "edge") => {
                if tokens.len() != 4 {
                    return Err(err(line, "expected `edge <tail> <head> <gain>`"));
                }
                let tail = parse_index(tokens[1], line, "tail")?;
                let head = parse_index(tokens[2], line, "head")?;
                let gain = parse_gain(tokens[3])
                    .ok_or_else(|| err(line, format!("invalid gain `{}`", tokens[3])))?;
                g.add_edge(tail, head, gain).map_err(|e| match e {
                    GraphError::EndpointOutOfRange {
                        vertex,
                        vertex_count,
                        ..
                    } => err(
                        line,
                        format!("vertex {vertex} outside 1..={vertex_count}"),
                    ),
                    other => err(line, other.to_string()),
                })?;
            }
            (Some(_), other) => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }
    graph.ok_or_else(|| err(last_line.max(1), "missing `vertices` line"))
}

pub fn serialize(g: &GainGraph) -> String {
    let mut out = String::new();
    writeln!(out, "vertices {}", g.vertex_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "edge {} {} {}", e.tail, e.head, e.gain).unwrap();
    }
    out
}
