//! Edge-list text formats.
//!
//! Canonical format: `#` comments, a header line `n m`, then `m` lines `u v`
//! with 0-based ids. DIMACS-like input (`c` comments, `p edge n m`,
//! `e u v` with 1-based ids) is detected from the first token.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Canonical,
    Dimacs,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| perr(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| perr(line, format!("bad {what} `{tok}`")))
}

/// Parses either supported format, detected from the first meaningful line.
pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('c'));
    match first.and_then(|l| l.split_whitespace().next()) {
        Some("p") => parse_dimacs(text),
        _ => parse_canonical(text),
    }
}

pub fn parse_canonical(text: &str) -> Result<MultiGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let mut toks = l.split_whitespace();
        let a: usize = num(toks.next(), line, "integer")?;
        let b: usize = num(toks.next(), line, "integer")?;
        if toks.next().is_some() {
            return Err(perr(line, "trailing tokens"));
        }
        match header {
            None => header = Some((a, b)),
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(perr(line, format!("more than {m} edges")));
                }
                if a >= n || b >= n {
                    return Err(perr(line, format!("vertex id out of range 0..{n}")));
                }
                if a == b {
                    return Err(perr(line, format!("loop at vertex {a}")));
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| perr(0, "missing `n m` header"))?;
    if edges.len() != m {
        return Err(perr(0, format!("header says {m} edges, found {}", edges.len())));
    }
    MultiGraph::new(n, edges)
}

pub fn parse_dimacs(text: &str) -> Result<MultiGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') || l.starts_with('#') {
            continue;
        }
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(perr(line, "duplicate `p` line"));
                }
                // format word (edge, col, ...) is not interpreted
                toks.next().ok_or_else(|| perr(line, "missing format word"))?;
                let n: usize = num(toks.next(), line, "vertex count")?;
                let m: usize = num(toks.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| perr(line, "edge before `p` line"))?;
                let a: usize = num(toks.next(), line, "vertex")?;
                let b: usize = num(toks.next(), line, "vertex")?;
                if a == 0 || b == 0 || a > n || b > n {
                    return Err(perr(line, format!("vertex id out of range 1..={n}")));
                }
                if a == b {
                    return Err(perr(line, format!("loop at vertex {a}")));
                }
                edges.push((a - 1, b - 1));
            }
            Some(t) => return Err(perr(line, format!("unexpected token `{t}`"))),
            None => unreachable!(),
        }
    }
    let (n, m) = header.ok_or_else(|| perr(0, "missing `p` line"))?;
    if edges.len() != m {
        return Err(perr(0, format!("header says {m} edges, found {}", edges.len())));
    }
    MultiGraph::new(n, edges)?.with_labels((1..=n as u64).collect())
}

/// Writes the canonical format with internal 0-based ids.
pub fn write_canonical(g: &MultiGraph) -> String {
    let mut s = String::with_capacity(8 * (g.m() + 1));
    writeln!(s, "{} {}", g.n(), g.m()).unwrap();
    for [u, v] in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}
