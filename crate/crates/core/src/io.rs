//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! p <n> <m> [pseudo]
//! e <u> <v>
//! ```
//!
//! Endpoints are 0-based. The writer emits `u <= v` and sorts the records;
//! the reader accepts any order and numbers edges in file order.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{LoopPolicy, Multigraph};

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    match tok.map(str::parse::<usize>) {
        Some(Ok(x)) => Ok(x),
        Some(Err(_)) => parse_err(line, format!("{what} is not a nonnegative integer")),
        None => parse_err(line, format!("missing {what}")),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut header: Option<(usize, usize, bool)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let mut tok = s.split_whitespace();
        match (tok.next(), header) {
            (Some("p"), None) => {
                let n = number(tok.next(), line, "vertex count")?;
                let m = number(tok.next(), line, "edge count")?;
                let pseudo = match tok.next() {
                    None => false,
                    Some("pseudo") => true,
                    Some(other) => return parse_err(line, format!("unknown header flag {other:?}")),
                };
                if tok.next().is_some() {
                    return parse_err(line, "trailing tokens in header");
                }
                header = Some((n, m, pseudo));
            }
            (Some("p"), Some(_)) => return parse_err(line, "second header"),
            (Some("e"), Some((n, m, pseudo))) => {
                let u = number(tok.next(), line, "first endpoint")?;
                let v = number(tok.next(), line, "second endpoint")?;
                if tok.next().is_some() {
                    return parse_err(line, "trailing tokens in edge record");
                }
                if u >= n || v >= n {
                    return parse_err(line, format!("endpoint out of range for {n} vertices"));
                }
                if u == v && !pseudo {
                    return parse_err(line, "loop without the pseudo flag");
                }
                if edges.len() == m {
                    return parse_err(line, format!("more than {m} edge records"));
                }
                edges.push((u, v));
            }
            (Some("e"), None) => return parse_err(line, "edge record before the header"),
            (Some(other), _) => return parse_err(line, format!("unknown record type {other:?}")),
            (None, _) => unreachable!("line is not blank"),
        }
    }
    let Some((n, m, pseudo)) = header else {
        return parse_err(text.lines().count().max(1), "missing header");
    };
    if edges.len() != m {
        return parse_err(text.lines().count().max(1), format!("expected {m} edge records, found {}", edges.len()));
    }
    let policy = if pseudo { LoopPolicy::Allowed } else { LoopPolicy::Forbidden };
    Multigraph::with_policy(n, edges, policy)
}

pub fn write_edge_list(g: &Multigraph) -> String {
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    let mut out = format!("p {} {}", g.n(), g.m());
    if g.loop_policy() == LoopPolicy::Allowed {
        out.push_str(" pseudo");
    }
    out.push('\n');
    for (u, v) in edges {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Multigraph> {
    parse_edge_list(&fs::read_to_string(path)?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &Multigraph) -> Result<()> {
    fs::write(path, write_edge_list(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn triple_edge_from_text() {
        let g = parse_edge_list("p 2 3\ne 0 1\ne 0 1\ne 0 1\n").unwrap();
        assert_eq!(g, named::triple_edge());
    }

    #[test]
    fn loop_needs_pseudo_flag() {
        assert!(matches!(parse_edge_list("p 1 1\ne 0 0\n"), Err(Error::Parse { line: 2, .. })));
        let g = parse_edge_list("p 2 3 pseudo\ne 0 0\ne 0 1\ne 1 1\n").unwrap();
        assert!(g.has_loops());
    }

    #[test]
    fn malformed_input() {
        for text in ["", "e 0 1\n", "p 2\n", "p 2 1\ne 0 2\n", "p 2 2\ne 0 1\n", "p 2 1 simple\ne 0 1\n", "q\n"] {
            assert!(parse_edge_list(text).is_err(), "{text:?}");
        }
    }

    #[test]
    fn comments_and_order() {
        let g = parse_edge_list("# K2 twice\np 2 2\n\ne 1 0\n# mid\ne 0 1\n").unwrap();
        assert_eq!(write_edge_list(&g), "p 2 2\ne 0 1\ne 0 1\n");
    }

    #[test]
    fn writer_output_round_trips() {
        let text = write_edge_list(&named::petersen());
        assert_eq!(write_edge_list(&parse_edge_list(&text).unwrap()), text);
    }
}
