//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! The writer emits `u < v` sorted lexicographically; the reader accepts any
//! order, extra whitespace and `#` comment lines.

use std::fmt::Write as _;

use super::{Graph, GraphError};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
        let err = |msg: &str| GraphError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut it = l.split_whitespace();
        let a = it.next().ok_or_else(|| err("expected two integers"))?;
        let b = it.next().ok_or_else(|| err("expected two integers"))?;
        if it.next().is_some() {
            return Err(err("trailing tokens"));
        }
        let a = a.parse().map_err(|_| err("not a non-negative integer"))?;
        let b = b.parse().map_err(|_| err("not a non-negative integer"))?;
        Ok((a, b))
    };

    let (line, header) = lines.next().ok_or(GraphError::Parse {
        line: 0,
        msg: "missing header line `n m`".into(),
    })?;
    let (n, m) = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n {
            return Err(GraphError::Parse {
                line,
                msg: format!("endpoint out of range for n={n}"),
            });
        }
        if u == v {
            return Err(GraphError::Parse {
                line,
                msg: format!("loop at vertex {u}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}
