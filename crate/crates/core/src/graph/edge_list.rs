//! Plain edge-list text: a header line `n m`, then `m` lines `u v` (0-based).

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let bad = |msg: String| Error::MalformedEdgeList(msg);
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad("missing header".into()))?;
    let nums = parse_pair(header).ok_or_else(|| bad(format!("bad header {header:?}")))?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref() {
        let e = parse_pair(line).ok_or_else(|| bad(format!("bad edge line {line:?}")))?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(bad(format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    let a = it.next()?.ok()?;
    let b = it.next()?.ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
