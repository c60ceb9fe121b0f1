//! Named graph families used throughout the tests and examples.

use super::Graph;
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Result<Graph> {
    Ok(Graph::empty(n)?.complement())
}

/// C_n for n ≥ 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Unsupported(format!("cycle of order {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

/// K_{1,n-1}, hub at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edge_list(n, &edges)
}

/// K_{a,b}, with the `a` side first.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::empty(a)?.join(&Graph::empty(b)?)
}

/// `k` disjoint copies of K_2.
pub fn perfect_matching(k: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::from_edge_list(2 * k, &edges)
}

/// Outer 5-cycle on 0..5, inner pentagram on 5..10.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edge_list(10, &edges).expect("petersen edges are valid")
}
