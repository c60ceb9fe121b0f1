//! Isomorph-free generation of all graphs of a given order by vertex
//! augmentation.
//!
//! Level k+1 is produced from the canonical representatives of level k by
//! attaching a new vertex to every subset of the existing vertices; children
//! are canonicalized and deduplicated. Every graph of order k+1 arises this
//! way because deleting its last vertex leaves a graph isomorphic to some
//! level-k representative.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the builtin enumerator accepts.
pub const MAX_BUILTIN_ORDER: usize = 9;

/// All graphs of order `n`.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_hereditary(n, |_| true)
}

/// Canonical representatives of every isomorphism class of order `n` that
/// satisfies `keep`, sorted.
///
/// `keep` must be hereditary (closed under deleting vertices): it is applied
/// at every level, and a rejected graph's descendants are never generated.
pub fn enumerate_hereditary<F>(n: usize, keep: F) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    if n > MAX_BUILTIN_ORDER {
        return Err(Error::UseStreamSource { n, max: MAX_BUILTIN_ORDER });
    }
    let k1 = Graph::empty(1)?;
    let mut level: Vec<Graph> = if keep(&k1) { vec![k1] } else { Vec::new() };
    for k in 1..n {
        let children: HashSet<Graph> = level
            .par_iter()
            .fold(HashSet::new, |mut acc, parent| {
                for mask in 0u64..(1u64 << k) {
                    let child = augment(parent, mask);
                    if keep(&child) {
                        acc.insert(canonical_form(&child));
                    }
                }
                acc
            })
            .reduce(HashSet::new, |a, b| if a.len() < b.len() { merge(b, a) } else { merge(a, b) });
        level = children.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level)
}

fn merge(mut a: HashSet<Graph>, b: HashSet<Graph>) -> HashSet<Graph> {
    a.extend(b);
    a
}

/// `parent` plus a new last vertex adjacent to the vertices in `mask`.
fn augment(parent: &Graph, mask: u64) -> Graph {
    let k = parent.order();
    let mut adj = Vec::with_capacity(k + 1);
    adj.extend(
        parent
            .adjacency()
            .iter()
            .enumerate()
            .map(|(v, &row)| row | (((mask >> v) & 1) << k)),
    );
    adj.push(mask);
    Graph::from_adjacency_unchecked(adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn hereditary_filter_prunes() {
        // Graphs of maximum degree ≤ 1 on 6 vertices: 0..=3 disjoint edges.
        let g = enumerate_hereditary(6, |g| g.max_degree() <= 1).unwrap();
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn order_limits() {
        assert_eq!(enumerate_graphs(0), Err(Error::EmptyOrder));
        assert_eq!(
            enumerate_graphs(10),
            Err(Error::UseStreamSource { n: 10, max: MAX_BUILTIN_ORDER })
        );
    }
}
