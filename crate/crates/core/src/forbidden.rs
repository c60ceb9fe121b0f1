//! Detection of complete bipartite subgraphs K_{t,s+1} by codegree counting.
//!
//! G contains K_{t,s+1} (as a subgraph, not necessarily induced) exactly when
//! some t-subset X has at least s+1 common neighbors. Common neighbors of X
//! never lie in X because the graph is loop-free, so the two sides are
//! automatically disjoint.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The excluded graph K_{t,s+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ForbiddenPattern {
    t: usize,
    s: usize,
}

impl ForbiddenPattern {
    /// K_{t,s+1} with t ≥ 2 and s ≥ 1.
    pub fn new(t: usize, s: usize) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidPattern(format!("t = {t} < 2")));
        }
        if s < 1 {
            return Err(Error::InvalidPattern("s = 0; the large side needs s+1 ≥ 2".into()));
        }
        Ok(ForbiddenPattern { t, s })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn large_side(&self) -> usize {
        self.s + 1
    }

    /// s ≥ t − 1 ≥ 1, the range where the conjectured bound is stated.
    pub fn in_conjecture_range(&self) -> bool {
        self.s + 1 >= self.t && self.t >= 2
    }
}

/// A copy of K_{t,s+1}: `small` has t vertices, `large` has s+1, and every
/// small–large pair is an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub small: VertexSet,
    pub large: VertexSet,
}

impl Witness {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.small.is_disjoint(self.large)
            && self
                .small
                .iter()
                .all(|u| self.large.is_subset(g.neighbors(u)))
    }
}

/// Finds the lexicographically smallest t-subset with at least s+1 common
/// neighbors and reports it together with the s+1 smallest of them.
pub fn find_kst(g: &Graph, pat: ForbiddenPattern) -> Result<Option<Witness>> {
    let n = g.order();
    if pat.t > n {
        return Err(Error::PatternLargerThanGraph { t: pat.t, n });
    }
    let need = pat.large_side();
    let adj = g.adjacency();

    let found = if pat.t == 2 {
        let mut hit = None;
        'outer: for u in 0..n {
            for v in (u + 1)..n {
                let common = adj[u] & adj[v];
                if common.count_ones() as usize >= need {
                    hit = Some((VertexSet::from_iter([u, v]), VertexSet::from_bits(common)));
                    break 'outer;
                }
            }
        }
        hit
    } else {
        let mut chosen = Vec::with_capacity(pat.t);
        first_subset(adj, pat.t, need, 0, VertexSet::full(n).bits(), &mut chosen)
    };

    Ok(found.map(|(small, common)| {
        let w = Witness { small, large: common.lowest(need) };
        assert!(w.is_valid_in(g), "invalid K_{{t,s+1}} witness {w:?}");
        w
    }))
}

fn first_subset(
    adj: &[u64],
    t: usize,
    need: usize,
    start: usize,
    common: u64,
    chosen: &mut Vec<usize>,
) -> Option<(VertexSet, VertexSet)> {
    if chosen.len() == t {
        return Some((chosen.iter().copied().collect(), VertexSet::from_bits(common)));
    }
    let remaining = t - chosen.len();
    for v in start..=(adj.len() - remaining) {
        let next = common & adj[v];
        if (next.count_ones() as usize) < need {
            continue;
        }
        chosen.push(v);
        if let Some(hit) = first_subset(adj, t, need, v + 1, next, chosen) {
            return Some(hit);
        }
        chosen.pop();
    }
    None
}

pub fn contains_kst(g: &Graph, pat: ForbiddenPattern) -> Result<bool> {
    Ok(find_kst(g, pat)?.is_some())
}

/// max over t-subsets X of |∩_{x∈X} Γ(x)|.
pub fn max_codegree(g: &Graph, t: usize) -> Result<usize> {
    let n = g.order();
    if t > n {
        return Err(Error::PatternLargerThanGraph { t, n });
    }
    if t < 2 {
        return Err(Error::InvalidPattern(format!("t = {t} < 2")));
    }
    let adj = g.adjacency();
    if t == 2 {
        let mut best = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                best = best.max((adj[u] & adj[v]).count_ones() as usize);
            }
        }
        return Ok(best);
    }
    let mut best = 0;
    max_subset(adj, t, 0, 0, VertexSet::full(n).bits(), &mut best);
    Ok(best)
}

fn max_subset(adj: &[u64], t: usize, depth: usize, start: usize, common: u64, best: &mut usize) {
    if depth == t {
        *best = (*best).max(common.count_ones() as usize);
        return;
    }
    for v in start..=(adj.len() - (t - depth)) {
        let next = common & adj[v];
        // Intersections only shrink further down; prune when no improvement is possible.
        if depth + 1 < t && (next.count_ones() as usize) <= *best {
            continue;
        }
        max_subset(adj, t, depth + 1, v + 1, next, best);
    }
}
