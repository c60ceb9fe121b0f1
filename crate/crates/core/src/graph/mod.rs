//! Simple undirected graphs on at most 62 vertices, stored as neighbor bitsets.

mod edge_list;
pub mod families;
mod graph6;
mod vertex_set;

pub use edge_list::{parse_edge_list, write_edge_list};
pub use graph6::{decode_graph6, encode_graph6, read_graph6_lines};
pub use vertex_set::{Members, VertexSet};

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order; keeps graph6 headers to a single byte.
pub const MAX_ORDER: usize = 62;

/// A simple undirected graph.
///
/// `adj[u]` holds the neighbors of `u`. The adjacency is kept symmetric and
/// loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, order: n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor bitsets, validating symmetry, loops
    /// and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        check_order(n)?;
        let mask = VertexSet::full(n).bits();
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let index = (row & !mask).trailing_zeros() as usize;
                return Err(Error::IndexOutOfRange { index, order: n });
            }
            if (row >> u) & 1 == 1 {
                return Err(Error::InvalidEdge(u));
            }
            for v in VertexSet::from_bits(row) {
                if (adj[v] >> u) & 1 == 0 {
                    return Err(Error::Unsupported(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { adj })
    }

    /// Trusted constructor for adjacency produced inside the crate.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { adj }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v);
        if present {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        } else {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    /// Copy of the graph with the pair `{u, v}` flipped between edge and non-edge.
    pub fn with_edge_toggled(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, order: n });
            }
        }
        if u == v {
            return Err(Error::InvalidEdge(u));
        }
        let mut g = self.clone();
        g.set_edge(u, v, !self.has_edge(u, v));
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, e(G).
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[u])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|u| self.degree(u)).collect()
    }

    /// Δ(G).
    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            VertexSet::from_bits(self.adj[u] & !((2u64 << u) - 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Join `self ∨ other`: disjoint union plus every edge between the two parts.
    /// Vertices of `other` are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, true)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, false)
    }

    fn combine(&self, other: &Graph, connect: bool) -> Result<Graph> {
        let (a, b) = (self.order(), other.order());
        if a + b > MAX_ORDER {
            return Err(Error::OrderOverflow(a + b));
        }
        let left = VertexSet::full(a).bits();
        let right = VertexSet::full(b).bits() << a;
        let mut adj = Vec::with_capacity(a + b);
        adj.extend(self.adj.iter().map(|&r| r | if connect { right } else { 0 }));
        adj.extend(other.adj.iter().map(|&r| (r << a) | if connect { left } else { 0 }));
        Ok(Graph { adj })
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.order()).bits();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, &r)| !r & full & !(1 << u))
            .collect();
        Graph { adj }
    }

    /// G[X], with vertices relabeled by increasing original index.
    pub fn induced(&self, x: VertexSet) -> Result<Graph> {
        self.check_subset(x)?;
        if x.is_empty() {
            return Err(Error::EmptyOrder);
        }
        let members: Vec<usize> = x.iter().collect();
        let adj = members
            .iter()
            .map(|&u| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        Ok(Graph { adj })
    }

    /// ∩_{x∈X} Γ(x). The common neighborhood of the empty set is all of V(G).
    pub fn common_neighbors(&self, x: VertexSet) -> Result<VertexSet> {
        self.check_subset(x)?;
        Ok(x.iter()
            .fold(self.vertices(), |acc, v| acc.intersection(self.neighbors(v))))
    }

    /// e(X, Y): edges with one end in `X` and the other in `Y`.
    pub fn cut_edges(&self, x: VertexSet, y: VertexSet) -> Result<usize> {
        self.check_subset(x)?;
        self.check_subset(y)?;
        if !x.is_disjoint(y) {
            return Err(Error::InvalidPartition);
        }
        Ok(x.iter()
            .map(|u| self.neighbors(u).intersection(y).len())
            .sum())
    }

    /// e(X): edges with both ends in `X`.
    pub fn inner_edges(&self, x: VertexSet) -> Result<usize> {
        self.check_subset(x)?;
        Ok(x.iter()
            .map(|u| self.neighbors(u).intersection(x).len())
            .sum::<usize>()
            / 2)
    }

    /// Connected components, each listed by its smallest vertex first.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier
                    .iter()
                    .fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
                    .difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Image of the graph under `perm`: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = VertexSet::EMPTY;
        if perm.len() != n {
            return Err(Error::Unsupported(format!(
                "permutation of length {} for order {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::Unsupported("not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut adj = vec![0u64; n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph { adj })
    }

    fn check_subset(&self, x: VertexSet) -> Result<()> {
        match x.difference(self.vertices()).first() {
            Some(index) => Err(Error::IndexOutOfRange { index, order: self.order() }),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", encode_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyOrder)
    } else if n > MAX_ORDER {
        Err(Error::OrderOverflow(n))
    } else {
        Ok(())
    }
}
