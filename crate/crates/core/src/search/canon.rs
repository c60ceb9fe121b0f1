//! Canonical labeling by equitable-partition refinement and an
//! individualization search tree with automorphism pruning.
//!
//! Two graphs are isomorphic iff their canonical forms are equal. The leaf
//! certificate is the relabeled adjacency matrix read row by row; the
//! canonical form is the labeling with the lexicographically largest one.

use crate::graph::Graph;

type Cells = Vec<u64>;

#[derive(Debug, Clone)]
pub struct Canonical {
    pub graph: Graph,
    /// `labeling[v]` is the canonical index of original vertex `v`.
    pub labeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).graph
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let n = g.order();
    let adj = g.adjacency();
    let mut search = Search {
        adj,
        n,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let root = vec![if n == 64 { u64::MAX } else { (1u64 << n) - 1 }];
    let mut prefix = Vec::new();
    search.visit(root, &mut prefix);
    let best = search.best.expect("search tree has at least one leaf");
    let mut labeling = vec![0; n];
    for (i, &v) in best.order.iter().enumerate() {
        labeling[v] = i;
    }
    Canonical { graph: Graph::from_adjacency_unchecked(best.cert), labeling }
}

struct Leaf {
    cert: Vec<u64>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Explores the subtree below `cells`. A returned `Some(depth)` asks the
    /// caller chain to abandon everything below that depth.
    fn visit(&mut self, cells: Cells, prefix: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.adj, cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let depth = prefix.len();
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        let mut bits = cell;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if !tried.is_empty() && self.in_tried_orbit(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << v);
            child.push(cell & !(1u64 << v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            let jump = self.visit(child, prefix);
            prefix.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Cells, prefix: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let cert: Vec<u64> = order
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                let mut bits = self.adj[v];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    row |= 1u64 << pos[w];
                }
                row
            })
            .collect();
        let leaf = Leaf { cert, order, path: prefix.to_vec() };

        let Some(first) = &self.first else {
            self.first = Some(Leaf { cert: leaf.cert.clone(), order: leaf.order.clone(), path: leaf.path.clone() });
            self.best = Some(leaf);
            return None;
        };
        for reference in [first, self.best.as_ref().expect("set with first")] {
            if reference.cert == leaf.cert {
                let mut gamma = vec![0usize; self.n];
                for (a, b) in reference.order.iter().zip(&leaf.order) {
                    gamma[*a] = *b;
                }
                let level = reference
                    .path
                    .iter()
                    .zip(&leaf.path)
                    .take_while(|(a, b)| a == b)
                    .count();
                self.automorphisms.push(gamma);
                return Some(level);
            }
        }
        if leaf.cert > self.best.as_ref().expect("set with first").cert {
            self.best = Some(leaf);
        }
        None
    }

    /// Whether `v` shares an orbit with a tried vertex under the automorphisms
    /// found so far that fix `prefix` pointwise.
    fn in_tried_orbit(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let relevant: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|g| prefix.iter().all(|&p| g[p] == p))
            .collect();
        if relevant.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in relevant {
            for (a, &b) in g.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// Refines an ordered partition until it is equitable: every vertex of a cell
/// has the same number of neighbors in every cell. Each split orders the new
/// cells by increasing neighbor count, so the result depends only on the
/// graph and the input partition, not on vertex names.
fn refine(adj: &[u64], mut cells: Cells) -> Cells {
    let mut buckets = [0u64; 65];
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut c = 0;
            while c < cells.len() {
                let cell = cells[c];
                if cell & (cell - 1) == 0 {
                    c += 1;
                    continue;
                }
                let mut lo = 64;
                let mut hi = 0;
                let mut bits = cell;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let k = (adj[v] & splitter).count_ones() as usize;
                    buckets[k] |= 1u64 << v;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    buckets[lo] = 0;
                    c += 1;
                    continue;
                }
                let parts: Vec<u64> = (lo..=hi)
                    .filter_map(|k| {
                        let b = std::mem::take(&mut buckets[k]);
                        (b != 0).then_some(b)
                    })
                    .collect();
                let added = parts.len();
                cells.splice(c..=c, parts);
                c += added;
                changed = true;
            }
            w += 1;
        }
        if !changed {
            return cells;
        }
    }
}
