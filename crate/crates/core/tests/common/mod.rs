#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qindex::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with each pair included independently.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Random order in `lo..=hi` and random density.
pub fn random_corpus(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(lo..=hi);
            let p = r.gen_range(0.05..0.95);
            random_graph(&mut r, n, p)
        })
        .collect()
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every labeled graph on n vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn upper_bits(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut key = 0u64;
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(perm[u], perm[v]) {
                key |= 1 << i;
            }
            i += 1;
        }
    }
    key
}

/// Minimum upper-triangle key over all relabelings. Only for small n.
pub fn brute_canonical_key(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| upper_bits(g, p)).min().unwrap()
}

/// Whether some t vertices have s+1 common neighbors, by scanning all subsets.
pub fn brute_contains_kst(g: &Graph, t: usize, s: usize) -> bool {
    let n = g.order();
    if t > n {
        return false;
    }
    (0u64..1 << n).filter(|m| m.count_ones() as usize == t).any(|m| {
        let common = (0..n)
            .filter(|&w| m >> w & 1 == 0 && (0..n).filter(|&u| m >> u & 1 == 1).all(|u| g.has_edge(u, w)))
            .count();
        common > s
    })
}

/// Largest Q eigenvalue of K_1 ∨ H for H s-regular on n − 1 vertices, from
/// the 2×2 equitable quotient [[n−1, n−1], [1, 2s+1]].
pub fn regular_join_q(n: usize, s: usize) -> f64 {
    let (a, b, c, d) = ((n - 1) as f64, (n - 1) as f64, 1.0, (2 * s + 1) as f64);
    let tr = a + d;
    let det = a * d - b * c;
    tr / 2.0 + (tr * tr / 4.0 - det).sqrt()
}
