//! Joins K_{t−1} ∨ H with H s-regular, the conjectured extremal graphs, and a
//! recognizer for design graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forbidden::{find_kst, ForbiddenPattern, Witness};
use crate::graph::families::complete;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Circulant,
    RandomRegular,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalSpec {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub strategy: Strategy,
    pub seed: u64,
    /// Total number of H candidates tried before giving up on freeness.
    pub max_attempts: usize,
    /// Return the last non-free join instead of failing.
    pub allow_uncertified: bool,
}

impl ExtremalSpec {
    pub fn new(n: usize, s: usize, t: usize) -> Self {
        ExtremalSpec {
            n,
            s,
            t,
            strategy: Strategy::Circulant,
            seed: 0,
            max_attempts: 32,
            allow_uncertified: false,
        }
    }

    /// Order of the regular part H.
    pub fn h_order(&self) -> usize {
        (self.n + 1).saturating_sub(self.t)
    }

    fn validate(&self) -> Result<()> {
        if self.t < 2 {
            return Err(Error::InvalidPattern(format!("t = {} < 2", self.t)));
        }
        let m = self.h_order();
        if self.n < self.t || m <= self.s || (self.s * m) % 2 == 1 {
            return Err(Error::NoRegularGraphExists { m, s: self.s });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreenessCertificate {
    pub pattern: ForbiddenPattern,
    pub free: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalBuild {
    pub graph: Graph,
    pub regular_part: Graph,
    pub certificate: FreenessCertificate,
    /// Strategy that produced `regular_part`.
    pub strategy: Strategy,
    /// Seed of the random generator, when one was used.
    pub seed: Option<u64>,
    pub attempts: usize,
}

/// K_{t−1} ∨ H for an s-regular H of order n − t + 1, certified against
/// K_{t,s+1}. A circulant H is tried first (under [`Strategy::Circulant`]);
/// further attempts draw random regular graphs with seeds `seed, seed + 1, …`.
pub fn build_extremal(spec: &ExtremalSpec) -> Result<ExtremalBuild> {
    spec.validate()?;
    let pattern = ForbiddenPattern::new(spec.t, spec.s.max(1))?;
    let m = spec.h_order();
    let clique = complete(spec.t - 1)?;
    let mut last = None;

    for attempt in 0..spec.max_attempts.max(1) {
        let (h, strategy, seed) = if attempt == 0 && spec.strategy == Strategy::Circulant {
            (circulant(m, &default_offsets(m, spec.s))?, Strategy::Circulant, None)
        } else {
            let seed = spec.seed.wrapping_add(attempt as u64);
            (random_regular(m, spec.s, seed)?, Strategy::RandomRegular, Some(seed))
        };
        assert!(
            h.order() == m && h.min_degree() == spec.s && h.max_degree() == spec.s,
            "regular part is not {}-regular",
            spec.s
        );
        let graph = clique.join(&h)?;
        let witness = find_kst(&graph, pattern)?;
        let build = ExtremalBuild {
            graph,
            regular_part: h,
            certificate: FreenessCertificate { pattern, free: witness.is_none(), witness },
            strategy,
            seed,
            attempts: attempt + 1,
        };
        if build.certificate.free {
            return Ok(build);
        }
        last = Some(build);
    }
    match last {
        Some(b) if spec.allow_uncertified => Ok(b),
        _ => Err(Error::CannotCertifyFreeness {
            t: spec.t,
            s: spec.s,
            attempts: spec.max_attempts.max(1),
        }),
    }
}

/// `{1, …, ⌊s/2⌋}`, plus `m/2` when s is odd.
pub fn default_offsets(m: usize, s: usize) -> Vec<usize> {
    let mut offsets: Vec<usize> = (1..=s / 2).collect();
    if s % 2 == 1 {
        offsets.push(m / 2);
    }
    offsets
}

/// Vertex i adjacent to i ± c (mod m) for each offset c in `1..=m/2`.
pub fn circulant(m: usize, offsets: &[usize]) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut seen = Vec::new();
    for &c in offsets {
        if c == 0 || c > m / 2 {
            return Err(Error::InvalidOffsets(format!("offset {c} not in 1..={}", m / 2)));
        }
        if seen.contains(&c) {
            return Err(Error::InvalidOffsets(format!("offset {c} repeated")));
        }
        seen.push(c);
        for i in 0..m {
            edges.push((i, (i + c) % m));
        }
    }
    Graph::from_edge_list(m, &edges)
}

const REGULAR_RESTARTS: usize = 10_000;

/// An s-regular simple graph of order m from the pairing model: stubs are
/// matched one at a time to a random compatible partner, restarting whenever
/// no compatible partner is left. Deterministic in `seed`.
pub fn random_regular(m: usize, s: usize, seed: u64) -> Result<Graph> {
    if s >= m || (s * m) % 2 == 1 {
        return Err(Error::NoRegularGraphExists { m, s });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = Vec::with_capacity(m * s);
    'restart: for _ in 0..REGULAR_RESTARTS {
        stubs.clear();
        stubs.extend((0..m).flat_map(|v| std::iter::repeat_n(v, s)));
        stubs.shuffle(&mut rng);
        let mut g = Graph::empty(m)?;
        while let Some(u) = stubs.pop() {
            let candidates: Vec<usize> = (0..stubs.len())
                .filter(|&i| stubs[i] != u && !g.has_edge(u, stubs[i]))
                .collect();
            if candidates.is_empty() {
                continue 'restart;
            }
            let pick = candidates[rng.gen_range(0..candidates.len())];
            let v = stubs.swap_remove(pick);
            g.set_edge(u, v, true);
        }
        return Ok(g);
    }
    Err(Error::GenerationFailed(REGULAR_RESTARTS))
}

/// Strongly regular with parameters (n, k, s, s) where
/// k = 1/2 + √(s(n−1) + 1/4): the graphs with s common neighbors for every
/// pair of vertices. Complete and edgeless graphs are excluded.
pub fn is_design_graph(g: &Graph, s: usize) -> bool {
    let n = g.order();
    let k = 0.5 + ((s * (n - 1)) as f64 + 0.25).sqrt();
    if (k - k.round()).abs() > 1e-9 {
        return false;
    }
    let k = k.round() as usize;
    if g.size() == 0 || g.min_degree() == n - 1 {
        return false;
    }
    if !(0..n).all(|u| g.degree(u) == k) {
        return false;
    }
    let adj = g.adjacency();
    (0..n).all(|u| ((u + 1)..n).all(|v| (adj[u] & adj[v]).count_ones() as usize == s))
}
