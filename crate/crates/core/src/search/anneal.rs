use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{finish_report, is_free, Candidate, SearchReport, Source, SEARCH_TOL};
use crate::error::{Error, Result};
use crate::forbidden::ForbiddenPattern;
use crate::graph::{Graph, MAX_ORDER};
use crate::spectral::q_index;

const START_TEMPERATURE: f64 = 1.0;
const FINAL_TEMPERATURE: f64 = 1e-3;

/// Simulated annealing over single edge toggles, maximizing q(G) among
/// K_{t,s+1}-free graphs of order n.
///
/// Starts from the edgeless graph. Each step flips a uniformly random vertex
/// pair; additions that create K_{t,s+1} are rejected outright, everything
/// else is accepted with the Metropolis rule at temperature
/// `T_k = α^k` with α chosen so `T` reaches 1e-3 at the end of the budget.
/// The result is a lower bound on the true maximum and is reported as such.
pub fn heuristic_max_q(n: usize, pat: ForbiddenPattern, budget: usize, seed: u64) -> Result<SearchReport> {
    if budget == 0 {
        return Err(Error::InvalidBudget);
    }
    if !(2..=MAX_ORDER).contains(&n) {
        return Err(Error::Unsupported(format!("heuristic search needs 2 ≤ n ≤ {MAX_ORDER}, got {n}")));
    }
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alpha = (FINAL_TEMPERATURE / START_TEMPERATURE).powf(1.0 / budget as f64);
    let mut temperature = START_TEMPERATURE;

    let mut current = Graph::empty(n)?;
    let mut current_q = 0.0;
    let mut best = current.clone();
    let mut best_q = current_q;
    let mut free_seen = 0usize;

    for _ in 0..budget {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        let adding = !current.has_edge(u, v);
        let proposal = current.with_edge_toggled(u, v)?;
        let admissible = !adding || is_free(&proposal, pat)?;
        if admissible {
            free_seen += 1;
            let q = q_index(&proposal, SEARCH_TOL)?.value;
            let accept = q >= current_q || rng.gen::<f64>() < ((q - current_q) / temperature).exp();
            if accept {
                current = proposal;
                current_q = q;
                if current_q > best_q {
                    best_q = current_q;
                    best = current.clone();
                }
            }
        }
        temperature *= alpha;
    }

    let candidates = vec![Candidate { graph: best, q: best_q }];
    let mut report = finish_report(n, pat, candidates, budget, free_seen, Source::Heuristic, started)?;
    report.seed = Some(seed);
    report.budget = Some(budget);
    Ok(report)
}
