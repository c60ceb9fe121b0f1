//! Simulated annealing for large q among C4-free graphs beyond exhaustive reach.

use qindex::search::{heuristic_max_q, Verdict};
use qindex::ForbiddenPattern;

fn main() -> qindex::Result<()> {
    let pat = ForbiddenPattern::new(2, 1)?;
    for n in 13..=16 {
        let r = heuristic_max_q(n, pat, 100_000, 1)?;
        let gap = r.bound_value.map(|b| b - r.max_q).unwrap_or(f64::NAN);
        println!(
            "n={n} best q={:.8} gap to bound={gap:.2e} join={} {}",
            r.max_q,
            r.argmax_is_extremal_join,
            if r.verdict == Verdict::BoundViolated { "VIOLATION" } else { "ok" }
        );
        println!("    {:?}", r.argmax);
    }
    Ok(())
}
