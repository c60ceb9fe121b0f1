//! Build K_{t-1} ∨ H with H s-regular and compare q against the conjectured bound.

use qindex::bounds::conjecture_bound;
use qindex::constructions::{build_extremal, ExtremalSpec, Strategy};
use qindex::spectral::{q_index, DEFAULT_TOL};

fn main() -> qindex::Result<()> {
    for (n, s, t, strategy) in [
        (13, 1, 2, Strategy::Circulant),
        (12, 2, 2, Strategy::Circulant),
        (12, 2, 3, Strategy::Circulant),
        (14, 4, 3, Strategy::RandomRegular),
    ] {
        let mut spec = ExtremalSpec::new(n, s, t);
        spec.strategy = strategy;
        spec.seed = 7;
        let build = build_extremal(&spec)?;
        let q = q_index(&build.graph, DEFAULT_TOL)?.value;
        let bound = conjecture_bound(n, s, t)?;
        println!(
            "n={n:>2} s={s} t={t} {:?}: {} q={q:.10} bound={bound:.10} free={} attempts={}",
            build.strategy, build.graph, build.certificate.free, build.attempts
        );
    }
    Ok(())
}
