//! Tabulate the closed-form bounds for t = 2 and t = 3.

use qindex::bounds::BoundReport;

fn show(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| format!("{v:.6}"))
}

fn main() {
    println!("{:>3} {:>2} {:>2} {:>12} {:>12} {:>12} {:>8}", "n", "s", "t", "q_bound_t2", "conjecture", "adj_bound", "applies");
    for (s, t) in [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)] {
        for n in [10, 13, 20, 40] {
            let r = BoundReport::evaluate(n, s, t);
            println!(
                "{n:>3} {s:>2} {t:>2} {:>12} {:>12} {:>12} {:>8}",
                show(Some(r.q_bound_t2)),
                show(r.conjecture_bound),
                show(r.adj_bound),
                r.applicability.q_bound_t2,
            );
        }
    }
}
