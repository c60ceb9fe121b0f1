//! Evaluate each numeric inequality behind the t = 2 bound and the
//! dominating-vertex split at small orders.

use qindex::bounds::{q_bound_t2_threshold, verify_theorem3_steps};
use qindex::search::theorem6_scan;

fn main() -> qindex::Result<()> {
    for s in 1..=4 {
        let n = q_bound_t2_threshold(s);
        let ledger = verify_theorem3_steps(s, n)?;
        println!("s={s} n={n}: all hold = {}", ledger.all_hold());
        for c in &ledger.checks {
            let op = if c.strict { "<" } else { "<=" };
            println!("    {:<48} {:>14.8} {op:<2} {:<14.8} {}", c.name, c.lhs, c.rhs, c.holds);
        }
    }

    let r = theorem6_scan(8, 1)?;
    println!(
        "\nn=8 s=1: dominating classes {} (max q {:?}), others {} (max q {:?}, below n: {:?})",
        r.dominating_classes, r.dominating_max_q, r.other_classes, r.other_max_q, r.other_below_n
    );
    Ok(())
}
