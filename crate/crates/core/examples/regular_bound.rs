//! Check the q bound for K_{2,s+1}-free graphs of order m over every isomorphism class.

use qindex::search::proposition4_scan;

fn main() -> qindex::Result<()> {
    for s in 1..=3 {
        for m in 3..=7 {
            let r = proposition4_scan(m, s)?;
            println!(
                "m={m} s={s} classes={:>5} max q={:.8} bound={:.8} holds={} equality iff regular={}",
                r.classes, r.max_q, r.bound, r.holds, r.equality_iff_regular
            );
        }
    }
    Ok(())
}
