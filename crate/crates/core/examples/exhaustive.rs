//! Exact maximum of q over all K_{t,s+1}-free graphs of small order.
//!
//! Pass a graph6 file (for example from geng) to scan larger orders:
//! `cargo run --release --example exhaustive -- 10 graphs10.g6`

use std::fs::File;
use std::io::BufReader;

use qindex::search::{exhaustive_max_q, exhaustive_max_q_stream};
use qindex::ForbiddenPattern;

fn main() -> qindex::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pat = ForbiddenPattern::new(2, 1)?;
    if let [n, path] = args.as_slice() {
        let n: usize = n.parse().map_err(|_| qindex::Error::Unsupported(format!("bad order {n}")))?;
        let report = exhaustive_max_q_stream(n, pat, BufReader::new(File::open(path)?))?;
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        return Ok(());
    }
    for n in 4..=8 {
        let r = exhaustive_max_q(n, pat)?;
        println!(
            "n={n} classes={:>6} C4-free={:>4} max q={:.8} bound={:.8} {:?} argmax={:?}",
            r.graphs_seen,
            r.free_graphs,
            r.max_q,
            r.bound_value.unwrap_or(f64::NAN),
            r.verdict,
            r.argmax
        );
    }
    Ok(())
}
