//! Look for K_{t,s+1} subgraphs and print the witness when one exists.

use qindex::forbidden::{find_kst, max_codegree};
use qindex::graph::families::{complete, complete_bipartite, cycle, petersen};
use qindex::{ForbiddenPattern, Graph};

fn main() -> qindex::Result<()> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("C4", cycle(4)?),
        ("C5", cycle(5)?),
        ("Petersen", petersen()),
        ("K3,3", complete_bipartite(3, 3)?),
        ("K6", complete(6)?),
    ];
    let patterns = [(2, 1), (2, 2), (3, 2)];
    for (name, g) in &graphs {
        println!("{name}: max 2-codegree {}", max_codegree(g, 2)?);
        for (t, s) in patterns {
            let pat = ForbiddenPattern::new(t, s)?;
            match find_kst(g, pat)? {
                Some(w) => println!("  K{t},{}: found, small side {:?}, large side {:?}", s + 1, w.small, w.large),
                None => println!("  K{t},{}: free", s + 1),
            }
        }
    }
    Ok(())
}
