//! q(G) and λ(G) for a few named graphs, with the Merris upper bound.

use qindex::bounds::merris_bound;
use qindex::graph::families::{complete, cycle, perfect_matching, petersen, star};
use qindex::spectral::{adjacency_radius, full_spectrum, q_index, MatrixKind, DEFAULT_TOL};
use qindex::Graph;

fn main() -> qindex::Result<()> {
    let named: Vec<(&str, Graph)> = vec![
        ("K5", complete(5)?),
        ("C7", cycle(7)?),
        ("K1,6", star(7)?),
        ("Petersen", petersen()),
        ("K1 v 6K2", complete(1)?.join(&perfect_matching(6)?)?),
    ];
    println!("{:<10} {:>12} {:>12} {:>12}", "graph", "q", "lambda", "merris");
    for (name, g) in &named {
        let q = q_index(g, DEFAULT_TOL)?;
        let lambda = adjacency_radius(g, DEFAULT_TOL)?;
        println!("{name:<10} {:>12.8} {:>12.8} {:>12.8}", q.value, lambda.value, merris_bound(g)?);
    }

    let p = petersen();
    println!("\nPetersen Q-spectrum: {:?}", full_spectrum(&p, MatrixKind::Signless));
    Ok(())
}
