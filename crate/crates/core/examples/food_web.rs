// Derived graphs of a small food web: an arc `u -> v` means `u` preys on `v`.

use std::error::Error;

use ccelab::format::{to_dot, write_graph};
use ccelab::{cce_graph, competition_graph, decompose_kr_iq, niche_graph, Digraph};

const SPECIES: [&str; 6] = ["hawk", "owl", "snake", "mouse", "frog", "insect"];

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let web = Digraph::from_arcs(
        SPECIES.len(),
        [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5)],
    )?;

    for (name, g) in [
        ("competition", competition_graph(&web)),
        ("competition-common enemy", cce_graph(&web)),
        ("niche", niche_graph(&web)),
    ] {
        println!("{name} graph:");
        for (u, v) in g.edges() {
            println!("  {} -- {}", SPECIES[u], SPECIES[v]);
        }
        match decompose_kr_iq(&g) {
            Some(shape) => println!("  shape {shape}"),
            None => println!("  not a clique plus isolated vertices"),
        }
    }

    let cce = cce_graph(&web);
    print!("{}", write_graph(&cce));
    let dot = to_dot(&web, &cce, "cce");
    println!("DOT output: {} lines", dot.lines().count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
