// How many isolated vertices a graph needs to become the CCE graph of an
// acyclic digraph.

use std::error::Error;

use ccelab::format::write_digraph;
use ccelab::{cce_graph, double_competition_number, Caps, SearchMode, SimpleGraph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let caps = Caps::default();
    let graphs = [
        ("I_3", SimpleGraph::edgeless(3)),
        ("K_2", SimpleGraph::complete(2)),
        ("K_3", SimpleGraph::complete(3)),
        ("P_3", SimpleGraph::from_edges(3, [(0, 1), (1, 2)])?),
    ];
    for (name, g) in graphs {
        match double_competition_number(&g, 4, &caps, SearchMode::Deterministic)? {
            Some(found) => {
                assert!(found.witness.is_acyclic());
                assert_eq!(cce_graph(&found.witness), g.with_isolated(found.k));
                println!("dk({name}) = {}", found.k);
                print!("{}", write_digraph(&found.witness));
            }
            None => println!("dk({name}) > 4"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
