// Exhaustive sweeps over small digraphs. Each returns the first
// counterexample it meets, if any.

use std::error::Error;

use ccelab::sweeps::{verify_monotonicity_random, verify_propositions};
use ccelab::{verify_theorem_acyclic, verify_theorem_kr, verify_theorem_loopless, verify_theorem_main0, Caps};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let caps = Caps::default();
    let runs = [
        ("CCE of orders", verify_theorem_main0(4, &caps)?),
        ("competition of orders", verify_theorem_kr(4, &caps)?),
        ("loopless, p = 2", verify_theorem_loopless(2, 4, &caps)?),
        ("acyclic, p = 3", verify_theorem_acyclic(3, 4, &caps)?),
        ("monotonicity and clique", verify_propositions(3, &caps)?),
        ("monotonicity, random", verify_monotonicity_random(6, 500, 7)),
    ];
    for (name, outcome) in runs {
        let shapes: Vec<String> = outcome.shapes.iter().map(ToString::to_string).collect();
        match &outcome.counterexample {
            None => println!("{name}: {} checked, shapes [{}]", outcome.checked, shapes.join(", ")),
            Some(c) => println!("{name}: counterexample {:?}: {}", c.digraph, c.reason),
        }
        assert!(outcome.holds());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
