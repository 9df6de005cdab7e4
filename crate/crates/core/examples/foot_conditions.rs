// Foot sets and the conditions built from them.

use std::error::Error;

use ccelab::{foot_set_plus, head_set_minus, satisfies_condition, ConditionKind, Digraph, VertexSet};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // a strict weak order: 0 and 1 both beat 2 and 3
    let d = Digraph::from_arcs(4, [(0, 2), (0, 3), (1, 2), (1, 3)])?;
    let s = VertexSet::from_vertices(4, [0, 2]);
    println!("S = {s}: F+ = {}, H- = {}", foot_set_plus(&d, &s)?, head_set_minus(&d, &s)?);

    for kind in ConditionKind::ALL {
        for p in 2..=4 {
            let report = satisfies_condition(&d, kind, p)?;
            match report.violating_set {
                None => println!("{} holds for p = {p}", kind.label()),
                Some(set) => println!("{} fails for p = {p}, first bad set {set:?}", kind.label()),
            }
        }
    }

    // a directed 2-cycle has no foot for the pair
    let cycle = Digraph::from_arcs(2, [(0, 1), (1, 0)])?;
    let report = satisfies_condition(&cycle, ConditionKind::C, 2)?;
    assert_eq!(report.violating_set, Some(vec![0, 1]));
    println!("2-cycle: {:?}", report);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
