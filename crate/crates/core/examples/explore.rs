// Catalogues CCE and niche graphs for questions without a known answer.

use std::error::Error;

use ccelab::{explore_open_problem, Caps, EnumerationFilter, OpenProblem};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let caps = Caps::default();
    for (problem, p, filter) in [
        (OpenProblem::SmallCore, 3, EnumerationFilter::loopless(4)),
        (OpenProblem::StarConditions, 2, EnumerationFilter::acyclic(4)),
        (OpenProblem::Niche, 2, EnumerationFilter::loopless(3)),
    ] {
        let report = explore_open_problem(problem, p, filter, &caps)?;
        println!("problem {} with p = {p}: {} digraphs", problem.number(), report.checked);
        for section in &report.sections {
            println!("  {}: {} classes", section.label, section.classes.len());
            for class in section.classes.iter().take(3) {
                println!("    {:?} from {} digraphs", class.graph.edge_set(), class.count);
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
