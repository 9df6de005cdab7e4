// Building semiorders and interval orders, and recognizing them back.

use std::error::Error;

use ccelab::format::{write_intervals, write_semiorder};
use ccelab::{
    cce_graph, decompose_kr_iq, interval_order_from, recognize_interval_order, recognize_semiorder, semiorder_from,
    Digraph, Interval, IntervalRep, SemiorderRep,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let scores = SemiorderRep { f: vec![0.0, 0.4, 1.5, 3.0, 3.2], delta: 1.0 };
    let d = semiorder_from(&scores, 5)?;
    println!("semiorder arcs: {:?}", d.arcs().collect::<Vec<_>>());
    println!("CCE shape: {}", decompose_kr_iq(&cce_graph(&d)).expect("orders give K_r ∪ I_q"));

    let rep = recognize_semiorder(&d).expect("built from scores");
    print!("{}", write_semiorder(&rep));

    let intervals = IntervalRep {
        intervals: vec![
            Interval { lo: 0.0, hi: 1.0 },
            Interval { lo: 2.0, hi: 3.0 },
            Interval { lo: 0.5, hi: 2.5 },
        ],
    };
    let io = interval_order_from(&intervals, 3)?;
    print!("{}", write_intervals(&recognize_interval_order(&io).expect("built from intervals")));

    // 2 + 2 is the smallest strict order that is not an interval order
    let two_plus_two = Digraph::from_arcs(4, [(0, 1), (2, 3)])?;
    assert!(recognize_interval_order(&two_plus_two).is_none());
    // 3 + 1 is an interval order but not a semiorder
    let three_plus_one = Digraph::from_arcs(4, [(0, 1), (0, 2), (1, 2)])?;
    assert!(recognize_interval_order(&three_plus_one).is_some());
    assert!(recognize_semiorder(&three_plus_one).is_none());
    println!("2+2 and 3+1 rejected as expected");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
