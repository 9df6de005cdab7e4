// Explicit digraphs whose CCE graph is K_r ∪ I_q.

use std::error::Error;

use ccelab::conditions::holds_c_and_cprime;
use ccelab::format::write_digraph;
use ccelab::{cce_graph, decompose_kr_iq, semiorder_from, witness_loopless, witness_semiorder};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (r, q) in [(2, 2), (3, 2), (4, 3)] {
        let d = witness_loopless(r, q)?;
        let shape = decompose_kr_iq(&cce_graph(&d)).expect("witness realizes a shape");
        println!("loopless ({r},{q}): {shape}, C(p) and C'(p) for p = {r}: {}", holds_c_and_cprime(&d, r));

        let rep = witness_semiorder(r, q)?;
        let s = semiorder_from(&rep, r + q)?;
        println!("semiorder ({r},{q}): f = {:?}, CCE {}", rep.f, decompose_kr_iq(&cce_graph(&s)).unwrap());
    }
    print!("{}", write_digraph(&witness_loopless(2, 2)?));

    // K_r ∪ I_1 is out of reach: one isolated vertex is never enough
    assert!(witness_semiorder(2, 1).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
