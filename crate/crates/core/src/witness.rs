//! Explicit digraphs realizing K_r ∪ I_q as a CCE graph.
//!
//! Vertex layout: clique vertices `0..r`, then `a = r`, then `b = r + 1`,
//! then the remaining isolated vertices.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::orders::SemiorderRep;

/// Loopless digraph with arcs `a -> x` and `x -> b` for every clique
/// vertex `x`, plus `a -> b`. Its CCE graph is K_r ∪ I_q and it satisfies
/// C(p) and C'(p) for every `p >= 2`.
pub fn witness_loopless(r: usize, q: usize) -> Result<Digraph> {
    if r < 2 || q < 2 {
        return Err(Error::InvalidInput(format!(
            "loopless witness needs r >= 2 and q >= 2, got r = {r}, q = {q}"
        )));
    }
    let (a, b) = (r, r + 1);
    let arcs = (0..r).map(|x| (a, x)).chain((0..r).map(|x| (x, b))).chain([(a, b)]);
    Digraph::from_arcs(r + q, arcs)
}

/// Semiorder representation whose CCE graph is K_r ∪ I_q.
///
/// For `r = 0` every value is 0. Otherwise clique vertices get 0, `a`
/// gets 2 and every other isolated vertex gets -2, all with threshold 1.
pub fn witness_semiorder(r: usize, q: usize) -> Result<SemiorderRep> {
    if r == 0 {
        return Ok(SemiorderRep { f: vec![0.0; q], delta: 1.0 });
    }
    if r == 1 || q < 2 {
        return Err(Error::InvalidInput(format!(
            "semiorder witness needs r = 0, or r >= 2 and q >= 2; got r = {r}, q = {q}"
        )));
    }
    let f = (0..r + q)
        .map(|v| match v {
            v if v < r => 0.0,
            v if v == r => 2.0,
            _ => -2.0,
        })
        .collect();
    Ok(SemiorderRep { f, delta: 1.0 })
}
