//! Semiorders and interval orders: construction from a representation,
//! and recognition with a representation as certificate.
//!
//! A semiorder has an arc `x -> y` iff `f(x) > f(y) + delta`; an interval
//! order has an arc `x -> y` iff `lo(x) > hi(y)`.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Per-vertex values `f` with a positive threshold `delta`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemiorderRep {
    pub f: Vec<f64>,
    pub delta: f64,
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }
}

/// One closed interval per vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalRep {
    pub intervals: Vec<Interval>,
}

fn check_len(len: usize, n: usize) -> Result<()> {
    if len == n {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "representation covers {len} vertices, expected {n}"
        )))
    }
}

/// The semiorder `{(x, y) | f(x) > f(y) + delta}` on `0..n`.
pub fn semiorder_from(rep: &SemiorderRep, n: usize) -> Result<Digraph> {
    check_len(rep.f.len(), n)?;
    if !rep.delta.is_finite() || rep.delta <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "semiorder threshold must be a positive finite number, got {}",
            rep.delta
        )));
    }
    if let Some(v) = rep.f.iter().position(|x| !x.is_finite()) {
        return Err(Error::InvalidInput(format!("f({v}) is not finite")));
    }
    let f = &rep.f;
    Digraph::from_arcs(
        n,
        (0..n).flat_map(|x| (0..n).filter(move |&y| f[x] > f[y] + rep.delta).map(move |y| (x, y))),
    )
}

/// The interval order `{(x, y) | lo(x) > hi(y)}` on `0..n`.
pub fn interval_order_from(rep: &IntervalRep, n: usize) -> Result<Digraph> {
    check_len(rep.intervals.len(), n)?;
    for (v, j) in rep.intervals.iter().enumerate() {
        if !j.lo.is_finite() || !j.hi.is_finite() {
            return Err(Error::InvalidInput(format!("interval of vertex {v} is not finite")));
        }
        if j.lo > j.hi {
            return Err(Error::InvalidInput(format!(
                "interval of vertex {v} is malformed: [{}, {}]",
                j.lo, j.hi
            )));
        }
    }
    let js = &rep.intervals;
    Digraph::from_arcs(
        n,
        (0..n).flat_map(|x| (0..n).filter(move |&y| js[x].lo > js[y].hi).map(move |y| (x, y))),
    )
}

/// Distinct out-neighborhoods sorted by size, or `None` if they are not
/// totally ordered by inclusion.
fn out_neighborhood_chain(d: &Digraph) -> Option<Vec<VertexSet>> {
    let mut chain: Vec<VertexSet> = d.out_rows().to_vec();
    chain.sort_by_key(VertexSet::len);
    chain.dedup();
    chain
        .windows(2)
        .all(|w| w[0].is_subset(&w[1]) && w[0] != w[1])
        .then_some(chain)
}

/// Finds integer intervals realizing `d`, or `None` if `d` is not an
/// interval order.
///
/// A loopless digraph is an interval order exactly when its out-neighborhoods
/// form a chain `D_0 ⊂ … ⊂ D_{m-1}`. Then `lo(x)` is the index of `N⁺(x)` and
/// `hi(y)` is one less than the index of the first `D_i` containing `y`
/// (or `m - 1` if none does), which gives endpoints in `0..m`.
pub fn recognize_interval_order(d: &Digraph) -> Option<IntervalRep> {
    if !d.is_loopless() {
        return None;
    }
    let chain = out_neighborhood_chain(d)?;
    let m = chain.len();
    let index_of = |s: &VertexSet| chain.iter().position(|c| c == s).expect("row is in the chain");
    let intervals = (0..d.n())
        .map(|v| {
            let lo = index_of(&d.out_rows()[v]);
            let hi = chain.iter().position(|c| c.contains(v)).map_or(m - 1, |i| i - 1);
            Interval::new(lo as f64, hi as f64)
        })
        .collect();
    let rep = IntervalRep { intervals };
    debug_assert_eq!(interval_order_from(&rep, d.n()).as_ref(), Ok(d));
    Some(rep)
}

/// Integer potentials `g` with `g(x) - g(y) >= t + 1` on arcs and
/// `g(x) - g(y) <= t` on non-arcs, by Bellman-Ford on the constraint graph.
fn integer_semiorder_values(d: &Digraph, t: i64) -> Option<Vec<i64>> {
    let n = d.n();
    // edge (from, to, w) encodes g(to) <= g(from) + w
    let mut edges = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            if d.has_arc(x, y) {
                edges.push((x, y, -(t + 1)));
            } else if x != y {
                edges.push((y, x, t));
            }
        }
    }
    let mut g = vec![0i64; n];
    for _ in 0..=n {
        let mut changed = false;
        for &(from, to, w) in &edges {
            if g[from] + w < g[to] {
                g[to] = g[from] + w;
                changed = true;
            }
        }
        if !changed {
            let min = g.iter().copied().min().unwrap_or(0);
            return Some(g.into_iter().map(|v| v - min).collect());
        }
    }
    None
}

/// Finds a semiorder representation of `d`, or `None` if there is none.
///
/// The result uses integer values with minimum 0 and the smallest integer
/// threshold that works. Integer thresholds up to `n / 2` suffice for every
/// semiorder on `n` vertices.
pub fn recognize_semiorder(d: &Digraph) -> Option<SemiorderRep> {
    recognize_interval_order(d)?;
    let n = d.n();
    let max_threshold = (n / 2).max(1) as i64;
    (1..=max_threshold).find_map(|t| {
        integer_semiorder_values(d, t).map(|g| {
            let rep = SemiorderRep {
                f: g.into_iter().map(|v| v as f64).collect(),
                delta: t as f64,
            };
            debug_assert_eq!(semiorder_from(&rep, n).as_ref(), Ok(d));
            rep
        })
    })
}
