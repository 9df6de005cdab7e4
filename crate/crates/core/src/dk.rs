//! Exact double competition number: the least `k` such that `G` plus `k`
//! isolated vertices is the CCE graph of an acyclic digraph.
//!
//! Each stratum `k` is a backtracking search over arc sets on `n + k`
//! labeled vertices. Arcs are decided in row-major order, absent first.
//! Branches are cut when an arc would close a cycle, when the arcs chosen
//! so far already produce a CCE edge outside the target, or when some
//! target edge can no longer obtain both a common out-neighbor and a
//! common in-neighbor from the undecided arcs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DkResult {
    pub k: usize,
    /// Acyclic digraph on `n + k` vertices whose CCE graph is `G` on
    /// `0..n` with `n..n + k` isolated.
    pub witness: Digraph,
}

/// How a stratum is searched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// The witness is the first one in the sequential search order,
    /// regardless of thread count.
    #[default]
    Deterministic,
    /// Any witness found by any worker.
    Fast,
}

/// Number of leading arc decisions expanded before handing subtrees to workers.
const SPLIT_DEPTH: usize = 8;

struct Stratum {
    n: usize,
    slots: Vec<(usize, usize)>,
    target: Vec<u64>,
    target_edges: Vec<(usize, usize)>,
    /// future_out[i][x]: heads of slots `>= i` leaving x
    future_out: Vec<Vec<u64>>,
    future_in: Vec<Vec<u64>>,
}

#[derive(Clone)]
struct State {
    out: [u64; 64],
    inn: [u64; 64],
    reach: [u64; 64],
}

impl Stratum {
    fn new(target: &SimpleGraph) -> Self {
        let n = target.n();
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        let mut future_out = vec![vec![0u64; n]; slots.len() + 1];
        let mut future_in = vec![vec![0u64; n]; slots.len() + 1];
        for i in (0..slots.len()).rev() {
            let (u, v) = slots[i];
            future_out[i] = future_out[i + 1].clone();
            future_in[i] = future_in[i + 1].clone();
            future_out[i][u] |= 1 << v;
            future_in[i][v] |= 1 << u;
        }
        Self {
            n,
            target: target.adjacency().iter().map(VertexSet::low_mask).collect(),
            target_edges: target.edges().collect(),
            slots,
            future_out,
            future_in,
        }
    }

    fn empty_state(&self) -> State {
        State { out: [0; 64], inn: [0; 64], reach: [0; 64] }
    }

    /// Adds arc (u, v) if it keeps the digraph acyclic and the CCE graph
    /// inside the target.
    fn try_add(&self, s: &mut State, u: usize, v: usize) -> bool {
        if s.reach[v] >> u & 1 == 1 {
            return false;
        }
        // v becomes a common out-neighbor of u and each existing in-neighbor of v
        let mut others = s.inn[v] & !(1 << u);
        while others != 0 {
            let w = others.trailing_zeros() as usize;
            others &= others - 1;
            if s.inn[u] & s.inn[w] != 0 && self.target[u] >> w & 1 == 0 {
                return false;
            }
        }
        // u becomes a common in-neighbor of v and each existing out-neighbor of u
        let mut others = s.out[u] & !(1 << v);
        while others != 0 {
            let w = others.trailing_zeros() as usize;
            others &= others - 1;
            if s.out[v] & s.out[w] != 0 && self.target[v] >> w & 1 == 0 {
                return false;
            }
        }
        s.out[u] |= 1 << v;
        s.inn[v] |= 1 << u;
        let add = s.reach[v] | 1 << v;
        for w in 0..self.n {
            if w == u || s.reach[w] >> u & 1 == 1 {
                s.reach[w] |= add;
            }
        }
        true
    }

    /// Can every target edge still gain a common out- and in-neighbor?
    fn still_reachable(&self, s: &State, next: usize) -> bool {
        let (fo, fi) = (&self.future_out[next], &self.future_in[next]);
        self.target_edges.iter().all(|&(x, y)| {
            (s.out[x] | fo[x]) & (s.out[y] | fo[y]) != 0 && (s.inn[x] | fi[x]) & (s.inn[y] | fi[y]) != 0
        })
    }

    fn complete(&self, s: &State) -> bool {
        self.target_edges
            .iter()
            .all(|&(x, y)| s.out[x] & s.out[y] != 0 && s.inn[x] & s.inn[y] != 0)
    }

    fn dfs(&self, s: &mut State, next: usize) -> Option<State> {
        if !self.still_reachable(s, next) {
            return None;
        }
        if next == self.slots.len() {
            return self.complete(s).then(|| s.clone());
        }
        if let Some(found) = self.dfs(s, next + 1) {
            return Some(found);
        }
        let (u, v) = self.slots[next];
        let saved = s.clone();
        if self.try_add(s, u, v) {
            let found = self.dfs(s, next + 1);
            *s = saved;
            return found;
        }
        None
    }

    /// Replays the first `depth` decisions encoded by `prefix` (bit i = take slot i).
    fn replay(&self, prefix: u64, depth: usize) -> Option<State> {
        let mut s = self.empty_state();
        for i in 0..depth {
            if prefix >> i & 1 == 1 {
                let (u, v) = self.slots[i];
                if !self.try_add(&mut s, u, v) {
                    return None;
                }
            }
        }
        Some(s)
    }

    fn search(&self, mode: SearchMode) -> Option<Digraph> {
        let depth = SPLIT_DEPTH.min(self.slots.len());
        // prefixes in the same order the sequential search visits them:
        // absent before present, earliest slot most significant
        let order = |rank: u64| -> u64 {
            (0..depth).fold(0u64, |p, i| p | ((rank >> (depth - 1 - i)) & 1) << i)
        };
        let run = |rank: u64| {
            let mut s = self.replay(order(rank), depth)?;
            self.dfs(&mut s, depth)
        };
        let ranks = 0..1u64 << depth;
        let found = match mode {
            SearchMode::Deterministic => ranks.into_par_iter().find_map_first(run),
            SearchMode::Fast => ranks.into_par_iter().find_map_any(run),
        }?;
        let out = (0..self.n).map(|u| VertexSet::from_mask(self.n, found.out[u])).collect();
        Some(Digraph::from_out_neighborhoods(out).expect("rows sized to n"))
    }
}

fn check_cap(order: usize, caps: &Caps) -> Result<()> {
    if order > caps.dk {
        return Err(Error::CapExceeded { what: "double competition number search", requested: order, cap: caps.dk });
    }
    Ok(())
}

/// An acyclic digraph on `g.n() + k` vertices whose CCE graph is `g` with
/// `k` isolated vertices appended, if one exists.
pub fn stratum_witness(g: &SimpleGraph, k: usize, caps: &Caps, mode: SearchMode) -> Result<Option<Digraph>> {
    check_cap(g.n() + k, caps)?;
    Ok(Stratum::new(&g.with_isolated(k)).search(mode))
}

/// Least `k <= k_max` with a witness, searching `k` upward.
pub fn double_competition_number(
    g: &SimpleGraph,
    k_max: usize,
    caps: &Caps,
    mode: SearchMode,
) -> Result<Option<DkResult>> {
    check_cap(g.n() + k_max, caps)?;
    for k in 0..=k_max {
        if let Some(witness) = stratum_witness(g, k, caps, mode)? {
            return Ok(Some(DkResult { k, witness }));
        }
    }
    Ok(None)
}

/// Witness that `g` itself is the CCE graph of an acyclic digraph.
pub fn is_cce_of_acyclic(g: &SimpleGraph, caps: &Caps) -> Result<Option<Digraph>> {
    stratum_witness(g, 0, caps, SearchMode::Deterministic)
}
