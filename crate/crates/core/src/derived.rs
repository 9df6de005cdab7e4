//! Competition, competition-common enemy (CCE) and niche graphs, plus the
//! shape predicates used when classifying them.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{check_vertex, Result};
use crate::graph::SimpleGraph;
use crate::vertex_set::VertexSet;

/// Which derived graph to build from a digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DerivedKind {
    /// Common out-neighbor.
    Competition,
    /// Common out-neighbor and common in-neighbor.
    Cce,
    /// Common out-neighbor or common in-neighbor.
    Niche,
}

impl DerivedKind {
    pub const ALL: [DerivedKind; 3] = [DerivedKind::Competition, DerivedKind::Cce, DerivedKind::Niche];

    pub fn name(self) -> &'static str {
        match self {
            DerivedKind::Competition => "competition",
            DerivedKind::Cce => "cce",
            DerivedKind::Niche => "niche",
        }
    }
}

fn pairwise(d: &Digraph, adjacent: impl Fn(usize, usize) -> bool) -> SimpleGraph {
    let n = d.n();
    let mut g = SimpleGraph::edgeless(n);
    for x in 0..n {
        for y in x + 1..n {
            if adjacent(x, y) {
                g.add_edge_unchecked(x, y);
            }
        }
    }
    g
}

/// Edge `{x, y}` iff `x` and `y` share an out-neighbor.
pub fn competition_graph(d: &Digraph) -> SimpleGraph {
    let out = d.out_rows();
    pairwise(d, |x, y| out[x].intersects(&out[y]))
}

/// Edge `{x, y}` iff `x` and `y` share an out-neighbor and an in-neighbor.
pub fn cce_graph(d: &Digraph) -> SimpleGraph {
    let (out, inn) = (d.out_rows(), d.in_rows());
    pairwise(d, |x, y| out[x].intersects(&out[y]) && inn[x].intersects(&inn[y]))
}

/// Edge `{x, y}` iff `x` and `y` share an out-neighbor or an in-neighbor.
pub fn niche_graph(d: &Digraph) -> SimpleGraph {
    let (out, inn) = (d.out_rows(), d.in_rows());
    pairwise(d, |x, y| out[x].intersects(&out[y]) || inn[x].intersects(&inn[y]))
}

pub fn derived_graph(d: &Digraph, kind: DerivedKind) -> SimpleGraph {
    match kind {
        DerivedKind::Competition => competition_graph(d),
        DerivedKind::Cce => cce_graph(d),
        DerivedKind::Niche => niche_graph(d),
    }
}

/// Vertices of degree zero.
pub fn isolated_vertices(g: &SimpleGraph) -> VertexSet {
    VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| g.degree(v) == 0))
}

/// Vertices of positive degree.
pub fn non_isolated_vertices(g: &SimpleGraph) -> VertexSet {
    VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| g.degree(v) > 0))
}

/// The subgraph induced on the non-isolated vertices, compacted to
/// `0..m`. The returned vector maps each new index back to its original vertex.
pub fn strip_isolated(g: &SimpleGraph) -> (SimpleGraph, Vec<usize>) {
    let keep = non_isolated_vertices(g);
    (g.induced(&keep), keep.to_vec())
}

/// True iff every two members of `s` are adjacent in `g`.
pub fn is_clique(g: &SimpleGraph, s: &VertexSet) -> Result<bool> {
    for v in s {
        check_vertex(v, g.n())?;
    }
    let adj = g.adjacency();
    Ok(s.iter().all(|v| {
        let mut others = s.clone();
        others.remove(v);
        others.is_subset(&adj[v])
    }))
}

/// A graph of the form K_r ∪ I_q. `r` is never 1: a lone vertex is
/// counted among the isolated ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KrIqShape {
    pub r: usize,
    pub q: usize,
}

impl KrIqShape {
    pub fn to_graph(self) -> SimpleGraph {
        SimpleGraph::clique_plus_isolated(self.r, self.q)
    }

    pub fn n(self) -> usize {
        self.r + self.q
    }
}

impl std::fmt::Display for KrIqShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.r == 0 {
            write!(f, "I_{}", self.q)
        } else {
            write!(f, "K_{} ∪ I_{}", self.r, self.q)
        }
    }
}

/// Recognizes K_r ∪ I_q. Edgeless graphs give `r = 0`; graphs with more
/// than one nontrivial component, or a non-complete one, give `None`.
pub fn decompose_kr_iq(g: &SimpleGraph) -> Option<KrIqShape> {
    let core = non_isolated_vertices(g);
    let r = core.len();
    let q = g.n() - r;
    if r == 0 {
        return Some(KrIqShape { r: 0, q });
    }
    let adj = g.adjacency();
    let complete = core.iter().all(|v| adj[v].len() == r - 1);
    complete.then_some(KrIqShape { r, q })
}
