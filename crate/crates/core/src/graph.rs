//! Simple undirected graphs, the codomain of the derived-graph operators.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{check_vertex, Error, Result};
use crate::vertex_set::VertexSet;

/// Loopless undirected graph on vertices `0..n`.
///
/// Serializes as `{"n": 3, "edges": [[0, 1]]}` with `u < v` in each pair.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "EdgeList", try_from = "EdgeList")]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Largest order for which [`SimpleGraph::edge_mask`] fits in a `u64`.
pub const MAX_MASK_ORDER: usize = 11;

/// Bit position of the pair `{u, v}` in an edge mask. Pairs are ordered
/// by their larger endpoint first, so appending vertices keeps old bits.
#[inline]
pub fn pair_index(u: usize, v: usize) -> usize {
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    hi * (hi - 1) / 2 + lo
}

impl SimpleGraph {
    pub fn edgeless(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for v in 1..n {
            for u in 0..v {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// K_r on vertices `0..r` followed by `q` isolated vertices.
    pub fn clique_plus_isolated(r: usize, q: usize) -> Self {
        Self::complete(r).with_isolated(q)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::edgeless(n);
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u} in a simple graph")));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Decodes an edge mask produced by [`SimpleGraph::edge_mask`].
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        assert!(n <= MAX_MASK_ORDER, "edge masks hold at most {MAX_MASK_ORDER} vertices");
        let mut g = Self::edgeless(n);
        for v in 1..n {
            for u in 0..v {
                if mask >> pair_index(u, v) & 1 == 1 {
                    g.add_edge_unchecked(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> Result<&VertexSet> {
        check_vertex(v, self.n)?;
        Ok(&self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().collect()
    }

    /// Packs the edge set into a bitmask (see [`pair_index`]). Panics above
    /// [`MAX_MASK_ORDER`] vertices.
    pub fn edge_mask(&self) -> u64 {
        assert!(self.n <= MAX_MASK_ORDER, "edge masks hold at most {MAX_MASK_ORDER} vertices");
        self.edges().fold(0, |m, (u, v)| m | 1 << pair_index(u, v))
    }

    pub fn with_isolated(&self, extra: usize) -> Self {
        let n = self.n + extra;
        Self::from_edges(n, self.edges()).expect("edges stay in range")
    }

    /// Induced subgraph on `keep`, relabelled to `0..keep.len()` in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> Self {
        let order = keep.to_vec();
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut g = Self::edgeless(order.len());
        for (i, &v) in order.iter().enumerate() {
            for w in &self.adj[v] {
                if position[w] != usize::MAX && position[w] > i {
                    g.add_edge_unchecked(i, position[w]);
                }
            }
        }
        g
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::edgeless(self.n);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(perm[u], perm[v]);
        }
        g
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<SimpleGraph> for EdgeList {
    fn from(g: SimpleGraph) -> Self {
        Self { n: g.n, edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<EdgeList> for SimpleGraph {
    type Error = Error;

    fn try_from(list: EdgeList) -> Result<Self> {
        SimpleGraph::from_edges(list.n, list.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
