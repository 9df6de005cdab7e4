//! Labeled digraphs on dense vertex indices `0..n`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{check_vertex, Error, Result};
use crate::vertex_set::VertexSet;

/// A labeled directed graph on vertices `0..n`. Loops are allowed,
/// parallel arcs are not. Immutable once built.
///
/// Serializes as `{"n": 3, "arcs": [[0, 2], [1, 2]]}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ArcList", try_from = "ArcList")]
pub struct Digraph {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl Digraph {
    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            out: vec![VertexSet::new(n); n],
            inn: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a digraph from an arc list. Repeated arcs collapse into one.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Self::empty(n);
        for (u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            d.out[u].insert(v);
            d.inn[v].insert(u);
        }
        Ok(d)
    }

    /// Builds a digraph from its out-neighborhoods.
    pub fn from_out_neighborhoods(out: Vec<VertexSet>) -> Result<Self> {
        let n = out.len();
        let mut inn = vec![VertexSet::new(n); n];
        for (u, row) in out.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::InvalidInput(format!(
                    "neighborhood of vertex {u} has universe {} but the digraph has {n} vertices",
                    row.universe()
                )));
            }
            for v in row {
                inn[v].insert(u);
            }
        }
        Ok(Self { n, out, inn })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(VertexSet::len).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    /// Arcs in row-major order: by tail, then by head.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |v| (u, v)))
    }

    pub fn arc_set(&self) -> BTreeSet<(usize, usize)> {
        self.arcs().collect()
    }

    /// N⁺(x): the heads of arcs leaving `x`.
    pub fn out_neighbors(&self, x: usize) -> Result<&VertexSet> {
        check_vertex(x, self.n)?;
        Ok(&self.out[x])
    }

    /// N⁻(x): the tails of arcs entering `x`.
    pub fn in_neighbors(&self, x: usize) -> Result<&VertexSet> {
        check_vertex(x, self.n)?;
        Ok(&self.inn[x])
    }

    /// All out-neighborhoods, indexed by vertex.
    #[inline]
    pub fn out_rows(&self) -> &[VertexSet] {
        &self.out
    }

    /// All in-neighborhoods, indexed by vertex.
    #[inline]
    pub fn in_rows(&self) -> &[VertexSet] {
        &self.inn
    }

    pub fn is_loopless(&self) -> bool {
        (0..self.n).all(|v| !self.out[v].contains(v))
    }

    /// True iff there is no directed cycle. A loop counts as a cycle.
    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm
        let mut indegree: Vec<usize> = self.inn.iter().map(VertexSet::len).collect();
        let mut ready: Vec<usize> = (0..self.n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(u) = ready.pop() {
            removed += 1;
            for v in &self.out[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    ready.push(v);
                }
            }
        }
        removed == self.n
    }

    /// The digraph with every arc reversed.
    pub fn reversed(&self) -> Self {
        Self {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// The same arcs with `extra` arc-free vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Self {
        let n = self.n + extra;
        Self::from_arcs(n, self.arcs()).expect("arcs stay in range")
    }

    /// Moves vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        Self::from_arcs(self.n, self.arcs().map(|(u, v)| (perm[u], perm[v]))).expect("perm stays in range")
    }
}

#[derive(Serialize, Deserialize)]
struct ArcList {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

impl From<Digraph> for ArcList {
    fn from(d: Digraph) -> Self {
        Self { n: d.n, arcs: d.arcs().map(|(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<ArcList> for Digraph {
    type Error = Error;

    fn try_from(list: ArcList) -> Result<Self> {
        Digraph::from_arcs(list.n, list.arcs.into_iter().map(|[u, v]| (u, v)))
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs=", self.n)?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}
