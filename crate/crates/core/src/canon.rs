//! Canonical labeling for small simple graphs: colour refinement followed
//! by exhaustive search over orderings that respect the refined cells.
//! Intended for the vertex counts used by the enumeration sweeps.

use std::collections::BTreeMap;

use crate::graph::SimpleGraph;

/// Vertex colours after iterated degree refinement. Colours are ranks of
/// isomorphism-invariant signatures, so equal graphs up to relabelling get
/// equal colour multisets.
fn refine(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let adj = g.adjacency();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = adj[v].iter().map(|w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = {
            let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
            distinct.sort();
            distinct.dedup();
            distinct.into_iter().enumerate().map(|(i, s)| (s, i)).collect()
        };
        let next: Vec<usize> = signatures.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        colour = next;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

struct Search<'a> {
    rows: &'a [u64],
    cells: Vec<Vec<usize>>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, cell: usize, filled_in_cell: usize) {
        if cell == self.cells.len() {
            self.offer();
            return;
        }
        if filled_in_cell == self.cells[cell].len() {
            self.run(cell + 1, 0);
            return;
        }
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.used[v] {
                continue;
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(cell, filled_in_cell + 1);
            self.order.pop();
            self.used[v] = false;
        }
    }

    fn offer(&mut self) {
        let n = self.order.len();
        let mut position = vec![0usize; n];
        for (i, &v) in self.order.iter().enumerate() {
            position[v] = i;
        }
        let cert: Vec<u64> = self
            .order
            .iter()
            .map(|&v| {
                let row = self.rows[v];
                (0..n).filter(|&w| row >> w & 1 == 1).fold(0u64, |m, w| m | 1 << position[w])
            })
            .collect();
        let better = match &self.best {
            None => true,
            Some((b, _)) => cert < *b,
        };
        if better {
            self.best = Some((cert, self.order.clone()));
        }
    }
}

/// Returns `perm` such that `g.relabel(&perm)` is the canonical form of `g`.
/// Panics for graphs with more than 64 vertices.
pub fn canonical_permutation(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 64, "canonical labeling supports at most 64 vertices");
    if n == 0 {
        return Vec::new();
    }
    let colour = refine(g);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colour.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let rows: Vec<u64> = g.adjacency().iter().map(|r| r.low_mask()).collect();
    let mut search = Search {
        rows: &rows,
        cells: cells.into_values().collect(),
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0, 0);
    let (_, order) = search.best.expect("at least one ordering");
    let mut perm = vec![0; n];
    for (i, v) in order.into_iter().enumerate() {
        perm[v] = i;
    }
    perm
}

/// A fixed representative of the isomorphism class of `g`.
pub fn canonical_form(g: &SimpleGraph) -> SimpleGraph {
    g.relabel(&canonical_permutation(g))
}

pub fn are_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}
