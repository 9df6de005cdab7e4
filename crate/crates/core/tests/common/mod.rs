//! Independent brute-force oracles shared by the integration tests. None of
//! these call into the recognition, derived-graph or search code they check.

#![allow(dead_code)]

use ccelab::{Digraph, SimpleGraph};

pub fn arcs(d: &Digraph) -> Vec<(usize, usize)> {
    d.arcs().collect()
}

pub fn adjacency_matrix(d: &Digraph) -> Vec<Vec<bool>> {
    let n = d.n();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in d.arcs() {
        m[u][v] = true;
    }
    m
}

/// Derived graph straight from the definition: for each pair, look for a
/// witness vertex among all vertices.
pub fn derived_by_definition(d: &Digraph, need_out: bool, need_in: bool, either: bool) -> SimpleGraph {
    let a = adjacency_matrix(d);
    let n = d.n();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let prey = (0..n).any(|w| a[x][w] && a[y][w]);
            let enemy = (0..n).any(|w| a[w][x] && a[w][y]);
            let adjacent = if either {
                prey || enemy
            } else {
                (!need_out || prey) && (!need_in || enemy)
            };
            if adjacent {
                edges.push((x, y));
            }
        }
    }
    SimpleGraph::from_edges(n, edges).unwrap()
}

pub fn competition_oracle(d: &Digraph) -> SimpleGraph {
    derived_by_definition(d, true, false, false)
}

pub fn cce_oracle(d: &Digraph) -> SimpleGraph {
    derived_by_definition(d, true, true, false)
}

pub fn niche_oracle(d: &Digraph) -> SimpleGraph {
    derived_by_definition(d, false, false, true)
}

/// Irreflexive and transitive: necessary for both order models.
pub fn is_strict_order(a: &[Vec<bool>]) -> bool {
    let n = a.len();
    (0..n).all(|x| !a[x][x])
        && (0..n).all(|x| (0..n).all(|y| !a[x][y] || (0..n).all(|z| !a[y][z] || a[x][z])))
}

/// Backtracking search assigning each vertex a value from `choices`, keeping
/// only assignments whose induced relation matches `a` on assigned pairs.
fn assign<T: Copy>(
    a: &[Vec<bool>],
    choices: &[T],
    relates: &dyn Fn(T, T) -> bool,
    chosen: &mut Vec<T>,
) -> bool {
    let v = chosen.len();
    if v == a.len() {
        return true;
    }
    for &c in choices {
        let consistent = (0..v).all(|u| relates(chosen[u], c) == a[u][v] && relates(c, chosen[u]) == a[v][u])
            && relates(c, c) == a[v][v];
        if consistent {
            chosen.push(c);
            if assign(a, choices, relates, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Is there an assignment of closed intervals with integer endpoints in
/// `0..2n` realizing the digraph? Any weak order of the 2n endpoints can be
/// realized there, so this is complete.
pub fn interval_oracle(d: &Digraph) -> bool {
    if (0..d.n()).any(|v| d.has_arc(v, v)) {
        return false;
    }
    let a = adjacency_matrix(d);
    if !is_strict_order(&a) {
        return false;
    }
    let n = d.n();
    let top = (2 * n).max(1) as i64;
    let choices: Vec<(i64, i64)> = (0..top).flat_map(|lo| (lo..top).map(move |hi| (lo, hi))).collect();
    assign(&a, &choices, &|x: (i64, i64), y: (i64, i64)| x.0 > y.1, &mut Vec::new())
}

/// Integer values in `0..=bound` with arcs exactly where `f(x) > f(y) + delta`.
pub fn semiorder_grid_oracle(d: &Digraph, delta: i64, bound: i64) -> bool {
    let a = adjacency_matrix(d);
    if !is_strict_order(&a) {
        return false;
    }
    let choices: Vec<i64> = (0..=bound).collect();
    assign(&a, &choices, &move |x: i64, y: i64| x > y + delta, &mut Vec::new())
}

/// Semiorder oracle over integer thresholds `1..=max(1, n/2)` and values in
/// `0..=(n - 1) * (threshold + 1)`.
pub fn semiorder_oracle(d: &Digraph) -> bool {
    if (0..d.n()).any(|v| d.has_arc(v, v)) {
        return false;
    }
    let n = d.n() as i64;
    let max_t = (n / 2).max(1);
    (1..=max_t).any(|t| semiorder_grid_oracle(d, t, (n - 1).max(0) * (t + 1)))
}

pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Brute-force isomorphism by trying every permutation.
pub fn isomorphic_brute(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && all_perms(a.n()).iter().any(|p| &a.relabel(p) == b)
}

/// Directed cycle check by depth-first search on the adjacency matrix.
pub fn has_cycle(a: &[Vec<bool>]) -> bool {
    fn visit(a: &[Vec<bool>], v: usize, state: &mut [u8]) -> bool {
        state[v] = 1;
        for w in 0..a.len() {
            if a[v][w] && (state[w] == 1 || (state[w] == 0 && visit(a, w, state))) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let mut state = vec![0u8; a.len()];
    (0..a.len()).any(|v| state[v] == 0 && visit(a, v, &mut state))
}

/// Every acyclic digraph on `n` vertices, by filtering all loopless arc
/// sets with [`has_cycle`].
pub fn all_dags(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|(u, v)| u != v).collect();
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs.len() {
        let mut a = vec![vec![false; n]; n];
        let mut arcs = Vec::new();
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a[u][v] = true;
                arcs.push((u, v));
            }
        }
        if !has_cycle(&a) {
            out.push(Digraph::from_arcs(n, arcs).unwrap());
        }
    }
    out
}

/// Every labeled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            SimpleGraph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// Runs one acceptance criterion and prints a single PASS/FAIL line.
pub fn criterion(id: u32, title: &str, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) => println!("ACCEPTANCE {id:>2} PASS  {title} ({detail})"),
        Err(why) => {
            println!("ACCEPTANCE {id:>2} FAIL  {title}: {why}");
            panic!("acceptance criterion {id} failed: {why}");
        }
    }
}

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}
