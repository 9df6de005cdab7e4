//! Foot and head sets of vertex subsets, and the conditions C(p), C'(p),
//! C*(p), C*'(p) built on them.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{check_vertex, Error, Result};
use crate::vertex_set::VertexSet;

/// Selects one of the four foot/head sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConditionKind {
    /// Out-neighborhood contained in every other (foot, F⁺).
    C,
    /// In-neighborhood contained in every other (F⁻).
    CPrime,
    /// Out-neighborhood containing every other (head, H⁺).
    CStar,
    /// In-neighborhood containing every other (H⁻).
    CStarPrime,
}

impl ConditionKind {
    pub const ALL: [ConditionKind; 4] = [
        ConditionKind::C,
        ConditionKind::CPrime,
        ConditionKind::CStar,
        ConditionKind::CStarPrime,
    ];

    /// Short name used on the command line: `C`, `Cp`, `Cs`, `Csp`.
    pub fn code(self) -> &'static str {
        match self {
            ConditionKind::C => "C",
            ConditionKind::CPrime => "Cp",
            ConditionKind::CStar => "Cs",
            ConditionKind::CStarPrime => "Csp",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.code() == code)
    }

    /// Human-readable name, e.g. `C*'(p)`.
    pub fn label(self) -> &'static str {
        match self {
            ConditionKind::C => "C(p)",
            ConditionKind::CPrime => "C'(p)",
            ConditionKind::CStar => "C*(p)",
            ConditionKind::CStarPrime => "C*'(p)",
        }
    }

    fn uses_out(self) -> bool {
        matches!(self, ConditionKind::C | ConditionKind::CStar)
    }

    fn is_foot(self) -> bool {
        matches!(self, ConditionKind::C | ConditionKind::CPrime)
    }

    fn rows(self, d: &Digraph) -> &[VertexSet] {
        if self.uses_out() {
            d.out_rows()
        } else {
            d.in_rows()
        }
    }
}

impl std::fmt::Display for ConditionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of checking one condition for one `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub kind: ConditionKind,
    pub p: usize,
    pub satisfied: bool,
    /// The lexicographically least p-set whose foot/head set is empty.
    pub violating_set: Option<Vec<usize>>,
}

fn check_members(d: &Digraph, s: &VertexSet) -> Result<()> {
    for v in s {
        check_vertex(v, d.n())?;
    }
    Ok(())
}

#[inline]
fn qualifies(rows: &[VertexSet], x: usize, members: &[usize], foot: bool) -> bool {
    let nx = &rows[x];
    members.iter().all(|&y| {
        if foot {
            nx.is_subset(&rows[y])
        } else {
            nx.is_superset(&rows[y])
        }
    })
}

#[inline]
fn has_foot_or_head(rows: &[VertexSet], members: &[usize], foot: bool) -> bool {
    members.iter().any(|&x| qualifies(rows, x, members, foot))
}

/// The members of `s` selected by `kind`: F⁺, F⁻, H⁺ or H⁻ of `s`.
pub fn condition_set(d: &Digraph, kind: ConditionKind, s: &VertexSet) -> Result<VertexSet> {
    check_members(d, s)?;
    let rows = kind.rows(d);
    let members = s.to_vec();
    Ok(VertexSet::from_vertices(
        d.n(),
        members
            .iter()
            .copied()
            .filter(|&x| qualifies(rows, x, &members, kind.is_foot())),
    ))
}

/// F⁺(S): members whose out-neighborhood lies inside every member's.
pub fn foot_set_plus(d: &Digraph, s: &VertexSet) -> Result<VertexSet> {
    condition_set(d, ConditionKind::C, s)
}

/// F⁻(S): members whose in-neighborhood lies inside every member's.
pub fn foot_set_minus(d: &Digraph, s: &VertexSet) -> Result<VertexSet> {
    condition_set(d, ConditionKind::CPrime, s)
}

/// H⁺(S): members whose out-neighborhood contains every member's.
pub fn head_set_plus(d: &Digraph, s: &VertexSet) -> Result<VertexSet> {
    condition_set(d, ConditionKind::CStar, s)
}

/// H⁻(S): members whose in-neighborhood contains every member's.
pub fn head_set_minus(d: &Digraph, s: &VertexSet) -> Result<VertexSet> {
    condition_set(d, ConditionKind::CStarPrime, s)
}

/// Steps `combo` to the next `k`-subset of `0..n` in lexicographic order.
/// Returns `false` once the last subset has been passed.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// First p-subset (lexicographic order) whose selected set is empty.
fn first_violation(d: &Digraph, kind: ConditionKind, p: usize) -> Option<Vec<usize>> {
    let n = d.n();
    if p > n {
        return None;
    }
    let rows = kind.rows(d);
    let foot = kind.is_foot();
    let mut combo: Vec<usize> = (0..p).collect();
    loop {
        if !has_foot_or_head(rows, &combo, foot) {
            return Some(combo);
        }
        if !next_combination(&mut combo, n) {
            return None;
        }
    }
}

/// Checks the condition selected by `kind` for every p-subset. With fewer
/// than `p` vertices there is nothing to check and the condition holds.
pub fn satisfies_condition(d: &Digraph, kind: ConditionKind, p: usize) -> Result<ConditionReport> {
    if p < 2 {
        return Err(Error::InvalidInput(format!("p must be at least 2, got {p}")));
    }
    let violating_set = first_violation(d, kind, p);
    Ok(ConditionReport {
        kind,
        p,
        satisfied: violating_set.is_none(),
        violating_set,
    })
}

/// Boolean shortcut used by the sweeps. Requires `p >= 2`.
#[inline]
pub fn holds(d: &Digraph, kind: ConditionKind, p: usize) -> bool {
    debug_assert!(p >= 2);
    first_violation(d, kind, p).is_none()
}

/// Both C(p) and C'(p).
#[inline]
pub fn holds_c_and_cprime(d: &Digraph, p: usize) -> bool {
    holds(d, ConditionKind::C, p) && holds(d, ConditionKind::CPrime, p)
}
