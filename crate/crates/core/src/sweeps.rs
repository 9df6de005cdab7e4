//! Exhaustive verification sweeps over enumerated digraphs, and the
//! exploration reports for the open classification problems.
//!
//! Every sweep is deterministic: the mask range is split into contiguous
//! chunks processed in parallel, and the reported counterexample is the
//! one with the least mask.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_permutation};
use crate::caps::Caps;
use crate::conditions::{condition_set, holds, holds_c_and_cprime, ConditionKind};
use crate::derived::{
    cce_graph, competition_graph, decompose_kr_iq, derived_graph, is_clique, non_isolated_vertices,
    strip_isolated, DerivedKind, KrIqShape,
};
use crate::digraph::Digraph;
use crate::dk::{double_competition_number, SearchMode};
use crate::enumerate::{DigraphSpace, EnumerationFilter, Masks};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::orders::{recognize_interval_order, recognize_semiorder, semiorder_from};
use crate::vertex_set::VertexSet;
use crate::witness::{witness_loopless, witness_semiorder};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub digraph: Digraph,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SweepOutcome {
    /// Digraphs examined, including constructed witnesses.
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
    /// Shapes of the graph family, for the family-comparison sweeps.
    pub shapes: Vec<KrIqShape>,
}

impl SweepOutcome {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    fn merge(mut self, other: SweepOutcome) -> SweepOutcome {
        self.checked += other.checked;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self
    }
}

/// Runs `check` on every digraph of the space; keeps the first failure.
fn sweep<F>(space: &DigraphSpace, check: F) -> SweepOutcome
where
    F: Fn(&Digraph) -> Option<String> + Sync,
{
    space
        .par_chunks(|masks: Masks<'_>| {
            let mut outcome = SweepOutcome::default();
            for m in masks {
                outcome.checked += 1;
                if outcome.counterexample.is_none() {
                    let d = space.digraph(m);
                    if let Some(reason) = check(&d) {
                        outcome.counterexample = Some(Counterexample { digraph: d, reason });
                    }
                }
            }
            outcome
        })
        .into_iter()
        .fold(SweepOutcome::default(), SweepOutcome::merge)
}

fn require_p(p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidInput(format!("p must be at least 2, got {p}")));
    }
    Ok(())
}

/// Loopless theorem at size `n`: every loopless digraph satisfying C(p) and
/// C'(p) whose CCE graph has at least `p` non-isolated vertices has CCE
/// graph K_r ∪ I_q with `r >= p`, `q >= 2`; and every such shape on `n`
/// vertices is realized by the loopless witness.
pub fn verify_theorem_loopless(p: usize, n: usize, caps: &Caps) -> Result<SweepOutcome> {
    require_p(p)?;
    let space = DigraphSpace::new(EnumerationFilter::loopless(n), caps)?;
    let mut outcome = sweep(&space, |d| {
        if !holds_c_and_cprime(d, p) {
            return None;
        }
        let g = cce_graph(d);
        if non_isolated_vertices(&g).len() < p {
            return None;
        }
        match decompose_kr_iq(&g) {
            Some(s) if s.r >= p && s.q >= 2 => None,
            Some(s) => Some(format!("only-if: CCE graph is {s}, outside r >= {p}, q >= 2")),
            None => Some("only-if: CCE graph is not of the form K_r ∪ I_q".to_string()),
        }
    });
    for r in p..=n.saturating_sub(2) {
        let q = n - r;
        let d = witness_loopless(r, q)?;
        outcome.checked += 1;
        if outcome.counterexample.is_some() {
            continue;
        }
        let expected = SimpleGraph::clique_plus_isolated(r, q);
        let reason = if !d.is_loopless() {
            Some("if: witness has a loop")
        } else if cce_graph(&d) != expected {
            Some("if: witness CCE graph differs from K_r ∪ I_q")
        } else if !holds_c_and_cprime(&d, p) {
            Some("if: witness violates C(p) or C'(p)")
        } else {
            None
        };
        if let Some(reason) = reason {
            outcome.counterexample = Some(Counterexample {
                digraph: d,
                reason: format!("{reason} (r = {r}, q = {q})"),
            });
        }
    }
    Ok(outcome)
}

/// Acyclic theorem at size `n`: every acyclic digraph satisfying C(p) and
/// C'(p) has CCE graph I_q, or K_r ∪ I_q with `r >= p`, `q >= 2`, or
/// H ∪ I_q with `|V(H)| < p`, no isolated vertices in H and `q >= dk(H)`.
pub fn verify_theorem_acyclic(p: usize, n: usize, caps: &Caps) -> Result<SweepOutcome> {
    require_p(p)?;
    let space = DigraphSpace::new(EnumerationFilter::acyclic(n), caps)?;
    // dk of each nontrivial part, keyed by canonical edge mask and order
    let dk_cache: Mutex<HashMap<(usize, u64), Option<usize>>> = Mutex::new(HashMap::new());
    let failure: Mutex<Option<Error>> = Mutex::new(None);
    let outcome = sweep(&space, |d| {
        if !holds_c_and_cprime(d, p) {
            return None;
        }
        let g = cce_graph(d);
        let (h, _) = strip_isolated(&g);
        let q = g.n() - h.n();
        if h.n() == 0 {
            return None;
        }
        if h.n() >= p {
            return match decompose_kr_iq(&g) {
                Some(s) if s.r >= p && s.q >= 2 => None,
                _ => Some(format!("CCE graph has {} non-isolated vertices but is not K_r ∪ I_q with r >= {p}, q >= 2", h.n())),
            };
        }
        let canon = canonical_form(&h);
        let key = (h.n(), canon.edge_mask());
        let cached = dk_cache.lock().expect("cache lock").get(&key).copied();
        let dk = match cached {
            Some(v) => v,
            None => {
                let k_max = caps.dk.saturating_sub(h.n()).min(n);
                match double_competition_number(&canon, k_max, caps, SearchMode::Deterministic) {
                    Ok(r) => {
                        let v = r.map(|r| r.k);
                        dk_cache.lock().expect("cache lock").insert(key, v);
                        v
                    }
                    Err(e) => {
                        failure.lock().expect("error lock").get_or_insert(e);
                        return None;
                    }
                }
            }
        };
        match dk {
            Some(k) if q >= k => None,
            Some(k) => Some(format!("nontrivial part on {} vertices has dk = {k} but only {q} isolated vertices", h.n())),
            None => Some(format!("no dk witness found for a nontrivial part on {} vertices", h.n())),
        }
    });
    if let Some(e) = failure.into_inner().expect("error lock") {
        return Err(e);
    }
    Ok(outcome)
}

/// The admissible shapes K_r ∪ I_q on `n` vertices: `r = 0`, or `r >= 2`
/// with `q >= min_q`.
fn shape_family(n: usize, min_q: usize) -> Vec<KrIqShape> {
    let mut shapes = vec![KrIqShape { r: 0, q: n }];
    shapes.extend((2..=n).map(|r| KrIqShape { r, q: n - r }).filter(|s| s.q >= min_q));
    shapes
}

/// Canonical classes of `derive(D)` over loopless digraphs accepted by `member`.
fn image_classes<M>(space: &DigraphSpace, member: M, derive: fn(&Digraph) -> SimpleGraph) -> (u64, BTreeMap<u64, u64>)
where
    M: Fn(&Digraph) -> bool + Sync,
{
    let parts = space.par_chunks(|masks: Masks<'_>| {
        let mut count = 0u64;
        // labeled edge mask -> least digraph mask
        let mut images: HashMap<u64, u64> = HashMap::new();
        for m in masks {
            count += 1;
            let d = space.digraph(m);
            if member(&d) {
                images.entry(derive(&d).edge_mask()).or_insert(m);
            }
        }
        (count, images)
    });
    let n = space.n();
    let mut checked = 0;
    let mut classes: BTreeMap<u64, u64> = BTreeMap::new();
    for (count, images) in parts {
        checked += count;
        for (edges, m) in images {
            let canon = canonical_form(&SimpleGraph::from_edge_mask(n, edges)).edge_mask();
            classes.entry(canon).and_modify(|w| *w = (*w).min(m)).or_insert(m);
        }
    }
    (checked, classes)
}

fn family_sweep(n: usize, caps: &Caps, derive: fn(&Digraph) -> SimpleGraph, min_q: usize) -> Result<SweepOutcome> {
    let space = DigraphSpace::new(EnumerationFilter::loopless(n), caps)?;
    let shapes = shape_family(n, min_q);
    let shape_classes: BTreeSet<u64> =
        shapes.iter().map(|s| canonical_form(&s.to_graph()).edge_mask()).collect();
    // semiorders and interval orders are transitive and irreflexive; checking
    // out-neighborhood closure first keeps recognition off most masks
    let (checked, semi) = image_classes(&space, |d| is_transitive(d) && recognize_semiorder(d).is_some(), derive);
    let (_, interval) = image_classes(&space, |d| is_transitive(d) && recognize_interval_order(d).is_some(), derive);

    let mut outcome = SweepOutcome { checked, counterexample: None, shapes: shapes.clone() };
    for (label, family) in [("semiorder", &semi), ("interval order", &interval)] {
        if let Some((_, &m)) = family.iter().find(|(c, _)| !shape_classes.contains(c)) {
            let d = space.digraph(m);
            let g = derive(&d);
            outcome.counterexample = Some(Counterexample {
                digraph: d,
                reason: format!("{label} image {:?} is not an admissible K_r ∪ I_q shape", g.edge_set()),
            });
            return Ok(outcome);
        }
    }
    for s in &shapes {
        let class = canonical_form(&s.to_graph()).edge_mask();
        for (label, family) in [("semiorder", &semi), ("interval order", &interval)] {
            if !family.contains_key(&class) {
                let witness = if s.r == 0 || s.q >= 2 {
                    semiorder_from(&witness_semiorder(s.r, s.q)?, n)?
                } else {
                    Digraph::empty(n)
                };
                outcome.counterexample = Some(Counterexample {
                    digraph: witness,
                    reason: format!("shape {s} is not the image of any {label}"),
                });
                return Ok(outcome);
            }
        }
    }
    Ok(outcome)
}

fn is_transitive(d: &Digraph) -> bool {
    let out = d.out_rows();
    (0..d.n()).all(|x| out[x].iter().all(|y| out[y].is_subset(&out[x])))
}

/// CCE images of semiorders, of interval orders, and the shapes K_r ∪ I_q
/// with `r >= 2 => q >= 2`, compared as isomorphism classes on `n` vertices.
pub fn verify_theorem_main0(n: usize, caps: &Caps) -> Result<SweepOutcome> {
    family_sweep(n, caps, cce_graph, 2)
}

/// The competition-graph analogue, with `r >= 2 => q >= 1`.
pub fn verify_theorem_kr(n: usize, caps: &Caps) -> Result<SweepOutcome> {
    family_sweep(n, caps, competition_graph, 1)
}

/// C(p) implies C(q) and C'(p) implies C'(q) for `2 <= p < q <= n`.
pub fn monotonicity_violation(d: &Digraph) -> Option<String> {
    let n = d.n();
    for kind in [ConditionKind::C, ConditionKind::CPrime] {
        let verdicts: Vec<bool> = (2..=n).map(|p| holds(d, kind, p)).collect();
        for (i, &held) in verdicts.iter().enumerate() {
            if held {
                if let Some(j) = verdicts[i + 1..].iter().position(|&v| !v) {
                    return Some(format!("{} holds for p = {} but fails for q = {}", kind.label(), i + 2, i + j + 3));
                }
            }
        }
    }
    None
}

/// For all vertex sets T, U with F⁻(T) ∩ U nonempty: F⁻(U) ⊆ F⁻(T ∪ U).
pub fn foot_inclusion_violation(d: &Digraph) -> Option<String> {
    let n = d.n();
    assert!(n < 64);
    let sets: Vec<VertexSet> = (0..1u64 << n).map(|m| VertexSet::from_mask(n, m)).collect();
    let feet: Vec<VertexSet> = sets
        .iter()
        .map(|s| condition_set(d, ConditionKind::CPrime, s).expect("members in range"))
        .collect();
    for t in 0..sets.len() {
        for u in 0..sets.len() {
            if !feet[t].intersects(&sets[u]) {
                continue;
            }
            if !feet[u].is_subset(&feet[t | u]) {
                return Some(format!("T = {}, U = {}", sets[t], sets[u]));
            }
        }
    }
    None
}

/// If D satisfies C(p) and C'(p) and its CCE graph has at least `p`
/// non-isolated vertices, those vertices form a clique.
pub fn clique_violation(d: &Digraph, p: usize) -> Option<String> {
    if !holds_c_and_cprime(d, p) {
        return None;
    }
    let g = cce_graph(d);
    let core = non_isolated_vertices(&g);
    if core.len() < p || is_clique(&g, &core).expect("members in range") {
        return None;
    }
    Some(format!("non-isolated part {core} is not a clique (p = {p})"))
}

/// Monotonicity, in-foot inclusion and the clique property over every digraph on `n`
/// vertices (the clique property for each `p` in `2..=n`).
pub fn verify_propositions(n: usize, caps: &Caps) -> Result<SweepOutcome> {
    let space = DigraphSpace::new(EnumerationFilter::all(n), caps)?;
    Ok(sweep(&space, |d| {
        monotonicity_violation(d)
            .or_else(|| foot_inclusion_violation(d))
            .or_else(|| (2..=n).find_map(|p| clique_violation(d, p)))
    }))
}

/// Monotonicity on `samples` uniformly random digraphs on `n` vertices.
pub fn verify_monotonicity_random(n: usize, samples: u64, seed: u64) -> SweepOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = SweepOutcome::default();
    for _ in 0..samples {
        let d = random_digraph(&mut rng, n, false);
        outcome.checked += 1;
        if let Some(reason) = monotonicity_violation(&d) {
            outcome.counterexample = Some(Counterexample { digraph: d, reason });
            break;
        }
    }
    outcome
}

/// The three open classification problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OpenProblem {
    /// CCE graphs under C(p) and C'(p) with fewer than `p` non-isolated vertices.
    SmallCore,
    /// CCE graphs under C*(p) and C*'(p).
    StarConditions,
    /// Niche graphs under each of the four conditions.
    Niche,
}

impl OpenProblem {
    pub fn number(self) -> u8 {
        match self {
            OpenProblem::SmallCore => 1,
            OpenProblem::StarConditions => 2,
            OpenProblem::Niche => 3,
        }
    }

    pub fn from_number(i: u8) -> Option<Self> {
        match i {
            1 => Some(OpenProblem::SmallCore),
            2 => Some(OpenProblem::StarConditions),
            3 => Some(OpenProblem::Niche),
            _ => None,
        }
    }
}

/// One isomorphism class found by an exploration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClass {
    /// Canonical representative.
    pub graph: SimpleGraph,
    /// The least-mask digraph producing this class, relabeled so that it
    /// derives `graph` exactly.
    pub witness: Digraph,
    /// Number of labeled digraphs producing this class.
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplorationSection {
    pub label: String,
    pub classes: Vec<GraphClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplorationReport {
    pub problem: OpenProblem,
    pub p: usize,
    pub filter: EnumerationFilter,
    pub checked: u64,
    pub sections: Vec<ExplorationSection>,
}

fn collect_classes<F>(space: &DigraphSpace, kind: DerivedKind, member: F) -> (u64, Vec<GraphClass>)
where
    F: Fn(&Digraph) -> bool + Sync,
{
    let parts = space.par_chunks(|masks: Masks<'_>| {
        let mut count = 0u64;
        let mut images: HashMap<u64, (u64, u64)> = HashMap::new();
        for m in masks {
            count += 1;
            let d = space.digraph(m);
            if member(&d) {
                let e = images.entry(derived_graph(&d, kind).edge_mask()).or_insert((m, 0));
                e.1 += 1;
            }
        }
        (count, images)
    });
    let n = space.n();
    let mut checked = 0;
    let mut classes: BTreeMap<u64, (u64, u64)> = BTreeMap::new();
    for (count, images) in parts {
        checked += count;
        for (edges, (m, c)) in images {
            let canon = canonical_form(&SimpleGraph::from_edge_mask(n, edges)).edge_mask();
            let e = classes.entry(canon).or_insert((m, 0));
            e.0 = e.0.min(m);
            e.1 += c;
        }
    }
    let classes = classes
        .into_iter()
        .map(|(canon, (m, count))| {
            // relabel so the witness derives exactly the listed graph
            let d = space.digraph(m);
            let perm = canonical_permutation(&derived_graph(&d, kind));
            GraphClass { graph: SimpleGraph::from_edge_mask(n, canon), witness: d.relabel(&perm), count }
        })
        .collect();
    (checked, classes)
}

/// Collects the graph classes asked about by an open problem, over every
/// digraph admitted by `filter`.
pub fn explore_open_problem(
    problem: OpenProblem,
    p: usize,
    filter: EnumerationFilter,
    caps: &Caps,
) -> Result<ExplorationReport> {
    require_p(p)?;
    let space = DigraphSpace::new(filter, caps)?;
    let mut sections = Vec::new();
    let mut checked = 0;
    match problem {
        OpenProblem::SmallCore => {
            let (c, classes) = collect_classes(&space, DerivedKind::Cce, |d| {
                holds_c_and_cprime(d, p) && non_isolated_vertices(&cce_graph(d)).len() < p
            });
            checked += c;
            sections.push(ExplorationSection { label: "C(p) and C'(p), fewer than p non-isolated".into(), classes });
        }
        OpenProblem::StarConditions => {
            let (c, classes) = collect_classes(&space, DerivedKind::Cce, |d| {
                holds(d, ConditionKind::CStar, p) && holds(d, ConditionKind::CStarPrime, p)
            });
            checked += c;
            sections.push(ExplorationSection { label: "C*(p) and C*'(p)".into(), classes });
        }
        OpenProblem::Niche => {
            for kind in ConditionKind::ALL {
                let (c, classes) = collect_classes(&space, DerivedKind::Niche, |d| holds(d, kind, p));
                checked = checked.max(c);
                sections.push(ExplorationSection { label: kind.label().into(), classes });
            }
        }
    }
    Ok(ExplorationReport { problem, p, filter, checked, sections })
}

/// Uniformly random labeled digraph on `n` vertices.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, loopless: bool) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !(loopless && u == v))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Digraph::from_arcs(n, arcs).expect("in range")
}
