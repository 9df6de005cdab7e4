//! Competition graphs, competition-common enemy (CCE) graphs and niche
//! graphs of digraphs, the foot/head conditions C(p), C'(p), C*(p), C*'(p),
//! semiorder and interval-order recognition, exact double competition
//! numbers, and exhaustive sweeps that check the classification of CCE
//! graphs at small vertex counts.
//!
//! ```
//! use ccelab::{cce_graph, decompose_kr_iq, witness_loopless, KrIqShape};
//!
//! let d = witness_loopless(3, 2).unwrap();
//! assert_eq!(decompose_kr_iq(&cce_graph(&d)), Some(KrIqShape { r: 3, q: 2 }));
//! ```

pub mod canon;
pub mod caps;
pub mod cli;
pub mod conditions;
pub mod derived;
pub mod digraph;
pub mod dk;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod orders;
pub mod sweeps;
pub mod vertex_set;
pub mod witness;

pub use caps::Caps;
pub use conditions::{
    foot_set_minus, foot_set_plus, head_set_minus, head_set_plus, satisfies_condition, ConditionKind,
    ConditionReport,
};
pub use derived::{
    cce_graph, competition_graph, decompose_kr_iq, is_clique, isolated_vertices, niche_graph, strip_isolated,
    DerivedKind, KrIqShape,
};
pub use digraph::Digraph;
pub use dk::{double_competition_number, is_cce_of_acyclic, DkResult, SearchMode};
pub use enumerate::{enumerate_digraphs, EnumerationFilter};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use orders::{
    interval_order_from, recognize_interval_order, recognize_semiorder, semiorder_from, Interval, IntervalRep,
    SemiorderRep,
};
pub use sweeps::{
    explore_open_problem, verify_theorem_acyclic, verify_theorem_kr, verify_theorem_loopless, verify_theorem_main0,
    ExplorationReport, OpenProblem, SweepOutcome,
};
pub use vertex_set::VertexSet;
pub use witness::{witness_loopless, witness_semiorder};
