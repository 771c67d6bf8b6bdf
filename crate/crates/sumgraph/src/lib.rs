//! Integer-labeled sum-graph families and their edge colorings.
//!
//! The crate builds the families `G_n`, `G_{r,s}`, and `H^{-i,s}_{m,j}`,
//! evaluates the closed-form degree and edge-count expressions they
//! satisfy, produces the canonical edge-sum coloring and the explicit
//! per-case proper edge colorings, computes exact chromatic indices with a
//! backtracking solver, and audits every closed-form claim against direct
//! computation.
//!
//! Everything is a pure function over immutable values; concurrent use
//! needs no synchronization.

pub mod audit;
pub mod coloring;
pub mod dot;
pub mod edge_sum;
mod error;
pub mod graph;
pub mod json;
pub mod schemes;
pub mod solver;

pub use coloring::{
    coloring_from_pairs, is_proper_edge_coloring, verify_coloring, EdgeColoring, Provenance,
    VerificationReport, Violation,
};
pub use edge_sum::{
    classify_perfect, edge_sum_chromatic, edge_sum_classes, EdgeSumClass, EdgeSumColoring,
    EdgeSumStatus,
};
pub use error::{Error, Result};
pub use graph::{
    build_h, build_h_graph, build_integral_sum_graph, build_sum_graph, degree_formula,
    edge_count_formula, max_degree, sum_graph_degree_formula, DegreeRecord, Edge, Family,
    HParams, LabelSet, SumGraph, MAX_LABEL,
};
pub use schemes::{
    chi_claim, edge_sum_claim, paper_scheme, scheme_descriptor, scheme_h2s, scheme_h3s,
    scheme_hi2, scheme_hi3, small_case_expected, ChiClaim, ClaimSource, SchemeDescriptor,
    SchemeFamily,
};
pub use solver::{
    exact_chromatic_index, greedy_coloring, greedy_upper_bound, SolveOutcome, SolverBudget,
};
