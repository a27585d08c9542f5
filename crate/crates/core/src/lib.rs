//! Graph realizations of integer distance-vector sets.
//!
//! A finite set `S` of n-dimensional non-negative integer vectors is
//! *realizable* when some connected graph `G` with a resolving set
//! `W = {w1, ..., wn}` has exactly `S` as its set of metric coordinate
//! vectors `(d(u, w1), ..., d(u, wn))`. This crate decides realizability,
//! builds and manipulates realizations (canonical, minimal, minimum-edge,
//! tree), and generates edge-budget instances from 3SAT formulas, the
//! construction behind the NP-completeness of the minimum-edge variant.
//!
//! Everything is deterministic: vertex identity is the coordinate vector,
//! vertices and edges iterate in lexicographic order, and searches break
//! ties lexicographically, so equal inputs give byte-equal outputs.

pub mod error;
pub mod graph;
pub mod minimization;
pub mod realizability;
pub mod realization;
pub mod satbridge;
pub mod set;
pub mod trees;
pub mod vector;
pub mod verification;

pub use error::{Error, Result};
pub use graph::{bfs_distances, is_connected, LabeledGraph, SimpleGraph};
pub use minimization::{
    addable_edge, descent_realizes, enumerate_minimal, forced_edges, is_uniquely_realizable,
    minimize_greedy, minimum_edges, minimum_edges_with_workers, realizable_within_budget,
    removable_edge, EnumerationLimits, MinimumEdges,
};
pub use realizability::{
    canonical_edges, canonical_realization, chebyshev_neighborhood, check_realizable,
    RealizabilityReport, Violation,
};
pub use realization::Realization;
pub use satbridge::{
    brute_force_sat, decode_assignment, normalize_formula, parse_dimacs, reduce, satisfying_graph,
    witness_graph, CnfFormula, DecodedAssignment, NormalizeOutcome, NormalizedFormula,
    ReductionInstance, Role,
};
pub use set::VectorSet;
pub use trees::{
    build_tree_realization, split_strata, tree_realizable, uniquely_realizable_by_tree, Strata,
    TreeCheck, TreeViolation,
};
pub use vector::{chebyshev_adjacent, chebyshev_distance, CoordVector};
pub use verification::{
    are_equivalent, are_isomorphic_small, is_resolving_set, project_to_canonical,
    verify_realization, VerifyOutcome,
};
