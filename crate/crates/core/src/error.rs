use crate::realizability::RealizabilityReport;
use crate::trees::TreeViolation;
use crate::vector::CoordVector;
use crate::verification::VerifyOutcome;

/// Crate-wide error type. Variants mirror the documented failure modes of the
/// public operations; conditions that are *answers* rather than failures
/// (e.g. "this set is not realizable" from `check_realizable`) are reported
/// through return values, not through this enum.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("coordinate vectors must have at least one entry")]
    EmptyVector,

    #[error("coordinate entry {0} exceeds the 32-bit signed bound")]
    EntryOutOfRange(u64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector set must be non-empty")]
    EmptySet,

    #[error("duplicate vector {0} in input")]
    DuplicateVector(CoordVector),

    #[error("vertex index {index} out of range for {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vector {0} is not an element of the set")]
    NotInSet(CoordVector),

    #[error("edge {0} -- {1} is already present")]
    EdgePresent(CoordVector, CoordVector),

    #[error("edge {0} -- {1} is not present")]
    EdgeAbsent(CoordVector, CoordVector),

    #[error("edge {0} -- {1} is not an edge of the canonical realization")]
    EdgeOutsideCanonical(CoordVector, CoordVector),

    #[error("set is not realizable ({} violation(s))", .0.violations.len())]
    NotRealizable(RealizabilityReport),

    #[error("pair does not realize its vector set: {0}")]
    NotARealization(VerifyOutcome),

    #[error("landmark {index} must have coordinate {coord} equal to zero")]
    BadLandmark { index: usize, coord: usize },

    #[error("landmark list contains duplicate vertex {0}")]
    DuplicateLandmark(usize),

    #[error("landmark list must be non-empty")]
    EmptyLandmarks,

    #[error("graph is disconnected; distances are undefined")]
    Disconnected,

    #[error("vertex list does not resolve the graph: vertices {0} and {1} share coordinates")]
    NotResolving(usize, usize),

    #[error("realizations are over different vector sets")]
    DifferentSets,

    #[error("instance exceeds the supported size: {what} is {got}, limit {limit}")]
    TooLarge {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("set is not realizable by a tree: {0}")]
    NotTreeRealizable(TreeViolation),

    #[error("graph vertex set differs from the expected vector set")]
    SetMismatch,

    #[error("DIMACS parse error on line {line}: {msg}")]
    Dimacs { line: usize, msg: String },

    #[error("clause {index} has {size} literals; this tool accepts at most 3")]
    ClauseTooLarge { index: usize, size: usize },

    #[error("clause {index} is empty")]
    EmptyClause { index: usize },

    #[error("literal {literal} names a variable outside 1..={num_vars}")]
    LiteralOutOfRange { literal: i64, num_vars: u32 },

    #[error("formula is trivial after normalization; use the normalization verdict instead")]
    TrivialFormula,

    #[error("assignment does not satisfy the formula (clause {0} is false)")]
    UnsatisfiedClause(usize),

    #[error("realization has {edges} edges, over the instance budget {bound}")]
    OverBudget { edges: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
