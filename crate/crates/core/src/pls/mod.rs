//! Partial linear spaces as finite point/line data: validation, the standard predicates,
//! subspaces and hyperplanes, parallelisms, and isomorphism/automorphism search.
//!
//! Collinearity is irreflexive: a point is never its own neighbour. Consequently
//! "`L ⊆ [a]`" for a point `a` on `L` is read with `a` itself excluded.

mod hyperplanes;
mod parallel;
mod predicates;
pub mod search;
mod strong;
mod structure;

pub use hyperplanes::HYPERPLANE_ENUMERATION_CAP;
pub use parallel::ParallelStructure;
pub use predicates::{check_property, overlap_components, Property};
pub use search::{automorphism_group, find_isomorphism, find_parallel_isomorphism, AutomorphismGroup, SYMMETRY_SEARCH_CAP};
pub use strong::STRONG_SUBSPACE_CAP;
pub use structure::{restrict_set, validate_pls, IncidenceStructure, PointLabel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlsError {
    #[error("structure has no lines")]
    NoLines,
    #[error("line {line} has fewer than two points")]
    LineTooShort { line: usize },
    #[error("point {point} lies on no line")]
    IsolatedPoint { point: usize },
    #[error("lines {first} and {second} share two or more points")]
    TwoLinesShareTwoPoints { first: usize, second: usize },
    #[error("line {line} mentions point {point} outside the point range")]
    PointOutOfRange { line: usize, point: usize },
    #[error("expected {expected} labels, got {actual}")]
    LabelCountMismatch { expected: usize, actual: usize },
    #[error("the given point set is not a hyperplane")]
    NotAHyperplane,
    #[error("{what} is limited to {limit} points (got {actual})")]
    CapExceeded { what: &'static str, limit: usize, actual: usize },
    #[error("line {line} is not contained in the chosen point subset")]
    LineNotInSubset { line: usize },
    #[error("parallel classes do not partition the lines (line {line})")]
    NotAPartition { line: usize },
    #[error("parallel lines {first} and {second} meet")]
    NotPartialAffine { first: usize, second: usize },
    #[error("parallelism belongs to a different structure")]
    ParallelismMismatch,
}
