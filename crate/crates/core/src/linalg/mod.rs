//! Exact linear algebra over prime fields: elimination, subspace enumeration, Plücker
//! coordinates, reflexive bilinear forms and segment-wise alternating multilinear forms.

mod field;
mod forms;
pub mod matrix;
mod subspace;

pub use field::{fp_inv, PrimeField, MAX_PRIME};
pub use forms::{subset_rank, subspace_index, wedge_table, BilinearForm, FormKind, MultiForm, SubsetKey, WedgeEvaluator};
pub use matrix::{rref, Matrix, Vector};
pub use subspace::{enumerate_subspaces, gaussian_binomial, meet, minor, wedge_coords, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid dimension: k = {k} with n = {n}")]
    InvalidDimension { n: usize, k: usize },
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not reflexive of the requested kind at ({row}, {col})")]
    NotReflexive { row: usize, col: usize },
}
