//! Finite partial linear spaces, their Segre products, hyperplanes, and hyperplane complements.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: exact arithmetic over GF(p), subspaces and forms;
//! * [`pls`]: incidence structures, their predicates, subspaces, hyperplanes and symmetry search;
//! * [`spaces`]: projective, Grassmann, polar and affine spaces as labelled incidence structures;
//! * [`segre`]: Segre products, slices of hyperplanes and hyperplane constructions;
//! * [`complement`]: hyperplane complements with their natural parallelism and everything
//!   that can be recovered from them.

pub mod bitset;
pub mod complement;
pub mod instances;
pub mod linalg;
pub mod pls;
pub mod segre;
pub mod spaces;

pub use bitset::PointSet;
