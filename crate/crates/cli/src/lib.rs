//! Library side of the `segrelab` command: JSON build specs, the Incidence JSON format,
//! and the registry of verification suites.

pub mod commands;
pub mod io;
pub mod suites;
