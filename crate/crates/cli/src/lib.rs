//! Front end for the `mixprod` engine: an ideal-expression language, a
//! command runner producing text or JSON reports, and the file formats of
//! the generalized mixed product builder.

pub mod commands;
pub mod error;
pub mod eval;
pub mod family;
pub mod syntax;

pub use commands::{run_command, run_source, Bounds, Outcome, Report};
pub use error::CliError;
