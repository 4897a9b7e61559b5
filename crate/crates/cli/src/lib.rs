//! Ring-expression DSL and command implementations for the `ringlat`
//! binary.

pub mod ast;
pub mod commands;
pub mod error;
pub mod eval;
pub mod parse;

pub use error::CliError;
