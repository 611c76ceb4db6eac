//! Command-line front end for `ontoqual`.
//!
//! The binary is a thin wrapper over [`commands::run`]; the renderers are
//! public so reports can be produced without going through a process.

pub mod args;
pub mod commands;
pub mod render;

pub use args::{Cli, Command, Format};
pub use commands::{run, CliError, EXIT_INPUT, EXIT_SEMANTIC};
