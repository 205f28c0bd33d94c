//! JSON front end for `azumaya-core`.
//!
//! Each subcommand takes one JSON payload and returns one JSON value; the
//! binary adds argument parsing and exit codes on top of [`commands::dispatch`].

pub mod commands;
pub mod error;
pub mod json;
pub mod scenario;

pub use commands::{dispatch, Options, COMMANDS};
pub use error::CliError;
