//! Command-line front end for the `goldroot` solver: parsers for equations,
//! matrices and radical expressions, verb dispatch, and JSON output.

pub mod app;
pub mod error;
pub mod json;
pub mod parse;

pub use app::{execute, run, Cli, Format, MethodArg, Outcome, Verb};
pub use error::{CliError, ParseError, EXIT_DOMAIN, EXIT_PARSE, EXIT_SCOPE};
pub use parse::{parse_matrix, parse_polynomial, parse_radical, ParsedEquation};
