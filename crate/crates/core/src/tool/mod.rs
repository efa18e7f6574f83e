//! Verification harness, output formats and the command-line interface.

pub mod cli;
pub mod json;
pub mod suite;
pub mod svg;

pub use cli::cli_main;
pub use json::{emit_json, parse_json};
pub use suite::{run_suite, CheckResult, SuiteReport, SuiteTolerances};
pub use svg::{emit_svg, FigureSpec};
