//! Library half of the `bfpower` binary: argument handling, configuration
//! and sweep-spec file formats, unit parsing, and CSV output. `main` is a
//! thin shim over [`run_with`] so every code path is testable in-process.

pub mod cli;
pub mod config;
pub mod csv;
pub mod units;

pub use cli::{format_sig, run_with};
