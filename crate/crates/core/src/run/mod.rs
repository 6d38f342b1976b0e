//! Batch front end: universe files, verification runs, reports, DOT export
//! and the brute-force oracles.

mod dot;
pub mod oracle;
mod report;
mod universe;

pub use dot::export_dot;
pub use report::{render, run_verification, CapacitorVerdict, Check, CompletionRow, Format, RunFlags, RunReport, TheoremOutcome};
pub use universe::{
    build_universe, parse_universe, parse_universe_str, BuiltUniverse, Entries, Kind, ParseError, ParseErrors,
    RawEntry, RawFamilyEntry, UniverseOptions, UniverseSpec,
};

/// Exit status of a run whose requested checks all pass.
pub const EXIT_PASS: i32 = 0;
/// Some requested check failed.
pub const EXIT_FAIL: i32 = 1;
/// The input could not be parsed or built.
pub const EXIT_INPUT: i32 = 2;
/// The universe exceeded the arrow budget.
pub const EXIT_BUDGET: i32 = 3;
