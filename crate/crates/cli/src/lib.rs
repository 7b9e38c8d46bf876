//! Command-line front end: argument handling, report assembly and the
//! subcommands.

pub mod commands;
pub mod config;
pub mod report;

pub use commands::run;
pub use config::{Cli, RunConfig};
pub use report::{Check, Report, Status};

/// Exit status for malformed invocations.
pub const EXIT_USAGE: i32 = 64;
/// Exit status when two independent computations disagree.
pub const EXIT_INCONSISTENT: i32 = 2;

/// Exit status for an error raised before a report could be assembled.
pub fn exit_code_for(err: &cherednik::Error) -> i32 {
    match err {
        cherednik::Error::Inconsistent(_) | cherednik::Error::Numeric(_) => EXIT_INCONSISTENT,
        _ => EXIT_USAGE,
    }
}
