//! Command-line plumbing for `ospzhu`: report documents, their JSON/CSV/TeX
//! renderings, and the subcommands.

pub mod commands;
pub mod error;
pub mod report;

pub use commands::{cmd_fuse, cmd_table, cmd_verify, cmd_weights, Outcome, Suite};
pub use error::{CliError, EXIT_FAILURE, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK};
pub use report::{render, Cell, Format, ReportDocument, Status, Table};

/// Environment variable capping the rayon worker count.
pub const WORKERS_ENV: &str = "OSPZHU_WORKERS";

/// Sizes the global rayon pool from [`WORKERS_ENV`] when it holds a positive
/// integer.
pub fn configure_workers() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| CliError::Usage(format!("{WORKERS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size worker pool: {e}")))
}
