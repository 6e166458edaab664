use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ospzhu_cli::{
    cmd_fuse, cmd_table, cmd_verify, cmd_weights, configure_workers, render, CliError, Format, Outcome, Suite,
};

/// Admissible-level osp(1|2): weights, fusion tables and verification suites.
#[derive(Parser)]
#[command(name = "ospzhu", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate (p, q) and list the admissible weights.
    Weights {
        p: i64,
        q: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Fuse two admissible weights by the closed formula and the oracle.
    Fuse {
        p: i64,
        q: i64,
        m1: i64,
        s1: i64,
        m2: i64,
        s2: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Full fusion table with ring checks.
    Table {
        p: i64,
        q: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Bound on p·q for pair sweeps (default 81 for oracle, 32 otherwise).
        #[arg(long)]
        max_pq: Option<i64>,
        /// Bound on the t-degree for singular vectors.
        #[arg(long, default_value_t = 6)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn run(cli: Cli) -> Result<u8, CliError> {
    configure_workers()?;
    let (outcome, format): (Outcome, Format) = match cli.command {
        Command::Weights { p, q, format } => (cmd_weights(p, q)?, format),
        Command::Fuse { p, q, m1, s1, m2, s2, format } => (cmd_fuse(p, q, m1, s1, m2, s2)?, format),
        Command::Table { p, q, format } => (cmd_table(p, q)?, format),
        Command::Verify { suite, max_pq, depth, format } => (cmd_verify(suite, max_pq, depth)?, format),
    };
    let text = render(&outcome.doc, format)?;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return Ok(ospzhu_cli::EXIT_FAILURE);
    }
    Ok(outcome.exit)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
