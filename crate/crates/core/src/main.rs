use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod cmd;

/// Exact arithmetic and certificates for forms over `Z[Z/m]`.
///
/// Machine-readable JSON goes to stdout; human-readable tables go to stderr.
#[derive(Parser, Debug)]
#[command(name = "zm-forms", version)]
struct Cli {
    /// Seed for every randomized command.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Only emit JSON; suppress the human-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Group-ring arithmetic on JSON elements read from stdin.
    Ring(cmd::ring::Args),
    /// Hyperbolic-form evaluation on JSON vectors and matrices read from stdin.
    Form(cmd::form::Args),
    /// Lagrangian complements.
    #[command(subcommand)]
    Lagrangian(cmd::lagrangian::Command),
    /// Steenrod squares and the spectral-sequence report.
    #[command(subcommand)]
    Ahss(cmd::ahss::Command),
    /// Existence and classification of free actions.
    Census(cmd::census::Args),
    /// Run the seeded invariant suites.
    Selftest(cmd::selftest::Args),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot configure {jobs} workers: {e}");
            return ExitCode::from(1);
        }
    }
    let out = cmd::Output { json_only: cli.json };
    let result = match cli.command {
        Command::Ring(args) => cmd::ring::run(args, &out),
        Command::Form(args) => cmd::form::run(args, &out),
        Command::Lagrangian(c) => cmd::lagrangian::run(c, cli.seed, &out),
        Command::Ahss(c) => cmd::ahss::run(c, &out),
        Command::Census(args) => cmd::census::run(args, &out),
        Command::Selftest(args) => cmd::selftest::run(args, cli.seed, &out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            out.error(&e);
            ExitCode::from(1)
        }
    }
}
