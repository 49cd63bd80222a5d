use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod expr;
mod output;
mod reproduce;

use commands::{divisor, git, hypersurface, m2};
use output::{CliResult, Output};

/// Exact computations on symmetric divisors of M06, GIT quotients of point
/// configurations, the Segre cubic and Igusa quartic, and M2.
#[derive(Debug, Parser)]
#[command(name = "m06", version, about)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for commands that sample at random.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Divisor classes, intersection numbers and chambers.
    Divisor(divisor::DivisorArgs),
    /// Stability, strata and degenerations of point configurations.
    Git(git::GitArgs),
    /// The Segre cubic and the Igusa quartic.
    Hypersurface(hypersurface::HypersurfaceArgs),
    /// Divisors on M2 and their models.
    M2(m2::M2Args),
    /// Recompute every headline result and compare with its known value.
    PaperReport,
}

fn dispatch(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Divisor(a) => divisor::run(a),
        Command::Git(a) => git::run(a),
        Command::Hypersurface(a) => hypersurface::run(a, cli.seed),
        Command::M2(a) => m2::run(a),
        Command::PaperReport => Ok(reproduce::run(cli.seed)),
    }
}

fn render(out: &Output, json: bool) -> String {
    if json {
        serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
    } else {
        out.text.clone()
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{}", render(&out, cli.json));
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
