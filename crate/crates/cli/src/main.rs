//! `ricci` — discrete curvature of finite simple graphs: per-vertex and
//! global curvature, weak-order values for reflection groups, spectral
//! gaps, isoperimetric verification, and self-check suites.

mod commands;
mod json;

use clap::{Parser, Subcommand, ValueEnum};
use ricci_core::error::Error;
use ricci_core::spectral::DEFAULT_SEED;

#[derive(Parser)]
#[command(
    name = "ricci",
    version,
    about = "Discrete curvature of finite simple graphs",
    long_about = "Computes discrete curvature of finite simple graphs via the minimum \
eigenvalue of a locally assembled matrix, with an exact-arithmetic definitional oracle, \
closed forms for reflection-group weak orders, spectral gaps, and isoperimetric checks."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable table output.
    Table,
    /// Deterministic single-line JSON (byte-identical across runs).
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Per-vertex and global curvature of a graph read from an edge-list file.
    Curvature {
        /// Path to the graph file (one `u v` edge per line, `#` comments).
        file: String,
        /// Cross-check each vertex against the exact-arithmetic oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Weak-order curvature of a reflection group given by a type tag
    /// (e.g. A3, B4, I2:7, ~D4, E6, or a product like A2xA1).
    Coxeter {
        tag: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Laplacian spectrum, spectral gap, and isoperimetric verification.
    Spectral {
        /// Path to the graph file.
        file: String,
        /// Seed for subset sampling on large graphs (env RICCI_SEED overrides).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run self-check suites: operators, bounds, coxeter, isoperimetry, or all.
    Verify {
        scope: String,
        /// Seed for sampled checks (env RICCI_SEED overrides).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Curvature bounds for a graph file, or the isoperimetric profile of
    /// a finite reflection-group type tag.
    Bounds {
        /// Graph file path or a single finite type tag.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

/// Seed precedence: RICCI_SEED environment variable, then --seed, then
/// the built-in default.
fn resolve_seed(flag: Option<u64>) -> Result<u64, Error> {
    match std::env::var("RICCI_SEED") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Invalid(format!("RICCI_SEED must be an unsigned integer, got {text:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(flag.unwrap_or(DEFAULT_SEED)),
        Err(e) => Err(Error::Invalid(format!("cannot read RICCI_SEED: {e}"))),
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 1,
        Error::Invalid(_) | Error::UnknownVertex(_) | Error::Domain(_) | Error::Resource(_) => 2,
        Error::Numeric { .. } | Error::Internal(_) => 3,
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Curvature {
            file,
            oracle,
            format,
        } => commands::cmd_curvature(&file, oracle, format),
        Command::Coxeter { tag, format } => commands::cmd_coxeter(&tag, format),
        Command::Spectral { file, seed, format } => {
            commands::cmd_spectral(&file, resolve_seed(seed)?, format)
        }
        Command::Verify {
            scope,
            seed,
            format,
        } => commands::cmd_verify(&scope, resolve_seed(seed)?, format),
        Command::Bounds { input, format } => commands::cmd_bounds(&input, format),
    }
}

/// Restore default SIGPIPE handling so that piping output into a pager
/// or `head` ends the process quietly instead of panicking on a closed
/// stdout.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code_for(&e));
        }
    }
}
