//! `kchain` — command-line harness over `kchain-core`.
//!
//! Subcommands: `table` reproduces the vendored reference tables of chain
//! indices (flagging known misprints), `verify` sweeps the subchain family
//! checking every oracle against its closed form plus the spectral identity
//! suite, `spectrum` prints the block decomposition of one family member,
//! and `ratios` reports the convergence of Kf/W and Kf*/Gut toward 1/4.
//!
//! Exit status: 0 all checks pass, 1 verification mismatch, 2 usage error.

mod config;
mod ratios;
mod render;
mod spectrum;
mod tables;
mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(name = "kchain", version, about = "Exact invariants of linear crossed polyomino chains")]
struct Cli {
    /// Config file with key=value lines (lowest-precedence settings).
    /// Defaults to $KCHAIN_CONFIG when set.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a chain index, comparing against the vendored reference
    /// table and flagging its known misprints.
    Table(TableArgs),
    /// Sweep the subchain family: oracles vs closed forms, spectral
    /// identities, and misprint demonstrations.
    Verify(VerifyArgs),
    /// Print the Laplacian block decomposition of one family member.
    Spectrum(SpectrumArgs),
    /// Convergence of Kf/W and Kf*/Gut toward 1/4.
    Ratios(RatiosArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Kirchhoff index.
    Kf,
    /// Multiplicative degree-Kirchhoff index.
    Kfstar,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum SweepMode {
    /// Every deletion set of every size (capped at n <= 8).
    Exhaustive,
    /// A seeded uniform sample of deletion sets per chain length.
    Sample,
}

#[derive(Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    kind: TableKind,
    #[arg(long, default_value_t = 1)]
    from: usize,
    #[arg(long, default_value_t = 50)]
    to: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Render cells exactly as the reference table prints them (rows
    /// 1..=50 only), misprints included.
    #[arg(long)]
    as_printed: bool,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Largest chain length to sweep (default 8).
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, value_enum)]
    mode: Option<SweepMode>,
    /// RNG seed for sample mode (default 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    /// Deletion sets drawn per chain length in sample mode (default 64).
    #[arg(long)]
    sample_size: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
pub struct SpectrumArgs {
    /// Chain length.
    #[arg(long)]
    n: usize,
    /// Comma-separated vertical-edge indices to delete (each in 1..=n+1).
    #[arg(long, value_delimiter = ',')]
    delete: Vec<usize>,
}

#[derive(Args)]
pub struct RatiosArgs {
    /// Comma-separated chain lengths.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    /// Use the published Wiener expression in the Kf/W column instead of
    /// the corrected one.
    #[arg(long)]
    as_printed: bool,
}

/// A usage-class failure: reported on stderr, exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl From<kchain_core::Error> for UsageError {
    fn from(e: kchain_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, UsageError> {
    let settings = config::Settings::resolve(cli.config.as_deref())?;
    match cli.command {
        Command::Table(args) => tables::run(&args),
        Command::Verify(args) => verify::run(&args, &settings),
        Command::Spectrum(args) => spectrum::run(&args),
        Command::Ratios(args) => ratios::run(&args),
    }
}
