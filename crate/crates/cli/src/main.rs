mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit codes: 0 ok, 2 config error, 3 numeric precondition failure,
/// 4 verification failure.
pub const EXIT_CONFIG: u8 = 2;
pub const EXIT_NUMERIC: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "anisowave",
    about = "Plane-wave propagation in anisotropic lossy or active media",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args)]
pub struct CommonArgs {
    /// Path to the TOML run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
pub struct PropagateArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Final time of the sample grid (overrides the config).
    #[arg(long = "t-max")]
    t_max: Option<f64>,
    /// Grid spacing (overrides the config).
    #[arg(long)]
    dt: Option<f64>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Optional config carrying a [verify] section with defaults.
    #[arg(long)]
    config: Option<PathBuf>,
    /// RNG seed for the random-media draws.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random instances.
    #[arg(long)]
    instances: Option<usize>,
    /// Corrupt the tolerances to exercise the failure path.
    #[arg(long, hide = true)]
    inject_failure: bool,
}

#[derive(Args)]
pub struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Preset parameter to sweep.
    #[arg(long)]
    param: String,
    /// Sweep range LO:HI:STEP (inclusive endpoints).
    #[arg(long, allow_hyphen_values = true)]
    range: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify the configured medium and report its spectral data.
    Classify(CommonArgs),
    /// Evolve the configured initial data over a time grid.
    Propagate(PropagateArgs),
    /// List the time-harmonic plane-wave modes.
    Modes(CommonArgs),
    /// Cross-check the closed-form pipeline against the numerical oracles.
    Verify(VerifyArgs),
    /// Sweep one preset parameter and classify each point.
    Sweep(SweepArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Classify(args) => commands::classify::run(&args),
        Cmd::Propagate(args) => commands::propagate::run(&args),
        Cmd::Modes(args) => commands::modes::run(&args),
        Cmd::Verify(args) => commands::verify::run(&args),
        Cmd::Sweep(args) => commands::sweep::run(&args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(commands::exit_code_for(&err))
        }
    }
}
