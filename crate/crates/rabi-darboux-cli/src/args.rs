//! Command-line surface. Most numeric options are optional at the parser
//! level; unset values are filled from the config file and finally from the
//! built-in defaults in [`crate::commands`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Two-level-atom drive engineering toolkit: closed-form and integrated
/// occupation traces, drive/detuning laws, identity verification, and
/// parameter sweeps, all emitted as plot-ready CSV.
#[derive(Debug, Parser)]
#[command(name = "rabi-darboux", version, max_term_width = 100)]
pub struct Cli {
    /// Plain-text `key = value` defaults; explicit flags win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Constant-drive occupation probability in closed form.
    Rabi(RabiArgs),
    /// Integrate the two-level system under a chosen drive law.
    Simulate(SimulateArgs),
    /// Closed-form solution for an engineered drive (no integration).
    Transform(TransformArgs),
    /// Running-average detuning that realizes a drive law.
    Detuning(DetuningArgs),
    /// Emit the CSV data behind the published figures.
    Figure(FigureArgs),
    /// Run the identity suite and closed-form/ODE cross checks.
    Verify(VerifyArgs),
    /// Tabulate oscillation statistics over parameter lists.
    Sweep(SweepArgs),
}

/// Drive families shared by `simulate` and `detuning`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DriveKind {
    /// Constant level f0.
    Constant,
    /// The singularity-free pulse f0 - 4 f0 / (1 + 4 f0^2 t^2).
    Monotone,
    /// The periodic family f0 + 2 varpi^2 / (R cos(2 varpi t + 2a) - f0).
    Oscillatory,
    /// Cubic-spline interpolation of a two-column `t,f` CSV.
    Tabulated,
}

/// Phase parameter: a literal number, or `special` for the value that joins
/// the oscillatory family onto the monotone one as varpi -> 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseArg {
    Value(f64),
    Special,
}

pub fn parse_phase(s: &str) -> Result<PhaseArg, String> {
    if s.eq_ignore_ascii_case("special") {
        return Ok(PhaseArg::Special);
    }
    s.parse::<f64>()
        .map(PhaseArg::Value)
        .map_err(|_| format!("expected a number or `special`, got `{s}`"))
}

impl std::str::FromStr for PhaseArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_phase(s)
    }
}

#[derive(Debug, Clone, Args)]
pub struct CouplingArgs {
    /// Constant drive level f0 (half the initial detuning scale).
    #[arg(long)]
    pub f0: Option<f64>,

    /// Coupling strength xi; half the resonant Rabi frequency.
    #[arg(long, conflicts_with = "omega0")]
    pub xi: Option<f64>,

    /// Fast frequency scale Omega0; implies xi = sqrt(Omega0^2 - f0^2).
    #[arg(long)]
    pub omega0: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// End of the uniform time grid [0, t1].
    #[arg(long)]
    pub t1: Option<f64>,

    /// Number of grid samples, endpoints included.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RabiArgs {
    #[command(flatten)]
    pub coupling: CouplingArgs,

    #[command(flatten)]
    pub grid: GridArgs,

    /// Also integrate the system and emit a `p_ode` comparison column.
    #[arg(long)]
    pub with_ode: bool,

    /// Integrator relative tolerance (used with --with-ode).
    #[arg(long)]
    pub tol: Option<f64>,

    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Drive family to integrate under.
    #[arg(long, value_enum)]
    pub drive: DriveKind,

    #[command(flatten)]
    pub coupling: CouplingArgs,

    #[command(flatten)]
    pub grid: GridArgs,

    /// Seed frequency varpi of the oscillatory drive (0 < varpi < f0).
    #[arg(long)]
    pub varpi: Option<f64>,

    /// Oscillatory drive phase; a number or `special`.
    #[arg(long, value_parser = parse_phase)]
    pub a: Option<PhaseArg>,

    /// Two-column `t,f` CSV for the tabulated drive.
    #[arg(long, value_name = "FILE")]
    pub table: Option<PathBuf>,

    /// Integrator relative tolerance.
    #[arg(long)]
    pub tol: Option<f64>,

    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[command(flatten)]
    pub coupling: CouplingArgs,

    #[command(flatten)]
    pub grid: GridArgs,

    /// Seed frequency varpi; omit for the monotone-limit seed.
    #[arg(long)]
    pub varpi: Option<f64>,

    /// Oscillatory seed phase; a number or `special`.
    #[arg(long, value_parser = parse_phase)]
    pub a: Option<PhaseArg>,

    /// Offset B of the linear seed At + B in the monotone limit.
    #[arg(long)]
    pub b: Option<f64>,

    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DetuningArgs {
    /// Drive family whose detuning to reconstruct.
    #[arg(long, value_enum)]
    pub drive: DriveKind,

    /// Constant drive level f0.
    #[arg(long)]
    pub f0: Option<f64>,

    #[command(flatten)]
    pub grid: GridArgs,

    /// Seed frequency varpi of the oscillatory drive.
    #[arg(long)]
    pub varpi: Option<f64>,

    /// Oscillatory drive phase; a number or `special`.
    #[arg(long, value_parser = parse_phase)]
    pub a: Option<PhaseArg>,

    /// Two-column `t,f` CSV for the tabulated drive.
    #[arg(long, value_name = "FILE")]
    pub table: Option<PathBuf>,

    /// Even number (>= 8) of quadrature subdivisions per grid cell.
    #[arg(long)]
    pub refinement: Option<usize>,

    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureId {
    Fig1a,
    Fig1b,
    Fig2a,
    Fig2b,
    Fig3,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Which figure's data to emit.
    #[arg(value_enum)]
    pub id: FigureId,

    /// Directory for the per-curve CSV files (created if missing).
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Number of randomized transform seeds in the identity suite.
    #[arg(long)]
    pub seed_count: Option<usize>,

    /// RNG seed for the randomized suite.
    #[arg(long)]
    pub rng_seed: Option<u64>,

    /// Perturb the transform matrix by this amount; a nonzero value must
    /// make the intertwining check fail (self-test of non-vacuity).
    #[arg(long, value_name = "EPS")]
    pub inject_fault: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated seed frequencies.
    #[arg(long, value_delimiter = ',', required = true)]
    pub varpi_list: Vec<f64>,

    /// Comma-separated phases; entries may be numbers or `special`.
    #[arg(long, value_delimiter = ',', required = true, value_parser = parse_phase)]
    pub a_list: Vec<PhaseArg>,

    /// Comma-separated fast frequency scales Omega0.
    #[arg(long, value_delimiter = ',', required = true)]
    pub omega0_list: Vec<f64>,

    /// Constant drive level f0.
    #[arg(long)]
    pub f0: Option<f64>,

    #[command(flatten)]
    pub grid: GridArgs,

    /// Worker threads; defaults to RABI_DARBOUX_JOBS, then all cores.
    #[arg(long)]
    pub jobs: Option<usize>,

    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
