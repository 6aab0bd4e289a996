//! Command-line front end for the two-level drive-engineering library:
//! closed-form and integrated traces, drive/detuning laws, figure data,
//! identity verification, and parameter sweeps, all as deterministic CSV.

pub mod args;
pub mod commands;
pub mod config;
pub mod csvout;
pub mod error;
pub mod figures;
pub mod sweep;

pub use args::Cli;
pub use error::CliError;

pub fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = config::load_optional(cli.config.as_deref())?;
    match cli.command {
        args::Command::Rabi(a) => commands::cmd_rabi(a, &cfg),
        args::Command::Simulate(a) => commands::cmd_simulate(a, &cfg),
        args::Command::Transform(a) => commands::cmd_transform(a, &cfg),
        args::Command::Detuning(a) => commands::cmd_detuning(a, &cfg),
        args::Command::Figure(a) => figures::cmd_figure(a),
        args::Command::Verify(a) => commands::cmd_verify(a, &cfg),
        args::Command::Sweep(a) => sweep::cmd_sweep(a, &cfg),
    }
}
