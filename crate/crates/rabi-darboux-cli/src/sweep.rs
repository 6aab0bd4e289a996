//! Parameter sweep over (varpi, a, omega0): evaluates the closed-form
//! transformed trace at each point and tabulates oscillation statistics.
//! Points run on a worker pool; rows are emitted in input order regardless
//! of completion order.

use rayon::prelude::*;

use rabi_darboux::darboux::transformed_solution;
use rabi_darboux::observables::{envelope_minimum, oscillation_frequencies, OscillationAnalysis};
use rabi_darboux::twolevel::{probability, SpinorState, TimeGrid};
use rabi_darboux::{Error, TransformSeed};

use crate::args::{PhaseArg, SweepArgs};
use crate::commands::{grid_from, resolve_phase, DEFAULT_F0};
use crate::config::ConfigFile;
use crate::csvout;
use crate::error::CliError;

pub const MAX_POINTS: usize = 100_000;

pub const SWEEP_HEADER: [&str; 8] =
    ["varpi", "a", "omega0", "xi", "fast", "slow", "fast_amplitude", "envelope_min"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub varpi: f64,
    pub a: f64,
    pub omega0: f64,
    pub xi: f64,
    pub fast: f64,
    pub slow: f64,
    pub fast_amplitude: f64,
    pub envelope_min: f64,
}

impl SweepRow {
    pub fn as_fields(&self) -> Vec<f64> {
        vec![
            self.varpi,
            self.a,
            self.omega0,
            self.xi,
            self.fast,
            self.slow,
            self.fast_amplitude,
            self.envelope_min,
        ]
    }
}

/// Evaluates one sweep point on a grid with the base grid's spacing,
/// lengthened when needed so the trace covers 2.5 slow periods and the
/// last slow period can be sliced off.
pub fn evaluate_point(
    f0: f64,
    varpi: f64,
    a: f64,
    omega0: f64,
    base: &TimeGrid,
) -> Result<SweepRow, CliError> {
    if !omega0.is_finite() || omega0 <= f0.abs() {
        return Err(CliError::Usage(format!(
            "omega0 must exceed |f0| = {}, got {omega0}",
            f0.abs()
        )));
    }
    let xi = (omega0 * omega0 - f0 * f0).sqrt();
    let seed = TransformSeed::oscillatory(f0, varpi, a)?;

    let slow_period = std::f64::consts::PI / varpi;
    let dt = base.dt();
    let samples = ((base.t1().max(2.5 * slow_period) / dt).ceil() as usize).max(base.len() - 1);
    let t1 = dt * samples as f64;
    let grid = TimeGrid::new(0.0, t1, samples + 1)?;

    let trace = transformed_solution(&seed, xi, &SpinorState::ground(), &grid)?;
    let p = probability(&trace)?;

    let (fast, slow, fast_amplitude) = match oscillation_frequencies(&p) {
        Ok(OscillationAnalysis::Oscillating(est)) => (est.fast, est.slow, est.fast_amplitude),
        Ok(OscillationAnalysis::Flat) => (0.0, 0.0, 0.0),
        Err(Error::InsufficientSpan { .. }) => (f64::NAN, f64::NAN, f64::NAN),
        Err(e) => return Err(e.into()),
    };

    let late = p.slice_time(t1 - slow_period, t1)?;
    let stats = envelope_minimum(&late, std::f64::consts::PI / omega0)?;

    Ok(SweepRow { varpi, a, omega0, xi, fast, slow, fast_amplitude, envelope_min: stats.floor })
}

fn worker_count(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(jobs) = flag {
        return Ok(jobs);
    }
    match std::env::var("RABI_DARBOUX_JOBS") {
        Ok(raw) => raw.parse::<usize>().map_err(|_| {
            CliError::Usage(format!(
                "RABI_DARBOUX_JOBS must be a non-negative integer, got `{raw}`"
            ))
        }),
        Err(_) => Ok(0), // let the pool pick available parallelism
    }
}

/// Expands the lists into points (lexicographic, input order preserved) and
/// evaluates them on a worker pool.
pub fn run_sweep(
    f0: f64,
    varpi_list: &[f64],
    a_list: &[PhaseArg],
    omega0_list: &[f64],
    base: &TimeGrid,
    jobs: Option<usize>,
) -> Result<Vec<SweepRow>, CliError> {
    let total = varpi_list
        .len()
        .checked_mul(a_list.len())
        .and_then(|n| n.checked_mul(omega0_list.len()))
        .unwrap_or(usize::MAX);
    if total == 0 {
        return Err(CliError::Usage("sweep lists must be nonempty".into()));
    }
    if total > MAX_POINTS {
        return Err(CliError::Usage(format!(
            "sweep of {total} points exceeds the {MAX_POINTS}-point budget"
        )));
    }

    let mut points = Vec::with_capacity(total);
    for &varpi in varpi_list {
        for &a in a_list {
            let a = resolve_phase(Some(a), f0, varpi)?;
            for &omega0 in omega0_list {
                points.push((varpi, a, omega0));
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count(jobs)?)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot build worker pool: {e}")))?;
    pool.install(|| {
        points
            .par_iter()
            .map(|&(varpi, a, omega0)| evaluate_point(f0, varpi, a, omega0, base))
            .collect()
    })
}

pub fn cmd_sweep(mut args: SweepArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    cfg.fill(&mut args.f0, "f0")?;
    cfg.fill(&mut args.grid.t1, "t1")?;
    cfg.fill(&mut args.grid.n, "n")?;
    cfg.fill(&mut args.jobs, "jobs")?;

    let f0 = args.f0.unwrap_or(DEFAULT_F0);
    let base = grid_from(args.grid.t1, args.grid.n)?;
    let rows = run_sweep(f0, &args.varpi_list, &args.a_list, &args.omega0_list, &base, args.jobs)?;

    let mut sink = csvout::sink(args.out.as_deref())?;
    csvout::write_table(&mut sink, &SWEEP_HEADER, rows.iter().map(|row| row.as_fields()))
}
