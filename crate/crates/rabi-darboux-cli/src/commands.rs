//! Resolution of merged options into library calls, and the non-figure,
//! non-sweep commands.

use std::path::Path;

use rabi_darboux::darboux::{p1_closed_form, special_phase_a, transformed_solution, TransformSeed};
use rabi_darboux::observables::detuning_trace_refined;
use rabi_darboux::susy::{identity_sweep, intertwining_residual_perturbed};
use rabi_darboux::twolevel::{
    evolve, probability, rabi_probability, DriveParams, DriveProfile, SpinorState, TimeGrid, Trace,
};

use crate::args::{
    DetuningArgs, DriveKind, PhaseArg, RabiArgs, SimulateArgs, TransformArgs, VerifyArgs,
};
use crate::config::ConfigFile;
use crate::csvout;
use crate::error::CliError;

pub const DEFAULT_F0: f64 = 1.0;
pub const DEFAULT_T1: f64 = 40.0;
pub const DEFAULT_N: usize = 4001;
pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_REFINEMENT: usize = 8;
pub const DEFAULT_SEED_COUNT: usize = 100;
pub const DEFAULT_RNG_SEED: u64 = 0x5eed;

const SQRT3: f64 = 1.732050807568877293527446341505872367_f64;

/// Derives the coupling from exactly one of `xi`/`omega0`.
pub fn resolve_coupling(f0: f64, xi: Option<f64>, omega0: Option<f64>) -> Result<f64, CliError> {
    match (xi, omega0) {
        (Some(_), Some(_)) => Err(CliError::Usage("give exactly one of --xi and --omega0".into())),
        (None, None) => Err(CliError::Usage(
            "one of --xi or --omega0 (flag or config entry) is required".into(),
        )),
        (Some(xi), None) => {
            if !xi.is_finite() || xi <= 0.0 {
                return Err(CliError::Usage(format!("--xi must be positive, got {xi}")));
            }
            Ok(xi)
        }
        (None, Some(omega0)) => {
            if !omega0.is_finite() || omega0 <= f0.abs() {
                return Err(CliError::Usage(format!(
                    "--omega0 must exceed |f0| = {}, got {omega0}",
                    f0.abs()
                )));
            }
            Ok((omega0 * omega0 - f0 * f0).sqrt())
        }
    }
}

/// Turns a phase argument into a number, resolving `special` for the given
/// seed parameters. A missing argument means phase zero.
pub fn resolve_phase(a: Option<PhaseArg>, f0: f64, varpi: f64) -> Result<f64, CliError> {
    match a {
        None => Ok(0.0),
        Some(PhaseArg::Value(v)) => Ok(v),
        Some(PhaseArg::Special) => Ok(special_phase_a(f0, varpi)?),
    }
}

fn fill_coupling(
    cfg: &ConfigFile,
    xi: &mut Option<f64>,
    omega0: &mut Option<f64>,
) -> Result<(), CliError> {
    // The pair is taken from the file only when the command line set neither,
    // so a flag overrides either file entry.
    if xi.is_none() && omega0.is_none() {
        cfg.fill(xi, "xi")?;
        cfg.fill(omega0, "omega0")?;
        if cfg.has("xi") && cfg.has("omega0") {
            return Err(CliError::Usage(
                "config file sets both xi and omega0; keep exactly one".into(),
            ));
        }
    }
    Ok(())
}

fn fill_phase(cfg: &ConfigFile, a: &mut Option<PhaseArg>) -> Result<(), CliError> {
    if a.is_none() {
        if let Some(raw) = cfg.get::<String>("a")? {
            *a = Some(
                crate::args::parse_phase(&raw)
                    .map_err(|e| CliError::Usage(format!("config key `a`: {e}")))?,
            );
        }
    }
    Ok(())
}

pub fn grid_from(t1: Option<f64>, n: Option<usize>) -> Result<TimeGrid, CliError> {
    Ok(TimeGrid::new(0.0, t1.unwrap_or(DEFAULT_T1), n.unwrap_or(DEFAULT_N))?)
}

/// Reads a two-column `t,f` CSV (header required) as a tabulated drive.
pub fn load_table(path: &Path) -> Result<(Vec<f64>, Vec<f64>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == "t,f" => {}
        _ => {
            return Err(CliError::Usage(format!("{}: expected header line `t,f`", path.display())))
        }
    }
    let mut times = Vec::new();
    let mut values = Vec::new();
    for (lineno, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let (t, f) = match (fields.next(), fields.next(), fields.next()) {
            (Some(t), Some(f), None) => (t.trim(), f.trim()),
            _ => {
                return Err(CliError::Usage(format!(
                    "{}, line {}: expected two comma-separated fields",
                    path.display(),
                    lineno + 1
                )))
            }
        };
        let parse = |s: &str| {
            s.parse::<f64>().map_err(|_| {
                CliError::Usage(format!(
                    "{}, line {}: `{s}` is not a number",
                    path.display(),
                    lineno + 1
                ))
            })
        };
        times.push(parse(t)?);
        values.push(parse(f)?);
    }
    Ok((times, values))
}

pub fn build_drive(
    kind: DriveKind,
    f0: f64,
    varpi: Option<f64>,
    a: Option<PhaseArg>,
    table: Option<&Path>,
) -> Result<DriveProfile, CliError> {
    match kind {
        DriveKind::Constant => Ok(DriveProfile::constant(f0)?),
        DriveKind::Monotone => Ok(DriveProfile::monotone_limit(f0)?),
        DriveKind::Oscillatory => {
            let varpi = varpi
                .ok_or_else(|| CliError::Usage("the oscillatory drive needs --varpi".into()))?;
            let a = resolve_phase(a, f0, varpi)?;
            Ok(DriveProfile::oscillatory(f0, varpi, a)?)
        }
        DriveKind::Tabulated => {
            let path = table
                .ok_or_else(|| CliError::Usage("the tabulated drive needs --table FILE".into()))?;
            let (times, values) = load_table(path)?;
            Ok(DriveProfile::tabulated(times, values)?)
        }
    }
}

const STATE_HEADER: [&str; 7] = ["t", "re_a1", "im_a1", "re_a2", "im_a2", "p", "norm"];

fn write_state_trace(out: Option<&Path>, trace: &Trace<SpinorState>) -> Result<(), CliError> {
    let mut sink = csvout::sink(out)?;
    csvout::write_table(
        &mut sink,
        &STATE_HEADER,
        trace.iter().map(|(t, s)| {
            vec![t, s.a1.re, s.a1.im, s.a2.re, s.a2.im, s.a2.norm_sqr(), s.norm_sqr()]
        }),
    )
}

pub fn cmd_rabi(mut args: RabiArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    cfg.fill(&mut args.coupling.f0, "f0")?;
    fill_coupling(cfg, &mut args.coupling.xi, &mut args.coupling.omega0)?;
    cfg.fill(&mut args.grid.t1, "t1")?;
    cfg.fill(&mut args.grid.n, "n")?;
    cfg.fill(&mut args.tol, "tol")?;

    let f0 = args.coupling.f0.unwrap_or(DEFAULT_F0);
    let xi = resolve_coupling(f0, args.coupling.xi, args.coupling.omega0)?;
    let grid = grid_from(args.grid.t1, args.grid.n)?;

    let times = grid.times();
    let closed: Vec<f64> = times.iter().map(|&t| rabi_probability(xi, f0, t)).collect();

    let mut sink = csvout::sink(args.out.as_deref())?;
    if args.with_ode {
        let params = DriveParams::new(xi, DriveProfile::constant(f0)?)?;
        let trace =
            evolve(&params, &SpinorState::ground(), &grid, args.tol.unwrap_or(DEFAULT_TOL))?;
        let ode = probability(&trace)?;
        csvout::write_table(
            &mut sink,
            &["t", "p", "p_ode"],
            times.iter().zip(&closed).zip(ode.values()).map(|((&t, &p), &q)| vec![t, p, q]),
        )
    } else {
        csvout::write_table(
            &mut sink,
            &["t", "p"],
            times.iter().zip(&closed).map(|(&t, &p)| vec![t, p]),
        )
    }
}

pub fn cmd_simulate(mut args: SimulateArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    cfg.fill(&mut args.coupling.f0, "f0")?;
    fill_coupling(cfg, &mut args.coupling.xi, &mut args.coupling.omega0)?;
    cfg.fill(&mut args.grid.t1, "t1")?;
    cfg.fill(&mut args.grid.n, "n")?;
    cfg.fill(&mut args.varpi, "varpi")?;
    fill_phase(cfg, &mut args.a)?;
    cfg.fill(&mut args.tol, "tol")?;

    let f0 = args.coupling.f0.unwrap_or(DEFAULT_F0);
    let xi = resolve_coupling(f0, args.coupling.xi, args.coupling.omega0)?;
    let drive = build_drive(args.drive, f0, args.varpi, args.a, args.table.as_deref())?;
    let grid = grid_from(args.grid.t1, args.grid.n)?;

    let params = DriveParams::new(xi, drive)?;
    let trace = evolve(&params, &SpinorState::ground(), &grid, args.tol.unwrap_or(DEFAULT_TOL))?;
    write_state_trace(args.out.as_deref(), &trace)
}

pub fn cmd_transform(mut args: TransformArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    cfg.fill(&mut args.coupling.f0, "f0")?;
    fill_coupling(cfg, &mut args.coupling.xi, &mut args.coupling.omega0)?;
    cfg.fill(&mut args.grid.t1, "t1")?;
    cfg.fill(&mut args.grid.n, "n")?;
    cfg.fill(&mut args.varpi, "varpi")?;
    fill_phase(cfg, &mut args.a)?;
    cfg.fill(&mut args.b, "b")?;

    let f0 = args.coupling.f0.unwrap_or(DEFAULT_F0);
    let xi = resolve_coupling(f0, args.coupling.xi, args.coupling.omega0)?;
    let seed = match args.varpi {
        Some(varpi) => {
            if args.b.is_some() {
                return Err(CliError::Usage(
                    "--b shapes the monotone seed; omit it together with --varpi".into(),
                ));
            }
            TransformSeed::oscillatory(f0, varpi, resolve_phase(args.a, f0, varpi)?)?
        }
        None => {
            if args.a.is_some() {
                return Err(CliError::Usage(
                    "--a shapes the oscillatory seed; it needs --varpi".into(),
                ));
            }
            TransformSeed::monotone(f0, args.b.unwrap_or(1.0))?
        }
    };
    let grid = grid_from(args.grid.t1, args.grid.n)?;
    let trace = transformed_solution(&seed, xi, &SpinorState::ground(), &grid)?;
    write_state_trace(args.out.as_deref(), &trace)
}

pub fn cmd_detuning(mut args: DetuningArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    cfg.fill(&mut args.f0, "f0")?;
    cfg.fill(&mut args.grid.t1, "t1")?;
    cfg.fill(&mut args.grid.n, "n")?;
    cfg.fill(&mut args.varpi, "varpi")?;
    fill_phase(cfg, &mut args.a)?;
    cfg.fill(&mut args.refinement, "refinement")?;

    let f0 = args.f0.unwrap_or(DEFAULT_F0);
    let drive = build_drive(args.drive, f0, args.varpi, args.a, args.table.as_deref())?;
    let grid = grid_from(args.grid.t1, args.grid.n)?;
    let trace =
        detuning_trace_refined(&drive, &grid, args.refinement.unwrap_or(DEFAULT_REFINEMENT))?;

    let mut sink = csvout::sink(args.out.as_deref())?;
    csvout::write_table(&mut sink, &["t", "delta"], trace.iter().map(|(t, &d)| vec![t, d]))
}

struct Check {
    name: &'static str,
    value: f64,
    tolerance: f64,
    detail: String,
}

impl Check {
    fn passed(&self) -> bool {
        self.value <= self.tolerance
    }
}

fn sup_against(trace: &Trace<f64>, reference: impl Fn(f64) -> f64) -> (f64, f64) {
    let mut worst = (0.0_f64, 0.0_f64);
    for (t, v) in trace.iter() {
        let dev = (v - reference(t)).abs();
        if dev > worst.0 {
            worst = (dev, t);
        }
    }
    worst
}

pub fn cmd_verify(mut args: VerifyArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    cfg.fill(&mut args.seed_count, "seed-count")?;
    cfg.fill(&mut args.rng_seed, "rng-seed")?;
    let seed_count = args.seed_count.unwrap_or(DEFAULT_SEED_COUNT);
    let rng_seed = args.rng_seed.unwrap_or(DEFAULT_RNG_SEED);

    let identity_grid = TimeGrid::new(0.0, 10.0, 201)?;
    let records = identity_sweep(seed_count, rng_seed, &identity_grid)?;
    let mut checks = Vec::new();

    let describe = |r: &rabi_darboux::susy::SweepRecord, at: f64| {
        format!(
            "seed f0={:.6}, varpi={:.6}, a={:.6}, xi={:.6} at t={:.4}",
            r.f0, r.varpi, r.a, r.xi, at
        )
    };

    {
        let fault = args.inject_fault.unwrap_or(0.0);
        let mut worst = (f64::NEG_INFINITY, String::new());
        for record in &records {
            let (value, at) = if fault != 0.0 {
                let seed = TransformSeed::oscillatory(record.f0, record.varpi, record.a)?;
                let report = intertwining_residual_perturbed(
                    &seed,
                    record.xi,
                    &identity_grid,
                    fault.into(),
                )?;
                (report.max_abs, report.at_time)
            } else {
                (record.intertwining.max_abs, record.intertwining.at_time)
            };
            if value > worst.0 {
                worst = (value, describe(record, at));
            }
        }
        checks.push(Check {
            name: "intertwining",
            value: worst.0,
            tolerance: 1e-8,
            detail: worst.1,
        });
    }

    for (name, pick) in [("factorization", 0usize), ("pseudo-adjointness", 1usize)] {
        let mut worst = (f64::NEG_INFINITY, String::new());
        for record in &records {
            let report = if pick == 0 { &record.factorization } else { &record.pseudo_adjoint };
            if report.max_abs > worst.0 {
                worst = (report.max_abs, describe(record, report.at_time));
            }
        }
        checks.push(Check { name, value: worst.0, tolerance: 1e-8, detail: worst.1 });
    }

    {
        let grid = TimeGrid::new(0.0, 10.0, 1001)?;
        let params = DriveParams::new(SQRT3, DriveProfile::constant(1.0)?)?;
        let trace = evolve(&params, &SpinorState::ground(), &grid, 1e-10)?;
        let p = probability(&trace)?;
        let (value, at) = sup_against(&p, |t| rabi_probability(SQRT3, 1.0, t));
        checks.push(Check {
            name: "constant drive: ode vs closed form",
            value,
            tolerance: 1e-8,
            detail: format!("f0=1, xi=sqrt(3), worst at t={at:.4}"),
        });
    }

    let rational = |t: f64| 3.0 * t * t / (1.0 + 4.0 * t * t);
    let long_grid = TimeGrid::new(0.0, 40.0, 4001)?;
    {
        let seed = TransformSeed::monotone(1.0, 1.0)?;
        let trace = transformed_solution(&seed, SQRT3, &SpinorState::ground(), &long_grid)?;
        let p = probability(&trace)?;
        let (value, at) = sup_against(&p, rational);
        checks.push(Check {
            name: "monotone family: transform vs rational form",
            value,
            tolerance: 1e-6,
            detail: format!("worst at t={at:.4}"),
        });

        let params = DriveParams::new(SQRT3, DriveProfile::monotone_limit(1.0)?)?;
        let ode = probability(&evolve(&params, &SpinorState::ground(), &long_grid, 1e-10)?)?;
        let (value, at) = sup_against(&ode, rational);
        checks.push(Check {
            name: "monotone family: ode vs rational form",
            value,
            tolerance: 1e-6,
            detail: format!("worst at t={at:.4}"),
        });

        let p100 = p1_closed_form(SQRT3, 1.0, 100.0);
        checks.push(Check {
            name: "monotone family: asymptote 3/4",
            value: (p100 - 0.75).abs(),
            tolerance: 1e-3,
            detail: format!("P(100) = {p100:.8}"),
        });
    }

    {
        let seed = TransformSeed::oscillatory(1.0, 0.25, 0.015)?;
        let closed =
            probability(&transformed_solution(&seed, SQRT3, &SpinorState::ground(), &long_grid)?)?;
        let params = DriveParams::new(SQRT3, DriveProfile::oscillatory(1.0, 0.25, 0.015)?)?;
        let ode = probability(&evolve(&params, &SpinorState::ground(), &long_grid, 1e-10)?)?;
        let mut worst = (0.0_f64, 0.0_f64);
        for ((t, a), b) in closed.iter().zip(ode.values()) {
            let dev = (a - b).abs();
            if dev > worst.0 {
                worst = (dev, t);
            }
        }
        checks.push(Check {
            name: "oscillatory family: transform vs ode",
            value: worst.0,
            tolerance: 1e-6,
            detail: format!("varpi=1/4, a=0.015, worst at t={:.4}", worst.1),
        });
    }

    println!(
        "identity suite: {seed_count} seeds, rng seed {rng_seed}, grid [0, 10] x 201{}",
        match args.inject_fault {
            Some(eps) if eps != 0.0 => format!(", injected fault {eps:e}"),
            _ => String::new(),
        }
    );
    println!("{:<44} {:>13} {:>11}  status", "check", "max residual", "tolerance");
    for check in &checks {
        println!(
            "{:<44} {:>13.3e} {:>11.1e}  {}",
            check.name,
            check.value,
            check.tolerance,
            if check.passed() { "PASS" } else { "FAIL" }
        );
    }
    let failures: Vec<&Check> = checks.iter().filter(|c| !c.passed()).collect();
    for failure in &failures {
        println!("failed: {} — {}", failure.name, failure.detail);
    }
    if failures.is_empty() {
        println!("result: PASS ({}/{} checks)", checks.len(), checks.len());
        Ok(())
    } else {
        println!("result: FAIL ({}/{} checks passed)", checks.len() - failures.len(), checks.len());
        Err(CliError::Numeric(format!(
            "{} of {} verification checks failed",
            failures.len(),
            checks.len()
        )))
    }
}
