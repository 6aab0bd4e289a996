//! Parameter tables and CSV emission for the published figures. Every
//! probability curve is the closed-form transformed solution started from
//! the ground state; detuning curves come from the running-average
//! quadrature. One CSV file per curve.

use std::path::{Path, PathBuf};

use rabi_darboux::darboux::{transformed_solution, TransformSeed};
use rabi_darboux::observables::detuning_trace_refined;
use rabi_darboux::twolevel::{probability, DriveProfile, SpinorState, TimeGrid};

use crate::args::{FigureArgs, FigureId};
use crate::commands::{DEFAULT_N, DEFAULT_REFINEMENT, DEFAULT_T1};
use crate::csvout;
use crate::error::CliError;

const FIG_F0: f64 = 1.0;
const FIG_OMEGA0: f64 = 2.0;

enum Curve {
    /// Occupation probability of the oscillatory transform family.
    Probability { varpi: f64, a: f64, omega0: f64 },
    /// Detuning reconstructed from the oscillatory drive law.
    Detuning { varpi: f64, a: f64 },
}

struct CurveDef {
    file_tag: &'static str,
    column: &'static str,
    curve: Curve,
}

fn curves(id: FigureId) -> Vec<CurveDef> {
    let p = |file_tag, varpi, a, omega0| CurveDef {
        file_tag,
        column: "p1",
        curve: Curve::Probability { varpi, a, omega0 },
    };
    let d = |file_tag, varpi, a| CurveDef {
        file_tag,
        column: "delta1",
        curve: Curve::Detuning { varpi, a },
    };
    match id {
        FigureId::Fig1a => vec![
            p("varpi_1over4", 0.25, 0.015, FIG_OMEGA0),
            p("varpi_1over6", 1.0 / 6.0, 0.015, FIG_OMEGA0),
        ],
        FigureId::Fig1b => vec![
            d("varpi_1over4", 0.25, 0.015),
            d("varpi_1over6", 1.0 / 6.0, 0.015),
            d("limit", 1e-3, 1e-6),
        ],
        FigureId::Fig2a => vec![
            p("a_0", 0.2, 0.0, FIG_OMEGA0),
            p("a_0.02", 0.2, 0.02, FIG_OMEGA0),
            p("a_0.08", 0.2, 0.08, FIG_OMEGA0),
        ],
        FigureId::Fig2b => vec![d("a_0", 0.2, 0.0), d("a_0.02", 0.2, 0.02), d("a_0.08", 0.2, 0.08)],
        FigureId::Fig3 => vec![
            p("omega0_2", 0.2, 0.0, 2.0),
            p("omega0_1.6", 0.2, 0.0, 1.6),
            p("omega0_1.2", 0.2, 0.0, 1.2),
        ],
    }
}

fn id_tag(id: FigureId) -> &'static str {
    match id {
        FigureId::Fig1a => "fig1a",
        FigureId::Fig1b => "fig1b",
        FigureId::Fig2a => "fig2a",
        FigureId::Fig2b => "fig2b",
        FigureId::Fig3 => "fig3",
    }
}

fn emit_curve(def: &CurveDef, grid: &TimeGrid, path: &Path) -> Result<(), CliError> {
    let values = match def.curve {
        Curve::Probability { varpi, a, omega0 } => {
            let xi = (omega0 * omega0 - FIG_F0 * FIG_F0).sqrt();
            let seed = TransformSeed::oscillatory(FIG_F0, varpi, a)?;
            let trace = transformed_solution(&seed, xi, &SpinorState::ground(), grid)?;
            probability(&trace)?
        }
        Curve::Detuning { varpi, a } => {
            let drive = DriveProfile::oscillatory(FIG_F0, varpi, a)?;
            detuning_trace_refined(&drive, grid, DEFAULT_REFINEMENT)?
        }
    };
    let mut sink = csvout::sink(Some(path))?;
    csvout::write_table(&mut sink, &["t", def.column], values.iter().map(|(t, &v)| vec![t, v]))
}

/// Writes every curve of the figure into `out_dir`, returning the paths.
pub fn emit_figure(id: FigureId, out_dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(out_dir)
        .map_err(|e| CliError::Io(format!("{}: {e}", out_dir.display())))?;
    let grid = TimeGrid::new(0.0, DEFAULT_T1, DEFAULT_N)?;
    let mut written = Vec::new();
    for def in curves(id) {
        let path = out_dir.join(format!("{}_{}.csv", id_tag(id), def.file_tag));
        emit_curve(&def, &grid, &path)?;
        written.push(path);
    }
    Ok(written)
}

pub fn cmd_figure(args: FigureArgs) -> Result<(), CliError> {
    for path in emit_figure(args.id, &args.out_dir)? {
        println!("wrote {}", path.display());
    }
    Ok(())
}
