//! Exactly solvable time-dependent drives for a two-level system.
//!
//! A two-level atom in the rotating wave approximation with a real drive
//! f(t) and coupling ξ obeys a first-order system for the level amplitudes
//! (A₁, A₂). For constant f = f₀ the occupation oscillates at the
//! generalized Rabi frequency Ω² = f₀² + ξ² and never exceeds ξ²/Ω². This
//! crate constructs deformed drives f₁(t) = f₀ + Δf(t) by a Darboux
//! (intertwining) transformation of the constant-drive problem, for which
//! the evolution stays exactly solvable: the closed-form solutions show
//! monotone population transfer through ξ²/Ω² at the critical coupling
//! ξ² = 3f₀², and slow/fast two-scale oscillations that can hold the
//! upper-level population above 1/2 over whole slow periods.
//!
//! Module map:
//!
//! * [`twolevel`]: state and drive types, equations of motion, constant-drive
//!   closed forms, adaptive numerical evolution.
//! * [`darboux`]: the transformation itself: seeds, the ratio flow q(t), the
//!   drive deformation Δf, superpotential, intertwiner, and closed-form
//!   transformed solutions.
//! * [`susy`]: pointwise verification of the intertwining, factorization,
//!   and pseudo-adjointness identities, plus a randomized seed sweep.
//! * [`observables`]: running-average detuning reconstruction and
//!   peak-detection analysis of probability traces.

pub mod darboux;
mod error;
mod integrate;
pub mod observables;
mod spline;
pub mod susy;
pub mod twolevel;

pub use error::{Error, Result};
pub use twolevel::{DriveParams, DriveProfile, SpinorState, TimeGrid, Trace};

pub use darboux::TransformSeed;

pub use num_complex;
