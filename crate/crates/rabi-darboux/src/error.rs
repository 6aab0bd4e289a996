//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failure modes of constructors, evolution, transformation, and analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coupling strength xi must be positive and finite (got {0})")]
    NonPositiveCoupling(f64),
    #[error("oscillatory drive requires 0 < varpi < f0 (got f0 = {f0}, varpi = {varpi})")]
    OscillatoryDomain { f0: f64, varpi: f64 },
    #[error("monotone-limit drive requires nonzero finite f0 (got {0})")]
    ZeroF0(f64),
    #[error("drive parameter {name} must be finite (got {value})")]
    NonFinite { name: &'static str, value: f64 },
    #[error("tabulated drive needs at least two samples (got {0})")]
    TabulatedTooShort(usize),
    #[error("tabulated drive has {times} times but {values} values")]
    TabulatedLengthMismatch { times: usize, values: usize },
    #[error("tabulated drive times must be strictly increasing (violated at index {index})")]
    TabulatedNotIncreasing { index: usize },
    #[error("time grid requires t1 > t0 and n >= 2 (got t0 = {t0}, t1 = {t1}, n = {n})")]
    InvalidGrid { t0: f64, t1: f64, n: usize },
    #[error("tolerance must lie in [1e-13, 1e-3] (got {0})")]
    ToleranceOutOfRange(f64),
    #[error("step size underflow at t = {t}; the drive is too stiff or discontinuous there")]
    StepSizeUnderflow { t: f64 },
    #[error("trace times must be strictly increasing (violated at index {index})")]
    TraceNotIncreasing { index: usize },
    #[error("trace has {times} times but {values} values")]
    TraceLengthMismatch { times: usize, values: usize },
    #[error("trace is empty")]
    EmptyTrace,
    #[error("state norm vanished at t = {t}; no occupation probability is defined")]
    ZeroNormState { t: f64 },
    #[error("transformation seed requires a nonzero linear-growth amplitude")]
    ZeroSeedAmplitude,
    #[error("transformation eigenvalue must be purely imaginary (got real part {re})")]
    RealEigenvalue { re: f64 },
    #[error("transformation eigenvalue iR requires 0 < R <= f0 (got R = {r}, f0 = {f0})")]
    EigenvalueOutOfRange { r: f64, f0: f64 },
    #[error("transformed drive has a pole at t = {t}")]
    PoleAt { t: f64 },
    #[error("transformed basis solutions are degenerate at t = {t}")]
    DegenerateBasis { t: f64 },
    #[error("running-average detuning needs a grid starting at t = 0 (got t0 = {t0})")]
    GridMustStartAtZero { t0: f64 },
    #[error("quadrature refinement must be an even factor of at least 8 (got {0})")]
    InvalidRefinement(usize),
    #[error("trace too short for frequency analysis: {reason}")]
    InsufficientSpan { reason: &'static str },
    #[error("trace sampling must be uniform for frequency analysis")]
    NonUniformSampling,
    #[error(
        "analysis window must cover at least two samples and fit inside the trace (got {window})"
    )]
    InvalidWindow { window: f64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
