//! Two-level system in the rotating wave approximation: amplitude state,
//! drive profiles, equations of motion, the constant-drive closed form, and
//! adaptive numerical evolution.
//!
//! The amplitudes (A₁, A₂) of the lower and upper level obey
//!
//! ```text
//! i Ȧ₁ − f(t) A₁ = ξ A₂
//! i Ȧ₂ + f(t) A₂ = ξ A₁
//! ```
//!
//! where ξ > 0 is the coupling strength and f(t) is half the instantaneous
//! detuning law. For real f the evolution is unitary, so |A₁|² + |A₂|² is
//! conserved and |A₂|² of a normalized state is the upper-level occupation
//! probability.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::integrate;
use crate::spline::CubicSpline;

/// Complex amplitude pair (A₁, A₂).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorState {
    pub a1: C64,
    pub a2: C64,
}

impl SpinorState {
    pub fn new(a1: C64, a2: C64) -> Self {
        Self { a1, a2 }
    }

    /// Lower level fully occupied: (1, 0).
    pub fn ground() -> Self {
        Self::new(C64::new(1.0, 0.0), C64::new(0.0, 0.0))
    }

    /// Upper level fully occupied: (0, 1).
    pub fn excited() -> Self {
        Self::new(C64::new(0.0, 0.0), C64::new(1.0, 0.0))
    }

    /// |A₁|² + |A₂|².
    pub fn norm_sqr(&self) -> f64 {
        self.a1.norm_sqr() + self.a2.norm_sqr()
    }

    /// |A₂|² / (|A₁|² + |A₂|²), or `None` for the zero state.
    pub fn excited_probability(&self) -> Option<f64> {
        let n = self.norm_sqr();
        if n == 0.0 {
            None
        } else {
            Some(self.a2.norm_sqr() / n)
        }
    }
}

/// Tabulated drive samples interpolated by a clamped cubic spline and held
/// constant outside the tabulated range.
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedDrive {
    spline: CubicSpline,
}

impl TabulatedDrive {
    /// Validates that times are strictly increasing, lengths match, and at
    /// least two samples are present, then fits the interpolating spline.
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        Ok(Self { spline: CubicSpline::new(times, values)? })
    }

    pub fn times(&self) -> &[f64] {
        self.spline.xs()
    }

    pub fn values(&self) -> &[f64] {
        self.spline.ys()
    }

    pub fn value(&self, t: f64) -> f64 {
        self.spline.value(t)
    }
}

/// Drive law f(t) entering the equations of motion.
///
/// `MonotoneLimit` and `Oscillatory` are the two exactly solvable families
/// produced by the intertwining construction in [`crate::darboux`]; their
/// values delegate to the closed-form drive laws there, so the profile seen
/// by the integrator and the transformation agree by construction.
#[derive(Debug, Clone, PartialEq)]
pub enum DriveProfile {
    /// f(t) = f₀.
    Constant { f0: f64 },
    /// f(t) = f₀ − 4f₀ / (1 + 4f₀²t²); requires f₀ ≠ 0.
    MonotoneLimit { f0: f64 },
    /// f(t) = f₀ + 2ϖ² / (R cos(2ϖt + 2a) − f₀) with R = √(f₀² − ϖ²);
    /// requires 0 < ϖ < f₀.
    Oscillatory { f0: f64, varpi: f64, a: f64 },
    /// Spline-interpolated samples.
    Tabulated(TabulatedDrive),
}

impl DriveProfile {
    pub fn constant(f0: f64) -> Result<Self> {
        if !f0.is_finite() {
            return Err(Error::NonFinite { name: "f0", value: f0 });
        }
        Ok(Self::Constant { f0 })
    }

    pub fn monotone_limit(f0: f64) -> Result<Self> {
        if !f0.is_finite() || f0 == 0.0 {
            return Err(Error::ZeroF0(f0));
        }
        Ok(Self::MonotoneLimit { f0 })
    }

    pub fn oscillatory(f0: f64, varpi: f64, a: f64) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::NonFinite { name: "a", value: a });
        }
        if !f0.is_finite() || !varpi.is_finite() || varpi <= 0.0 || varpi >= f0 {
            return Err(Error::OscillatoryDomain { f0, varpi });
        }
        Ok(Self::Oscillatory { f0, varpi, a })
    }

    pub fn tabulated(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        Ok(Self::Tabulated(TabulatedDrive::new(times, values)?))
    }

    /// Re-checks the variant invariants; the named constructors enforce them.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Constant { f0 } => {
                Self::constant(f0)?;
            }
            Self::MonotoneLimit { f0 } => {
                Self::monotone_limit(f0)?;
            }
            Self::Oscillatory { f0, varpi, a } => {
                Self::oscillatory(f0, varpi, a)?;
            }
            Self::Tabulated(_) => {}
        }
        Ok(())
    }

    /// Drive value f(t).
    pub fn value(&self, t: f64) -> f64 {
        match self {
            Self::Constant { f0 } => *f0,
            Self::MonotoneLimit { f0 } => crate::darboux::f1_monotone(*f0, t),
            Self::Oscillatory { f0, varpi, a } => {
                crate::darboux::f1_oscillatory(*f0, *varpi, *a, t)
            }
            Self::Tabulated(table) => table.value(t),
        }
    }
}

/// Coupling strength plus drive law.
#[derive(Debug, Clone, PartialEq)]
pub struct DriveParams {
    xi: f64,
    drive: DriveProfile,
}

impl DriveParams {
    /// Requires ξ > 0 and a valid drive profile.
    pub fn new(xi: f64, drive: DriveProfile) -> Result<Self> {
        if !xi.is_finite() || xi <= 0.0 {
            return Err(Error::NonPositiveCoupling(xi));
        }
        drive.validate()?;
        Ok(Self { xi, drive })
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn drive(&self) -> &DriveProfile {
        &self.drive
    }
}

/// Uniform output grid of `n` times from `t0` to `t1` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t0: f64,
    t1: f64,
    n: usize,
}

impl TimeGrid {
    // negated comparison so NaN endpoints fail validation
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn new(t0: f64, t1: f64, n: usize) -> Result<Self> {
        if !(t1 > t0) || n < 2 || !t0.is_finite() || !t1.is_finite() {
            return Err(Error::InvalidGrid { t0, t1, n });
        }
        Ok(Self { t0, t1, n })
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn t1(&self) -> f64 {
        self.t1
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dt(&self) -> f64 {
        (self.t1 - self.t0) / (self.n - 1) as f64
    }

    /// k-th grid time; the endpoints are exact.
    pub fn time(&self, k: usize) -> f64 {
        if k == self.n - 1 {
            self.t1
        } else {
            self.t0 + k as f64 * self.dt()
        }
    }

    pub fn times(&self) -> Vec<f64> {
        (0..self.n).map(|k| self.time(k)).collect()
    }
}

/// Sampled quantity on a strictly increasing time axis, tagged with a label
/// naming what the samples are.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace<T> {
    times: Vec<f64>,
    values: Vec<T>,
    kind: String,
}

impl<T> Trace<T> {
    // negated comparison so NaN times fail validation
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn new(times: Vec<f64>, values: Vec<T>, kind: impl Into<String>) -> Result<Self> {
        if times.is_empty() {
            return Err(Error::EmptyTrace);
        }
        if times.len() != values.len() {
            return Err(Error::TraceLengthMismatch { times: times.len(), values: values.len() });
        }
        for (i, w) in times.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(Error::TraceNotIncreasing { index: i + 1 });
            }
        }
        Ok(Self { times, values, kind: kind.into() })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &T)> {
        self.times.iter().copied().zip(self.values.iter())
    }

    /// Pointwise map preserving the time axis.
    pub fn map<U>(&self, kind: impl Into<String>, mut f: impl FnMut(f64, &T) -> U) -> Trace<U> {
        Trace {
            times: self.times.clone(),
            values: self.iter().map(|(t, v)| f(t, v)).collect(),
            kind: kind.into(),
        }
    }
}

impl<T: Clone> Trace<T> {
    /// Sub-trace with times in [lo, hi]; errors if that window is empty.
    pub fn slice_time(&self, lo: f64, hi: f64) -> Result<Trace<T>> {
        let start = self.times.partition_point(|&t| t < lo);
        let end = self.times.partition_point(|&t| t <= hi);
        if start >= end {
            return Err(Error::EmptyTrace);
        }
        Ok(Trace {
            times: self.times[start..end].to_vec(),
            values: self.values[start..end].to_vec(),
            kind: self.kind.clone(),
        })
    }
}

/// Time derivative (Ȧ₁, Ȧ₂) of the equations of motion at drive value `f_at_t`.
pub fn schrodinger_rhs(f_at_t: f64, xi: f64, state: &SpinorState) -> SpinorState {
    let i = C64::i();
    SpinorState::new(
        -i * (f_at_t * state.a1 + xi * state.a2),
        i * (f_at_t * state.a2 - xi * state.a1),
    )
}

/// Upper-level occupation for a constant drive started from the ground
/// state: P(t) = ξ²/Ω² · sin²(Ωt) with Ω² = f₀² + ξ².
pub fn rabi_probability(xi: f64, f0: f64, t: f64) -> f64 {
    let omega_sq = f0 * f0 + xi * xi;
    if omega_sq == 0.0 {
        return 0.0;
    }
    let s = (omega_sq.sqrt() * t).sin();
    xi * xi / omega_sq * s * s
}

/// Exact constant-drive propagation of an arbitrary initial state:
///
/// ```text
/// A₁(t) = (cos Ωt − i f₀ sin(Ωt)/Ω) A₁(0) − i ξ sin(Ωt)/Ω · A₂(0)
/// A₂(t) = −i ξ sin(Ωt)/Ω · A₁(0) + (cos Ωt + i f₀ sin(Ωt)/Ω) A₂(0)
/// ```
pub fn constant_drive_state(xi: f64, f0: f64, initial: &SpinorState, t: f64) -> SpinorState {
    let omega = (f0 * f0 + xi * xi).sqrt();
    let (c, s) =
        if omega == 0.0 { (1.0, t) } else { ((omega * t).cos(), (omega * t).sin() / omega) };
    let i = C64::i();
    SpinorState::new(
        (c - i * f0 * s) * initial.a1 - i * xi * s * initial.a2,
        -i * xi * s * initial.a1 + (c + i * f0 * s) * initial.a2,
    )
}

/// Integrates the equations of motion over `grid` with an embedded adaptive
/// Runge-Kutta 5(4) pair, local error per step bounded by `tol`, and dense
/// output at the grid times. Returns the state trace; fails with
/// [`Error::StepSizeUnderflow`] if the drive forces the step below the
/// floating-point floor (reporting the time), and rejects `tol` outside
/// [1e-13, 1e-3].
pub fn evolve(
    params: &DriveParams,
    initial: &SpinorState,
    grid: &TimeGrid,
    tol: f64,
) -> Result<Trace<SpinorState>> {
    if !(1e-13..=1e-3).contains(&tol) {
        return Err(Error::ToleranceOutOfRange(tol));
    }
    let times = grid.times();
    let xi = params.xi();
    let drive = params.drive();
    let states = integrate::integrate_to_grid(
        |t, y: &integrate::State| {
            let d = schrodinger_rhs(drive.value(t), xi, &SpinorState::new(y[0], y[1]));
            [d.a1, d.a2]
        },
        [initial.a1, initial.a2],
        &times,
        tol,
    )?;
    let values = states.into_iter().map(|y| SpinorState::new(y[0], y[1])).collect();
    Trace::new(times, values, "state")
}

/// Pointwise |A₂|²/(|A₁|²+|A₂|²) along a state trace; errors at the first
/// zero-norm state so norm drift can never masquerade as a probability.
pub fn probability(trace: &Trace<SpinorState>) -> Result<Trace<f64>> {
    let mut values = Vec::with_capacity(trace.len());
    for (t, s) in trace.iter() {
        match s.excited_probability() {
            Some(p) => values.push(p),
            None => return Err(Error::ZeroNormState { t }),
        }
    }
    Trace::new(trace.times().to_vec(), values, "probability")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT3: f64 = 1.732050807568877293527446341505872367_f64;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn rhs_ground_state_values() {
        let d = schrodinger_rhs(1.0, SQRT3, &SpinorState::ground());
        assert!((d.a1 - c(0.0, -1.0)).norm() <= 1e-15);
        assert!((d.a2 - c(0.0, -SQRT3)).norm() <= 1e-15);
    }

    #[test]
    fn rhs_resonant_symmetric_state() {
        let s = SpinorState::new(
            c(std::f64::consts::FRAC_1_SQRT_2, 0.0),
            c(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        );
        let d = schrodinger_rhs(0.0, 1.0, &s);
        assert!((d.a1 - c(0.0, -std::f64::consts::FRAC_1_SQRT_2)).norm() <= 1e-15);
        assert!((d.a2 - c(0.0, -std::f64::consts::FRAC_1_SQRT_2)).norm() <= 1e-15);
    }

    #[test]
    fn rabi_probability_reference_points() {
        assert_eq!(rabi_probability(SQRT3, 1.0, 0.0), 0.0);
        // xi² /Ω² = 3/4 at the first maximum, reached at Ωt = π/2
        let p = rabi_probability(SQRT3, 1.0, std::f64::consts::FRAC_PI_4);
        assert!((p - 0.75).abs() <= 1e-14);
        // full inversion on resonance
        let p = rabi_probability(1.0, 0.0, std::f64::consts::FRAC_PI_2);
        assert!((p - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn constant_drive_state_satisfies_equations_of_motion() {
        let initial = SpinorState::new(c(0.6, -0.2), c(0.3, 0.7));
        let (xi, f0) = (SQRT3, 1.0);
        let h = 1e-5;
        for k in 0..20 {
            let t = 0.3 * k as f64;
            let plus = constant_drive_state(xi, f0, &initial, t + h);
            let minus = constant_drive_state(xi, f0, &initial, t - h);
            let fd = SpinorState::new(
                (plus.a1 - minus.a1) / (2.0 * h),
                (plus.a2 - minus.a2) / (2.0 * h),
            );
            let rhs = schrodinger_rhs(f0, xi, &constant_drive_state(xi, f0, &initial, t));
            assert!((fd.a1 - rhs.a1).norm() <= 1e-8);
            assert!((fd.a2 - rhs.a2).norm() <= 1e-8);
        }
    }

    #[test]
    fn evolve_constant_drive_matches_closed_form() {
        let params = DriveParams::new(SQRT3, DriveProfile::constant(1.0).unwrap()).unwrap();
        let grid = TimeGrid::new(0.0, 10.0, 501).unwrap();
        let trace = evolve(&params, &SpinorState::ground(), &grid, 1e-10).unwrap();
        let p = probability(&trace).unwrap();
        let mut worst_p: f64 = 0.0;
        let mut worst_s: f64 = 0.0;
        for (k, (t, s)) in trace.iter().enumerate() {
            let exact = constant_drive_state(SQRT3, 1.0, &SpinorState::ground(), t);
            worst_s = worst_s.max((s.a1 - exact.a1).norm().max((s.a2 - exact.a2).norm()));
            worst_p = worst_p.max((p.values()[k] - rabi_probability(SQRT3, 1.0, t)).abs());
        }
        assert!(worst_s <= 1e-8, "state error {worst_s:e}");
        assert!(worst_p <= 1e-8, "probability error {worst_p:e}");
    }

    #[test]
    fn evolve_resonant_half_flop_reaches_upper_level() {
        let params = DriveParams::new(1.0, DriveProfile::constant(0.0).unwrap()).unwrap();
        let grid = TimeGrid::new(0.0, std::f64::consts::FRAC_PI_2, 51).unwrap();
        let trace = evolve(&params, &SpinorState::ground(), &grid, 1e-12).unwrap();
        let last = trace.values().last().unwrap();
        assert!(last.a1.norm() <= 1e-9);
        assert!((last.a2 - c(0.0, -1.0)).norm() <= 1e-9);
    }

    #[test]
    fn evolve_norm_drift_stays_within_budget() {
        let drive = DriveProfile::oscillatory(1.0, 0.25, 0.015).unwrap();
        let params = DriveParams::new(SQRT3, drive).unwrap();
        let grid = TimeGrid::new(0.0, 40.0, 801).unwrap();
        let tol = 1e-10;
        let trace = evolve(&params, &SpinorState::ground(), &grid, tol).unwrap();
        for (_, s) in trace.iter() {
            assert!((s.norm_sqr() - 1.0).abs() <= 100.0 * tol);
        }
    }

    #[test]
    fn evolve_monotone_limit_matches_rational_probability() {
        // at xi² = 3 f₀² the occupation grows monotonically as
        // 3 f₀² t² / (1 + 4 f₀² t²)
        let params = DriveParams::new(SQRT3, DriveProfile::monotone_limit(1.0).unwrap()).unwrap();
        let grid = TimeGrid::new(0.0, 20.0, 801).unwrap();
        let trace = evolve(&params, &SpinorState::ground(), &grid, 1e-10).unwrap();
        let p = probability(&trace).unwrap();
        let mut worst: f64 = 0.0;
        for (t, &v) in p.iter() {
            let exact = 3.0 * t * t / (1.0 + 4.0 * t * t);
            worst = worst.max((v - exact).abs());
        }
        assert!(worst <= 1e-7, "probability error {worst:e}");
    }

    #[test]
    fn liouville_determinant_is_time_independent() {
        let drive = DriveProfile::oscillatory(1.0, 0.25, 0.015).unwrap();
        let params = DriveParams::new(SQRT3, drive).unwrap();
        let grid = TimeGrid::new(0.0, 10.0, 201).unwrap();
        let t1 = evolve(&params, &SpinorState::ground(), &grid, 1e-11).unwrap();
        let t2 = evolve(&params, &SpinorState::excited(), &grid, 1e-11).unwrap();
        let det0 = t1.values()[0].a1 * t2.values()[0].a2 - t1.values()[0].a2 * t2.values()[0].a1;
        for k in 0..grid.len() {
            let det = t1.values()[k].a1 * t2.values()[k].a2 - t1.values()[k].a2 * t2.values()[k].a1;
            assert!((det - det0).norm() / det0.norm() <= 1e-8);
        }
    }

    #[test]
    fn tabulated_drive_reproduces_analytic_evolution() {
        let n = 1201;
        let times: Vec<f64> = (0..n).map(|k| 6.0 * k as f64 / (n - 1) as f64).collect();
        let values: Vec<f64> = times.iter().map(|&t| crate::darboux::f1_monotone(1.0, t)).collect();
        let tab = DriveParams::new(SQRT3, DriveProfile::tabulated(times, values).unwrap()).unwrap();
        let exact = DriveParams::new(SQRT3, DriveProfile::monotone_limit(1.0).unwrap()).unwrap();
        let grid = TimeGrid::new(0.0, 6.0, 241).unwrap();
        let p_tab =
            probability(&evolve(&tab, &SpinorState::ground(), &grid, 1e-10).unwrap()).unwrap();
        let p_exact =
            probability(&evolve(&exact, &SpinorState::ground(), &grid, 1e-10).unwrap()).unwrap();
        let mut worst: f64 = 0.0;
        for k in 0..grid.len() {
            worst = worst.max((p_tab.values()[k] - p_exact.values()[k]).abs());
        }
        assert!(worst <= 1e-6, "tabulated-vs-analytic error {worst:e}");
    }

    #[test]
    fn tabulated_near_discontinuity_underflows_step_size() {
        let drive = DriveProfile::tabulated(
            vec![0.0, 0.5 - 1e-9, 0.5 + 1e-9, 1.0],
            vec![0.0, 0.0, 1e150, 1e150],
        )
        .unwrap();
        let params = DriveParams::new(1.0, drive).unwrap();
        let grid = TimeGrid::new(0.0, 1.0, 11).unwrap();
        let res = evolve(&params, &SpinorState::ground(), &grid, 1e-10);
        match res {
            Err(Error::StepSizeUnderflow { t }) => assert!(t.is_finite()),
            other => panic!("expected step underflow, got {other:?}"),
        }
    }

    #[test]
    fn evolve_rejects_out_of_range_tolerance() {
        let params = DriveParams::new(1.0, DriveProfile::constant(0.0).unwrap()).unwrap();
        let grid = TimeGrid::new(0.0, 1.0, 11).unwrap();
        for tol in [1e-14, 1e-2, 0.0, -1.0] {
            assert!(matches!(
                evolve(&params, &SpinorState::ground(), &grid, tol),
                Err(Error::ToleranceOutOfRange(_))
            ));
        }
    }

    #[test]
    fn probability_rejects_zero_norm_state() {
        let zero = SpinorState::new(c(0.0, 0.0), c(0.0, 0.0));
        let trace = Trace::new(vec![0.0, 1.0], vec![SpinorState::ground(), zero], "state").unwrap();
        assert!(matches!(probability(&trace), Err(Error::ZeroNormState { t }) if t == 1.0));
    }

    #[test]
    fn probability_is_norm_insensitive() {
        let s = SpinorState::new(c(0.0, 2.0), c(2.0, 0.0));
        assert!((s.excited_probability().unwrap() - 0.5).abs() <= 1e-15);
    }

    #[test]
    fn drive_constructors_reject_invalid_parameters() {
        assert!(matches!(
            DriveProfile::oscillatory(1.0, 1.5, 0.0),
            Err(Error::OscillatoryDomain { .. })
        ));
        assert!(matches!(
            DriveProfile::oscillatory(1.0, 0.0, 0.0),
            Err(Error::OscillatoryDomain { .. })
        ));
        assert!(matches!(
            DriveProfile::oscillatory(-1.0, 0.5, 0.0),
            Err(Error::OscillatoryDomain { .. })
        ));
        assert!(matches!(DriveProfile::monotone_limit(0.0), Err(Error::ZeroF0(_))));
        assert!(matches!(DriveProfile::constant(f64::NAN), Err(Error::NonFinite { .. })));
        assert!(matches!(
            DriveParams::new(0.0, DriveProfile::constant(1.0).unwrap()),
            Err(Error::NonPositiveCoupling(_))
        ));
        assert!(matches!(
            DriveParams::new(-2.0, DriveProfile::constant(1.0).unwrap()),
            Err(Error::NonPositiveCoupling(_))
        ));
    }

    #[test]
    fn time_grid_validation_and_endpoints() {
        assert!(TimeGrid::new(0.0, 0.0, 10).is_err());
        assert!(TimeGrid::new(1.0, 0.0, 10).is_err());
        assert!(TimeGrid::new(0.0, 1.0, 1).is_err());
        let g = TimeGrid::new(0.0, 0.3, 4).unwrap();
        let ts = g.times();
        assert_eq!(ts.len(), 4);
        assert_eq!(ts[0], 0.0);
        assert_eq!(ts[3], 0.3);
        assert!((g.dt() - 0.1).abs() <= 1e-16);
    }

    #[test]
    fn trace_validation() {
        assert!(matches!(Trace::<f64>::new(vec![], vec![], "x"), Err(Error::EmptyTrace)));
        assert!(matches!(
            Trace::new(vec![0.0, 0.0], vec![1.0, 2.0], "x"),
            Err(Error::TraceNotIncreasing { index: 1 })
        ));
        assert!(matches!(
            Trace::new(vec![0.0, 1.0], vec![1.0], "x"),
            Err(Error::TraceLengthMismatch { .. })
        ));
        let tr = Trace::new(vec![0.0, 1.0, 2.0, 3.0], vec![5.0, 6.0, 7.0, 8.0], "x").unwrap();
        let sl = tr.slice_time(0.5, 2.5).unwrap();
        assert_eq!(sl.times(), &[1.0, 2.0]);
        assert_eq!(sl.values(), &[6.0, 7.0]);
        assert!(tr.slice_time(9.0, 10.0).is_err());
    }
}
