//! Darboux (intertwining) construction of exactly solvable drives.
//!
//! Writing the two-level equations of motion as h₀Ψ = ξΨ with
//! h₀ = γ∂t + V₀, γ = iσₓ, V₀ = i f₀ σ_y, a first-order intertwiner
//! L = ∂t − W maps solutions of the constant-drive problem to solutions of a
//! deformed problem h₁ = γ∂t + V₁ with drive f₁(t) = f₀ + Δf(t), at the same
//! coupling ξ. The transformation is generated by a seed solution of the
//! constant-drive problem at the purely imaginary eigenvalue λ = iR; its
//! amplitude ratio is parameterized by a single real function q(t) obeying
//!
//! ```text
//! q̇ + 2Rq − f₀(1 + q²) = 0,   R² = f₀² − ϖ²
//! ```
//!
//! Linearizing with q = (Rψ − ψ̇)/(f₀ψ) turns the flow into ψ̈ + ϖ²ψ = 0, so
//! every seed is either oscillatory (0 < ϖ < f₀) or linear in time (ϖ = 0).
//! All quantities here are evaluated through the homogeneous pair
//! N = Rψ − ψ̇, D = f₀ψ, which keeps them finite at the zeros of ψ where q
//! itself has poles.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::twolevel::{
    constant_drive_state, schrodinger_rhs, DriveProfile, SpinorState, TimeGrid, Trace,
};

/// Seed of the intertwining transformation.
///
/// A seed fixes f₀ > 0, the eigenvalue magnitude R = √(f₀² − ϖ²) > 0, and
/// the linearized solution ψ:
///
/// * ϖ > 0: ψ(t) = (A/ϖ) sin(ϖt + a + b) with the mixing angle b fixed by
///   sin 2b = ϖ/f₀, cos 2b = R/f₀;
/// * ϖ = 0: ψ(t) = At + B with the restriction A = 2Bf₀, which is exactly
///   the ϖ → 0 limit of the oscillatory family at the matching phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformSeed {
    f0: f64,
    r: f64,
    varpi: f64,
    a: f64,
    amp: f64,
    offset: f64,
}

impl TransformSeed {
    /// Oscillatory seed; requires 0 < ϖ < f₀ and finite phase a.
    pub fn oscillatory(f0: f64, varpi: f64, a: f64) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::NonFinite { name: "a", value: a });
        }
        if !f0.is_finite() || !varpi.is_finite() || varpi <= 0.0 || varpi >= f0 {
            return Err(Error::OscillatoryDomain { f0, varpi });
        }
        let r = (f0 * f0 - varpi * varpi).sqrt();
        Ok(Self { f0, r, varpi, a, amp: 1.0, offset: 0.0 })
    }

    /// Linear seed (ϖ = 0, R = f₀); requires f₀ > 0 and a nonzero offset B.
    /// The growth amplitude is fixed to A = 2Bf₀.
    pub fn monotone(f0: f64, offset_b: f64) -> Result<Self> {
        if !f0.is_finite() || f0 <= 0.0 {
            return Err(Error::OscillatoryDomain { f0, varpi: 0.0 });
        }
        if !offset_b.is_finite() || offset_b == 0.0 {
            return Err(Error::ZeroSeedAmplitude);
        }
        Ok(Self { f0, r: f0, varpi: 0.0, a: 0.0, amp: 2.0 * offset_b * f0, offset: offset_b })
    }

    /// Seed from an explicit transformation eigenvalue λ = iR. Any nonzero
    /// real part is rejected: only purely imaginary eigenvalues keep the
    /// transformed drive real. Requires 0 < R ≤ f₀; R = f₀ selects the
    /// linear seed (with unit offset), otherwise the phase `a` applies.
    pub fn from_eigenvalue(f0: f64, lambda: C64, a: f64) -> Result<Self> {
        if lambda.re != 0.0 {
            return Err(Error::RealEigenvalue { re: lambda.re });
        }
        let r = lambda.im;
        if !f0.is_finite() || !r.is_finite() || r <= 0.0 || r > f0 {
            return Err(Error::EigenvalueOutOfRange { r, f0 });
        }
        if r == f0 {
            Self::monotone(f0, 1.0)
        } else {
            Self::oscillatory(f0, (f0 * f0 - r * r).sqrt(), a)
        }
    }

    pub fn f0(&self) -> f64 {
        self.f0
    }

    /// Eigenvalue magnitude R (the eigenvalue itself is iR).
    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn varpi(&self) -> f64 {
        self.varpi
    }

    pub fn phase_a(&self) -> f64 {
        self.a
    }

    pub fn is_monotone(&self) -> bool {
        self.varpi == 0.0
    }

    /// Mixing angle b = ½ atan2(ϖ, R), zero for the linear seed.
    pub fn phase_b(&self) -> f64 {
        if self.is_monotone() {
            0.0
        } else {
            0.5 * self.varpi.atan2(self.r)
        }
    }

    /// ψ(t) and ψ̇(t) of the linearized seed equation ψ̈ + ϖ²ψ = 0.
    pub fn psi_pair(&self, t: f64) -> (f64, f64) {
        if self.is_monotone() {
            (self.amp * t + self.offset, self.amp)
        } else {
            let phase = self.varpi * t + self.a + self.phase_b();
            ((self.amp / self.varpi) * phase.sin(), self.amp * phase.cos())
        }
    }

    /// Evaluator for the transformation ratio q and derived quantities.
    pub fn q_trajectory(&self) -> QTrajectory {
        QTrajectory { seed: *self }
    }

    /// The drive profile this seed generates, suitable for direct numerical
    /// evolution alongside the closed-form transformed solution.
    pub fn drive_profile(&self) -> DriveProfile {
        if self.is_monotone() {
            DriveProfile::MonotoneLimit { f0: self.f0 }
        } else {
            DriveProfile::Oscillatory { f0: self.f0, varpi: self.varpi, a: self.a }
        }
    }
}

/// The transformation ratio q = N/D held in homogeneous form
/// N = Rψ − ψ̇, D = f₀ψ, which never vanishes simultaneously.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QTrajectory {
    seed: TransformSeed,
}

impl QTrajectory {
    pub fn seed(&self) -> &TransformSeed {
        &self.seed
    }

    /// Homogeneous pair (N, D) at time t.
    pub fn numden(&self, t: f64) -> (f64, f64) {
        let (psi, psi_dot) = self.seed.psi_pair(t);
        (self.seed.r * psi - psi_dot, self.seed.f0 * psi)
    }

    /// Time derivatives (Ṅ, Ḋ), using ψ̈ = −ϖ²ψ.
    pub fn numden_dot(&self, t: f64) -> (f64, f64) {
        let (psi, psi_dot) = self.seed.psi_pair(t);
        let vp = self.seed.varpi;
        (self.seed.r * psi_dot + vp * vp * psi, self.seed.f0 * psi_dot)
    }

    /// q(t) = N/D; infinite at the isolated zeros of ψ.
    pub fn q(&self, t: f64) -> f64 {
        let (n, d) = self.numden(t);
        n / d
    }

    /// Residual of the flow equation q̇ + 2Rq − f₀(1 + q²), normalized by
    /// 1 + q² so that sample points near the poles of q stay meaningful. In
    /// homogeneous form this is
    /// (ṄD − NḊ + 2R·ND − f₀(N² + D²)) / (N² + D²), identically zero for an
    /// exact seed.
    pub fn riccati_residual(&self, t: f64) -> f64 {
        let (n, d) = self.numden(t);
        let (nd, dd) = self.numden_dot(t);
        let m = n * n + d * d;
        (nd * d - n * dd + 2.0 * self.seed.r * n * d - self.seed.f0 * m) / m
    }

    /// Drive deformation Δf(t) = 4R·ND/(N² + D²) − 2f₀, bounded by
    /// −2f₀ ± 2R and finite for all t.
    pub fn delta_f(&self, t: f64) -> f64 {
        let (n, d) = self.numden(t);
        4.0 * self.seed.r * n * d / (n * n + d * d) - 2.0 * self.seed.f0
    }

    /// Superpotential entry w₁(t) = −i f₀ + R (D + iN)²/(N² + D²).
    pub fn w1(&self, t: f64) -> C64 {
        let (n, d) = self.numden(t);
        let z = C64::new(d, n);
        -C64::i() * self.seed.f0 + self.seed.r * z * z / z.norm_sqr()
    }

    /// Analytic ẇ₁(t) = 2iR (ṄD − NḊ)(D + iN)²/(N² + D²)².
    pub fn w1_dot(&self, t: f64) -> C64 {
        let (n, d) = self.numden(t);
        let (nd, dd) = self.numden_dot(t);
        let z = C64::new(d, n);
        let m = z.norm_sqr();
        C64::new(0.0, 2.0 * self.seed.r * (nd * d - n * dd)) * z * z / (m * m)
    }
}

/// Diagonal superpotential W = diag(w₁, w₂) of the intertwiner L = ∂t − W;
/// the off-diagonal entries vanish and w₂ = conj(w₁) by construction, which
/// is what keeps the transformed drive real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WMatrix {
    w1: C64,
}

impl WMatrix {
    pub fn w1(&self) -> C64 {
        self.w1
    }

    pub fn w2(&self) -> C64 {
        self.w1.conj()
    }

    /// W·Ψ for a state Ψ.
    pub fn apply(&self, state: &SpinorState) -> SpinorState {
        SpinorState::new(self.w1() * state.a1, self.w2() * state.a2)
    }
}

/// Superpotential at time t for a seed.
pub fn w_matrix(seed: &TransformSeed, t: f64) -> WMatrix {
    WMatrix { w1: seed.q_trajectory().w1(t) }
}

/// Monotone drive law f₁(t) = f₀ − 4f₀/(1 + 4f₀²t²), the ϖ = 0 member of
/// the transformed family. Asymptotically f₁ → f₀ while f₁(0) = −3f₀.
pub fn f1_monotone(f0: f64, t: f64) -> f64 {
    f0 - 4.0 * f0 / (1.0 + 4.0 * f0 * f0 * t * t)
}

/// Oscillatory drive law
/// f₁(t) = f₀ + 2ϖ²/(R cos(2ϖt + 2a) − f₀), R = √(f₀² − ϖ²),
/// periodic with period π/ϖ and singularity-free since R < f₀.
pub fn f1_oscillatory(f0: f64, varpi: f64, a: f64, t: f64) -> f64 {
    let r = (f0 * f0 - varpi * varpi).sqrt();
    f0 + 2.0 * varpi * varpi / (r * (2.0 * varpi * t + 2.0 * a).cos() - f0)
}

/// General linear-seed drive law for ψ = At + B without the A = 2Bf₀
/// restriction:
///
/// ```text
/// f₁(t) = f₀ − 2A²f₀ / (2A²f₀²t² − 2Af₀(A − 2Bf₀)t + A² − 2ABf₀ + 2B²f₀²)
/// ```
///
/// Reports a pole when the denominator vanishes (for real A, B this occurs
/// only in the degenerate case A = B = 0, where it vanishes identically).
pub fn f1_general(f0: f64, a_amp: f64, b_amp: f64, t: f64) -> Result<f64> {
    let den = 2.0 * a_amp * a_amp * f0 * f0 * t * t
        - 2.0 * a_amp * f0 * (a_amp - 2.0 * b_amp * f0) * t
        + a_amp * a_amp
        - 2.0 * a_amp * b_amp * f0
        + 2.0 * b_amp * b_amp * f0 * f0;
    if den == 0.0 {
        return Err(Error::PoleAt { t });
    }
    Ok(f0 - 2.0 * a_amp * a_amp * f0 / den)
}

/// Phase that joins the oscillatory family continuously onto the monotone
/// one: a = arctan(ϖ/2f₀) − ½ arctan(ϖ/R). With this phase the oscillatory
/// drive tends to the monotone drive as ϖ → 0.
pub fn special_phase_a(f0: f64, varpi: f64) -> Result<f64> {
    if !f0.is_finite() || !varpi.is_finite() || varpi <= 0.0 || varpi >= f0 {
        return Err(Error::OscillatoryDomain { f0, varpi });
    }
    let r = (f0 * f0 - varpi * varpi).sqrt();
    Ok((varpi / (2.0 * f0)).atan() - 0.5 * (varpi / r).atan())
}

/// Applies the intertwiner L = ∂t − W to a constant-drive solution value:
/// Φ(t) = Ψ̇(t) − W(t)Ψ(t), with Ψ̇ taken from the equations of motion at
/// drive f₀ (no numerical differentiation). `state` must be the value at
/// time t of a solution of the constant-drive problem at coupling ξ.
pub fn apply_intertwiner(
    seed: &TransformSeed,
    xi: f64,
    state: &SpinorState,
    t: f64,
) -> SpinorState {
    let psi_dot = schrodinger_rhs(seed.f0, xi, state);
    let w = w_matrix(seed, t);
    let ws = w.apply(state);
    SpinorState::new(psi_dot.a1 - ws.a1, psi_dot.a2 - ws.a2)
}

/// Closed-form solution of the transformed problem h₁Φ = ξΦ on `grid`,
/// matching `initial` at the first grid time. Both constant-drive basis
/// solutions are pushed through the intertwiner and the pair is recombined
/// once, at the grid start, by a 2×2 solve; no ODE integration is involved.
/// For real ξ the transformed pair is never degenerate (the kernel of L sits
/// at the imaginary eigenvalues ±iR), so the solve fails only on numerically
/// invalid input.
pub fn transformed_solution(
    seed: &TransformSeed,
    xi: f64,
    initial: &SpinorState,
    grid: &TimeGrid,
) -> Result<Trace<SpinorState>> {
    if !xi.is_finite() || xi <= 0.0 {
        return Err(Error::NonPositiveCoupling(xi));
    }
    let basis = [SpinorState::ground(), SpinorState::excited()];
    let phi = |which: usize, t: f64| -> SpinorState {
        let psi = constant_drive_state(xi, seed.f0, &basis[which], t);
        apply_intertwiner(seed, xi, &psi, t)
    };

    let t0 = grid.t0();
    let p0 = phi(0, t0);
    let p1 = phi(1, t0);
    let det = p0.a1 * p1.a2 - p0.a2 * p1.a1;
    let scale = p0.norm_sqr().max(p1.norm_sqr()).max(f64::MIN_POSITIVE);
    if det.norm() <= 1e-12 * scale {
        return Err(Error::DegenerateBasis { t: t0 });
    }
    let c0 = (initial.a1 * p1.a2 - initial.a2 * p1.a1) / det;
    let c1 = (p0.a1 * initial.a2 - p0.a2 * initial.a1) / det;

    let times = grid.times();
    let values = times
        .iter()
        .map(|&t| {
            let u = phi(0, t);
            let v = phi(1, t);
            SpinorState::new(c0 * u.a1 + c1 * v.a1, c0 * u.a2 + c1 * v.a2)
        })
        .collect();
    Trace::new(times, values, "state")
}

/// Closed-form upper-level occupation under the monotone drive
/// [`f1_monotone`], started from the ground state, for arbitrary coupling:
///
/// ```text
/// P₁(t) = ξ²/(Ω₀⁶(1 + 4f₀²t²)) · [ 16f₀⁴Ω₀²t² cos²Ω₀t
///         + 4f₀²Ω₀t(ξ² − 3f₀²) sin 2Ω₀t
///         + (4f₀²Ω₀⁴t² + (ξ² − 3f₀²)²) sin²Ω₀t ],   Ω₀² = f₀² + ξ²
/// ```
///
/// At ξ² = 3f₀² the bracket collapses algebraically to 64f₀⁶t²/(…), giving
/// the monotone profile 3f₀²t²/(1 + 4f₀²t²) with no oscillating remainder;
/// no special casing is involved.
pub fn p1_closed_form(xi: f64, f0: f64, t: f64) -> f64 {
    let xi2 = xi * xi;
    let f02 = f0 * f0;
    let om2 = f02 + xi2;
    let om = om2.sqrt();
    let (s, c) = (om * t).sin_cos();
    let g = xi2 - 3.0 * f02;
    let bracket = 16.0 * f02 * f02 * om2 * t * t * c * c
        + 4.0 * f02 * om * t * g * 2.0 * s * c
        + (4.0 * f02 * om2 * om2 * t * t + g * g) * s * s;
    xi2 * bracket / (om2 * om2 * om2 * (1.0 + 4.0 * f02 * t * t))
}
