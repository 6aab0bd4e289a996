//! Numerical verification of the operator identities behind the
//! transformation: the intertwining relation, the backward-forward
//! factorization, and pseudo-adjointness of the potentials. All checks are
//! evaluated pointwise on a grid with analytic derivatives only; nothing is
//! differentiated numerically and no superalgebra operators are materialized
//! as matrices.

use num_complex::Complex64 as C64;

use crate::darboux::{w_matrix, QTrajectory, TransformSeed};
use crate::error::{Error, Result};
use crate::twolevel::{constant_drive_state, schrodinger_rhs, SpinorState, TimeGrid};

/// Worst pointwise deviation of one identity over a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    /// Which identity was checked.
    pub identity: &'static str,
    /// Largest absolute component deviation found.
    pub max_abs: f64,
    /// Grid time where the maximum occurred.
    pub at_time: f64,
    /// Grid the identity was scanned on.
    pub grid: TimeGrid,
}

fn max_component(s: &SpinorState) -> f64 {
    s.a1.norm().max(s.a2.norm())
}

/// Ψ, Ψ̇, Ψ̈ of the constant-drive reference solution from the ground state,
/// all from the equations of motion.
fn reference_solution(
    seed: &TransformSeed,
    xi: f64,
    t: f64,
) -> (SpinorState, SpinorState, SpinorState) {
    let psi = constant_drive_state(xi, seed.f0(), &SpinorState::ground(), t);
    let psi_dot = schrodinger_rhs(seed.f0(), xi, &psi);
    let psi_ddot = schrodinger_rhs(seed.f0(), xi, &psi_dot);
    (psi, psi_dot, psi_ddot)
}

/// Φ = Ψ̇ − W'Ψ and Φ̇ = Ψ̈ − ẆΨ − W'Ψ̇ where W' carries an optional
/// constant perturbation of the w₁ entry (so Ẇ is unaffected).
fn intertwined_pair(
    q: &QTrajectory,
    seed: &TransformSeed,
    xi: f64,
    t: f64,
    dw1: C64,
) -> (SpinorState, SpinorState) {
    let (psi, psi_dot, psi_ddot) = reference_solution(seed, xi, t);
    let w1 = q.w1(t) + dw1;
    let w2 = q.w1(t).conj();
    let w1_dot = q.w1_dot(t);
    let w2_dot = w1_dot.conj();
    let phi = SpinorState::new(psi_dot.a1 - w1 * psi.a1, psi_dot.a2 - w2 * psi.a2);
    let phi_dot = SpinorState::new(
        psi_ddot.a1 - w1_dot * psi.a1 - w1 * psi_dot.a1,
        psi_ddot.a2 - w2_dot * psi.a2 - w2 * psi_dot.a2,
    );
    (phi, phi_dot)
}

/// Residual of the intertwining relation at one time: with the transformed
/// state Φ = LΨ, the deformed problem must hold exactly,
/// γΦ̇ + V₁Φ − ξΦ = 0 with γ = iσₓ and V₁ = i f₁ σ_y.
fn intertwining_residual_at(
    q: &QTrajectory,
    seed: &TransformSeed,
    xi: f64,
    t: f64,
    dw1: C64,
) -> f64 {
    let (phi, phi_dot) = intertwined_pair(q, seed, xi, t, dw1);
    let f1 = seed.f0() + q.delta_f(t);
    let i = C64::i();
    let r1 = i * phi_dot.a2 + f1 * phi.a2 - xi * phi.a1;
    let r2 = i * phi_dot.a1 - f1 * phi.a1 - xi * phi.a2;
    r1.norm().max(r2.norm())
}

fn scan(identity: &'static str, grid: &TimeGrid, mut f: impl FnMut(f64) -> f64) -> ResidualReport {
    let mut max_abs = f64::NEG_INFINITY;
    let mut at_time = grid.t0();
    for t in grid.times() {
        let v = f(t);
        if v > max_abs {
            max_abs = v;
            at_time = t;
        }
    }
    ResidualReport { identity, max_abs, at_time, grid: *grid }
}

/// Scans γΦ̇ + V₁Φ = ξΦ for the transformed ground-state solution over the
/// grid. A correct seed keeps the residual at rounding level.
pub fn intertwining_residual(
    seed: &TransformSeed,
    xi: f64,
    grid: &TimeGrid,
) -> Result<ResidualReport> {
    intertwining_residual_perturbed(seed, xi, grid, C64::new(0.0, 0.0))
}

/// Same scan with a constant fault `dw1` injected into the w₁ entry of the
/// superpotential; used to demonstrate that the check actually detects a
/// corrupted transformation.
pub fn intertwining_residual_perturbed(
    seed: &TransformSeed,
    xi: f64,
    grid: &TimeGrid,
    dw1: C64,
) -> Result<ResidualReport> {
    if !xi.is_finite() || xi <= 0.0 {
        return Err(Error::NonPositiveCoupling(xi));
    }
    let q = seed.q_trajectory();
    Ok(scan("intertwining", grid, |t| intertwining_residual_at(&q, seed, xi, t, dw1)))
}

/// (JL⁺J)L applied to a constant-drive solution value at time t.
///
/// The backward operator reduces to JL⁺J = −∂t − W: the formal adjoint of
/// L = ∂t − W is L⁺ = −∂t − W⁺; W is diagonal with w₂ = conj(w₁), so taking
/// the entrywise conjugate swaps its entries, W⁺ = diag(w₂, w₁), and
/// conjugating by J = σₓ swaps them back, J W⁺ J = W. Hence
/// (JL⁺J)LΨ = −Φ̇ − WΦ with Φ = LΨ.
pub fn backward_forward_product(
    seed: &TransformSeed,
    xi: f64,
    state: &SpinorState,
    t: f64,
) -> SpinorState {
    let q = seed.q_trajectory();
    let psi_dot = schrodinger_rhs(seed.f0(), xi, state);
    let psi_ddot = schrodinger_rhs(seed.f0(), xi, &psi_dot);
    let w = w_matrix(seed, t);
    let w1_dot = q.w1_dot(t);
    let phi = SpinorState::new(psi_dot.a1 - w.w1() * state.a1, psi_dot.a2 - w.w2() * state.a2);
    let phi_dot = SpinorState::new(
        psi_ddot.a1 - w1_dot * state.a1 - w.w1() * psi_dot.a1,
        psi_ddot.a2 - w1_dot.conj() * state.a2 - w.w2() * psi_dot.a2,
    );
    SpinorState::new(-phi_dot.a1 - w.w1() * phi.a1, -phi_dot.a2 - w.w2() * phi.a2)
}

/// Scans the factorization identity (JL⁺J)LΨ = (ξ² + R²)Ψ on the reference
/// solution: the backward-forward product acts as h₀² − λ² = h₀² + R², which
/// on an eigenstate at E = ξ multiplies by ξ² + R².
pub fn factorization_residual(
    seed: &TransformSeed,
    xi: f64,
    grid: &TimeGrid,
) -> Result<ResidualReport> {
    if !xi.is_finite() || xi <= 0.0 {
        return Err(Error::NonPositiveCoupling(xi));
    }
    let factor = xi * xi + seed.r() * seed.r();
    Ok(scan("factorization", grid, |t| {
        let psi = constant_drive_state(xi, seed.f0(), &SpinorState::ground(), t);
        let bp = backward_forward_product(seed, xi, &psi, t);
        let res = SpinorState::new(bp.a1 - factor * psi.a1, bp.a2 - factor * psi.a2);
        max_component(&res)
    }))
}

/// Transformed drive value computed in complex arithmetic, without assuming
/// reality: Δf = λ(ρ⁻¹ − ρ) − 2f₀ with ρ = (D + iN)²/(N² + D²) and λ = iR.
fn delta_f_complex(q: &QTrajectory, t: f64) -> C64 {
    let (n, d) = q.numden(t);
    let z = C64::new(d, n);
    let rho = z * z / z.norm_sqr();
    let lambda = C64::new(0.0, q.seed().r());
    lambda * (1.0 / rho - rho) - 2.0 * q.seed().f0()
}

/// Scans pseudo-adjointness of the potentials: JV₀J = V₀⁺ holds identically
/// for real f₀, and JV₁J = V₁⁺ holds exactly when the transformed drive is
/// real. With V = i f σ_y the deviation of JVJ from V⁺ has magnitude
/// 2|Im f|, so the transformed drive is evaluated in complex arithmetic and
/// its imaginary part is the reported residual.
pub fn pseudo_adjoint_consistency(seed: &TransformSeed, grid: &TimeGrid) -> Result<ResidualReport> {
    let q = seed.q_trajectory();
    Ok(scan("pseudo-adjoint", grid, |t| {
        let f1 = seed.f0() + delta_f_complex(&q, t);
        2.0 * f1.im.abs()
    }))
}

/// One randomized check of all three identities.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub f0: f64,
    pub varpi: f64,
    pub a: f64,
    pub xi: f64,
    pub intertwining: ResidualReport,
    pub factorization: ResidualReport,
    pub pseudo_adjoint: ResidualReport,
}

impl SweepRecord {
    /// Largest of the three residual maxima.
    pub fn worst(&self) -> f64 {
        self.intertwining.max_abs.max(self.factorization.max_abs).max(self.pseudo_adjoint.max_abs)
    }
}

/// Runs all three identity scans over `count` seeds drawn reproducibly from
/// `rng_seed`: f₀ ∈ [0.1, 10], ϖ/f₀ ∈ (0, 1), a ∈ [−1, 1], ξ ∈ [0.1, 10].
pub fn identity_sweep(count: usize, rng_seed: u64, grid: &TimeGrid) -> Result<Vec<SweepRecord>> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(rng_seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let f0 = rng.gen_range(0.1..=10.0);
        let varpi = f0 * rng.gen_range(0.01..=0.99);
        let a = rng.gen_range(-1.0..=1.0);
        let xi = rng.gen_range(0.1..=10.0);
        let seed = TransformSeed::oscillatory(f0, varpi, a)?;
        out.push(SweepRecord {
            f0,
            varpi,
            a,
            xi,
            intertwining: intertwining_residual(&seed, xi, grid)?,
            factorization: factorization_residual(&seed, xi, grid)?,
            pseudo_adjoint: pseudo_adjoint_consistency(&seed, grid)?,
        });
    }
    Ok(out)
}
