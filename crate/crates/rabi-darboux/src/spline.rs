//! Clamped cubic spline interpolation for tabulated drive profiles.
//!
//! The spline is C² on the tabulated range with first derivative pinned to
//! zero at both endpoints, and extends as a constant outside the range so a
//! drive evaluation never extrapolates a cubic.

use crate::error::{Error, Result};

/// Cubic spline through (x, y) samples, clamped to zero slope at the ends.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    // second derivatives at the knots
    moments: Vec<f64>,
}

impl CubicSpline {
    // negated comparison so NaN knots fail validation
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub(crate) fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::TabulatedLengthMismatch { times: xs.len(), values: ys.len() });
        }
        if xs.len() < 2 {
            return Err(Error::TabulatedTooShort(xs.len()));
        }
        for (i, w) in xs.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(Error::TabulatedNotIncreasing { index: i + 1 });
            }
        }
        for (&x, &y) in xs.iter().zip(&ys) {
            if !x.is_finite() {
                return Err(Error::NonFinite { name: "tabulated time", value: x });
            }
            if !y.is_finite() {
                return Err(Error::NonFinite { name: "tabulated value", value: y });
            }
        }
        let moments = solve_moments(&xs, &ys);
        Ok(Self { xs, ys, moments })
    }

    pub(crate) fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub(crate) fn ys(&self) -> &[f64] {
        &self.ys
    }

    /// Spline value at `x`, held constant outside the tabulated range.
    pub(crate) fn value(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return self.ys[0];
        }
        if x >= self.xs[n - 1] {
            return self.ys[n - 1];
        }
        let i = self.xs.partition_point(|&k| k <= x).saturating_sub(1).min(n - 2);
        let (x0, x1) = (self.xs[i], self.xs[i + 1]);
        let (y0, y1) = (self.ys[i], self.ys[i + 1]);
        let (m0, m1) = (self.moments[i], self.moments[i + 1]);
        let h = x1 - x0;
        let u = x1 - x;
        let v = x - x0;
        m0 * u * u * u / (6.0 * h)
            + m1 * v * v * v / (6.0 * h)
            + (y0 - m0 * h * h / 6.0) * u / h
            + (y1 - m1 * h * h / 6.0) * v / h
    }
}

/// Tridiagonal system for the knot second derivatives with clamped ends
/// (first derivative zero at both boundaries).
fn solve_moments(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let mut sub = vec![0.0; n];
    let mut diag = vec![2.0; n];
    let mut sup = vec![0.0; n];
    let mut rhs = vec![0.0; n];

    let h0 = xs[1] - xs[0];
    sup[0] = 1.0;
    rhs[0] = 6.0 / h0 * ((ys[1] - ys[0]) / h0);
    for i in 1..n - 1 {
        let hl = xs[i] - xs[i - 1];
        let hr = xs[i + 1] - xs[i];
        sub[i] = hl / (hl + hr);
        sup[i] = hr / (hl + hr);
        rhs[i] = 6.0 * ((ys[i + 1] - ys[i]) / hr - (ys[i] - ys[i - 1]) / hl) / (hl + hr);
    }
    let hn = xs[n - 1] - xs[n - 2];
    sub[n - 1] = 1.0;
    rhs[n - 1] = 6.0 / hn * (-(ys[n - 1] - ys[n - 2]) / hn);

    // Thomas algorithm
    for i in 1..n {
        let w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    let mut m = vec![0.0; n];
    m[n - 1] = rhs[n - 1] / diag[n - 1];
    for i in (0..n - 1).rev() {
        m[i] = (rhs[i] - sup[i] * m[i + 1]) / diag[i];
    }
    m
}
