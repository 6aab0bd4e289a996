//! Derived observables: the running-average detuning reconstructed from a
//! drive law, and peak-detection analysis of occupation-probability traces
//! (fast/slow oscillation frequencies, amplitudes, and envelope floors).
//!
//! Frequency estimation deliberately works in the time domain. The traces
//! this crate produces hold a handful of slow periods, which is too few for
//! sharp spectral lines, while their peaks are dense and clean; spacing of
//! interpolated extrema resolves both components well at this scale.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::twolevel::{DriveProfile, TimeGrid, Trace};

/// Running-average detuning samples δ₁(t).
pub type DetuningTrace = Trace<f64>;

/// Reconstructs the detuning law δ₁(t) = (2/t)∫₀ᵗ f(s) ds on `grid`, which
/// must start at t = 0; the t → 0 limit is δ₁(0) = 2f(0). The running
/// integral is accumulated by composite Simpson quadrature on a subgrid
/// refining every grid cell by the even factor `refinement` (at least 8).
pub fn detuning_trace_refined(
    drive: &DriveProfile,
    grid: &TimeGrid,
    refinement: usize,
) -> Result<DetuningTrace> {
    drive.validate()?;
    if grid.t0() != 0.0 {
        return Err(Error::GridMustStartAtZero { t0: grid.t0() });
    }
    if refinement < 8 || !refinement.is_multiple_of(2) {
        return Err(Error::InvalidRefinement(refinement));
    }
    let times = grid.times();
    let mut delta = Vec::with_capacity(times.len());
    delta.push(2.0 * drive.value(0.0));
    let mut integral = 0.0;
    for k in 1..times.len() {
        let (lo, hi) = (times[k - 1], times[k]);
        let h = (hi - lo) / refinement as f64;
        let mut cell = drive.value(lo) + drive.value(hi);
        for j in 1..refinement {
            let weight = if j % 2 == 1 { 4.0 } else { 2.0 };
            cell += weight * drive.value(lo + j as f64 * h);
        }
        integral += cell * h / 3.0;
        delta.push(2.0 * integral / times[k]);
    }
    Trace::new(times, delta, "detuning")
}

/// [`detuning_trace_refined`] at the default refinement factor of 8.
pub fn detuning_trace(drive: &DriveProfile, grid: &TimeGrid) -> Result<DetuningTrace> {
    detuning_trace_refined(drive, grid, 8)
}

/// Frequencies (rad/time) and half peak-to-trough amplitudes of the fast
/// oscillation and its slow envelope modulation. `slow = 0` means no slow
/// component was present (a flat envelope), in which case `slow_amplitude`
/// is 0 as well; otherwise `fast > slow > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyEstimate {
    pub fast: f64,
    pub slow: f64,
    pub fast_amplitude: f64,
    pub slow_amplitude: f64,
}

/// Outcome of scanning a probability trace for oscillations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OscillationAnalysis {
    /// No oscillating component: the trace is constant or strictly trending,
    /// as for the monotone drive at the critical coupling.
    Flat,
    Oscillating(FrequencyEstimate),
}

fn strict_maxima(y: &[f64]) -> Vec<usize> {
    (1..y.len() - 1).filter(|&i| y[i] > y[i - 1] && y[i] > y[i + 1]).collect()
}

/// Sub-sample extremum location by a parabola through the three samples
/// around index `i`.
fn refine_extremum(times: &[f64], y: &[f64], i: usize) -> f64 {
    let denom = y[i - 1] - 2.0 * y[i] + y[i + 1];
    if denom == 0.0 {
        return times[i];
    }
    let shift = 0.5 * (y[i - 1] - y[i + 1]) / denom;
    let dt = times[i] - times[i - 1];
    times[i] + shift.clamp(-0.5, 0.5) * dt
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn total_variation(y: &[f64]) -> f64 {
    y.windows(2).map(|w| (w[1] - w[0]).abs()).sum()
}

fn mean(v: impl Iterator<Item = f64>) -> f64 {
    let (mut s, mut n) = (0.0, 0usize);
    for x in v {
        s += x;
        n += 1;
    }
    s / n as f64
}

/// Spacing of same-direction midline crossings of a smooth periodic signal;
/// returns the mean spacing if at least two crossings of one direction exist.
fn crossing_period(times: &[f64], y: &[f64], midline: f64) -> Option<f64> {
    let mut up = Vec::new();
    let mut down = Vec::new();
    for i in 1..y.len() {
        let (a, b) = (y[i - 1] - midline, y[i] - midline);
        if a < 0.0 && b >= 0.0 {
            up.push(times[i - 1] + (times[i] - times[i - 1]) * a / (a - b));
        } else if a > 0.0 && b <= 0.0 {
            down.push(times[i - 1] + (times[i] - times[i - 1]) * a / (a - b));
        }
    }
    let series = if up.len() >= down.len() { up } else { down };
    if series.len() < 2 {
        return None;
    }
    Some((series[series.len() - 1] - series[0]) / (series.len() - 1) as f64)
}

/// Estimates the fast and slow oscillation content of a uniformly sampled
/// probability trace by peak detection.
///
/// The trace is detrended by a centered moving average one fast period wide
/// (the period bootstrapped from raw peak spacing); the fast frequency is
/// 2π over the median spacing of parabolically refined maxima of the
/// detrended signal, and the slow frequency is 2π over the spacing of
/// same-direction midline crossings of the moving average itself. Returns
/// [`OscillationAnalysis::Flat`] when the total variation is below 1e-6 or
/// no oscillating component survives detrending. The trace should span at
/// least two slow and twenty fast periods; too few samples, non-uniform
/// sampling, or fewer than two observable slow crossings are errors.
pub fn oscillation_frequencies(trace: &Trace<f64>) -> Result<OscillationAnalysis> {
    let n = trace.len();
    if n < 32 {
        return Err(Error::InsufficientSpan { reason: "fewer than 32 samples" });
    }
    let times = trace.times();
    let y = trace.values();
    let dt = (times[n - 1] - times[0]) / (n - 1) as f64;
    for w in times.windows(2) {
        if ((w[1] - w[0]) - dt).abs() > 1e-6 * dt {
            return Err(Error::NonUniformSampling);
        }
    }

    if total_variation(y) < 1e-6 {
        return Ok(OscillationAnalysis::Flat);
    }
    let raw_maxima = strict_maxima(y);
    if raw_maxima.len() < 3 {
        return Ok(OscillationAnalysis::Flat);
    }

    // moving average one raw-peak-spacing wide
    let spacing = median(raw_maxima.windows(2).map(|w| times[w[1]] - times[w[0]]).collect());
    let half = ((spacing / dt / 2.0).round() as usize).max(1);
    if 2 * half + 1 + 4 > n {
        return Err(Error::InsufficientSpan { reason: "trace shorter than a few fast periods" });
    }
    let interior = half..n - half;
    let window = 2 * half + 1;
    let mut run: f64 = y[..window].iter().sum();
    let mut trend = Vec::with_capacity(n - 2 * half);
    trend.push(run / window as f64);
    for i in half + 1..n - half {
        run += y[i + half] - y[i - half - 1];
        trend.push(run / window as f64);
    }
    let t_int = &times[interior.clone()];
    let detr: Vec<f64> = y[interior.clone()].iter().zip(&trend).map(|(p, m)| p - m).collect();

    if total_variation(&detr) < 1e-6 {
        return Ok(OscillationAnalysis::Flat);
    }
    let maxima = strict_maxima(&detr);
    let minima: Vec<usize> = {
        let neg: Vec<f64> = detr.iter().map(|v| -v).collect();
        strict_maxima(&neg)
    };
    if maxima.len() < 3 || minima.len() < 3 {
        return Ok(OscillationAnalysis::Flat);
    }
    let peak_times: Vec<f64> = maxima.iter().map(|&i| refine_extremum(t_int, &detr, i)).collect();
    let fast_period = median(peak_times.windows(2).map(|w| w[1] - w[0]).collect());
    let fast = 2.0 * std::f64::consts::PI / fast_period;
    let peak_level = mean(maxima.iter().map(|&i| detr[i]));
    let trough_level = mean(minima.iter().map(|&i| detr[i]));
    let fast_amplitude = 0.5 * (peak_level - trough_level);

    let (lo, hi) = trend
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let envelope_swing = hi - lo;
    if envelope_swing <= (2.0 * fast_amplitude * 0.1).max(1e-9) {
        return Ok(OscillationAnalysis::Oscillating(FrequencyEstimate {
            fast,
            slow: 0.0,
            fast_amplitude,
            slow_amplitude: 0.0,
        }));
    }
    let slow_period = crossing_period(t_int, &trend, 0.5 * (lo + hi))
        .ok_or(Error::InsufficientSpan { reason: "fewer than two slow periods" })?;
    let slow = 2.0 * std::f64::consts::PI / slow_period;
    if slow >= fast {
        return Err(Error::InsufficientSpan { reason: "fast and slow components not separated" });
    }
    Ok(OscillationAnalysis::Oscillating(FrequencyEstimate {
        fast,
        slow,
        fast_amplitude,
        slow_amplitude: 0.5 * envelope_swing,
    }))
}

/// Floor statistics of a probability trace: `min` is the plain minimum over
/// the trace, and `floor` is the largest windowed minimum, i.e. the highest
/// level that the fast-oscillation dips reach anywhere in the trace when
/// each window spans at least one fast period. Scanning the last slow period
/// of an inverted trace, `floor > 1/2` witnesses that even the lows of the
/// fast oscillation stay in the upper half there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeStats {
    pub floor: f64,
    pub min: f64,
}

/// Windowed minimum statistics; `window` is a time span that must cover at
/// least two samples and fit inside the trace.
pub fn envelope_minimum(trace: &Trace<f64>, window: f64) -> Result<EnvelopeStats> {
    let n = trace.len();
    let times = trace.times();
    let y = trace.values();
    if n < 2 {
        return Err(Error::InsufficientSpan { reason: "fewer than 2 samples" });
    }
    let dt = (times[n - 1] - times[0]) / (n - 1) as f64;
    if !window.is_finite() || window <= 0.0 {
        return Err(Error::InvalidWindow { window });
    }
    let wn = ((window / dt) - 1e-9).ceil().max(1.0) as usize;
    if wn < 2 || wn > n - 1 {
        return Err(Error::InvalidWindow { window });
    }

    // sliding minimum over windows of wn + 1 samples
    let mut deque: VecDeque<usize> = VecDeque::new();
    let mut floor = f64::NEG_INFINITY;
    for i in 0..n {
        while deque.back().is_some_and(|&b| y[b] >= y[i]) {
            deque.pop_back();
        }
        deque.push_back(i);
        if deque.front().is_some_and(|&f| f + wn < i) {
            deque.pop_front();
        }
        if i >= wn {
            floor = floor.max(y[*deque.front().expect("non-empty window")]);
        }
    }
    let min = y.iter().fold(f64::INFINITY, |m, &v| m.min(v));
    Ok(EnvelopeStats { floor, min })
}
