//! Spikes of S^(1..3) and the jump of S^(4) near 2π/3.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::bessel::jump_orders_sum;
use crate::certify::gibbs_constant;
use crate::error::{domain, Error, Result};
use crate::series::{evaluate, special_value, SpecialPoint, SumKind};
use crate::solve::golden_max;

/// Predicted against measured spike height at one n.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpikeEstimate {
    pub kind: SumKind,
    pub location: f64,
    pub n: u64,
    /// Digamma closed form at `location`.
    pub predicted: f64,
    /// Direct summation at `location`.
    pub measured: f64,
    /// Coefficient of log n in the large-n growth of the spike.
    pub growth_coefficient: f64,
}

/// (1 + cos 1)/2, the log-growth rate of S^(1) and S^(2) at π/2.
pub fn cos_spike_growth() -> f64 {
    0.5 * (1.0 + 1f64.cos())
}

/// (sin 1 − 2 sin ½)/3, the log-growth rate of S^(3) at 2π/3.
pub fn sin_cos_spike_growth() -> f64 {
    (1f64.sin() - 2.0 * 0.5f64.sin()) / 3.0
}

fn spike_site(kind: SumKind) -> Result<(SpecialPoint, f64)> {
    match kind {
        SumKind::CosCos | SumKind::CosSin => Ok((SpecialPoint::PiOver2, cos_spike_growth())),
        SumKind::SinCos => Ok((SpecialPoint::TwoPiOver3, sin_cos_spike_growth())),
        SumKind::SinSin => Err(Error::Contract(
            "S^(4) has a bounded jump, not a spike; use measure_jump".into(),
        )),
        _ => Err(Error::Unsupported {
            kind,
            what: "spike height".into(),
        }),
    }
}

/// Spike of S^(1) or S^(2) at π/2, or of S^(3) at 2π/3.
pub fn spike_height(kind: SumKind, n: u64) -> Result<SpikeEstimate> {
    let (point, growth_coefficient) = spike_site(kind)?;
    if n == 0 {
        return Err(domain("number of terms must be at least 1"));
    }
    let location = point.x();
    Ok(SpikeEstimate {
        kind,
        location,
        n,
        predicted: special_value(kind, n, point)?,
        measured: evaluate(kind, n, location),
        growth_coefficient,
    })
}

/// The twin maxima π/2 ± π/(2n+2) of S_n^(1) for even n ≤ 16.
pub fn spike_location_small_even(n: u64) -> Result<(f64, f64)> {
    if !n.is_multiple_of(2) || !(2..=16).contains(&n) {
        return Err(domain(format!(
            "twin maxima exist only for even 2 <= n <= 16, got {n}"
        )));
    }
    let offset = PI / (2 * n + 2) as f64;
    Ok((FRAC_PI_2 - offset, FRAC_PI_2 + offset))
}

/// Limiting jump of S^(4) across 2π/3: 2{J_3 + J_9 + J_15 + …}·2Δ with
/// Δ = Si(π).
pub fn jump_prediction() -> f64 {
    jump_prediction_with(gibbs_constant())
}

/// The jump estimate for a given overshoot level Δ.
pub fn jump_prediction_with(delta: f64) -> f64 {
    2.0 * jump_orders_sum() * 2.0 * delta
}

/// Measured transition of S_n^(4) across 2π/3.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JumpMeasurement {
    pub n: u64,
    pub window_half_width: f64,
    /// Minimum over the left half-window.
    pub left_level: f64,
    /// Maximum over the right half-window.
    pub right_level: f64,
    pub jump: f64,
}

pub const JUMP_GRID_POINTS: usize = 400;

/// Samples S_n^(4) on 400 points of [2π/3 − 10π/n, 2π/3 + 10π/n] and takes
/// (max on the right half) − (min on the left half). Each extreme is then
/// polished by golden-section search in the grid cells around it.
pub fn measure_jump(n: u64) -> Result<JumpMeasurement> {
    if n < 100 {
        return Err(domain(format!("jump measurement needs n >= 100, got {n}")));
    }
    let centre = 2.0 * PI / 3.0;
    let half = 10.0 * PI / n as f64;
    let lo = centre - half;
    let step = 2.0 * half / (JUMP_GRID_POINTS - 1) as f64;
    let f = |x: f64| evaluate(SumKind::SinSin, n, x);
    let xs: Vec<f64> = (0..JUMP_GRID_POINTS).map(|i| lo + step * i as f64).collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();

    let split = xs.partition_point(|&x| x < centre);
    let tol = step * 1e-6;

    let (i_min, _) = ys[..split]
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |b, (i, &y)| if y < b.1 { (i, y) } else { b });
    let a = xs[i_min.saturating_sub(1)];
    let b = xs[(i_min + 1).min(split - 1)].min(centre);
    let (_, neg_min) = golden_max(|x| -f(x), a, b, tol);
    let left_level = (-neg_min).min(ys[i_min]);

    let (j_max, _) = ys[split..]
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |b, (i, &y)| if y > b.1 { (i, y) } else { b });
    let j = split + j_max;
    let a = xs[j.saturating_sub(1).max(split)].max(centre);
    let b = xs[(j + 1).min(JUMP_GRID_POINTS - 1)];
    let (_, max) = golden_max(f, a, b, tol);
    let right_level = max.max(ys[j]);

    Ok(JumpMeasurement {
        n,
        window_half_width: half,
        left_level,
        right_level,
        jump: right_level - left_level,
    })
}

/// Least-squares slope of the sum at `location` against ln n over the
/// schedule (intercept fitted freely).
pub fn growth_fit(kind: SumKind, location: f64, n_schedule: &[u64]) -> Result<f64> {
    if n_schedule.len() < 4 {
        return Err(domain("growth fit needs at least 4 values of n"));
    }
    if n_schedule[0] == 0 || n_schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(domain("n schedule must be positive and strictly increasing"));
    }
    let first = n_schedule[0] as f64;
    let last = *n_schedule.last().expect("non-empty") as f64;
    if last / first < 100.0 {
        return Err(domain("n schedule must span at least two decades"));
    }
    let points: Vec<(f64, f64)> = n_schedule
        .iter()
        .map(|&n| ((n as f64).ln(), evaluate(kind, n, location)))
        .collect();
    Ok(least_squares_slope(&points))
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let len = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / len;
    let (sxy, sxx) = points.iter().fold((0.0, 0.0), |(sxy, sxx), &(x, y)| {
        let dx = x - mean_x;
        (sxy + dx * (y - mean_y), sxx + dx * dx)
    });
    sxy / sxx
}
