//! Stage-by-stage positivity certificate for S_n^(4)(x) = Σ sin(sin kx)/k.
//!
//! Writing S_n^(4) = 2{F_m + T_m} with the tail bounded below by −B_m gives
//! S_n^(4) > 2{F_m − B_m}. Where every s_n((2k+1)x), k ≤ m, is positive the
//! head dominates F_0(2; x) = J_1(1) sin x (1 + cos x), so positivity holds
//! between the two roots x_m^± of F_0(2; x) = B_m. Stage 1 covers the middle
//! of (0, π); each later stage extends the interval towards the endpoints
//! provided its roots overlap the previous interval.
//!
//! This is a floating-point verification of that argument, not an
//! interval-arithmetic proof.

use std::f64::consts::PI;

use serde::Serialize;

use crate::accum::reduced_phase;
use crate::bessel::{odd_coefficient, tail_bound, XI};
use crate::error::{domain, Error, Result};
use crate::format::round_sig;
use crate::series::sine_sum;
use crate::solve::bisect;
use crate::special::sine_integral;

/// Largest stage index accepted by [`build_certificate`]; B_m leaves the
/// normal double range a few stages later.
pub const M_MAX_LIMIT: u32 = 64;

/// Limiting Gibbs overshoot Δ = Si(π) of the partial sums s_n.
pub fn gibbs_constant() -> f64 {
    sine_integral(PI)
}

/// λ such that πλ is the first positive crossing of s_2 and s_9.
///
/// Scans (0, π/3) with step π·1e-4 for the first sign change of
/// s_2 − s_9, then bisects to 1e-12.
pub fn lambda_crossing() -> Result<f64> {
    let gap = |x: f64| sine_sum(2, x) - sine_sum(9, x);
    let step = PI * 1e-4;
    let limit = PI / 3.0;
    let mut lo = step;
    let mut g_lo = gap(lo);
    while lo < limit {
        let hi = (lo + step).min(limit);
        let g_hi = gap(hi);
        if g_lo.signum() != g_hi.signum() {
            let br = bisect(gap, lo, hi, 1e-12, "s_2 - s_9 crossing")?;
            return Ok(br.midpoint() / PI);
        }
        lo = hi;
        g_lo = g_hi;
    }
    Err(Error::Consistency(
        "s_2 and s_9 do not cross in (0, pi/3)".into(),
    ))
}

/// F_0(2; x) = J_1(1) sin x (1 + cos x).
pub fn lowest_head(x: f64) -> f64 {
    odd_coefficient(0) * x.sin() * (1.0 + x.cos())
}

/// F_0(2; π − x̂) written in x̂, free of the cancellation in 1 + cos x.
pub fn lowest_head_near_pi(x_hat: f64) -> f64 {
    let s = (0.5 * x_hat).sin();
    odd_coefficient(0) * x_hat.sin() * 2.0 * s * s
}

/// The two roots of F_0(2; x) = B_m.
///
/// `x_hat_plus` is π − x_plus carried separately: for m ≳ 12 the upper root
/// is within an ulp of π and only x̂ distinguishes consecutive stages.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootPair {
    pub m: u32,
    pub x_minus: f64,
    pub x_plus: f64,
    pub x_hat_plus: f64,
    pub residual_minus: f64,
    pub residual_plus: f64,
}

impl RootPair {
    pub fn x_minus_over_pi(&self) -> f64 {
        self.x_minus / PI
    }

    pub fn x_plus_over_pi(&self) -> f64 {
        1.0 - self.x_hat_plus / PI
    }
}

/// Solves J_1(1) sin x (1 + cos x) = B_m near 0 and near π by bisection on
/// brackets built from the small-x asymptotics x⁻ ≈ B_m/(2J_1(1)) and
/// π − x⁺ ≈ (2B_m/J_1(1))^(1/3), widened by a factor 10 either way.
pub fn solve_roots(m: u32) -> Result<RootPair> {
    if m == 0 {
        return Err(domain("root stages start at m = 1"));
    }
    let b = tail_bound(m).b;
    if !(b >= f64::MIN_POSITIVE) {
        return Err(domain(format!("B_{m} underflows double precision")));
    }
    let j1 = odd_coefficient(0);
    let cap = PI / 3.0;

    let est_minus = b / (2.0 * j1);
    let lower = |x: f64| lowest_head(x) - b;
    let br = bisect(
        lower,
        est_minus / 10.0,
        (10.0 * est_minus).min(cap),
        0.0,
        &format!("lower root, m = {m}"),
    )?;
    let x_minus = br.midpoint();

    let est_hat = (2.0 * b / j1).cbrt();
    let upper = |x_hat: f64| lowest_head_near_pi(x_hat) - b;
    let br = bisect(
        upper,
        est_hat / 10.0,
        (10.0 * est_hat).min(cap),
        0.0,
        &format!("upper root, m = {m}"),
    )?;
    let x_hat_plus = br.midpoint();

    Ok(RootPair {
        m,
        x_minus,
        x_plus: PI - x_hat_plus,
        x_hat_plus,
        residual_minus: (lowest_head(x_minus) - b).abs(),
        residual_plus: (lowest_head_near_pi(x_hat_plus) - b).abs(),
    })
}

/// Lemma 1 at stage m ≥ 2: B_{m−1} < H_m/(2m+1) and
/// J_1(1) sin(π/(2m+1)) > 2B_{m−1}.
pub fn verify_lemma1(m: u32) -> Result<bool> {
    if m < 2 {
        return Err(domain("lemma 1 applies for m >= 2"));
    }
    let prev = tail_bound(m - 1).b;
    let h = tail_bound(m).h.expect("H_m is defined for m >= 2");
    let width = f64::from(2 * m + 1);
    Ok(prev < h / width && odd_coefficient(0) * (PI / width).sin() > 2.0 * prev)
}

/// Lemma 3 at stage m: x_m⁻ < x_{m−1}⁻ < π/(2m+1) and
/// 2mπ/(2m+1) < x_{m−1}⁺ < x_m⁺, compared through x̂ = π − x near π.
pub fn verify_lemma3(m: u32, current: &RootPair, previous: &RootPair) -> Result<bool> {
    if m < 2 || current.m != m || previous.m + 1 != m {
        return Err(Error::Contract(format!(
            "lemma 3 at m = {m} needs roots of stages {} and {m}, got {} and {}",
            m.saturating_sub(1),
            previous.m,
            current.m
        )));
    }
    let edge = PI / f64::from(2 * m + 1);
    let lower = current.x_minus < previous.x_minus && previous.x_minus < edge;
    let upper = previous.x_hat_plus < edge && current.x_hat_plus < previous.x_hat_plus;
    Ok(lower && upper)
}

/// √3/4·J_1(1) − ξ·J_3(1): the margin left for F_1 on [π/3, 2π/3] after
/// the most negative s_n(3x).
pub fn lemma2_margin() -> f64 {
    3f64.sqrt() / 4.0 * odd_coefficient(0) - XI * odd_coefficient(1)
}

/// Smallest F_1(n; x) = J_1(1) s_n(x) + J_3(1) s_n(3x) over n = 2..=n_max and
/// `points` interior grid points of (0, π), with its location.
pub fn lemma2_grid_min(n_max: u64, points: usize) -> (f64, u64, f64) {
    let (j1, j3) = (odd_coefficient(0), odd_coefficient(1));
    let mut worst = (f64::INFINITY, 0, 0.0);
    for i in 1..=points {
        let x = PI * i as f64 / (points + 1) as f64;
        let (mut s1, mut s3) = (0.0, 0.0);
        for k in 1..=n_max {
            let kf = k as f64;
            s1 += reduced_phase(k, x).sin() / kf;
            s3 += reduced_phase(3 * k, x).sin() / kf;
            if k >= 2 {
                let f1 = j1 * s1 + j3 * s3;
                if f1 < worst.0 {
                    worst = (f1, k, x);
                }
            }
        }
    }
    worst
}

/// Lemma 2 margin, after confirming F_1(n; x) > 0 on a 2000-point grid of
/// (0, π) for n = 2..=100.
pub fn verify_lemma2_bound() -> Result<f64> {
    let (min, n, x) = lemma2_grid_min(100, 2000);
    if min <= 0.0 {
        return Err(Error::Consistency(format!(
            "F_1({n}; {x}) = {min} is not positive"
        )));
    }
    Ok(lemma2_margin())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CertificateStage {
    pub m: u32,
    pub b_m: f64,
    pub roots: RootPair,
    pub lemma1_ok: bool,
    pub lemma3_ok: bool,
    pub overlap_ok: bool,
}

impl CertificateStage {
    pub fn verified(&self) -> bool {
        self.lemma1_ok && self.lemma3_ok && self.overlap_ok
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PositivityCertificate {
    pub stages: Vec<CertificateStage>,
    /// (x⁻, x⁺) of the last stage.
    pub final_interval: (f64, f64),
    /// λ used for the stage-1 region (0, πλ) ∪ (2π/3, π).
    pub lambda: f64,
    pub lemma2_margin: f64,
    pub all_verified: bool,
    /// First stage whose checks failed.
    pub failed_stage: Option<u32>,
}

/// Runs stages 1..=m_max.
///
/// Stage 1 has no lemma-1 condition; its placement check is that x_1⁻ < πλ
/// and x_1⁺ > 2π/3. Stages m ≥ 2 check lemma 1, lemma 3 and that
/// [x_m⁻, x_m⁺] strictly contains the previous interval.
pub fn build_certificate(m_max: u32) -> Result<PositivityCertificate> {
    if m_max == 0 || m_max > M_MAX_LIMIT {
        return Err(domain(format!(
            "m_max must lie in 1..={M_MAX_LIMIT}, got {m_max}"
        )));
    }
    let lambda = lambda_crossing()?;
    let margin = lemma2_margin();

    let first = solve_roots(1)?;
    let mut stages = vec![CertificateStage {
        m: 1,
        b_m: tail_bound(1).b,
        roots: first,
        lemma1_ok: true,
        lemma3_ok: first.x_minus < PI * lambda && first.x_hat_plus < PI / 3.0,
        overlap_ok: true,
    }];
    for m in 2..=m_max {
        let previous = stages.last().expect("stage 1 is present").roots;
        let roots = solve_roots(m)?;
        let overlap_ok =
            roots.x_minus < previous.x_minus && roots.x_hat_plus < previous.x_hat_plus;
        stages.push(CertificateStage {
            m,
            b_m: tail_bound(m).b,
            roots,
            lemma1_ok: verify_lemma1(m)?,
            lemma3_ok: verify_lemma3(m, &roots, &previous)?,
            overlap_ok,
        });
    }

    let failed_stage = stages.iter().find(|s| !s.verified()).map(|s| s.m);
    let last = stages.last().expect("at least one stage").roots;
    Ok(PositivityCertificate {
        final_interval: (last.x_minus, last.x_plus),
        lambda,
        lemma2_margin: margin,
        all_verified: failed_stage.is_none() && margin > 0.0,
        failed_stage,
        stages,
    })
}

/// One line of the canonical certificate report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageRecord {
    pub m: u32,
    pub b_m: f64,
    pub x_minus_over_pi: f64,
    pub x_plus_over_pi: f64,
    /// 1 − x⁺/π at full precision; x⁺/π itself rounds to 1 from m ≈ 11.
    pub one_minus_x_plus_over_pi: f64,
    pub lemma1_ok: bool,
    pub lemma3_ok: bool,
    pub overlap_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateReport {
    pub m_max: u32,
    pub lambda: f64,
    pub lemma2_margin: f64,
    pub all_verified: bool,
    pub failed_stage: Option<u32>,
    pub stages: Vec<StageRecord>,
}

impl PositivityCertificate {
    /// Stage records with B_m and x^±/π rounded to 10 significant digits.
    pub fn report(&self) -> CertificateReport {
        CertificateReport {
            m_max: self.stages.len() as u32,
            lambda: self.lambda,
            lemma2_margin: self.lemma2_margin,
            all_verified: self.all_verified,
            failed_stage: self.failed_stage,
            stages: self
                .stages
                .iter()
                .map(|s| StageRecord {
                    m: s.m,
                    b_m: round_sig(s.b_m, 10),
                    x_minus_over_pi: round_sig(s.roots.x_minus_over_pi(), 10),
                    x_plus_over_pi: round_sig(s.roots.x_plus_over_pi(), 10),
                    one_minus_x_plus_over_pi: s.roots.x_hat_plus / PI,
                    lemma1_ok: s.lemma1_ok,
                    lemma3_ok: s.lemma3_ok,
                    overlap_ok: s.overlap_ok,
                })
                .collect(),
        }
    }
}
