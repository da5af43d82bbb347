//! Unit-argument Bessel coefficients J_ν(1) and the Bessel-series
//! representations
//!
//! ```text
//! S_n^(4)(x) = 2 Σ_{r≥0} J_{2r+1}(1) s_n((2r+1)x)
//! S_n^(3)(x) = 2 Σ_{r≥0} (−1)^r J_{2r+1}(1) c_n((2r+1)x)
//! ```
//!
//! together with the head/tail split of the first one and the tail bound
//! B_m used by the positivity certificate.

use std::sync::OnceLock;

use serde::Serialize;

use crate::accum::CompensatedSum;
use crate::error::{domain, Error, Result};
use crate::series::{cosine_sum_multiple, sine_sum_multiple, SumKind};
use crate::special::ln_factorial;

/// Working supremum of |s_n(x)| used to majorise the tail. The true Gibbs
/// extreme is Si(π) ≈ 1.852; the certificate is built on 2.
pub const XI: f64 = 2.0;

/// Extra terms summed when a J-series tail is evaluated numerically.
pub const TAIL_TERMS: usize = 40;

/// Number of odd orders 1, 3, …, 2·TABLE_LEN − 1 kept in the memo table.
const TABLE_LEN: usize = 160;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BesselCoefficient {
    pub order: u32,
    pub value: f64,
}

impl BesselCoefficient {
    /// 2^(−ν)/Γ(1+ν), the leading-term majorant of J_ν(1).
    pub fn upper_bound(&self) -> f64 {
        let nu = self.order;
        (-(f64::from(nu)) * std::f64::consts::LN_2 - ln_factorial(nu)).exp()
    }
}

/// Ascending series Σ_k (−1)^k (1/2)^(2k+ν) / (k! (k+ν)!).
fn bessel_series(order: u32) -> f64 {
    // (1/2)^ν / ν! as a running product: no overflow, graceful underflow.
    let mut term = (1..=order).fold(1.0f64, |t, j| t * (0.5 / f64::from(j)));
    let mut acc = CompensatedSum::new();
    let mut k = 0u32;
    while term != 0.0 {
        acc.add(term);
        if term.abs() < 1e-18 * acc.value().abs() {
            break;
        }
        k += 1;
        term *= -0.25 / (f64::from(k) * f64::from(k + order));
    }
    acc.value()
}

fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..TABLE_LEN as u32)
            .map(|r| bessel_series(2 * r + 1))
            .collect()
    })
}

/// J_{2r+1}(1) from the memo table (computed directly past its end).
pub fn odd_coefficient(r: usize) -> f64 {
    table()
        .get(r)
        .copied()
        .unwrap_or_else(|| bessel_series(2 * r as u32 + 1))
}

/// J_ν(1) for odd ν ≥ 1.
pub fn bessel_unit(order: u32) -> Result<BesselCoefficient> {
    if order == 0 || order.is_multiple_of(2) {
        return Err(domain(format!(
            "only odd positive orders are needed, got {order}"
        )));
    }
    Ok(BesselCoefficient {
        order,
        value: odd_coefficient((order as usize - 1) / 2),
    })
}

/// B_m together with the auxiliary bound H_m.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailBound {
    pub m: u32,
    /// B_m = Σ_{k>m} 2^(−2k)/(2k+1)!
    pub b: f64,
    /// H_m = 2^(−2m)/(2m)! · 16m²/(16m²−1); only defined for m ≥ 2.
    pub h: Option<f64>,
}

/// The terms 2^(−2k)/(2k+1)! for k = 0, 1, 2, …
fn sinh_half_terms() -> impl Iterator<Item = f64> {
    (0u32..).scan(1.0f64, |term, k| {
        let current = *term;
        *term /= 4.0 * f64::from(2 * k + 2) * f64::from(2 * k + 3);
        Some(current)
    })
}

/// Σ_{k=0..m} 2^(−2k)/(2k+1)!, the head that B_m is the remainder of.
pub fn sinh_half_partial(m: u32) -> f64 {
    sinh_half_terms().take(m as usize + 1).collect::<CompensatedSum>().value()
}

/// Tail bound B_m and H_m.
///
/// B_m is summed directly from its tail series: the form 2 sinh(½) minus the
/// head cancels all significant digits once m ≳ 8.
pub fn tail_bound(m: u32) -> TailBound {
    let mut acc = CompensatedSum::new();
    for term in sinh_half_terms().skip(m as usize + 1) {
        if term == 0.0 {
            break;
        }
        acc.add(term);
        if term < 1e-20 * acc.value() {
            break;
        }
    }
    let h = (m >= 2).then(|| {
        let mf = f64::from(m);
        // 2^(−2m)/(2m)!
        let lead = (1..=2 * m).fold(1.0f64, |t, j| t * (0.5 / f64::from(j)));
        lead * 16.0 * mf * mf / (16.0 * mf * mf - 1.0)
    });
    TailBound { m, b: acc.value(), h }
}

/// F_m(n; x) and the numerical size of the tail it leaves out.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpansionSplit {
    pub m: u32,
    pub n: u64,
    pub x: f64,
    /// F_m(n; x) = Σ_{k=0..m} J_{2k+1}(1) s_n((2k+1)x)
    pub f_value: f64,
    /// ξ · Σ_{k=m+1..m+40} J_{2k+1}(1); strictly below B_m.
    pub tail_abs_bound: f64,
}

/// Head of the Bessel series of S_n^(4), truncated after order 2m+1.
pub fn partial_expansion_sin(m: u32, n: u64, x: f64) -> ExpansionSplit {
    let f_value = (0..=m as usize)
        .map(|k| odd_coefficient(k) * sine_sum_multiple(n, 2 * k as u64 + 1, x))
        .collect::<CompensatedSum>()
        .value();
    let tail_abs_bound = XI
        * (m as usize + 1..=m as usize + TAIL_TERMS)
            .map(odd_coefficient)
            .collect::<CompensatedSum>()
            .value();
    ExpansionSplit {
        m,
        n,
        x,
        f_value,
        tail_abs_bound,
    }
}

/// 2 Σ_{r=0..R} (−1)^r J_{2r+1}(1) c_n((2r+1)x), the truncated Bessel series
/// of S_n^(3).
pub fn partial_expansion_cos(terms_r: u32, n: u64, x: f64) -> f64 {
    2.0 * (0..=terms_r as usize)
        .map(|r| {
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            sign * odd_coefficient(r) * cosine_sum_multiple(n, 2 * r as u64 + 1, x)
        })
        .collect::<CompensatedSum>()
        .value()
}

/// Head of either Bessel series, for the two kinds that have one.
pub fn bessel_reconstruction(kind: SumKind, terms_r: u32, n: u64, x: f64) -> Result<f64> {
    match kind {
        SumKind::SinSin => Ok(2.0 * partial_expansion_sin(terms_r, n, x).f_value),
        SumKind::SinCos => Ok(partial_expansion_cos(terms_r, n, x)),
        _ => Err(Error::Unsupported {
            kind,
            what: "Bessel-series reconstruction".into(),
        }),
    }
}

/// Where S_n^(3) develops an unbounded spike.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpikeLocation {
    TwoPiOver3,
    TwoPiOver5,
}

/// Sum until a term drops below 1e-18 (relative), at most `TABLE_LEN` terms.
fn alternating_series(orders: impl Iterator<Item = usize>) -> f64 {
    let mut acc = CompensatedSum::new();
    for (i, r) in orders.enumerate() {
        let j = odd_coefficient(r);
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(sign * j);
        if j < 1e-18 * acc.value().abs() {
            break;
        }
    }
    acc.value()
}

/// Coefficient c of the asymptotic spike S_n^(3)(x₀) ~ c·σ_n.
///
/// At 2π/3 the arguments 3x, 9x, 15x, … hit multiples of 2π with
/// alternating signs (−2{J_3 − J_9 + J_15 − …}); at 2π/5 it is 5x, 15x, 25x
/// (+2{J_5 − J_15 + J_25 − …}).
pub fn expansion_cos_spike_coefficients(location: SpikeLocation) -> f64 {
    match location {
        // ν = 3, 9, 15, … ↔ r = 1, 4, 7, …
        SpikeLocation::TwoPiOver3 => -2.0 * alternating_series((1..TABLE_LEN).step_by(3)),
        // ν = 5, 15, 25, … ↔ r = 2, 7, 12, …
        SpikeLocation::TwoPiOver5 => 2.0 * alternating_series((2..TABLE_LEN).step_by(5)),
    }
}

/// J_3(1) + J_9(1) + J_15(1) + …, the orders whose s_n(νx) jump at 2π/3.
pub fn jump_orders_sum() -> f64 {
    let mut acc = CompensatedSum::new();
    for r in (1..TABLE_LEN).step_by(3) {
        let j = odd_coefficient(r);
        acc.add(j);
        if j < 1e-18 * acc.value() {
            break;
        }
    }
    acc.value()
}
