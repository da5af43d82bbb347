//! Direct evaluation of s_n, c_n and the four modified sums
//! S_n^(j)(x) = Σ f(g(kx))/k, plus their closed forms at special points and
//! their behaviour at the endpoints 0 and π.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::accum::{reduced_phase, CompensatedSum};
use crate::error::{domain, Error, Result};
use crate::special::{digamma, EULER_GAMMA};

/// Which of the six sum families to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SumKind {
    /// s_n(x) = Σ sin(kx)/k
    SineBasic,
    /// c_n(x) = Σ cos(kx)/k
    CosineBasic,
    /// S_n^(1)(x) = Σ cos(cos kx)/k
    CosCos,
    /// S_n^(2)(x) = Σ cos(sin kx)/k
    CosSin,
    /// S_n^(3)(x) = Σ sin(cos kx)/k
    SinCos,
    /// S_n^(4)(x) = Σ sin(sin kx)/k
    SinSin,
}

impl SumKind {
    pub const ALL: [SumKind; 6] = [
        SumKind::SineBasic,
        SumKind::CosineBasic,
        SumKind::CosCos,
        SumKind::CosSin,
        SumKind::SinCos,
        SumKind::SinSin,
    ];

    pub const MODIFIED: [SumKind; 4] =
        [SumKind::CosCos, SumKind::CosSin, SumKind::SinCos, SumKind::SinSin];

    pub fn is_modified(self) -> bool {
        !matches!(self, SumKind::SineBasic | SumKind::CosineBasic)
    }

    /// The numerator f(g(θ)) of the k-th term, as a function of θ = kx.
    #[inline]
    pub fn numerator(self, theta: f64) -> f64 {
        match self {
            SumKind::SineBasic => theta.sin(),
            SumKind::CosineBasic => theta.cos(),
            SumKind::CosCos => theta.cos().cos(),
            SumKind::CosSin => theta.sin().cos(),
            SumKind::SinCos => theta.cos().sin(),
            SumKind::SinSin => theta.sin().sin(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SumKind::SineBasic => "sine_basic",
            SumKind::CosineBasic => "cosine_basic",
            SumKind::CosCos => "cos_cos",
            SumKind::CosSin => "cos_sin",
            SumKind::SinCos => "sin_cos",
            SumKind::SinSin => "sin_sin",
        }
    }
}

/// A validated (n, x) pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalPoint {
    n: u64,
    x: f64,
}

impl EvalPoint {
    pub fn new(n: u64, x: f64) -> Result<Self> {
        if n == 0 {
            return Err(domain("number of terms must be at least 1"));
        }
        if !x.is_finite() {
            return Err(domain(format!("x must be finite, got {x}")));
        }
        Ok(Self { n, x })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn evaluate(&self, kind: SumKind) -> f64 {
        evaluate(kind, self.n, self.x)
    }
}

/// Σ_{k=1..n} f(k·p·x)/k with the phase reduced per term.
#[inline]
fn scaled_sum(n: u64, p: u64, x: f64, f: impl Fn(f64) -> f64) -> f64 {
    let mut acc = CompensatedSum::new();
    for k in 1..=n {
        acc.add(f(reduced_phase(k * p, x)) / k as f64);
    }
    acc.value()
}

/// s_n(x) = Σ_{k=1..n} sin(kx)/k.
pub fn sine_sum(n: u64, x: f64) -> f64 {
    scaled_sum(n, 1, x, f64::sin)
}

/// c_n(x) = Σ_{k=1..n} cos(kx)/k.
pub fn cosine_sum(n: u64, x: f64) -> f64 {
    scaled_sum(n, 1, x, f64::cos)
}

/// s_n(p·x), with the integer multiple folded into the phase reduction so
/// that no rounding is introduced by forming p·x first.
pub fn sine_sum_multiple(n: u64, p: u64, x: f64) -> f64 {
    scaled_sum(n, p, x, f64::sin)
}

/// c_n(p·x); see [`sine_sum_multiple`].
pub fn cosine_sum_multiple(n: u64, p: u64, x: f64) -> f64 {
    scaled_sum(n, p, x, f64::cos)
}

/// One of the four modified sums S_n^(1..4)(x).
///
/// The basic kinds are rejected; use [`sine_sum`] / [`cosine_sum`].
pub fn modified_sum(kind: SumKind, n: u64, x: f64) -> Result<f64> {
    if !kind.is_modified() {
        return Err(Error::Contract(format!(
            "{} is not a modified sum; use sine_sum/cosine_sum",
            kind.name()
        )));
    }
    Ok(evaluate(kind, n, x))
}

/// Any of the six sums by direct summation.
pub fn evaluate(kind: SumKind, n: u64, x: f64) -> f64 {
    scaled_sum(n, 1, x, |theta| kind.numerator(theta))
}

/// All partial sums for n = 1..=n_max at a single x, in one pass.
///
/// Entry `i` holds the sum with `i + 1` terms.
pub fn partial_sums(kind: SumKind, n_max: u64, x: f64) -> Vec<f64> {
    let mut acc = CompensatedSum::new();
    (1..=n_max)
        .map(|k| {
            acc.add(kind.numerator(reduced_phase(k, x)) / k as f64);
            acc.value()
        })
        .collect()
}

/// Points at which closed forms are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialPoint {
    Pi,
    TwoPiOver3,
    PiOver2,
}

impl SpecialPoint {
    pub fn x(self) -> f64 {
        match self {
            SpecialPoint::Pi => PI,
            SpecialPoint::TwoPiOver3 => 2.0 * PI / 3.0,
            SpecialPoint::PiOver2 => FRAC_PI_2,
        }
    }
}

/// Closed form of a sum at a special point, built from ψ.
///
/// Supported pairs: c_n(π), c_n(2π/3), S^(1)(π/2), S^(2)(π/2), S^(3)(π),
/// S^(3)(2π/3). Even/odd n (points π and π/2) and n mod 3 (point 2π/3) select
/// the branch.
pub fn special_value(kind: SumKind, n: u64, point: SpecialPoint) -> Result<f64> {
    if n == 0 {
        return Err(domain("number of terms must be at least 1"));
    }
    let nf = n as f64;
    let psi_n1 = digamma(nf + 1.0)?;
    let half = (n / 2) as f64;
    let third = (n / 3) as f64;
    let even = n.is_multiple_of(2);
    let cos1 = 1f64.cos();
    let sin1 = 1f64.sin();
    let sin_half = 0.5f64.sin();

    // For n even, ψ(n/2 + 1/2) sums the odd reciprocals and ψ(n/2 + 1) the
    // even ones; for n odd the roles swap.
    let (odd_arg, even_arg) = if even {
        (half + 0.5, half + 1.0)
    } else {
        (half + 1.5, half + 1.0)
    };
    let odd_reciprocals = || -> Result<f64> {
        Ok(0.5 * digamma(odd_arg)? + 0.5 * EULER_GAMMA + LN_2)
    };
    let half_harmonic = || -> Result<f64> { Ok(digamma(even_arg)? + EULER_GAMMA) };

    match (kind, point) {
        // ψ(n/2 + 1 − r/2) with r = n mod 2 is ψ(⌊n/2⌋ + 1)
        (SumKind::CosineBasic, SpecialPoint::Pi) => Ok(digamma(half + 1.0)? - psi_n1),
        (SumKind::SinCos, SpecialPoint::Pi) => Ok(sin1 * (digamma(half + 1.0)? - psi_n1)),
        // ψ(n/3 + 1 − r/3) with r = n mod 3 is ψ(⌊n/3⌋ + 1)
        (SumKind::CosineBasic, SpecialPoint::TwoPiOver3) => {
            Ok(0.5 * (digamma(third + 1.0)? - psi_n1))
        }
        (SumKind::SinCos, SpecialPoint::TwoPiOver3) => {
            let h_third = digamma(third + 1.0)? + EULER_GAMMA;
            let h_n = psi_n1 + EULER_GAMMA;
            Ok((sin_half + sin1) / 3.0 * h_third - sin_half * h_n)
        }
        (SumKind::CosCos, SpecialPoint::PiOver2) => {
            Ok(odd_reciprocals()? + 0.5 * cos1 * half_harmonic()?)
        }
        (SumKind::CosSin, SpecialPoint::PiOver2) => {
            Ok(cos1 * odd_reciprocals()? + 0.5 * half_harmonic()?)
        }
        _ => Err(Error::Unsupported {
            kind,
            what: format!("closed form at {point:?}"),
        }),
    }
}

/// The two ends of the fundamental interval [0, π].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Endpoint {
    Zero,
    Pi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u64) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

fn check_derivative_kind(kind: SumKind) -> Result<()> {
    match kind {
        SumKind::SineBasic | SumKind::SinSin => Ok(()),
        _ => Err(Error::Unsupported {
            kind,
            what: "endpoint derivative".into(),
        }),
    }
}

/// Exact derivative of s_n or S_n^(4) at 0 or π.
///
/// Both derivatives reduce to Σ cos(kx) at the endpoints: n at 0, and
/// Σ(−1)^k (0 for even n, −1 for odd n) at π.
pub fn endpoint_derivative(kind: SumKind, n: u64, endpoint: Endpoint) -> Result<f64> {
    check_derivative_kind(kind)?;
    if n == 0 {
        return Err(domain("number of terms must be at least 1"));
    }
    Ok(match (endpoint, Parity::of(n)) {
        (Endpoint::Zero, _) => n as f64,
        (Endpoint::Pi, Parity::Even) => 0.0,
        (Endpoint::Pi, Parity::Odd) => -1.0,
    })
}

/// Step of the one-sided difference quotient in [`finite_difference_derivative`].
pub const DERIVATIVE_STEP: f64 = 1e-6;

/// Second-order one-sided difference estimate of the endpoint derivative,
/// stepping into [0, π].
pub fn finite_difference_derivative(kind: SumKind, n: u64, endpoint: Endpoint) -> Result<f64> {
    check_derivative_kind(kind)?;
    let h = DERIVATIVE_STEP;
    let f = |x: f64| evaluate(kind, n, x);
    Ok(match endpoint {
        Endpoint::Zero => (-3.0 * f(0.0) + 4.0 * f(h) - f(2.0 * h)) / (2.0 * h),
        Endpoint::Pi => (3.0 * f(PI) - 4.0 * f(PI - h) + f(PI - 2.0 * h)) / (2.0 * h),
    })
}

/// Truncated odd-power expansion of S_n^(4) about 0 (in x) or π (in π − x).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EndpointExpansion {
    pub n: u64,
    pub endpoint: Endpoint,
    pub parity: Parity,
    /// `coefficients[i]` multiplies u^(2i+1), where u = x at 0 and u = π − x
    /// at π.
    pub coefficients: Vec<f64>,
}

impl EndpointExpansion {
    /// Evaluates the truncated series at local offset `u` from the endpoint.
    pub fn evaluate_offset(&self, u: f64) -> f64 {
        let u2 = u * u;
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * u2 + c)
            * u
    }

    /// Evaluates the truncated series at an absolute abscissa x.
    pub fn evaluate(&self, x: f64) -> f64 {
        match self.endpoint {
            Endpoint::Zero => self.evaluate_offset(x),
            Endpoint::Pi => self.evaluate_offset(PI - x),
        }
    }
}

/// Expansion of S_n^(4) through `terms` odd powers (1, 3 or 5).
///
/// Near 0 it follows from sin(sin y) = y − y³/3 + y⁵/10 − … and the power
/// sums Σk², Σk⁴; near π each term picks up (−1)^(k−1), so the alternating
/// power sums appear instead.
pub fn endpoint_expansion(n: u64, endpoint: Endpoint, terms: usize) -> Result<EndpointExpansion> {
    if !(1..=3).contains(&terms) {
        return Err(domain(format!("expansion supports 1 to 3 terms, got {terms}")));
    }
    if n == 0 {
        return Err(domain("number of terms must be at least 1"));
    }
    let nf = n as f64;
    let parity = Parity::of(n);
    let all = match endpoint {
        Endpoint::Zero => {
            let base = nf * (nf + 1.0) * (2.0 * nf + 1.0);
            [
                nf,
                -base / 18.0,
                base * (3.0 * nf * nf + 3.0 * nf - 1.0) / 300.0,
            ]
        }
        Endpoint::Pi => {
            let sign = match parity {
                Parity::Even => 1.0,
                Parity::Odd => -1.0,
            };
            let lead = match parity {
                Parity::Even => 0.0,
                Parity::Odd => 1.0,
            };
            let base = sign * nf * (nf + 1.0);
            [lead, base / 6.0, -base * (nf * nf + nf - 1.0) / 20.0]
        }
    };
    Ok(EndpointExpansion {
        n,
        endpoint,
        parity,
        coefficients: all[..terms].to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT3_4: f64 = 0.433_012_701_892_219_3;

    #[test]
    fn sine_sum_examples() {
        assert!((sine_sum(1, FRAC_PI_2) - 1.0).abs() < 1e-15);
        for n in [1, 2, 7, 50, 1000] {
            assert!(sine_sum(n, PI).abs() < 1e-12, "n={n}");
        }
        assert!((sine_sum(2, 2.0 * PI / 3.0) - SQRT3_4).abs() < 1e-15);
        assert!((sine_sum(3, 2.0 * PI / 3.0) - SQRT3_4).abs() < 1e-15);
    }

    #[test]
    fn cosine_sum_examples() {
        assert!((cosine_sum(4, 0.0) - 25.0 / 12.0).abs() < 1e-15);
        assert!((cosine_sum(3, 2.0 * PI / 3.0) + 5.0 / 12.0).abs() < 1e-15);
        assert!((cosine_sum(100_000, PI) + LN_2).abs() < 1e-4);
    }

    #[test]
    fn modified_sum_examples() {
        for n in [1, 5, 64] {
            let s = modified_sum(SumKind::CosSin, n, 0.0).unwrap();
            assert!((s - crate::special::harmonic_sum(n)).abs() < 1e-14);
        }
        let s = modified_sum(SumKind::SinSin, 1, FRAC_PI_2).unwrap();
        assert!((s - 1f64.sin()).abs() < 1e-15);
        assert!(matches!(
            modified_sum(SumKind::SineBasic, 3, 1.0),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn multiple_matches_direct_argument() {
        for p in [1u64, 3, 5, 21] {
            let a = sine_sum_multiple(40, p, 0.3);
            let b = sine_sum(40, p as f64 * 0.3);
            assert!((a - b).abs() < 1e-13, "p={p}");
            let a = cosine_sum_multiple(40, p, 0.3);
            let b = cosine_sum(40, p as f64 * 0.3);
            assert!((a - b).abs() < 1e-13, "p={p}");
        }
    }

    #[test]
    fn partial_sums_agree_with_single_evaluations() {
        let all = partial_sums(SumKind::SinCos, 30, 1.1);
        for n in [1u64, 2, 17, 30] {
            let direct = evaluate(SumKind::SinCos, n, 1.1);
            assert!((all[(n - 1) as usize] - direct).abs() < 1e-15);
        }
    }

    #[test]
    fn eval_point_validation() {
        assert!(EvalPoint::new(0, 1.0).is_err());
        assert!(EvalPoint::new(3, f64::INFINITY).is_err());
        let p = EvalPoint::new(1, FRAC_PI_2).unwrap();
        assert!((p.evaluate(SumKind::SineBasic) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn special_value_cosine_two_thirds() {
        let v = special_value(SumKind::CosineBasic, 3, SpecialPoint::TwoPiOver3).unwrap();
        assert!((v + 5.0 / 12.0).abs() < 1e-14);
    }

    #[test]
    fn special_value_sin_cos_at_pi_tends_to_limit() {
        let v = special_value(SumKind::SinCos, 1_000_000, SpecialPoint::Pi).unwrap();
        let limit = -(1f64.sin()) * LN_2;
        assert!((limit + 0.583_263).abs() < 1e-6);
        assert!((v - limit).abs() < 1e-6);
    }

    #[test]
    fn special_value_rejects_unsupported_pairs() {
        let err = special_value(SumKind::SinSin, 10, SpecialPoint::PiOver2).unwrap_err();
        assert!(matches!(err, Error::Unsupported { .. }));
        assert!(special_value(SumKind::CosCos, 10, SpecialPoint::Pi).is_err());
        assert!(special_value(SumKind::CosineBasic, 0, SpecialPoint::Pi).is_err());
    }

    #[test]
    fn special_values_match_direct_summation() {
        let pairs = [
            (SumKind::CosineBasic, SpecialPoint::Pi),
            (SumKind::CosineBasic, SpecialPoint::TwoPiOver3),
            (SumKind::CosCos, SpecialPoint::PiOver2),
            (SumKind::CosSin, SpecialPoint::PiOver2),
            (SumKind::SinCos, SpecialPoint::Pi),
            (SumKind::SinCos, SpecialPoint::TwoPiOver3),
        ];
        for (kind, point) in pairs {
            for n in [1u64, 2, 3, 4, 5, 6, 10, 11, 999, 1000] {
                let closed = special_value(kind, n, point).unwrap();
                let direct = evaluate(kind, n, point.x());
                let rel = (closed - direct).abs() / direct.abs();
                assert!(rel < 1e-10, "{kind:?} {point:?} n={n}: {closed} vs {direct}");
            }
        }
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(endpoint_derivative(SumKind::SineBasic, 20, Endpoint::Zero).unwrap(), 20.0);
        assert_eq!(endpoint_derivative(SumKind::SinSin, 20, Endpoint::Pi).unwrap(), 0.0);
        assert_eq!(endpoint_derivative(SumKind::SinSin, 21, Endpoint::Pi).unwrap(), -1.0);
        assert!(endpoint_derivative(SumKind::CosCos, 21, Endpoint::Pi).is_err());
    }

    #[test]
    fn derivatives_match_finite_differences() {
        for kind in [SumKind::SineBasic, SumKind::SinSin] {
            for n in [1u64, 2, 3, 20, 21, 100] {
                for endpoint in [Endpoint::Zero, Endpoint::Pi] {
                    let exact = endpoint_derivative(kind, n, endpoint).unwrap();
                    let fd = finite_difference_derivative(kind, n, endpoint).unwrap();
                    assert!((exact - fd).abs() < 1e-4, "{kind:?} n={n} {endpoint:?}: {fd}");
                }
            }
        }
    }

    #[test]
    fn expansion_leading_terms() {
        let e = endpoint_expansion(3, Endpoint::Zero, 1).unwrap();
        assert_eq!(e.coefficients, vec![3.0]);
        let e = endpoint_expansion(3, Endpoint::Pi, 1).unwrap();
        assert_eq!(e.parity, Parity::Odd);
        assert_eq!(e.coefficients, vec![1.0]);
        let e = endpoint_expansion(2, Endpoint::Pi, 2).unwrap();
        assert_eq!(e.coefficients, vec![0.0, 1.0]);
        assert!(endpoint_expansion(2, Endpoint::Pi, 0).is_err());
        assert!(endpoint_expansion(2, Endpoint::Pi, 4).is_err());
    }

    #[test]
    fn expansion_near_pi_for_n_two() {
        let xh = 0.01;
        let direct = evaluate(SumKind::SinSin, 2, PI - xh);
        let cubic = endpoint_expansion(2, Endpoint::Pi, 2).unwrap();
        let quintic = endpoint_expansion(2, Endpoint::Pi, 3).unwrap();
        // omitted −1.5 x̂⁵ term: relative 1.5e−4
        assert!((cubic.evaluate_offset(xh) - direct).abs() / direct.abs() < 2e-4);
        assert!((quintic.evaluate_offset(xh) - direct).abs() / direct.abs() < 1e-7);
    }
}
