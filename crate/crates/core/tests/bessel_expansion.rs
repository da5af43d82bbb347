use std::f64::consts::PI;

use fejer_core::bessel::{
    bessel_reconstruction, bessel_unit, partial_expansion_cos, partial_expansion_sin,
    sinh_half_partial, tail_bound,
};
use fejer_core::series::{evaluate, SumKind};
use fejer_core::special::harmonic_sum;
use rand::{rngs::StdRng, Rng, SeedableRng};

/// Rounding allowance for comparing two O(σ_n) sums computed along
/// different routes.
fn rounding_slack(n: u64) -> f64 {
    4.0 * f64::EPSILON * harmonic_sum(n)
}

#[test]
fn bessel_values_below_leading_term_bound() {
    let mut previous = f64::INFINITY;
    for nu in (1..=41).step_by(2) {
        let j = bessel_unit(nu).unwrap();
        assert!(j.value > 0.0);
        assert!(j.value < j.upper_bound(), "nu={nu}");
        assert!(j.value < previous, "nu={nu}");
        previous = j.value;
    }
}

#[test]
fn tail_bound_closed_form_identity() {
    let total = 2.0 * 0.5f64.sinh();
    for m in 0..=20 {
        let b = tail_bound(m).b;
        let rebuilt = b + sinh_half_partial(m);
        assert!((rebuilt - total).abs() <= 1e-15 * total, "m={m}");
    }
}

#[test]
fn tail_bound_decreases() {
    for m in 0..20 {
        assert!(tail_bound(m).b > tail_bound(m + 1).b);
    }
}

#[test]
fn tail_bound_leading_asymptotics() {
    for m in 5u32..=15 {
        let b = tail_bound(m).b;
        let factorial: f64 = (1..=2 * m + 3).map(f64::from).product();
        let ratio = b * factorial * 2f64.powi(2 * m as i32 + 2);
        let mf = f64::from(m);
        assert!(ratio >= 1.0 && ratio <= 1.0 + 10.0 / (mf * mf), "m={m}: {ratio}");
    }
}

#[test]
fn tail_bounds_match_direct_series() {
    // 2^(−2k)/(2k+1)! summed from scratch with exact factorials
    for m in [0u32, 1, 2, 5, 10] {
        let mut direct = 0.0;
        for k in (m + 1..m + 30).rev() {
            let fact: f64 = (1..=2 * k + 1).map(f64::from).product();
            direct += 2f64.powi(-2 * k as i32) / fact;
        }
        let b = tail_bound(m).b;
        assert!((b - direct).abs() <= 1e-14 * direct, "m={m}");
    }
}

#[test]
fn h_bound_dominates_previous_tail() {
    for m in 2..=40 {
        let tb = tail_bound(m);
        let h = tb.h.unwrap();
        assert!(tail_bound(m - 1).b < h / f64::from(2 * m + 1), "m={m}");
    }
    assert!(tail_bound(1).h.is_none());
}

#[test]
fn sin_sin_reconstruction_within_tail_bound() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    for _ in 0..200 {
        let n = rng.gen_range(1..=1000u64);
        let x = rng.gen_range(0.0..PI);
        let direct = evaluate(SumKind::SinSin, n, x);
        for m in 0..=6 {
            let split = partial_expansion_sin(m, n, x);
            let b = tail_bound(m).b;
            assert!(split.tail_abs_bound < b);
            let gap = (direct - 2.0 * split.f_value).abs();
            assert!(gap < 2.0 * b + rounding_slack(n), "n={n} x={x} m={m}: {gap:e}");
        }
    }
}

#[test]
fn sin_sin_single_term_example() {
    let split = partial_expansion_sin(0, 1, PI / 2.0);
    let j1 = bessel_unit(1).unwrap().value;
    assert!((split.f_value - j1).abs() < 1e-16);
    let gap = (1f64.sin() - 2.0 * split.f_value).abs();
    assert!(gap < 2.0 * tail_bound(0).b);
}

#[test]
fn sin_sin_reconstruction_to_machine_precision() {
    let direct = evaluate(SumKind::SinSin, 100, 1.0);
    let rebuilt = bessel_reconstruction(SumKind::SinSin, 10, 100, 1.0).unwrap();
    assert!((direct - rebuilt).abs() < 2.0 * tail_bound(10).b + rounding_slack(100));
}

#[test]
fn sin_cos_reconstruction() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let r_terms = 10;
    for _ in 0..50 {
        let n = rng.gen_range(1..=1000u64);
        let x = rng.gen_range(0.0..PI);
        let direct = evaluate(SumKind::SinCos, n, x);
        let rebuilt = partial_expansion_cos(r_terms, n, x);
        let sigma = harmonic_sum(n);
        let tail: f64 = (r_terms + 1..r_terms + 40)
            .map(|r| bessel_unit(2 * r + 1).unwrap().value)
            .sum();
        let gap = (direct - rebuilt).abs();
        assert!(gap < 2.0 * sigma * tail + rounding_slack(n), "n={n} x={x}: {gap:e}");
    }
}
