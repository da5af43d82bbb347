use std::f64::consts::{FRAC_PI_2, PI};

use fejer_core::series::{evaluate, partial_sums, sine_sum, SumKind};
use fejer_core::special::harmonic_sum;
use fejer_core::spike::{
    cos_spike_growth, growth_fit, jump_prediction, measure_jump, sin_cos_spike_growth,
    spike_height, spike_location_small_even,
};

/// Golden-section maximiser kept separate from the crate's solver.
fn golden_oracle(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let c = b - r * (b - a);
        let d = a + r * (b - a);
        if f(c) > f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    0.5 * (a + b)
}

fn dense_argmax(f: &impl Fn(f64) -> f64, lo: f64, hi: f64, points: usize) -> f64 {
    let step = (hi - lo) / (points - 1) as f64;
    let best = (0..points)
        .map(|i| lo + step * i as f64)
        .max_by(|a, b| f(*a).total_cmp(&f(*b)))
        .unwrap();
    golden_oracle(f, (best - step).max(lo), (best + step).min(hi))
}

#[test]
fn cos_sums_symmetric_about_half_pi() {
    for kind in [SumKind::CosCos, SumKind::CosSin] {
        for i in 1..500 {
            let x = PI * f64::from(i) / 500.0;
            let a = partial_sums(kind, 200, x);
            let b = partial_sums(kind, 200, PI - x);
            for (n, (u, v)) in a.iter().zip(&b).enumerate() {
                assert!((u - v).abs() < 1e-12, "{kind:?} n={} x={x}", n + 1);
            }
        }
    }
}

#[test]
fn cos_sums_lower_bounds() {
    let cos1 = 1f64.cos();
    for i in 0..=1000 {
        let x = PI * f64::from(i) / 1000.0;
        let s1 = partial_sums(SumKind::CosCos, 200, x);
        let s2 = partial_sums(SumKind::CosSin, 200, x);
        for n in 1..=200usize {
            let bound = harmonic_sum(n as u64) * cos1;
            assert!(s1[n - 1] >= bound - 1e-12, "S1 n={n} x={x}");
            // n = 1 touches the bound at π/2 since sin(π/2) = 1
            if n == 1 {
                assert!(s2[0] >= bound - 1e-15);
            } else {
                assert!(s2[n - 1] > bound, "S2 n={n} x={x}");
            }
        }
    }
}

#[test]
fn twin_maxima_for_small_even_n() {
    for n in (2u64..=16).step_by(2) {
        let (left, right) = spike_location_small_even(n).unwrap();
        let f = |x: f64| evaluate(SumKind::CosCos, n, x);
        let argmax = dense_argmax(&f, 0.0, PI, 20_000);
        let gap = (argmax - left).abs().min((argmax - right).abs());
        assert!(gap < 1e-6, "n={n}: argmax {argmax}");
    }
}

#[test]
fn centre_is_global_max_for_even_n_from_eighteen() {
    for n in [18u64, 20, 30, 100, 1000] {
        let centre = evaluate(SumKind::CosCos, n, FRAC_PI_2);
        let f = |x: f64| evaluate(SumKind::CosCos, n, x);
        let argmax = dense_argmax(&f, 0.0, PI, 20_000);
        assert!(f(argmax) <= centre + 1e-12, "n={n}: {argmax}");
    }
}

#[test]
fn spike_estimates_agree_with_closed_forms() {
    for kind in [SumKind::CosCos, SumKind::CosSin, SumKind::SinCos] {
        for n in [17u64, 18, 1000, 1001, 400_000] {
            let s = spike_height(kind, n).unwrap();
            assert!(
                (s.predicted - s.measured).abs() <= 1e-10 * s.measured.abs().max(1.0),
                "{kind:?} n={n}"
            );
        }
    }
    let s = spike_height(SumKind::SinCos, 400_000).unwrap();
    assert!((s.measured + 1.011_006).abs() < 5e-6);
    assert_eq!(s.growth_coefficient, sin_cos_spike_growth());
    assert_eq!(spike_height(SumKind::CosSin, 10).unwrap().growth_coefficient, cos_spike_growth());
}

#[test]
fn sin_cos_spike_deepens_along_doubling() {
    let mut previous = f64::INFINITY;
    let mut n = 1000u64;
    while n <= 1_024_000 {
        let v = evaluate(SumKind::SinCos, n, 2.0 * PI / 3.0);
        assert!(v < previous, "n={n}");
        previous = v;
        n *= 2;
    }
}

#[test]
fn growth_fits() {
    let schedule = [1_000u64, 10_000, 100_000, 1_000_000];
    let slope = growth_fit(SumKind::CosCos, FRAC_PI_2, &schedule).unwrap();
    assert!((slope / cos_spike_growth() - 1.0).abs() < 0.02, "{slope}");
    let slope = growth_fit(SumKind::CosSin, FRAC_PI_2, &schedule).unwrap();
    assert!((slope / cos_spike_growth() - 1.0).abs() < 0.02, "{slope}");
    let slope = growth_fit(SumKind::SinCos, 2.0 * PI / 3.0, &schedule).unwrap();
    assert!((slope / -0.039_126_7 - 1.0).abs() < 0.02, "{slope}");
    for n in schedule {
        assert!(evaluate(SumKind::CosSin, n, FRAC_PI_2) <= harmonic_sum(n));
    }
}

#[test]
fn jump_positive_across_decades() {
    for n in [100u64, 1_000, 10_000, 100_000] {
        let m = measure_jump(n).unwrap();
        assert!(m.jump > 0.0, "n={n}");
        assert!(m.right_level > m.left_level);
    }
}

#[test]
fn jump_converges_along_doubling() {
    let target = jump_prediction();
    let mut previous = f64::INFINITY;
    for n in [10_000u64, 20_000, 40_000, 80_000] {
        let gap = (measure_jump(n).unwrap().jump - target).abs();
        assert!(gap <= previous, "n={n}: {gap:e}");
        assert!(gap < 0.01);
        previous = gap;
    }
}

#[test]
fn gibbs_maximum_of_sine_sum() {
    let n = 10_000u64;
    let f = |x: f64| sine_sum(n, x);
    // first and largest crest sits at x = π/(n+1)
    let argmax = dense_argmax(&f, 0.0, 10.0 * PI / n as f64, 2001);
    let peak = f(argmax);
    assert!((peak - 1.851_937_0).abs() < 1e-3, "{peak}");
}
