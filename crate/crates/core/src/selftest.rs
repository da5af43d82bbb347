//! Invariant suites run by `fejer selftest`.

use std::f64::consts::PI;

use crate::bessel::{bessel_unit, partial_expansion_sin, sinh_half_partial, tail_bound};
use crate::certify::{build_certificate, lambda_crossing, solve_roots, verify_lemma1, verify_lemma3};
use crate::series::{cosine_sum, evaluate, partial_sums, sine_sum, special_value, SpecialPoint, SumKind};
use crate::special::{harmonic_sum, EULER_GAMMA};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, violations: Vec<String>) -> Check {
    Check {
        name,
        passed: violations.is_empty(),
        detail: match violations.first() {
            None => "ok".into(),
            Some(first) => format!("{} violation(s), first: {first}", violations.len()),
        },
    }
}

/// Interior grid of (lo, hi) with `points` samples.
fn open_grid(lo: f64, hi: f64, points: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (points + 1) as f64;
    (1..=points).map(move |i| lo + step * i as f64)
}

fn fejer_jackson() -> Check {
    let mut bad = Vec::new();
    for x in open_grid(0.0, PI, 2000) {
        for (i, s) in partial_sums(SumKind::SineBasic, 200, x).into_iter().enumerate() {
            if s <= 0.0 {
                bad.push(format!("s_{}({x}) = {s}", i + 1));
            }
        }
    }
    check("sine sums positive on (0, pi)", bad)
}

fn cosine_lower_bound() -> Check {
    let mut bad = Vec::new();
    for x in open_grid(0.0, PI, 2000) {
        for (i, c) in partial_sums(SumKind::CosineBasic, 200, x).into_iter().enumerate() {
            if c <= -1.0 {
                bad.push(format!("c_{}({x}) = {c}", i + 1));
            }
        }
    }
    check("cosine sums above -1 on (0, pi)", bad)
}

fn periodicity_and_symmetry() -> Check {
    let mut bad = Vec::new();
    for n in [1u64, 7, 50] {
        for x in open_grid(-3.0, 9.0, 100) {
            let d = (sine_sum(n, x + 2.0 * PI) - sine_sum(n, x)).abs();
            if d > 1e-12 {
                bad.push(format!("s_{n} period at {x}: {d:e}"));
            }
            let d = (cosine_sum(n, x) - cosine_sum(n, 2.0 * PI - x)).abs();
            if d > 1e-12 {
                bad.push(format!("c_{n} symmetry at {x}: {d:e}"));
            }
        }
    }
    check("periodicity and cosine symmetry", bad)
}

fn closed_forms() -> Check {
    let pairs = [
        (SumKind::CosineBasic, SpecialPoint::Pi),
        (SumKind::CosineBasic, SpecialPoint::TwoPiOver3),
        (SumKind::CosCos, SpecialPoint::PiOver2),
        (SumKind::CosSin, SpecialPoint::PiOver2),
        (SumKind::SinCos, SpecialPoint::Pi),
        (SumKind::SinCos, SpecialPoint::TwoPiOver3),
    ];
    let mut bad = Vec::new();
    for (kind, point) in pairs {
        for n in [2u64, 3, 10, 11, 100, 101, 999, 1000] {
            match special_value(kind, n, point) {
                Ok(closed) => {
                    let direct = evaluate(kind, n, point.x());
                    if (closed - direct).abs() > 1e-10 * direct.abs() {
                        bad.push(format!("{kind:?} at {point:?}, n={n}"));
                    }
                }
                Err(e) => bad.push(e.to_string()),
            }
        }
    }
    check("closed forms match direct sums", bad)
}

fn harmonic_asymptotics() -> Check {
    let mut bad = Vec::new();
    for n in [10u64, 11, 100, 1000, 12345, 100_000] {
        let nf = n as f64;
        let gap = (harmonic_sum(n) - nf.ln() - EULER_GAMMA - 0.5 / nf).abs();
        if gap > 1.0 / (nf * nf) {
            bad.push(format!("n={n}: {gap:e}"));
        }
    }
    check("harmonic number asymptotics", bad)
}

fn middle_minimum() -> Check {
    let floor = 3f64.sqrt() / 4.0 - 1e-9;
    let mut bad = Vec::new();
    let step = (PI / 3.0) / 3999.0;
    for i in 0..4000 {
        let x = PI / 3.0 + step * i as f64;
        for (j, s) in partial_sums(SumKind::SineBasic, 200, x).into_iter().enumerate().skip(1) {
            if s < floor {
                bad.push(format!("s_{}({x}) = {s}", j + 1));
            }
        }
    }
    check("sine sums >= sqrt(3)/4 on [pi/3, 2pi/3]", bad)
}

fn lowest_curve(lambda: f64) -> Check {
    let mut bad = Vec::new();
    let regions = [(0.0, PI * lambda), (2.0 * PI / 3.0, PI)];
    for (lo, hi) in regions {
        for x in open_grid(lo, hi, 1000) {
            let sums = partial_sums(SumKind::SineBasic, 200, x);
            let s2 = sums[1];
            for (j, s) in sums.iter().enumerate().skip(2) {
                if s2 > s + 1e-12 {
                    bad.push(format!("s_2 > s_{} at {x}", j + 1));
                }
            }
        }
    }
    check("s_2 is the lowest curve near the endpoints", bad)
}

fn bessel_and_tail() -> Check {
    let mut bad = Vec::new();
    let mut previous = f64::INFINITY;
    for nu in (1..=41).step_by(2) {
        let j = bessel_unit(nu).expect("odd order");
        if !(j.value > 0.0 && j.value < j.upper_bound() && j.value < previous) {
            bad.push(format!("J_{nu}(1) = {}", j.value));
        }
        previous = j.value;
    }
    let total = 2.0 * 0.5f64.sinh();
    for m in 0..=20 {
        let b = tail_bound(m).b;
        if ((b + sinh_half_partial(m)) - total).abs() > 1e-15 * total {
            bad.push(format!("B_{m} identity"));
        }
        if tail_bound(m + 1).b >= b {
            bad.push(format!("B_{m} not decreasing"));
        }
    }
    check("Bessel coefficients and tail bounds", bad)
}

fn reconstruction() -> Check {
    let mut bad = Vec::new();
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = || {
        // xorshift64*: deterministic sample points
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        (state.wrapping_mul(0x2545_f491_4f6c_dd1d) >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..100 {
        let n = 1 + (next() * 1000.0) as u64;
        let x = PI * next();
        let s = evaluate(SumKind::SinSin, n, x);
        let slack = 4.0 * f64::EPSILON * harmonic_sum(n);
        for m in 0..=6 {
            let f = partial_expansion_sin(m, n, x).f_value;
            if (s - 2.0 * f).abs() >= 2.0 * tail_bound(m).b + slack {
                bad.push(format!("n={n}, x={x}, m={m}"));
            }
        }
    }
    check("Bessel reconstruction within 2 B_m", bad)
}

fn certificate_and_lemmas() -> Check {
    let mut bad = Vec::new();
    match build_certificate(10) {
        Ok(cert) if cert.all_verified => {}
        Ok(cert) => bad.push(format!("certificate failed at {:?}", cert.failed_stage)),
        Err(e) => bad.push(e.to_string()),
    }
    for m in 2..=40 {
        if !verify_lemma1(m).unwrap_or(false) {
            bad.push(format!("lemma 1 at m={m}"));
        }
    }
    let roots: Vec<_> = (1..=20).filter_map(|m| solve_roots(m).ok()).collect();
    if roots.len() != 20 {
        bad.push("root solve failed".into());
    }
    for pair in roots.windows(2) {
        if !verify_lemma3(pair[1].m, &pair[1], &pair[0]).unwrap_or(false) {
            bad.push(format!("lemma 3 at m={}", pair[1].m));
        }
    }
    check("certificate and lemma sweeps", bad)
}

fn sin_sin_positive() -> Check {
    let mut bad = Vec::new();
    for x in open_grid(0.0, PI, 4000) {
        for (i, s) in partial_sums(SumKind::SinSin, 500, x).into_iter().enumerate() {
            if s <= 0.0 {
                bad.push(format!("S4_{}({x}) = {s}", i + 1));
            }
        }
    }
    check("sin(sin) sums positive on (0, pi), n <= 500", bad)
}

/// Runs every suite; the process exit status is 0 only if all pass.
pub fn run_all() -> Vec<Check> {
    let mut checks = vec![
        fejer_jackson(),
        cosine_lower_bound(),
        periodicity_and_symmetry(),
        closed_forms(),
        harmonic_asymptotics(),
        middle_minimum(),
    ];
    match lambda_crossing() {
        Ok(lambda) => {
            let ok = (lambda - 0.207_685).abs() < 5e-7;
            checks.push(check(
                "lambda = 0.207685",
                if ok { vec![] } else { vec![format!("lambda = {lambda}")] },
            ));
            checks.push(lowest_curve(lambda));
        }
        Err(e) => checks.push(check("lambda = 0.207685", vec![e.to_string()])),
    }
    checks.extend([
        bessel_and_tail(),
        reconstruction(),
        certificate_and_lemmas(),
        sin_sin_positive(),
    ]);
    checks
}
