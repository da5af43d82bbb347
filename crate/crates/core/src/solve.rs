//! Bracketing root finder and one-dimensional maximiser.

use crate::error::{Error, Result};

/// A root bracketed to the resolution of `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Bisection on `[lo, hi]` until the bracket cannot be split any further
/// (adjacent doubles) or `abs_tol` is reached.
///
/// Relative resolution is kept all the way down, so roots of size 1e-30
/// come back with full precision. Pass `abs_tol = 0.0` for that.
pub fn bisect<F>(mut f: F, lo: f64, hi: f64, abs_tol: f64, context: &str) -> Result<Bracket>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(Bracket { lo: a, hi: a });
    }
    if fb == 0.0 {
        return Ok(Bracket { lo: b, hi: b });
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::BracketFailure {
            lo: a,
            hi: b,
            context: context.to_string(),
        });
    }
    loop {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b || b - a <= abs_tol {
            return Ok(Bracket { lo: a, hi: b });
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(Bracket { lo: mid, hi: mid });
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximum of a unimodal function on
/// `[lo, hi]`. Returns `(argmax, max)`.
pub fn golden_max<F>(mut f: F, lo: f64, hi: f64, abs_tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > abs_tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        if c >= d {
            break;
        }
    }
    // The endpoints are candidates too: the bracket may sit at a boundary.
    [(a, f(a)), (b, f(b)), (c, fc), (d, fd)]
        .into_iter()
        .fold((f64::NAN, f64::NEG_INFINITY), |best, cand| {
            if cand.1 > best.1 {
                cand
            } else {
                best
            }
        })
}

/// Maximum of `f` on `[lo, hi]`: dense grid of `points` samples followed by
/// golden-section refinement in the cells either side of the best sample.
pub fn grid_max<F>(mut f: F, lo: f64, hi: f64, points: usize, abs_tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    assert!(points >= 2, "grid needs at least two points");
    let step = (hi - lo) / (points - 1) as f64;
    let (best_i, _) = (0..points)
        .map(|i| (i, f(lo + step * i as f64)))
        .fold((0, f64::NEG_INFINITY), |best, cand| {
            if cand.1 > best.1 {
                cand
            } else {
                best
            }
        });
    let a = lo + step * best_i.saturating_sub(1) as f64;
    let b = (lo + step * (best_i + 1) as f64).min(hi);
    golden_max(f, a, b, abs_tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt_two() {
        let br = bisect(|x| x * x - 2.0, 0.0, 2.0, 0.0, "sqrt2").unwrap();
        assert!((br.midpoint() - std::f64::consts::SQRT_2).abs() < 4e-16);
        assert!(br.width() <= 2.0 * f64::EPSILON);
    }

    #[test]
    fn bisect_keeps_relative_precision_for_tiny_roots() {
        let root = 3.336_907_576e-30;
        let br = bisect(|x| x - root, root / 10.0, root * 10.0, 0.0, "tiny").unwrap();
        assert!((br.midpoint() - root).abs() / root < 1e-15);
    }

    #[test]
    fn bisect_reports_missing_sign_change() {
        let err = bisect(|x| x * x + 1.0, -1.0, 1.0, 0.0, "no root").unwrap_err();
        assert!(matches!(err, Error::BracketFailure { .. }));
    }

    #[test]
    fn golden_section_on_parabola() {
        let (x, y) = golden_max(|x| -(x - 0.3) * (x - 0.3) + 2.0, -1.0, 1.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-7);
        assert!((y - 2.0).abs() < 1e-15);
    }

    #[test]
    fn grid_max_finds_global_peak_of_multimodal() {
        let f = |x: f64| (5.0 * x).sin() + 0.1 * x;
        let (x, _) = grid_max(f, 0.0, 6.0, 600, 1e-12);
        // global maximum: the last crest, 5x = π/2 + 2π·2 minus a tiny shift
        assert!((x - (std::f64::consts::FRAC_PI_2 + 8.0 * std::f64::consts::PI) / 5.0).abs() < 1e-2);
    }
}
