//! Compensated accumulation and accurate phase reduction.
//!
//! Every sum in this crate is a long series of O(1/k) terms, so the two
//! things that decide accuracy at large `n` are the summation error and the
//! phase error in `k * x`. Both are handled here.

use std::f64::consts::TAU;

/// Low part of 2π: `TAU + TAU_LO` carries about 107 bits of 2π.
const TAU_LO: f64 = 2.449_293_598_294_706_4e-16;
const INV_TAU: f64 = 1.0 / TAU;

/// Neumaier's variant of Kahan summation.
///
/// The compensation term also captures the error when an addend is larger
/// in magnitude than the running sum, which plain Kahan summation drops.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of an iterator of terms.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    terms.into_iter().collect::<CompensatedSum>().value()
}

/// Returns `j * x` reduced to roughly `[-π, π]`.
///
/// The product is formed exactly as a double-double with an FMA and the
/// multiple of 2π is removed using a two-part split of 2π, so the result is
/// accurate to a few ulps of π for `j` up to 2^53 and moderate `x`.
#[inline]
pub fn reduced_phase(j: u64, x: f64) -> f64 {
    let jf = j as f64;
    let p = jf * x;
    let p_err = jf.mul_add(x, -p);
    let q = (p * INV_TAU).round();
    let r = q.mul_add(-TAU, p);
    let r = q.mul_add(-TAU_LO, r);
    r + p_err
}
