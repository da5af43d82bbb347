//! Féjer-type trigonometric sums Σ f(g(kx))/k with f, g ∈ {sin, cos}.
//!
//! * [`series`]: direct evaluation of s_n, c_n and S_n^(1..4), digamma closed
//!   forms at π, 2π/3 and π/2, and endpoint behaviour.
//! * [`bessel`]: J_ν(1), the Bessel-series head/tail split of S_n^(4) and the
//!   tail bound B_m.
//! * [`certify`]: the stage-by-stage positivity certificate for
//!   S_n^(4)(x) > 0 on (0, π).
//! * [`spike`]: growth of the spikes of S^(1..3) and the jump of S^(4) near
//!   2π/3.
//! * [`cli`]: the `fejer` command line.

// `!(a < b)` guards are deliberate: they reject NaN alongside the ordinary case.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod accum;
pub mod bessel;
pub mod certify;
pub mod cli;
pub mod error;
pub mod format;
pub mod selftest;
pub mod series;
pub mod solve;
pub mod special;
pub mod spike;

pub use error::{Error, Result};
pub use series::SumKind;
