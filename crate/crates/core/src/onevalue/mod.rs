//! One-value algorithms for `F(n)`, the number of lattice rectangles (tilted
//! ones included) with all four corners in `[0, n) x [0, n)`.
//!
//! Every algorithm splits `F = F0 + F1`. `F0` covers axis-parallel
//! rectangles and the diagonal direction `(1, 1)` in closed form; `F1` sums
//!
//! ```text
//! mult(x, y) * (n - x u - y v) * (n - x v - y u)
//! ```
//!
//! over primitive directions `u > v >= 1` and side multipliers `x >= y >= 1`
//! with `x u + y v <= n`, where `mult` is 2 on the diagonal `x = y` and 4 off it.

mod baseline;
mod decomposition;
mod layer;
mod tenmoment;

pub use baseline::f_baseline;
pub use decomposition::{direction_contribution, f_cuberoot, f_sqrt};
pub use layer::{
    divisor_layer_block, f_divisorlayer, f_divisorlayer_with, layer_sum, pair_moments, LayerOptions,
    PairMoments,
};
pub use tenmoment::{f_tenmoment, r_uyd, tenmoment_block};

use crate::arith::ExactInt;
use crate::error::{Error, Result};

/// Largest grid side accepted by the one-value algorithms.
pub const MAX_N: u64 = 1 << 30;

pub(crate) fn check_n(n: u64) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::OutOfRange { what: "n", value: n, limit: MAX_N });
    }
    Ok(())
}

/// Axis-parallel rectangles plus the `(1, 1)` direction:
/// `n^2 (n-1)^2 / 4 + n (n-1)^2 (n-2) / 12`.
pub fn f0(n: u64) -> ExactInt {
    let n = n as i128;
    if n < 2 {
        return ExactInt::ZERO;
    }
    let sq = n * (n - 1);
    let axis = ExactInt::from_i128(sq / 2).checked_mul(ExactInt::from_i128(sq / 2)).unwrap();
    let diagonal = ExactInt::from_i128(sq * (n - 1) * (n - 2) / 12);
    axis.checked_add(diagonal).unwrap()
}

/// `mult(x, y)`: 2 for square side pairs, 4 otherwise.
#[inline]
pub fn mult(x: u64, y: u64) -> i128 {
    if x == y {
        2
    } else {
        4
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f0_examples() {
        assert_eq!(f0(1), ExactInt::ZERO);
        assert_eq!(f0(2), ExactInt::from(1));
        assert_eq!(f0(4), ExactInt::from(42));
        assert_eq!(f0(3), ExactInt::from(10));
    }

    #[test]
    fn f0_matches_direct_count() {
        for n in 1..60i128 {
            let pairs = n * (n - 1) / 2;
            let mut diagonal = 0;
            for a in 1..n {
                for b in 1..n - a {
                    diagonal += (n - a - b) * (n - a - b);
                }
            }
            assert_eq!(f0(n as u64), ExactInt::from(pairs * pairs + diagonal), "n = {n}");
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(check_n(0).is_err());
        assert!(check_n(MAX_N + 1).is_err());
        assert!(check_n(MAX_N).is_ok());
    }
}
