use std::ops::{Add, Mul, Sub};

use crate::arith::Checked128;

/// Ring operations the kernel recursion needs.
///
/// `i128` is the unchecked fast path, only selected when the magnitude bound
/// of the query guarantees every intermediate fits. `Checked128` is the
/// fallback that reports overflow instead of wrapping.
pub trait Scalar:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + std::fmt::Debug
{
    const ZERO: Self;
    fn lift(v: i128) -> Self;
    /// Division by a small constant that is known to divide exactly.
    fn div_exact(self, d: i128) -> Self;
}

impl Scalar for i128 {
    const ZERO: Self = 0;

    #[inline(always)]
    fn lift(v: i128) -> Self {
        v
    }

    /// Shift out the even part of `d`, then multiply by the inverse of the odd
    /// part modulo `2^128`. Exact for any multiple of `d` and free of `__divti3`.
    #[inline(always)]
    fn div_exact(self, d: i128) -> Self {
        let shift = d.trailing_zeros();
        let q = (self >> shift).wrapping_mul(odd_inverse(d >> shift));
        debug_assert_eq!(q.checked_mul(d), Some(self));
        q
    }
}

/// Inverse of an odd `d` modulo `2^128` by Newton iteration.
#[inline(always)]
const fn odd_inverse(d: i128) -> i128 {
    let mut x = d;
    let mut i = 0;
    while i < 7 {
        x = x.wrapping_mul(2i128.wrapping_sub(d.wrapping_mul(x)));
        i += 1;
    }
    x
}

impl Scalar for Checked128 {
    const ZERO: Self = Checked128::ZERO;

    #[inline(always)]
    fn lift(v: i128) -> Self {
        Checked128::new(v)
    }

    #[inline(always)]
    fn div_exact(self, d: i128) -> Self {
        Checked128::div_exact(self, d)
    }
}

/// `[P_0(n), .., P_4(n)]` with `P_r(n) = sum_{x<n} x^r`.
#[inline(always)]
pub(crate) fn power_sums<T: Scalar>(n: i128, degree: u32) -> [T; 5] {
    let n = T::lift(n);
    let one = T::lift(1);
    let two = T::lift(2);
    let nm1 = n - one;
    let nn1 = n * nm1;
    let p1 = nn1.div_exact(2);
    let t = two * n - one;
    let p2 = (nn1 * t).div_exact(6);
    let p3 = p1 * p1;
    let p4 = if degree >= 4 {
        let three = T::lift(3);
        (nn1 * t * (three * n * n - three * n - one)).div_exact(30)
    } else {
        T::ZERO
    };
    [n, p1, p2, p3, p4]
}

/// `sum_{x=1}^{r} x^i` for `i <= 3`; zero when `r <= 0`.
#[inline(always)]
pub fn upto<T: Scalar>(i: u32, r: i128) -> T {
    if r <= 0 {
        return T::ZERO;
    }
    let r = T::lift(r);
    let one = T::lift(1);
    let t = (r * (r + one)).div_exact(2);
    match i {
        0 => r,
        1 => t,
        2 => (t * (T::lift(2) * r + one)).div_exact(3),
        _ => t * t,
    }
}
