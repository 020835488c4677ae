//! Exact integer arithmetic.
//!
//! [`ExactInt`] is the accumulator type for every final count. It is a fixed
//! 256-bit signed integer whose arithmetic is checked: an operation that would
//! leave the representable range returns [`ArithError::Overflow`] instead of
//! wrapping. [`Checked128`] is the matching sticky-overflow 128-bit type used
//! for the intermediate algebra around the floor-sum kernels.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use ethnum::I256;

use crate::error::ArithError;

/// Signed exact integer with 256 bits of capacity and checked arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactInt(I256);

impl ExactInt {
    pub const ZERO: ExactInt = ExactInt(I256::ZERO);
    pub const ONE: ExactInt = ExactInt(I256::ONE);

    pub const fn from_i128(v: i128) -> Self {
        ExactInt(I256::new(v))
    }

    pub fn checked_add(self, rhs: ExactInt) -> Result<ExactInt, ArithError> {
        self.0.checked_add(rhs.0).map(ExactInt).ok_or(ArithError::Overflow)
    }

    pub fn checked_sub(self, rhs: ExactInt) -> Result<ExactInt, ArithError> {
        self.0.checked_sub(rhs.0).map(ExactInt).ok_or(ArithError::Overflow)
    }

    pub fn checked_mul(self, rhs: ExactInt) -> Result<ExactInt, ArithError> {
        self.0.checked_mul(rhs.0).map(ExactInt).ok_or(ArithError::Overflow)
    }

    pub fn checked_neg(self) -> Result<ExactInt, ArithError> {
        self.0.checked_neg().map(ExactInt).ok_or(ArithError::Overflow)
    }

    /// Adds `rhs` into `self` in place.
    pub fn add_assign_checked(&mut self, rhs: ExactInt) -> Result<(), ArithError> {
        *self = self.checked_add(rhs)?;
        Ok(())
    }

    /// Floor division and the matching nonnegative remainder, for a positive divisor.
    pub fn div_rem_floor(self, divisor: ExactInt) -> Result<(ExactInt, ExactInt), ArithError> {
        if divisor.0 <= I256::ZERO {
            return Err(ArithError::DivisionByZero);
        }
        let q = self.0.div_euclid(divisor.0);
        let r = self.0.rem_euclid(divisor.0);
        Ok((ExactInt(q), ExactInt(r)))
    }

    pub fn is_negative(self) -> bool {
        self.0 < I256::ZERO
    }

    pub fn signum(self) -> i32 {
        self.0.signum().as_i32()
    }

    /// Returns the value as `i128` when it fits.
    pub fn to_i128(self) -> Option<i128> {
        i128::try_from(self.0).ok()
    }

    /// Nearest `f64` (lossy for magnitudes beyond 2^53).
    pub fn to_f64(self) -> f64 {
        self.0.as_f64()
    }

    /// Canonical base-10 representation.
    pub fn to_decimal(self) -> String {
        self.0.to_string()
    }

    /// Parses a canonical decimal string: optional `-`, no leading zeros, no `-0`.
    pub fn parse_decimal(s: &str) -> Result<ExactInt, ArithError> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        let canonical = !digits.is_empty()
            && digits.bytes().all(|c| c.is_ascii_digit())
            && (digits == "0" || !digits.starts_with('0'))
            && !(digits == "0" && s.starts_with('-'));
        if !canonical {
            return Err(ArithError::Parse(s.to_string()));
        }
        I256::from_str(s)
            .map(ExactInt)
            .map_err(|_| ArithError::Parse(s.to_string()))
    }

    /// Number of decimal digits of the magnitude.
    pub fn digit_count(self) -> usize {
        let s = self.to_decimal();
        s.trim_start_matches('-').len()
    }
}

impl From<i128> for ExactInt {
    fn from(v: i128) -> Self {
        ExactInt::from_i128(v)
    }
}

impl From<i64> for ExactInt {
    fn from(v: i64) -> Self {
        ExactInt::from_i128(v as i128)
    }
}

impl From<u64> for ExactInt {
    fn from(v: u64) -> Self {
        ExactInt::from_i128(v as i128)
    }
}

impl From<i32> for ExactInt {
    fn from(v: i32) -> Self {
        ExactInt::from_i128(v as i128)
    }
}

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactInt({})", self.0)
    }
}

impl FromStr for ExactInt {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExactInt::parse_decimal(s)
    }
}

/// Canonical decimal string of `x`.
pub fn to_decimal(x: ExactInt) -> String {
    x.to_decimal()
}

/// 128-bit integer with a sticky overflow flag.
///
/// Arithmetic never panics; once an operation overflows the value becomes
/// poisoned and [`Checked128::get`] reports [`ArithError::Overflow`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Checked128(Option<i128>);

impl Checked128 {
    pub const ZERO: Checked128 = Checked128(Some(0));
    pub const OVERFLOW: Checked128 = Checked128(None);

    #[inline]
    pub const fn new(v: i128) -> Self {
        Checked128(Some(v))
    }

    #[inline]
    pub fn get(self) -> Result<i128, ArithError> {
        self.0.ok_or(ArithError::Overflow)
    }

    #[inline]
    pub fn is_overflow(self) -> bool {
        self.0.is_none()
    }

    /// Exact division by a small positive constant. A nonzero remainder poisons
    /// the value, since callers only divide where the quotient is integral.
    #[inline]
    pub fn div_exact(self, d: i128) -> Self {
        match self.0 {
            Some(v) if v % d == 0 => Checked128(Some(v / d)),
            _ => Checked128(None),
        }
    }

    #[inline]
    pub fn to_exact(self) -> Result<ExactInt, ArithError> {
        self.get().map(ExactInt::from_i128)
    }
}

impl From<i128> for Checked128 {
    #[inline]
    fn from(v: i128) -> Self {
        Checked128(Some(v))
    }
}

impl From<i64> for Checked128 {
    #[inline]
    fn from(v: i64) -> Self {
        Checked128(Some(v as i128))
    }
}

impl From<u64> for Checked128 {
    #[inline]
    fn from(v: u64) -> Self {
        Checked128(Some(v as i128))
    }
}

macro_rules! checked_binop {
    ($trait:ident, $method:ident, $op:ident) => {
        impl $trait for Checked128 {
            type Output = Checked128;
            #[inline]
            fn $method(self, rhs: Checked128) -> Checked128 {
                match (self.0, rhs.0) {
                    (Some(a), Some(b)) => Checked128(a.$op(b)),
                    _ => Checked128(None),
                }
            }
        }

        impl $trait<i128> for Checked128 {
            type Output = Checked128;
            #[inline]
            fn $method(self, rhs: i128) -> Checked128 {
                match self.0 {
                    Some(a) => Checked128(a.$op(rhs)),
                    None => Checked128(None),
                }
            }
        }

        impl $trait<Checked128> for i128 {
            type Output = Checked128;
            #[inline]
            fn $method(self, rhs: Checked128) -> Checked128 {
                match rhs.0 {
                    Some(b) => Checked128(self.$op(b)),
                    None => Checked128(None),
                }
            }
        }
    };
}

checked_binop!(Add, add, checked_add);
checked_binop!(Sub, sub, checked_sub);
checked_binop!(Mul, mul, checked_mul);

impl Neg for Checked128 {
    type Output = Checked128;
    #[inline]
    fn neg(self) -> Checked128 {
        Checked128(self.0.and_then(i128::checked_neg))
    }
}

/// `P_r(n) = sum_{x=0}^{n-1} x^r` for `r <= 4`, by closed form.
pub fn power_sum(r: u32, n: u64) -> Result<ExactInt, ArithError> {
    if r > 4 {
        return Err(ArithError::UnsupportedDegree(r));
    }
    let n = ExactInt::from(n);
    let one = ExactInt::ONE;
    let small = |v: i128| ExactInt::from_i128(v);
    let nm1 = n.checked_sub(one)?;
    let p1 = n.checked_mul(nm1)?.div_rem_floor(small(2))?.0;
    Ok(match r {
        0 => n,
        1 => p1,
        2 => {
            let t = small(2).checked_mul(n)?.checked_sub(one)?;
            n.checked_mul(nm1)?.checked_mul(t)?.div_rem_floor(small(6))?.0
        }
        3 => p1.checked_mul(p1)?,
        _ => {
            let t = small(2).checked_mul(n)?.checked_sub(one)?;
            let nn = n.checked_mul(n)?;
            let u = small(3)
                .checked_mul(nn)?
                .checked_sub(small(3).checked_mul(n)?)?
                .checked_sub(one)?;
            n.checked_mul(nm1)?
                .checked_mul(t)?
                .checked_mul(u)?
                .div_rem_floor(small(30))?
                .0
        }
    })
}

/// `sum_{x=1}^{r} x^i` for `i <= 3` and `r >= 0`, in checked 128-bit arithmetic.
/// Negative `r` is treated as an empty range.
#[inline]
pub fn upto_sum(i: u32, r: i128) -> Checked128 {
    if r <= 0 {
        return Checked128::ZERO;
    }
    let r = Checked128::new(r);
    match i {
        0 => r,
        1 => (r * (r + 1)).div_exact(2),
        2 => (r * (r + 1) * (r * 2 + 1)).div_exact(6),
        3 => {
            let t = (r * (r + 1)).div_exact(2);
            t * t
        }
        _ => Checked128::OVERFLOW,
    }
}

/// `sum_{x=lo}^{hi} x^i` for `1 <= lo`; empty when `hi < lo`.
#[inline]
pub fn range_sum(i: u32, lo: i128, hi: i128) -> Checked128 {
    if hi < lo {
        return Checked128::ZERO;
    }
    upto_sum(i, hi) - upto_sum(i, lo - 1)
}

/// Largest `r` with `r * r <= n`.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while (r as u128) * (r as u128) > n as u128 {
        r -= 1;
    }
    while ((r + 1) as u128) * ((r + 1) as u128) <= n as u128 {
        r += 1;
    }
    r
}

/// Largest `r` with `r^3 <= n^2`, i.e. `floor(n^(2/3))`.
pub fn floor_two_thirds_power(n: u64) -> u64 {
    let target = (n as u128) * (n as u128);
    let mut r = (n as f64).powf(2.0 / 3.0) as u128;
    while r > 0 && r * r * r > target {
        r -= 1;
    }
    while (r + 1) * (r + 1) * (r + 1) <= target {
        r += 1;
    }
    r as u64
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
