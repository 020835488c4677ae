//! Weighted floor-sum kernels.
//!
//! `H_{p,q}(n; m, a, b) = sum_{x=0}^{n-1} x^p floor((a x + b) / m)^q`, evaluated
//! for a whole closed family of `(p, q)` at once by Euclidean descent: an
//! affine step reduces `a` and `b` modulo `m`, and a reciprocal step transposes
//! the staircase, replacing `(n; m, a, b)` by `(Y; a, m, m - b - 1)`.

mod scalar;
mod six;
mod ten;

pub use scalar::{upto, Scalar};
pub use six::MomentVector6;
pub use ten::MomentVector10;

use arrayvec::ArrayVec;

use crate::arith::{Checked128, ExactInt};
use crate::error::{ArithError, Error, Result};
use scalar::power_sums;

/// Parameters `(n; m, a, b)` of one kernel evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelQuery {
    pub n: i128,
    pub m: i128,
    pub a: i128,
    pub b: i128,
}

impl KernelQuery {
    pub fn new(n: i128, m: i128, a: i128, b: i128) -> Result<Self> {
        let q = KernelQuery { n, m, a, b };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        if self.m < 1 {
            return Err(Error::InvalidModulus);
        }
        for (name, v) in [("n", self.n), ("a", self.a), ("b", self.b)] {
            if v < 0 {
                return Err(Error::NegativeParameter(name));
            }
        }
        Ok(())
    }
}

/// Evaluation switches. The defaults are what the algorithms use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelOptions {
    /// Use the specialised affine updates when the offset quotient is zero.
    pub fast_paths: bool,
    /// Always unwind in overflow-checked arithmetic.
    pub checked_only: bool,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions { fast_paths: true, checked_only: false }
    }
}

/// A closed moment family and its update rules.
pub trait Family<T: Scalar>: Copy {
    /// The `(p, q)` indices held by the family.
    const STATES: &'static [(u32, u32)];
    /// Largest `p + q`.
    const DEGREE: u32;
    /// Unchecked `i128` unwinding is used when every parameter and floor value
    /// of the query is at most this.
    const FAST_LIMIT: i128;

    /// Moments of the constant floor `c`; `p` are the power sums at `n`.
    fn constant(c: T, p: &[T; 5]) -> Self;
    fn zero() -> Self;
    /// Moments for `(a + A m, b + B m)` from those for `(a, b)`.
    fn affine(self, a: T, b: T, p: &[T; 5]) -> Self;
    /// `affine` with `B = 0`.
    fn affine_slope_only(self, a: T, p: &[T; 5]) -> Self;
    /// `affine` with `A = 1, B = 0`.
    fn affine_unit_slope(self, p: &[T; 5]) -> Self;
    /// Moments at `n` from the transposed moments at `y`; `p`, `q` are the
    /// power sums at `n` and `y`.
    fn reciprocal(self, n: T, y: T, p: &[T; 5], q: &[T; 5]) -> Self;
}

// Euclidean descent on 127-bit parameters needs at most ~185 levels.
const MAX_LEVELS: usize = 192;

#[derive(Clone, Copy, Default)]
struct Level {
    n: i128,
    quot_a: i128,
    quot_b: i128,
    has_affine: bool,
    /// `Y` of the reciprocal step taken below this level, if any.
    recip: Option<i128>,
}

enum Leaf {
    Zero,
    Constant(i128),
}

type Levels = ArrayVec<Level, MAX_LEVELS>;

fn checked(v: Option<i128>) -> Result<i128> {
    v.ok_or(Error::Arith(ArithError::Overflow))
}

/// Runs the descent, recording one level per affine/reciprocal pair, and
/// returns the size and kind of the terminal query.
fn descend(q: KernelQuery, levels: &mut Levels) -> Result<(i128, Leaf)> {
    const NARROW: i128 = 1 << 31;
    if q.n < NARROW && q.m < NARROW && q.a < NARROW && q.b < NARROW {
        return Ok(descend_narrow(q, levels));
    }
    let (mut n, mut m, mut a, mut b) = (q.n, q.m, q.a, q.b);
    loop {
        if n <= 1 || a == 0 {
            let leaf = if n == 0 { Leaf::Zero } else { Leaf::Constant(b / m) };
            return Ok((n, leaf));
        }
        let mut level = Level { n, ..Level::default() };
        if a >= m || b >= m {
            level.has_affine = true;
            level.quot_a = a / m;
            level.quot_b = b / m;
            a %= m;
            b %= m;
        }
        let y = if a == 0 {
            0
        } else {
            checked(a.checked_mul(n - 1).and_then(|t| t.checked_add(b)))? / m
        };
        if y > 0 {
            level.recip = Some(y);
        }
        levels.push(level);
        if y == 0 {
            return Ok((n, Leaf::Zero));
        }
        let next_b = m - b - 1;
        (n, m, a, b) = (y, a, m, next_b);
    }
}

/// [`descend`] in 64-bit arithmetic; every parameter stays below `2^31`.
fn descend_narrow(q: KernelQuery, levels: &mut Levels) -> (i128, Leaf) {
    let (mut n, mut m, mut a, mut b) = (q.n as u64, q.m as u64, q.a as u64, q.b as u64);
    loop {
        if n <= 1 || a == 0 {
            let leaf = if n == 0 { Leaf::Zero } else { Leaf::Constant((b / m) as i128) };
            return (n as i128, leaf);
        }
        let mut level = Level { n: n as i128, ..Level::default() };
        if a >= m || b >= m {
            level.has_affine = true;
            level.quot_a = (a / m) as i128;
            level.quot_b = (b / m) as i128;
            a %= m;
            b %= m;
        }
        let y = if a == 0 { 0 } else { (a * (n - 1) + b) / m };
        if y > 0 {
            level.recip = Some(y as i128);
        }
        levels.push(level);
        if y == 0 {
            return (n as i128, Leaf::Zero);
        }
        (n, m, a, b) = (y, a, m, m - b - 1);
    }
}

fn unwind<T: Scalar, F: Family<T>>(levels: &Levels, leaf_n: i128, leaf: &Leaf, fast_paths: bool) -> F {
    // Power sums at the size of the level below the current one.
    let mut below_sums = power_sums::<T>(leaf_n, F::DEGREE);
    let mut v = match *leaf {
        Leaf::Zero => F::zero(),
        Leaf::Constant(c) => F::constant(T::lift(c), &below_sums),
    };
    let mut below: i128 = leaf_n;
    for level in levels.iter().rev() {
        let p = power_sums::<T>(level.n, F::DEGREE);
        match level.recip {
            Some(y) => {
                debug_assert_eq!(y, below);
                v = v.reciprocal(T::lift(level.n), T::lift(y), &p, &below_sums);
            }
            None => v = F::zero(),
        }
        if level.has_affine {
            v = if fast_paths && level.quot_b == 0 {
                if level.quot_a == 1 {
                    v.affine_unit_slope(&p)
                } else {
                    v.affine_slope_only(T::lift(level.quot_a), &p)
                }
            } else {
                v.affine(T::lift(level.quot_a), T::lift(level.quot_b), &p)
            };
        }
        below = level.n;
        below_sums = p;
    }
    v
}

/// Largest magnitude among `n` and the floor values of the query.
fn magnitude(q: &KernelQuery) -> Option<i128> {
    if q.n == 0 {
        return Some(0);
    }
    let top = q.a.checked_mul(q.n - 1)?.checked_add(q.b)? / q.m;
    Some(q.n.max(top.checked_add(1)?))
}

/// Result of a kernel evaluation together with the number of descent levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Traced<V> {
    pub value: V,
    pub depth: usize,
}

macro_rules! family_eval {
    ($vec:ident, $traced:ident, $with:ident, $plain:ident) => {
        pub fn $traced(q: KernelQuery, opts: KernelOptions) -> Result<Traced<$vec>> {
            q.validate()?;
            let mut levels = Levels::new();
            let (leaf_n, leaf) = descend(q, &mut levels)?;
            let fast = !opts.checked_only
                && matches!(magnitude(&q), Some(v) if v <= <$vec<i128> as Family<i128>>::FAST_LIMIT);
            let value = if fast {
                unwind::<i128, $vec<i128>>(&levels, leaf_n, &leaf, opts.fast_paths)
            } else {
                let v = unwind::<Checked128, $vec<Checked128>>(&levels, leaf_n, &leaf, opts.fast_paths);
                let mut failed = false;
                let out = v.map(|c| c.get().unwrap_or_else(|_| {
                    failed = true;
                    0
                }));
                if failed {
                    return Err(ArithError::Overflow.into());
                }
                out
            };
            Ok(Traced { value, depth: levels.len() })
        }

        pub fn $with(q: KernelQuery, opts: KernelOptions) -> Result<$vec> {
            $traced(q, opts).map(|t| t.value)
        }

        pub fn $plain(q: KernelQuery) -> Result<$vec> {
            $with(q, KernelOptions::default())
        }
    };
}

family_eval!(MomentVector6, eval_six_traced, eval_six_with, eval_six);
family_eval!(MomentVector10, eval_ten_traced, eval_ten_with, eval_ten);

/// `sum_{x=L}^{R} x^p floor((top - slope x) / m)^q` for the six-moment family,
/// named `s{p}{q}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReversedSums6 {
    pub s01: i128,
    pub s11: i128,
    pub s21: i128,
    pub s02: i128,
    pub s12: i128,
    pub s03: i128,
}

/// As [`ReversedSums6`] for the ten-moment family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReversedSums10 {
    pub s01: i128,
    pub s11: i128,
    pub s21: i128,
    pub s31: i128,
    pub s02: i128,
    pub s12: i128,
    pub s22: i128,
    pub s03: i128,
    pub s13: i128,
    pub s04: i128,
}

/// Re-indexes `x = R - t` so the floor argument has nonnegative slope.
fn reversed_query(l: i128, r: i128, top: i128, slope: i128, m: i128) -> Result<Option<KernelQuery>> {
    if l > r {
        return Ok(None);
    }
    if slope < 0 {
        return Err(Error::NegativeParameter("slope"));
    }
    let low = checked(slope.checked_mul(r).and_then(|t| top.checked_sub(t)))?;
    if low < 0 {
        return Err(Error::Precondition(format!(
            "floor argument {low} is negative at x = {r}"
        )));
    }
    KernelQuery::new(r - l + 1, m, slope, low).map(Some)
}

/// Whether the sign-reversal combination of a query can run unchecked.
fn reversal_fits(q: &KernelQuery, r: i128, limit: i128) -> bool {
    r.abs() <= limit && matches!(magnitude(q), Some(v) if v <= limit)
}

fn reverse6<T: Scalar>(h: MomentVector6<T>, r: T) -> MomentVector6<T> {
    let two = T::lift(2);
    let r2 = r * r;
    MomentVector6 {
        h01: h.h01,
        h11: r * h.h01 - h.h11,
        h21: r2 * h.h01 - two * r * h.h11 + h.h21,
        h02: h.h02,
        h12: r * h.h02 - h.h12,
        h03: h.h03,
    }
}

fn reverse10<T: Scalar>(h: MomentVector10<T>, r: T) -> MomentVector10<T> {
    let two = T::lift(2);
    let three = T::lift(3);
    let r2 = r * r;
    MomentVector10 {
        h01: h.h01,
        h11: r * h.h01 - h.h11,
        h21: r2 * h.h01 - two * r * h.h11 + h.h21,
        h31: r2 * r * h.h01 - three * r2 * h.h11 + three * r * h.h21 - h.h31,
        h02: h.h02,
        h12: r * h.h02 - h.h12,
        h22: r2 * h.h02 - two * r * h.h12 + h.h22,
        h03: h.h03,
        h13: r * h.h03 - h.h13,
        h04: h.h04,
    }
}

/// Unwraps a checked vector, reporting overflow in any component.
fn settle<V>(map: impl FnOnce(&mut dyn FnMut(Checked128) -> i128) -> V) -> Result<V> {
    let mut overflow = false;
    let v = map(&mut |c: Checked128| {
        overflow |= c.is_overflow();
        c.get().unwrap_or(0)
    });
    if overflow {
        return Err(ArithError::Overflow.into());
    }
    Ok(v)
}

pub fn reversed_sums_six(l: i128, r: i128, top: i128, slope: i128, m: i128) -> Result<ReversedSums6> {
    let Some(q) = reversed_query(l, r, top, slope, m)? else {
        return Ok(ReversedSums6::default());
    };
    let h = eval_six(q)?;
    let s = if reversal_fits(&q, r, <MomentVector6 as Family<i128>>::FAST_LIMIT) {
        reverse6(h, r)
    } else {
        let c = reverse6(h.map(Checked128::new), Checked128::new(r));
        settle(|f| c.map(f))?
    };
    Ok(ReversedSums6 { s01: s.h01, s11: s.h11, s21: s.h21, s02: s.h02, s12: s.h12, s03: s.h03 })
}

pub fn reversed_sums_ten(l: i128, r: i128, top: i128, slope: i128, m: i128) -> Result<ReversedSums10> {
    let Some(q) = reversed_query(l, r, top, slope, m)? else {
        return Ok(ReversedSums10::default());
    };
    let h = eval_ten(q)?;
    let s = if reversal_fits(&q, r, <MomentVector10 as Family<i128>>::FAST_LIMIT) {
        reverse10(h, r)
    } else {
        let c = reverse10(h.map(Checked128::new), Checked128::new(r));
        settle(|f| c.map(f))?
    };
    Ok(ReversedSums10 {
        s01: s.h01,
        s11: s.h11,
        s21: s.h21,
        s31: s.h31,
        s02: s.h02,
        s12: s.h12,
        s22: s.h22,
        s03: s.h03,
        s13: s.h13,
        s04: s.h04,
    })
}

/// `sum_{x=L}^{R} x^p floor((top - slope x) / m)^q` for `q >= 1`, `p + q <= 4`.
///
/// An empty range gives zero. The floor argument must be nonnegative on the
/// whole range.
pub fn reversed_floor_moment(
    p: u32,
    q: u32,
    l: i128,
    r: i128,
    top: i128,
    slope: i128,
    m: i128,
) -> Result<ExactInt> {
    if q == 0 || p + q > 4 {
        return Err(Error::Precondition(format!("moment ({p},{q}) is outside the kernel families")));
    }
    if l > r {
        return Ok(ExactInt::ZERO);
    }
    let v = if p + q <= 3 {
        let s = reversed_sums_six(l, r, top, slope, m)?;
        match (p, q) {
            (0, 1) => s.s01,
            (1, 1) => s.s11,
            (2, 1) => s.s21,
            (0, 2) => s.s02,
            (1, 2) => s.s12,
            _ => s.s03,
        }
    } else {
        let s = reversed_sums_ten(l, r, top, slope, m)?;
        match (p, q) {
            (3, 1) => s.s31,
            (2, 2) => s.s22,
            (1, 3) => s.s13,
            _ => s.s04,
        }
    };
    Ok(ExactInt::from_i128(v))
}
