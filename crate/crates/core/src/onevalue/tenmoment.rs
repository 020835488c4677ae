//! Ten-moment reduction: Möbius inversion over `d | u` turns the coprime
//! sum over `v < u` into full sums over multiples `v = d t`, and each
//! `(u, y, d)` block reduces to ten weighted floor moments.

use std::ops::RangeInclusive;

use super::{check_n, f0};
use crate::arith::{Checked128, ExactInt};
use crate::error::{Error, Result};
use crate::kernels::{reversed_sums_ten, upto, ReversedSums10, Scalar};
use crate::sieves::{build_sieve, DivisorTable, SieveTables};

/// Largest `n` whose blocks are accumulated in unchecked `i128`.
const UNCHECKED_N: i128 = 1 << 22;

/// Active ranges shorter than this are summed directly.
const SHORT_RANGE: i64 = 32;

/// The moments used by [`r_uyd_in`], summed term by term.
#[inline(always)]
fn short_sums(lo: i64, hi: i64, top: i64, slope: i64, m: i64) -> ReversedSums10 {
    let mut s = ReversedSums10::default();
    for x in lo..=hi {
        let t = ((top - slope * x) / m) as i128;
        let x = x as i128;
        let (t2, xt) = (t * t, x * t);
        s.s01 += t;
        s.s11 += xt;
        s.s21 += x * xt;
        s.s02 += t2;
        s.s12 += x * t2;
        s.s22 += xt * xt;
        s.s13 += xt * t2;
    }
    s
}

/// `range_sum` over `lo..=hi` for `i <= 2`.
#[inline(always)]
fn span<T: Scalar>(i: u32, lo: i128, hi: i128) -> T {
    upto::<T>(i, hi) - upto::<T>(i, lo - 1)
}

/// `R_{u,y,d}`: the sum over `x >= y` and `t >= 1` with `d t < u` and
/// `x u + y d t <= n` of `mult(x, y) (n - x u - y d t)(n - x d t - y u)`.
pub(crate) fn r_uyd_raw(u: i128, y: i128, d: i128, n: i128) -> Result<i128> {
    if n <= UNCHECKED_N {
        r_uyd_in::<i128>(u as i64, y as i64, d as i64, n as i64)
    } else {
        r_uyd_in::<Checked128>(u as i64, y as i64, d as i64, n as i64)?.get().map_err(Into::into)
    }
}

#[inline(always)]
fn r_uyd_in<T: Scalar>(u: i64, y: i64, d: i64, n: i64) -> Result<T> {
    let t_cap = (u - 1) / d;
    let yd = y * d;
    if t_cap == 0 || n < yd {
        return Ok(T::ZERO);
    }
    let x_end = (n - yd) / u;
    if x_end < y {
        return Ok(T::ZERO);
    }
    let by = n - y * u;
    let cap_num = n - yd * t_cap;
    let x_cap = if cap_num < 0 { y - 1 } else { (cap_num / u).min(x_end) };

    let c = |v: i64| T::lift(v as i128);
    let w = |v: i128| T::lift(v);
    let (ni, ui, yi, di, tc) = (n as i128, u as i128, y as i128, d as i128, t_cap as i128);
    let (nc, byc) = (c(n), c(by));
    let mut total6 = T::ZERO;

    // Capped zone: every t <= T0 is admissible, polynomial in x.
    if x_cap >= y {
        let tt = tc * tc + tc;
        let cube = 2 * tc * tc * tc + 3 * tc * tc + tc;
        let k0 = nc * byc * w(6 * tc) - byc * w(3 * di * tt * yi);
        let k1 = w(cube) * w(yi * di * di) - byc * w(6 * tc * ui) - nc * w(3 * di * tt);
        let k2 = w(3 * di * tt * ui);
        let (lo, hi) = (y as i128, x_cap as i128);
        total6 = k0 * span(0, lo, hi) + k1 * span(1, lo, hi) + k2 * span(2, lo, hi);
    }

    // Active zone: T(x) = (n - u x) / (y d).
    let lo = y.max(x_cap + 1);
    if lo <= x_end {
        let s = if x_end - lo < SHORT_RANGE {
            short_sums(lo, x_end, n, u, yd)
        } else {
            reversed_sums_ten(lo as i128, x_end as i128, ni, ui, yd as i128)?
        };
        total6 = total6 + byc * w(6) * (nc * w(s.s01) - w(s.s11) * w(ui))
            + (w(s.s22 + s.s21) * w(ui) - nc * w(s.s12 + s.s11) - byc * w(yi) * w(s.s02 + s.s01)) * w(3 * di)
            + (w(s.s13) * w(2) + w(s.s12) * w(3) + w(s.s11)) * w(yi * di * di);
    }

    // Diagonal x = y carries multiplier 2 instead of 4.
    let t_diag = tc.min(((n - u * y) / yd) as i128);
    let p0 = byc * byc;
    let p1 = byc * w(2 * di * yi);
    let p2 = w(yi * yi * di * di);
    let td = t_diag;
    let diag6 = p0 * w(6 * td) - p1 * w(3 * (td * td + td)) + p2 * w(2 * td * td * td + 3 * td * td + td);

    Ok((total6 * w(4) - diag6 * w(2)).div_exact(6))
}

/// Public form of [`r_uyd_raw`] with precondition checks.
pub fn r_uyd(u: u64, y: u64, d: u64, n: u64) -> Result<ExactInt> {
    if u < 2 || y < 1 || y > n / u || d == 0 || u % d != 0 || d >= u {
        return Err(Error::Precondition(format!("invalid triple (u={u}, y={y}, d={d}) for n={n}")));
    }
    let mut k = d;
    let mut p = 2;
    while p * p <= k {
        if k % (p * p) == 0 {
            return Err(Error::Precondition(format!("d = {d} is not squarefree")));
        }
        if k % p == 0 {
            k /= p;
        }
        p += 1;
    }
    Ok(ExactInt::from_i128(r_uyd_raw(u as i128, y as i128, d as i128, n as i128)?))
}

/// `sum_{u in range} sum_y sum_{d | u} mu(d) R_{u,y,d}`. Blocks over disjoint
/// `u` ranges add up to `F1(n)`.
pub fn tenmoment_block(n: u64, us: RangeInclusive<u64>, divisors: &DivisorTable) -> Result<ExactInt> {
    let mut acc = ExactInt::ZERO;
    let ni = n as i128;
    for u in (*us.start()).max(2)..=(*us.end()).min(n) {
        let ds = divisors.get(u);
        let mut per_u = Checked128::ZERO;
        for y in 1..=n / u {
            for &sd in ds {
                let d = sd.unsigned_abs() as u64;
                if d == u || y * (u + d) > n {
                    continue;
                }
                let r = r_uyd_raw(u as i128, y as i128, d as i128, ni)?;
                per_u = if sd > 0 { per_u + r } else { per_u - r };
            }
        }
        acc.add_assign_checked(per_u.to_exact()?)?;
    }
    Ok(acc)
}

pub(crate) fn divisor_table_for(n: u64) -> Result<(SieveTables, DivisorTable)> {
    let tables = build_sieve(n)?;
    let divisors = DivisorTable::build(&tables);
    Ok((tables, divisors))
}

/// `O(n log^3 n)` ten-moment algorithm.
pub fn f_tenmoment(n: u64) -> Result<ExactInt> {
    check_n(n)?;
    let mut acc = f0(n);
    if n < 3 {
        return Ok(acc);
    }
    let (_, divisors) = divisor_table_for(n)?;
    acc.add_assign_checked(tenmoment_block(n, 2..=n, &divisors)?)?;
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn direct(u: i128, y: i128, d: i128, n: i128) -> i128 {
        let mut total = 0;
        for x in y..=n {
            let mut t = 1;
            while d * t < u && x * u + y * d * t <= n {
                let m = if x == y { 2 } else { 4 };
                total += m * (n - x * u - y * d * t) * (n - x * d * t - y * u);
                t += 1;
            }
        }
        total
    }

    #[test]
    fn examples() {
        assert_eq!(r_uyd(2, 1, 1, 4).unwrap(), ExactInt::from(2));
        assert_eq!(r_uyd(3, 1, 1, 4).unwrap(), ExactInt::ZERO);
        assert_eq!(r_uyd(2, 2, 1, 4).unwrap(), ExactInt::ZERO);
        assert!(r_uyd(12, 1, 4, 40).is_err());
        assert!(r_uyd(6, 1, 6, 40).is_err());
        assert_eq!(f_tenmoment(64).unwrap(), ExactInt::from(11114080));
        assert_eq!(f_tenmoment(1).unwrap(), ExactInt::ZERO);
    }

    #[test]
    fn r_matches_loop() {
        for n in 1..60i128 {
            for u in 2..=n {
                for y in 1..=n / u {
                    for d in 1..u {
                        if u % d == 0 {
                            assert_eq!(r_uyd_raw(u, y, d, n).unwrap(), direct(u, y, d, n), "({u},{y},{d},{n})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn blocks_sum_to_whole() {
        let n = 300;
        let (_, divisors) = divisor_table_for(n).unwrap();
        let whole = tenmoment_block(n, 2..=n, &divisors).unwrap();
        let mut parts = ExactInt::ZERO;
        for lo in (2..=n).step_by(37) {
            let part = tenmoment_block(n, lo..=(lo + 36).min(n), &divisors).unwrap();
            parts.add_assign_checked(part).unwrap();
        }
        assert_eq!(parts, whole);
    }
}
