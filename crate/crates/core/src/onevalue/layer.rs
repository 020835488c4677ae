//! Divisor-layer algorithm.
//!
//! Möbius inversion over the common divisor `d` of `(u, v)` gives
//! `F1(n) = sum_d mu(d) S_d(n)`, where the layer `S_d(n)` sums the
//! placement weight over all (not necessarily primitive) directions
//! `a > b >= 1` with `a x + b y <= N = n / d`. Inside a layer the tuples split
//! into `{x <= B}` and `{a <= B, x > B}` with `B = isqrt(N)`, and every piece is
//! a moment over the region `X >= Y >= 1, p X + q Y <= N` for a fixed small
//! pair `q < p <= B`.
//!
//! The layer is `n^2 Z0(N) - n d Z1(N) + d^2 Z2(N)`, where the `Z` depend only
//! on `N`; this is what makes grouping divisors by quotient possible.

use std::ops::RangeInclusive;

use super::{check_n, f0};
use crate::arith::{isqrt, upto_sum, Checked128, ExactInt};
use crate::error::{Error, Result};
use crate::kernels::{reversed_sums_six, ReversedSums6};
use crate::sieves::{build_sieve, SieveTables};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LayerOptions {
    /// Evaluate each distinct quotient `n / d` once and weight it by block
    /// sums of `mu(d)`, `d mu(d)` and `d^2 mu(d)`.
    pub group_quotients: bool,
}

/// `M_ij = sum X^i Y^j` over `X >= Y >= 1`, `p X + q Y <= N`, indexed as
/// `[M00, M10, M01, M20, M11, M02]`, plus the same sums restricted to `X <= B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairMoments {
    pub full: [i128; 6],
    pub capped: [i128; 6],
}

const IJ: [(u32, u32); 6] = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];

/// `6 P_i(W)` expressed through `W`, `W^2`, `W^3`.
#[inline]
fn six_upto_coeffs(i: u32) -> [i128; 3] {
    match i {
        0 => [6, 0, 0],
        1 => [3, 3, 0],
        _ => [1, 3, 2],
    }
}

/// `6 sum_Y Y^j P_i(W(Y))` from the reversed floor sums of `W`.
#[inline]
fn floor_part(s: &ReversedSums6, i: u32, j: u32) -> Checked128 {
    let by_power: [i128; 3] = match j {
        0 => [s.s01, s.s02, s.s03],
        1 => [s.s11, s.s12, 0],
        _ => [s.s21, 0, 0],
    };
    let k = six_upto_coeffs(i);
    let mut acc = Checked128::ZERO;
    for (c, v) in k.iter().zip(by_power) {
        if *c != 0 {
            acc = acc + Checked128::new(v) * *c;
        }
    }
    acc
}

/// `6 sum_{Y=1}^{T} Y^j P_i(Y - 1)`.
#[inline]
fn staircase_part(i: u32, j: u32, t: i128) -> Checked128 {
    let d = |k| upto_sum(k, t);
    match (i, j) {
        (0, 0) => (d(1) - d(0)) * 6,
        (1, 0) => (d(2) - d(1)) * 3,
        (0, 1) => (d(2) - d(1)) * 6,
        (2, 0) => d(3) * 2 - d(2) * 3 + d(1),
        (1, 1) => (d(3) - d(2)) * 3,
        _ => (d(3) - d(2)) * 6,
    }
}

/// Six-times-scaled moments for the pair `(p, q)`.
fn pair_moments6(p: i128, q: i128, n: i128, b: i128) -> Result<([Checked128; 6], [Checked128; 6])> {
    let t = n / (p + q);
    let s = reversed_sums_six(1, t, n, q, p)?;
    let mut full = [Checked128::ZERO; 6];
    for (k, &(i, j)) in IJ.iter().enumerate() {
        full[k] = floor_part(&s, i, j) - staircase_part(i, j, t);
    }

    // Capped at X <= B: W(Y) >= B exactly for Y <= (N - p B) / q.
    let tc = t.min(b);
    let split = if n >= p * b { ((n - p * b) / q).min(tc) } else { 0 };
    let sc = reversed_sums_six(split + 1, tc, n, q, p)?;
    let pb = [
        Checked128::new(6 * b),
        upto_sum(1, b) * 6,
        upto_sum(2, b) * 6,
    ];
    let mut capped = [Checked128::ZERO; 6];
    for (k, &(i, j)) in IJ.iter().enumerate() {
        capped[k] = pb[i as usize] * upto_sum(j, split) + floor_part(&sc, i, j) - staircase_part(i, j, tc);
    }
    Ok((full, capped))
}

/// Moments of the region `X >= Y >= 1, p X + q Y <= N` for `1 <= q < p`, with
/// the capped variant restricted to `X <= B`.
pub fn pair_moments(p: u64, q: u64, n_layer: u64, b: u64) -> Result<PairMoments> {
    if !(1 <= q && q < p) {
        return Err(Error::Precondition(format!("need 1 <= q < p, got ({p}, {q})")));
    }
    let (f, c) = pair_moments6(p as i128, q as i128, n_layer as i128, b as i128)?;
    let mut out = PairMoments { full: [0; 6], capped: [0; 6] };
    for k in 0..6 {
        out.full[k] = f[k].div_exact(6).get()?;
        out.capped[k] = c[k].div_exact(6).get()?;
    }
    Ok(out)
}

/// `[Z0, Z1, Z2]` of the layer with quotient `N`.
fn layer_coefficients(n: u64) -> Result<[ExactInt; 3]> {
    let n = n as i128;
    let b = isqrt(n as u64) as i128;
    let mut z = [ExactInt::ZERO; 3];
    for p in 2..=b {
        let mut zp = [Checked128::ZERO; 3];
        for q in 1..p {
            let (m, mc) = pair_moments6(p, q, n, b)?;
            let s = p + q;
            let t = n / s;
            let tc = t.min(b);
            // Weighted moment over the fixed pair, split by powers of (n, d).
            let phi = |m: &[Checked128; 6]| {
                [m[0], (m[1] + m[2]) * s, (m[3] + m[5]) * (p * q) + m[4] * (p * p + q * q)]
            };
            let delta = |t: i128| {
                [upto_sum(0, t) * 6, upto_sum(1, t) * (12 * s), upto_sum(2, t) * (6 * s * s)]
            };
            let (f, fc, dl, dc) = (phi(&m), phi(&mc), delta(t), delta(tc));
            for k in 0..3 {
                zp[k] = zp[k] + f[k] * 8 - dl[k] * 6 - fc[k] * 4 + dc[k] * 2;
            }
        }
        for k in 0..3 {
            z[k].add_assign_checked(zp[k].to_exact()?)?;
        }
    }

    // Square sides x = y = t <= B: floor((s - 1) / 2) direction pairs with a + b = s.
    let mut zd = [Checked128::ZERO; 3];
    for t in 1..=b {
        let k = n / t;
        let odd = (k - 1) / 2;
        let even = if k >= 2 { (k - 2) / 2 } else { 0 };
        let f = |e: u32| -> Checked128 {
            let u = |j, r| upto_sum(j, r);
            match e {
                0 => u(1, odd) + u(1, even),
                1 => u(2, odd) * 2 + u(1, odd) + u(2, even) * 2 + u(1, even) * 2,
                _ => u(3, odd) * 4 + u(2, odd) * 4 + u(1, odd) + u(3, even) * 4 + u(2, even) * 8 + u(1, even) * 4,
            }
        };
        zd[0] = zd[0] + f(0) * 12;
        zd[1] = zd[1] + f(1) * (24 * t);
        zd[2] = zd[2] + f(2) * (12 * t * t);
    }
    for k in 0..3 {
        z[k].add_assign_checked(zd[k].to_exact()?)?;
        let (quot, rem) = z[k].div_rem_floor(ExactInt::from(6))?;
        debug_assert_eq!(rem, ExactInt::ZERO);
        z[k] = quot;
    }
    Ok(z)
}

/// `n^2 Z0 - n c1 Z1 + c2 Z2`.
fn combine(n: u64, z: &[ExactInt; 3], c0: i128, c1: i128, c2: i128) -> Result<ExactInt> {
    let n = ExactInt::from(n);
    let t0 = n.checked_mul(n)?.checked_mul(z[0])?.checked_mul(ExactInt::from(c0))?;
    let t1 = n.checked_mul(ExactInt::from(c1))?.checked_mul(z[1])?;
    let t2 = ExactInt::from(c2).checked_mul(z[2])?;
    Ok(t0.checked_sub(t1)?.checked_add(t2)?)
}

/// `S_d(n)`: the primitive-free layer for the Möbius divisor `d`.
pub fn layer_sum(d: u64, n: u64, tables: &SieveTables) -> Result<ExactInt> {
    if d == 0 || d > n {
        return Err(Error::Precondition(format!("need 1 <= d <= n, got d = {d}, n = {n}")));
    }
    if d > tables.limit() {
        return Err(Error::OutOfRange { what: "d", value: d, limit: tables.limit() });
    }
    if tables.mu(d) == 0 {
        return Err(Error::Precondition(format!("mu({d}) = 0")));
    }
    let z = layer_coefficients(n / d)?;
    let d = d as i128;
    combine(n, &z, 1, d, d * d)
}

/// `sum_{d in range} mu(d) S_d(n)`. Blocks over disjoint `d` ranges add up
/// to `F1(n)`.
pub fn divisor_layer_block(
    n: u64,
    ds: RangeInclusive<u64>,
    tables: &SieveTables,
    opts: LayerOptions,
) -> Result<ExactInt> {
    let (lo, hi) = ((*ds.start()).max(1), (*ds.end()).min(n));
    if hi > tables.limit() {
        return Err(Error::OutOfRange { what: "d", value: hi, limit: tables.limit() });
    }
    let mut acc = ExactInt::ZERO;
    let mut d = lo;
    while d <= hi {
        let quotient = n / d;
        let end = if opts.group_quotients { (n / quotient).min(hi) } else { d };
        let (mut s0, mut s1, mut s2) = (0i128, 0i128, 0i128);
        for e in d..=end {
            let mu = tables.mu(e) as i128;
            let e = e as i128;
            s0 += mu;
            s1 += mu * e;
            s2 += mu * e * e;
        }
        if quotient >= 3 && (s0, s1, s2) != (0, 0, 0) {
            let z = layer_coefficients(quotient)?;
            acc.add_assign_checked(combine(n, &z, s0, s1, s2)?)?;
        }
        d = end + 1;
    }
    Ok(acc)
}

/// `O(n log^2 n)` divisor-layer algorithm.
pub fn f_divisorlayer(n: u64) -> Result<ExactInt> {
    f_divisorlayer_with(n, LayerOptions::default())
}

pub fn f_divisorlayer_with(n: u64, opts: LayerOptions) -> Result<ExactInt> {
    check_n(n)?;
    let mut acc = f0(n);
    if n < 3 {
        return Ok(acc);
    }
    let tables = build_sieve(n)?;
    acc.add_assign_checked(divisor_layer_block(n, 1..=n, &tables, opts)?)?;
    Ok(acc)
}
