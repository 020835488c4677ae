//! Every value `F(1..=N)` at once.
//!
//! Each tuple `(a, b, x, y)` with `a > b >= 1`, `x >= y >= 1` has an
//! activation threshold `L = a x + b y` and a partner `K = b x + a y`; it
//! contributes `mult(x, y) (n - L)(n - K)` to every `F(n)` with `n >= L`.
//! Three coefficient arrays collect `mult`, `mult (L + K)` and `mult L K` by
//! threshold over all `(a, b)`, a Möbius pass restricts them to primitive
//! directions, and prefix sums recover the table.

mod progression;

pub use progression::{Carry, ProgressionBuffers, ProgressionUpdate};

use progression::leading_differences;

use crate::arith::{isqrt, ExactInt};
use crate::error::{Error, Result};
use crate::onevalue::f0;
use crate::sieves::{build_sieve, SieveTables};

/// Largest table size accepted; keeps every array entry inside `i128`.
pub const MAX_TABLE_N: u64 = 1 << 26;

/// Auxiliary memory of a table build in units of [`ExactInt`] slots per
/// entry: the three coefficient arrays take 1.5, the per-step carries about
/// 1.5, and the window buffer and sieve stay below one.
pub const AUX_SLOTS_PER_ENTRY: f64 = 4.0;

/// Positions per window; sized so a window of every array stays in cache.
const WINDOW: usize = 1 << 14;

/// Divisor-free coefficient arrays indexed by threshold `L` in `0..=N`;
/// entry 0 is unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientArrays {
    pub n: u64,
    pub g0: Vec<i128>,
    pub g1: Vec<i128>,
    pub g2: Vec<i128>,
}

/// Event arrays after the Möbius pass, indexed like [`CoefficientArrays`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventArrays {
    pub n: u64,
    pub e0: Vec<i128>,
    pub e1: Vec<i128>,
    pub e2: Vec<i128>,
}

fn check_table_n(n: u64) -> Result<()> {
    if n == 0 || n > MAX_TABLE_N {
        return Err(Error::OutOfRange { what: "N", value: n, limit: MAX_TABLE_N });
    }
    Ok(())
}

/// Builds `G0`, `G1`, `G2` with a fresh window buffer.
pub fn build_coefficient_arrays(n: u64) -> Result<CoefficientArrays> {
    check_table_n(n)?;
    let mut buffers = ProgressionBuffers::new(WINDOW.min(n as usize + 1));
    Ok(build_with(n, &mut buffers))
}

/// Builds the coefficient arrays through a caller-owned window buffer of any
/// length, which is left cleared.
pub fn build_coefficient_arrays_with(n: u64, buffers: &mut ProgressionBuffers) -> Result<CoefficientArrays> {
    check_table_n(n)?;
    if !buffers.is_clear() || buffers.capacity() == 0 {
        return Err(Error::Precondition("window buffer must be clear and nonempty".into()));
    }
    Ok(build_with(n, buffers))
}

/// `t` with `alpha + beta t` in `lo..hi`, as an inclusive range.
#[inline]
fn hits(alpha: i64, beta: i64, lo: i64, hi: i64) -> (i64, i64) {
    (-((alpha - lo).div_euclid(beta)), (hi - 1 - alpha).div_euclid(beta))
}

fn build_with(n: u64, buffers: &mut ProgressionBuffers) -> CoefficientArrays {
    let len = n as usize + 1;
    let mut g = CoefficientArrays { n, g0: vec![0; len], g1: vec![0; len], g2: vec![0; len] };
    let ni = n as i64;
    let bound = isqrt(n) as i64;
    singletons(&mut g, ni, bound);
    square_sides(&mut g, ni, bound);
    if bound < 2 {
        return g;
    }

    // One carry per step m in 2..=B, laid out back to back.
    let offset = |m: i64| (m * (m - 1) / 2 - 1) as usize;
    let mut carry = vec![[0i128; 6]; offset(bound + 1)];
    let window = buffers.capacity() as i64;
    let mut lo = 0;
    while lo < len as i64 {
        let hi = (lo + window).min(len as i64);
        buffers.move_to(lo..hi);
        let (a, b) = (lo as usize, hi as usize);
        for m in 2..=bound {
            large_sides(buffers, m, ni, bound, lo, hi);
            small_sides(buffers, m, ni, lo, hi);
            let targets = [&mut g.g0[a..b], &mut g.g1[a..b], &mut g.g2[a..b]];
            buffers.flush(&mut carry[offset(m)..offset(m + 1)], targets);
        }
        lo = hi;
    }
    g
}

/// `a <= B < x = y`: multiplier 2 and `L = K = (a + b) y`.
fn singletons(g: &mut CoefficientArrays, n: i64, bound: i64) {
    for a in 2..=bound {
        for b in 1..a {
            for y in bound + 1..=n / (a + b) {
                let l = (a + b) * y;
                let li = l as i128;
                g.g0[l as usize] += 2;
                g.g1[l as usize] += 4 * li;
                g.g2[l as usize] += 2 * li * li;
            }
        }
    }
}

/// `a <= B`, `x > B`, `x > y`: for each `b < a` and `y`, the sides
/// `x = y + s` give `L = (a + b) y + a s` and `K = (a + b) y + b s`, a
/// progression of step `a` in `s >= max(1, B + 1 - y)`. Pushes those
/// starting in `lo - 2a..hi`.
fn large_sides(buffers: &mut ProgressionBuffers, a: i64, n: i64, bound: i64, lo: i64, hi: i64) {
    let from = lo - 2 * a;
    for b in 1..a {
        let s = a + b;
        let y_max = n / s;
        let (si, ab) = ((s) as i128, 4 * (a * b) as i128);
        let mut emit = |y: i64, first: i64| {
            let yi = y as i128;
            let c = [[4, 0, 0], [8 * si * yi, 4 * si, 0], [4 * si * si * yi * yi, 4 * si * si * yi, ab]];
            buffers.push_impulses(s * y + a * first, a, leading_differences(&c, first as i128), 1);
        };
        // y <= B starts at s = B + 1 - y, position b y + a (B + 1).
        let (t0, t1) = hits(a * (bound + 1), b, from, hi);
        for y in t0.max(1)..=t1.min(bound).min(y_max) {
            emit(y, bound + 1 - y);
        }
        // y > B starts at s = 1, position (a + b) y + a.
        let (t0, t1) = hits(a, s, from, hi);
        for y in t0.max(bound + 1)..=t1.min(y_max) {
            emit(y, 1);
        }
    }
}

/// `x <= B`, `y < x`: with `c = x + y` and `r = a - b >= 1`,
/// `L = r x + b c` and `K = r y + b c`, a progression of step `x` in `r`.
/// Pushes those starting in `lo - 2x..hi`.
fn small_sides(buffers: &mut ProgressionBuffers, x: i64, n: i64, lo: i64, hi: i64) {
    let from = lo - 2 * x;
    for y in 1..x {
        let c = x + y;
        let (ci, xy) = (c as i128, 4 * (x * y) as i128);
        let (t0, t1) = hits(x, c, from, hi.min(n + 1));
        for b in t0.max(1)..=t1 {
            let bi = b as i128;
            let w = 4 * ci * ci * bi;
            let coeffs = [[4, 0, 0], [8 * ci * bi, 4 * ci, 0], [w * bi, w, xy]];
            buffers.push_impulses(b * c + x, x, leading_differences(&coeffs, 1), 1);
        }
    }
}

/// `x = y = t <= B`: with `s = a + b`, `L = K = t s`, and `floor((s - 1) / 2)`
/// pairs share each `s`.
fn square_sides(g: &mut CoefficientArrays, n: i64, bound: i64) {
    for t in 1..=bound {
        for s in 3..=n / t {
            let f = ((s - 1) / 2) as i128;
            let l = (t * s) as usize;
            let li = l as i128;
            g.g0[l] += 2 * f;
            g.g1[l] += 4 * li * f;
            g.g2[l] += 2 * li * li * f;
        }
    }
}

/// `E_i[t] = sum_{d | t} mu(d) d^i G_i[t / d]`, one prime at a time in place.
pub fn mobius_convolve(g: CoefficientArrays, tables: &SieveTables) -> Result<EventArrays> {
    let n = g.n;
    if tables.limit() < n {
        return Err(Error::Precondition(format!("sieve limit {} is below N = {n}", tables.limit())));
    }
    let CoefficientArrays { g0: mut e0, g1: mut e1, g2: mut e2, .. } = g;
    for p in 2..=n {
        if tables.spf(p) != p {
            continue;
        }
        let pi = p as i128;
        let top = (n / p) * p;
        for (e, w) in [(&mut e0, 1), (&mut e1, pi), (&mut e2, pi * pi)] {
            let mut t = top;
            while t >= p {
                e[t as usize] -= w * e[(t / p) as usize];
                t -= p;
            }
        }
    }
    Ok(EventArrays { n, e0, e1, e2 })
}

/// `F(n) = F0(n) + n^2 P0(n) - n P1(n) + P2(n)` with `P_i` prefix sums of
/// the event arrays.
pub fn recover_table(e: &EventArrays) -> Vec<ExactInt> {
    let mut p = [0i128; 3];
    (1..=e.n)
        .map(|n| {
            let k = n as usize;
            p[0] += e.e0[k];
            p[1] += e.e1[k];
            p[2] += e.e2[k];
            let ni = n as i128;
            let primitive = ni * ni * p[0] - ni * p[1] + p[2];
            f0(n).checked_add(ExactInt::from_i128(primitive)).expect("table entry fits")
        })
        .collect()
}

/// `[F(1), .., F(N)]` in `O(N^{3/2})` time and `O(N)` working memory.
pub fn compute_table(n: u64) -> Result<Vec<ExactInt>> {
    let g = build_coefficient_arrays(n)?;
    let tables = build_sieve(n)?;
    let e = mobius_convolve(g, &tables)?;
    drop(tables);
    Ok(recover_table(&e))
}
