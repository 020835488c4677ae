use super::{check_n, f0};
use crate::arith::ExactInt;
use crate::error::Result;
use crate::sieves::{build_sieve, SieveTables};

#[inline(always)]
pub(crate) fn sum1(r: i128) -> i128 {
    r * (r + 1) / 2
}

#[inline(always)]
pub(crate) fn sum2(r: i128) -> i128 {
    r * (r + 1) * (2 * r + 1) / 6
}

/// Contribution of the primitive direction `(u, v)`: one closed-form sum over
/// `x` for every admissible `y`.
pub(crate) fn baseline_direction(u: i128, v: i128, n: i128) -> i128 {
    let mut total = 0i128;
    let y_max = n / (u + v);
    for y in 1..=y_max {
        let alpha = n - y * v;
        let beta = n - y * u;
        let x_max = alpha / u;
        let cnt = x_max - y + 1;
        let s1 = sum1(x_max) - sum1(y - 1);
        let s2 = sum2(x_max) - sum2(y - 1);
        let sum = alpha * beta * cnt - (alpha * v + beta * u) * s1 + u * v * s2;
        let edge = n - y * (u + v);
        total += 4 * sum - 2 * edge * edge;
    }
    total
}

/// Marks `v` in `1..=limit` coprime to `u`, using the prime factors of `u`.
pub(crate) fn coprime_mask(u: u64, limit: usize, tables: &SieveTables, primes: &mut Vec<u64>, mask: &mut Vec<bool>) {
    mask.clear();
    mask.resize(limit + 1, true);
    tables.distinct_primes(u, primes);
    for &p in primes.iter() {
        let p = p as usize;
        let mut k = p;
        while k <= limit {
            mask[k] = false;
            k += p;
        }
    }
}

/// `O(n^2)` sweep over primitive directions.
pub fn f_baseline(n: u64) -> Result<ExactInt> {
    check_n(n)?;
    let mut acc = f0(n);
    if n < 3 {
        return Ok(acc);
    }
    let tables = build_sieve(n)?;
    let (mut primes, mut mask) = (Vec::new(), Vec::new());
    let ni = n as i128;
    for u in 2..n {
        let v_max = (u - 1).min(n - u) as usize;
        if v_max == 0 {
            continue;
        }
        coprime_mask(u, v_max, &tables, &mut primes, &mut mask);
        let mut per_u = 0i128;
        for (v, _) in mask.iter().enumerate().take(v_max + 1).skip(1).filter(|(_, &c)| c) {
            per_u += baseline_direction(u as i128, v as i128, ni);
        }
        acc.add_assign_checked(ExactInt::from_i128(per_u))?;
    }
    Ok(acc)
}
