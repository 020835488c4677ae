//! Square-root and cubic-root decompositions: small directions one at a
//! time, large directions by a dual sweep over the side multipliers.

use super::baseline::{baseline_direction, coprime_mask};
use super::{check_n, f0};
use crate::arith::{floor_two_thirds_power, gcd, isqrt, upto_sum, Checked128, ExactInt};
use crate::error::{Error, Result};
use crate::kernels::reversed_sums_six;
use crate::sieves::{build_sieve, coprime_prefixes, SieveTables};

/// `c_{u,v}(n)`: the contribution of one primitive direction, in `O(log n)`.
///
/// For `x <= n / (u + v)` every `y <= x` is admissible and the sum is a
/// polynomial in `x`. Beyond that `y` is bounded by `M(x) = (n - u x) / v`
/// and the sum reduces to six floor moments of `M`.
pub fn direction_contribution(u: u64, v: u64, n: u64) -> Result<ExactInt> {
    if !(u > v && v >= 1) || u > n {
        return Err(Error::Precondition(format!("need u > v >= 1 and u <= n, got ({u}, {v}, {n})")));
    }
    if gcd(u, v) != 1 {
        return Err(Error::Precondition(format!("direction ({u}, {v}) is not primitive")));
    }
    let c = direction_contribution_raw(u as i128, v as i128, n as i128)?;
    Ok(ExactInt::from_i128(c))
}

pub(crate) fn direction_contribution_raw(u: i128, v: i128, n: i128) -> Result<i128> {
    let s = u + v;
    let q = u * u + v * v;
    let uv = u * v;
    let x1 = n / s;
    let x_max = n / u;
    let n = Checked128::new(n);

    // x <= X1: 6 * sum_{y<=x} w(x, y) = k3 x^3 + k2 x^2 + k1 x.
    let k3 = Checked128::new(8 * uv + 3 * q);
    let k2 = Checked128::new(3 * q + 3 * uv) - n * (9 * s);
    let k1 = n * n * 6 - n * (3 * s) + uv;
    let near6 = k3 * upto_sum(3, x1) + k2 * upto_sum(2, x1) + k1 * upto_sum(1, x1);
    // Diagonal y = x, weight (n - s x)^2.
    let diag = n * n * x1 - n * (2 * s) * upto_sum(1, x1) + upto_sum(2, x1) * (s * s);

    // x > X1: y runs over 1..=M(x) with multiplier 4.
    let m = reversed_sums_six(x1 + 1, x_max, n.get()?, u, v)?;
    let (s01, s11, s21) = (Checked128::new(m.s01), Checked128::new(m.s11), Checked128::new(m.s21));
    let (s02, s12, s03) = (Checked128::new(m.s02), Checked128::new(m.s12), Checked128::new(m.s03));
    let far6 = n * n * s01 * 6 - n * (6 * s) * s11 + s21 * (6 * uv)
        - n * (3 * s) * (s02 + s01)
        + (s12 + s11) * (3 * q)
        + (s03 * 2 + s02 * 3 + s01) * uv;

    let total = ((near6 + far6) * 4).div_exact(6) - diag * 2;
    Ok(total.get()?)
}

/// Large-direction term for fixed `u`: sum over side pairs `x >= y` of
/// `mult * (A0 C0 + A1 C1 + A2 C2)` with `C_j` coprime prefix sums up to
/// `v_max = min(u - 1, (n - x u) / y)`.
pub(crate) fn dual_sweep(u: i128, n: i128, divisors: &[i64]) -> i128 {
    let mut total = 0i128;
    for x in 1..=n / u {
        let rx = n - x * u;
        for y in 1..=x {
            let v_max = (u - 1).min(rx / y);
            if v_max < 1 {
                break;
            }
            let ry = n - y * u;
            let a0 = rx * ry;
            let a1 = -(x * rx + y * ry);
            let a2 = x * y;
            let [c0, c1, c2] = coprime_prefixes(divisors, v_max as i64);
            let mult = if x == y { 2 } else { 4 };
            total += mult * (a0 * c0 + a1 * c1 + a2 * c2);
        }
    }
    total
}

fn large_directions(n: u64, threshold: u64, tables: &SieveTables, acc: &mut ExactInt) -> Result<()> {
    let mut divisors = Vec::new();
    for u in threshold + 1..n {
        tables.signed_squarefree_divisors(u, &mut divisors);
        acc.add_assign_checked(ExactInt::from_i128(dual_sweep(u as i128, n as i128, &divisors)))?;
    }
    Ok(())
}

/// `O(n^{3/2} log n)`: threshold `floor(sqrt n)`.
pub fn f_sqrt(n: u64) -> Result<ExactInt> {
    check_n(n)?;
    let mut acc = f0(n);
    if n < 3 {
        return Ok(acc);
    }
    let tables = build_sieve(n)?;
    let b = isqrt(n);
    let (mut primes, mut mask) = (Vec::new(), Vec::new());
    for u in 2..=b.min(n - 1) {
        let v_max = (u - 1).min(n - u) as usize;
        coprime_mask(u, v_max, &tables, &mut primes, &mut mask);
        let mut per_u = 0i128;
        for (v, _) in mask.iter().enumerate().take(v_max + 1).skip(1).filter(|(_, &c)| c) {
            per_u += baseline_direction(u as i128, v as i128, n as i128);
        }
        acc.add_assign_checked(ExactInt::from_i128(per_u))?;
    }
    large_directions(n, b, &tables, &mut acc)?;
    Ok(acc)
}

/// `O(n^{4/3} log n)`: threshold `floor(n^{2/3})`, small directions through
/// the six-moment kernel.
pub fn f_cuberoot(n: u64) -> Result<ExactInt> {
    check_n(n)?;
    let mut acc = f0(n);
    if n < 3 {
        return Ok(acc);
    }
    let tables = build_sieve(n)?;
    let b = floor_two_thirds_power(n);
    for u in 2..=b.min(n - 1) {
        let mut per_u = Checked128::ZERO;
        for v in 1..=(u - 1).min(n - u) {
            if gcd(u, v) == 1 {
                per_u = per_u + direction_contribution_raw(u as i128, v as i128, n as i128)?;
            }
        }
        acc.add_assign_checked(per_u.to_exact()?)?;
    }
    large_directions(n, b, &tables, &mut acc)?;
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn direct(u: i128, v: i128, n: i128) -> i128 {
        let mut t = 0;
        for x in 1..=n {
            for y in 1..=x {
                if x * u + y * v <= n {
                    let m = if x == y { 2 } else { 4 };
                    t += m * (n - x * u - y * v) * (n - x * v - y * u);
                }
            }
        }
        t
    }

    #[test]
    fn direction_examples() {
        assert_eq!(direction_contribution(2, 1, 4).unwrap(), ExactInt::from(2));
        assert_eq!(direction_contribution(3, 1, 4).unwrap(), ExactInt::ZERO);
        assert_eq!(direction_contribution(2, 1, 3).unwrap(), ExactInt::ZERO);
        assert!(direction_contribution(4, 2, 9).is_err());
        assert!(direction_contribution(1, 1, 9).is_err());
        assert!(direction_contribution(9, 1, 8).is_err());
    }

    #[test]
    fn direction_matches_loop() {
        for n in 1..50u64 {
            for u in 2..=n {
                for v in 1..u {
                    if gcd(u, v) == 1 {
                        let got = direction_contribution(u, v, n).unwrap();
                        assert_eq!(got, ExactInt::from(direct(u as i128, v as i128, n as i128)), "({u},{v},{n})");
                    }
                }
            }
        }
    }

    #[test]
    fn dual_sweep_matches_directions() {
        let n = 60;
        let t = build_sieve(n).unwrap();
        let mut divisors = Vec::new();
        for u in 2..n {
            t.signed_squarefree_divisors(u, &mut divisors);
            let want: i128 = (1..u)
                .filter(|&v| gcd(u, v) == 1)
                .map(|v| direct(u as i128, v as i128, n as i128))
                .sum();
            assert_eq!(dual_sweep(u as i128, n as i128, &divisors), want, "u = {u}");
        }
    }

    #[test]
    fn examples() {
        assert_eq!(f_sqrt(4).unwrap(), ExactInt::from(44));
        assert_eq!(f_sqrt(1).unwrap(), ExactInt::ZERO);
        assert_eq!(f_sqrt(32).unwrap(), ExactInt::from(564120));
        assert_eq!(f_cuberoot(16).unwrap(), ExactInt::from(27128));
        assert_eq!(f_cuberoot(2).unwrap(), ExactInt::from(1));
        assert_eq!(f_cuberoot(3).unwrap(), ExactInt::from(10));
    }
}
