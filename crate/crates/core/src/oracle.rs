//! Brute-force counts of `F(n)` for small grids, used as ground truth.

use crate::arith::{gcd, ExactInt};
use crate::error::{Error, Result};
use crate::onevalue::{f0, mult};

/// Largest `n` each oracle accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_n_quadruple: u64,
    pub max_n_geometric: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_n_quadruple: 200, max_n_geometric: 60 }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n_quadruple == 0 || self.max_n_geometric == 0 {
            return Err(Error::InvalidLimit);
        }
        Ok(())
    }
}

fn check(n: u64, limit: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    Ok(())
}

/// `F0(n)` plus the literal sum over primitive directions `u > v >= 1` and
/// side multipliers `x >= y >= 1` with `x u + y v <= n`.
pub fn f_oracle_quadruples(n: u64) -> Result<ExactInt> {
    f_oracle_quadruples_with(n, &OracleConfig::default())
}

pub fn f_oracle_quadruples_with(n: u64, config: &OracleConfig) -> Result<ExactInt> {
    config.validate()?;
    check(n, config.max_n_quadruple)?;
    let mut total = 0i128;
    for u in 2..=n {
        for v in 1..u {
            if gcd(u, v) != 1 {
                continue;
            }
            for x in 1..=n / u {
                for y in 1..=x {
                    if x * u + y * v > n {
                        break;
                    }
                    let w = (n - x * u - y * v) as i128 * (n as i128 - (x * v + y * u) as i128);
                    total += mult(x, y) * w;
                }
            }
        }
    }
    Ok(f0(n).checked_add(ExactInt::from_i128(total))?)
}

/// Counts rectangles as unordered pairs of distinct point pairs sharing a
/// midpoint and a length: the two diagonals of a rectangle.
pub fn f_oracle_geometric(n: u64) -> Result<ExactInt> {
    f_oracle_geometric_with(n, &OracleConfig::default())
}

pub fn f_oracle_geometric_with(n: u64, config: &OracleConfig) -> Result<ExactInt> {
    config.validate()?;
    check(n, config.max_n_geometric)?;
    let points: Vec<(u64, u64)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    // Key: doubled midpoint and squared length, packed into one integer.
    let mut keys = Vec::with_capacity(points.len() * points.len().saturating_sub(1) / 2);
    for (i, &(x1, y1)) in points.iter().enumerate() {
        for &(x2, y2) in &points[i + 1..] {
            let len2 = x1.abs_diff(x2).pow(2) + y1.abs_diff(y2).pow(2);
            keys.push(((x1 + x2) << 40) | ((y1 + y2) << 24) | len2);
        }
    }
    keys.sort_unstable();
    let mut total = 0u128;
    let mut start = 0;
    while start < keys.len() {
        let end = start + keys[start..].iter().take_while(|&&k| k == keys[start]).count();
        let g = (end - start) as u128;
        total += g * (g - 1) / 2;
        start = end;
    }
    Ok(ExactInt::from_i128(total as i128))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadruple_examples() {
        assert_eq!(f_oracle_quadruples(2).unwrap(), ExactInt::from(1));
        assert_eq!(f_oracle_quadruples(3).unwrap(), ExactInt::from(10));
        assert_eq!(f_oracle_quadruples(4).unwrap(), ExactInt::from(44));
        assert!(matches!(f_oracle_quadruples(201), Err(Error::OracleLimit { n: 201, limit: 200 })));
        assert!(f_oracle_quadruples(0).is_err());
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(f_oracle_geometric(2).unwrap(), ExactInt::from(1));
        assert_eq!(f_oracle_geometric(1).unwrap(), ExactInt::ZERO);
        assert_eq!(f_oracle_geometric(8).unwrap(), ExactInt::from(1192));
        assert!(matches!(f_oracle_geometric(61), Err(Error::OracleLimit { .. })));
    }

    #[test]
    fn config_limits() {
        let tight = OracleConfig { max_n_quadruple: 5, max_n_geometric: 5 };
        assert!(f_oracle_quadruples_with(6, &tight).is_err());
        assert_eq!(f_oracle_geometric_with(5, &tight).unwrap(), f_oracle_quadruples_with(5, &tight).unwrap());
        let zero = OracleConfig { max_n_quadruple: 0, max_n_geometric: 5 };
        assert!(matches!(f_oracle_quadruples_with(1, &zero), Err(Error::InvalidLimit)));
    }

    #[test]
    fn oracles_agree() {
        for n in 1..=30 {
            assert_eq!(f_oracle_geometric(n).unwrap(), f_oracle_quadruples(n).unwrap(), "n = {n}");
        }
    }
}
