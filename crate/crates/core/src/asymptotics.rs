//! The two-term expansion `F(n) = A n^4 ln n + B n^4 + o(n^4)` and the
//! residual `(F(n) - A n^4 ln n) / n^4`, which tends to `B`.

use crate::arith::ExactInt;
use crate::error::{Error, Result};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Derivative of the Riemann zeta function at 2.
pub const ZETA_PRIME_2: f64 = -0.937_548_254_315_843_8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticConstants {
    pub a: f64,
    pub b: f64,
    pub gamma: f64,
    pub zeta_prime_2: f64,
    pub pi_sq: f64,
    pub log2: f64,
}

pub fn constants() -> AsymptoticConstants {
    let pi_sq = std::f64::consts::PI * std::f64::consts::PI;
    let log2 = std::f64::consts::LN_2;
    let gamma = EULER_GAMMA;
    let zeta_2 = pi_sq / 6.0;
    let c = 4.0 * log2 - 1.0;
    let a = c / pi_sq;
    let b = -c / 6.0 * ZETA_PRIME_2 / (zeta_2 * zeta_2)
        + (24.0 * c * gamma + 72.0 * log2 * log2 - 76.0 * log2 + 1.0) / (12.0 * pi_sq)
        - 0.25;
    AsymptoticConstants { a, b, gamma, zeta_prime_2: ZETA_PRIME_2, pi_sq, log2 }
}

/// `(F(n) - A n^4 ln n) / n^4`. The exact quotient and remainder of
/// `F(n) / n^4` are converted separately so no precision is lost to the
/// size of `F(n)`.
pub fn residual(n: u64, f_value: ExactInt) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("residual needs n >= 2, got {n}")));
    }
    let n4 = ExactInt::from(n).checked_mul(ExactInt::from(n))?;
    let n4 = n4.checked_mul(n4)?;
    let (q, r) = f_value.div_rem_floor(n4)?;
    let ratio = q.to_f64() + r.to_f64() / n4.to_f64();
    Ok(ratio - constants().a * (n as f64).ln())
}
