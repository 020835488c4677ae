//! Algorithm selection by name and timed dispatch.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::arith::ExactInt;
use crate::error::{Error, Result};
use crate::onevalue::{f_baseline, f_cuberoot, f_divisorlayer, f_sqrt, f_tenmoment};

/// Above this `n`, [`Algorithm::Auto`] picks the divisor-layer algorithm.
pub const AUTO_CUTOFF: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Baseline,
    Sqrt,
    Cuberoot,
    Tenmoment,
    Divisorlayer,
    Auto,
}

impl Algorithm {
    /// The five concrete one-value algorithms.
    pub const CONCRETE: [Algorithm; 5] =
        [Algorithm::Baseline, Algorithm::Sqrt, Algorithm::Cuberoot, Algorithm::Tenmoment, Algorithm::Divisorlayer];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::Baseline => "baseline",
            Algorithm::Sqrt => "sqrt",
            Algorithm::Cuberoot => "cuberoot",
            Algorithm::Tenmoment => "tenmoment",
            Algorithm::Divisorlayer => "divisorlayer",
            Algorithm::Auto => "auto",
        }
    }

    /// The concrete algorithm run for `n`.
    pub fn resolve(self, n: u64) -> Algorithm {
        match self {
            Algorithm::Auto if n > AUTO_CUTOFF => Algorithm::Divisorlayer,
            Algorithm::Auto => Algorithm::Baseline,
            other => other,
        }
    }

    pub fn run(self, n: u64) -> Result<ExactInt> {
        match self.resolve(n) {
            Algorithm::Baseline => f_baseline(n),
            Algorithm::Sqrt => f_sqrt(n),
            Algorithm::Cuberoot => f_cuberoot(n),
            Algorithm::Tenmoment => f_tenmoment(n),
            Algorithm::Divisorlayer | Algorithm::Auto => f_divisorlayer(n),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Algorithm::Auto]
            .into_iter()
            .chain(Algorithm::CONCRETE)
            .find(|a| a.id() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown algorithm '{s}'")))
    }
}

/// One timed evaluation of `F(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgoResult {
    pub n: u64,
    pub value: ExactInt,
    /// The concrete algorithm that ran.
    pub algo: Algorithm,
    pub elapsed: Duration,
}

pub fn compute(n: u64, algo: Algorithm) -> Result<AlgoResult> {
    let start = Instant::now();
    let value = algo.run(n)?;
    Ok(AlgoResult { n, value, algo: algo.resolve(n), elapsed: start.elapsed() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for a in Algorithm::CONCRETE.into_iter().chain([Algorithm::Auto]) {
            assert_eq!(a.id().parse::<Algorithm>().unwrap(), a);
        }
        assert!("fast".parse::<Algorithm>().is_err());
    }

    #[test]
    fn auto_selection() {
        assert_eq!(Algorithm::Auto.resolve(AUTO_CUTOFF), Algorithm::Baseline);
        assert_eq!(Algorithm::Auto.resolve(AUTO_CUTOFF + 1), Algorithm::Divisorlayer);
        let r = compute(1024, Algorithm::Auto).unwrap();
        assert_eq!((r.algo, r.value), (Algorithm::Baseline, ExactInt::from(1275797150128i64)));
        assert!(compute(0, Algorithm::Sqrt).is_err());
    }
}
