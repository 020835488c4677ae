//! Möbius function, smallest prime factors, squarefree divisors and
//! coprime prefix sums.

use crate::arith::ExactInt;
use crate::error::{Error, Result};

/// Möbius values and smallest prime factors for `1..=limit`.
#[derive(Clone, Debug)]
pub struct SieveTables {
    limit: u64,
    mu: Vec<i8>,
    spf: Vec<u32>,
}

/// Linear sieve over `1..=limit`.
pub fn build_sieve(limit: u64) -> Result<SieveTables> {
    if limit == 0 {
        return Err(Error::InvalidLimit);
    }
    let len = limit as usize + 1;
    let mut mu = vec![0i8; len];
    let mut spf = vec![0u32; len];
    let mut primes: Vec<u32> = Vec::new();
    mu[1] = 1;
    for i in 2..len {
        if spf[i] == 0 {
            spf[i] = i as u32;
            mu[i] = -1;
            primes.push(i as u32);
        }
        let si = spf[i];
        for &p in &primes {
            let k = i * p as usize;
            if p > si || k >= len {
                break;
            }
            spf[k] = p;
            mu[k] = if p == si { 0 } else { -mu[i] };
        }
    }
    Ok(SieveTables { limit, mu, spf })
}

impl SieveTables {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `mu(k)` for `1 <= k <= limit`.
    #[inline]
    pub fn mu(&self, k: u64) -> i8 {
        self.mu[k as usize]
    }

    /// Smallest prime factor of `k` for `2 <= k <= limit`.
    #[inline]
    pub fn spf(&self, k: u64) -> u64 {
        self.spf[k as usize] as u64
    }

    /// Möbius values indexed by `k`; entry 0 is unused.
    pub fn mu_slice(&self) -> &[i8] {
        &self.mu
    }

    fn check(&self, u: u64) -> Result<()> {
        if u == 0 || u > self.limit {
            return Err(Error::OutOfRange { what: "u", value: u, limit: self.limit });
        }
        Ok(())
    }

    /// Distinct prime factors of `u`, increasing.
    pub fn distinct_primes(&self, mut u: u64, out: &mut Vec<u64>) {
        out.clear();
        while u > 1 {
            let p = self.spf(u);
            out.push(p);
            while u % p == 0 {
                u /= p;
            }
        }
    }

    /// Writes the squarefree divisors of `u` as signed values `mu(d) * d`.
    pub fn signed_squarefree_divisors(&self, mut u: u64, out: &mut Vec<i64>) {
        out.clear();
        out.push(1);
        while u > 1 {
            let p = self.spf(u);
            while u % p == 0 {
                u /= p;
            }
            for i in 0..out.len() {
                out.push(-out[i] * p as i64);
            }
        }
    }
}

/// The squarefree divisors of `u` paired with their Möbius values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDivisorList {
    pub u: u64,
    pub entries: Vec<(u64, i8)>,
}

pub fn squarefree_divisors(u: u64, tables: &SieveTables) -> Result<SquarefreeDivisorList> {
    tables.check(u)?;
    let mut signed = Vec::new();
    tables.signed_squarefree_divisors(u, &mut signed);
    let entries = signed.iter().map(|&s| (s.unsigned_abs(), s.signum() as i8)).collect();
    Ok(SquarefreeDivisorList { u, entries })
}

/// Squarefree divisor lists for every `u <= limit`, stored contiguously.
#[derive(Clone, Debug)]
pub struct DivisorTable {
    offsets: Vec<u32>,
    signed: Vec<i32>,
}

impl DivisorTable {
    pub fn build(tables: &SieveTables) -> Self {
        let limit = tables.limit() as usize;
        let mut offsets = Vec::with_capacity(limit + 2);
        offsets.push(0);
        offsets.push(0);
        let mut signed = Vec::new();
        let mut buf = Vec::new();
        for u in 1..=limit {
            tables.signed_squarefree_divisors(u as u64, &mut buf);
            signed.extend(buf.iter().map(|&s| s as i32));
            offsets.push(signed.len() as u32);
        }
        DivisorTable { offsets, signed }
    }

    /// Signed divisors `mu(d) * d` of `u`, starting with `1`.
    #[inline]
    pub fn get(&self, u: u64) -> &[i32] {
        let u = u as usize;
        &self.signed[self.offsets[u] as usize..self.offsets[u + 1] as usize]
    }

    /// Total number of stored entries, `sum_{u <= limit} 2^omega(u)`.
    pub fn total_len(&self) -> usize {
        self.signed.len()
    }
}

/// `[C_0, C_1, C_2](u; X)` in one pass over the divisors.
#[inline]
pub(crate) fn coprime_prefixes(divisors: &[i64], x: i64) -> [i128; 3] {
    let mut acc = [0i128; 3];
    for &s in divisors {
        let d = s.abs();
        let k = x / d;
        if k == 0 {
            continue;
        }
        let (d, k) = (d as i128, k as i128);
        let t1 = k * (k + 1) / 2;
        let t2 = t1 * (2 * k + 1) / 3;
        let terms = [k, d * t1, d * d * t2];
        for (a, t) in acc.iter_mut().zip(terms) {
            if s > 0 {
                *a += t;
            } else {
                *a -= t;
            }
        }
    }
    acc
}

/// `C_j(u; X) = sum_{1 <= v <= X, gcd(u, v) = 1} v^j` for `j <= 2`.
pub fn coprime_prefix(u: u64, x: u64, j: u32, tables: &SieveTables) -> Result<ExactInt> {
    tables.check(u)?;
    if j > 2 {
        return Err(Error::Precondition(format!("coprime prefix degree {j} exceeds 2")));
    }
    let mut divisors = Vec::new();
    tables.signed_squarefree_divisors(u, &mut divisors);
    Ok(ExactInt::from_i128(coprime_prefixes(&divisors, x as i64)[j as usize]))
}
