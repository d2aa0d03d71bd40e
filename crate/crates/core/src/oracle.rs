//! Reference GCDs that share no code with the reduction algorithms.
//!
//! * [`oracle_gcd_factorization`]: factor every non-zero input by trial
//!   division and take each prime to its minimum exponent.
//! * [`oracle_gcd_bruteforce`]: scan downward from the smallest non-zero
//!   input for the first value dividing everything.
//!
//! Both are deliberately slow and bounded. Zeros are dropped before either
//! one runs; an all-zero list has GCD 0.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::list::NumberList;
use crate::natural::Natural;

/// Largest value [`factorize`] accepts: 2^64.
pub const FACTOR_BOUND: u128 = 1 << 64;

/// Largest smallest-non-zero-element [`oracle_gcd_bruteforce`] will scan from.
pub const SCAN_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("0 has no prime factorization")]
    Zero,
    #[error("{value} exceeds the factorization oracle bound {bound}")]
    AboveFactorBound { value: Natural, bound: u128 },
    #[error("smallest non-zero element {value} exceeds the brute-force scan bound {bound}")]
    AboveScanBound { value: Natural, bound: u64 },
}

/// Prime factorization of a positive integer, primes ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Factorization {
    factors: BTreeMap<u64, u32>,
}

impl Factorization {
    pub fn exponent(&self, prime: u64) -> u32 {
        self.factors.get(&prime).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the factors back together.
    pub fn value(&self) -> Natural {
        let mut acc = Natural::one();
        for (p, e) in self.iter() {
            for _ in 0..e {
                acc = &acc * &Natural::from(p);
            }
        }
        acc
    }
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let n = n as u128;
    let mut d: u128 = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Factorizes `x` by trial division. `x` must lie in `1..=FACTOR_BOUND`.
pub fn factorize(x: &Natural) -> Result<Factorization, OracleError> {
    if x.is_zero() {
        return Err(OracleError::Zero);
    }
    let mut n = match x.to_u128() {
        Some(v) if v <= FACTOR_BOUND => v,
        _ => {
            return Err(OracleError::AboveFactorBound {
                value: x.clone(),
                bound: FACTOR_BOUND,
            })
        }
    };
    let mut factors = BTreeMap::new();
    let mut d: u128 = 2;
    while d * d <= n {
        while n % d == 0 {
            *factors.entry(d as u64).or_insert(0) += 1;
            n /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        *factors.entry(n as u64).or_insert(0) += 1;
    }
    Ok(Factorization { factors })
}

/// GCD as the product of each prime to its minimum exponent over the
/// non-zero inputs.
pub fn oracle_gcd_factorization(xs: &NumberList) -> Result<Natural, OracleError> {
    let facs = xs
        .iter()
        .filter(|x| !x.is_zero())
        .map(factorize)
        .collect::<Result<Vec<_>, _>>()?;
    let Some(first) = facs.first() else {
        return Ok(Natural::zero());
    };
    let mut gcd = Natural::one();
    for p in first.primes() {
        let e = facs.iter().map(|f| f.exponent(p)).min().unwrap_or(0);
        for _ in 0..e {
            gcd = &gcd * &Natural::from(p);
        }
    }
    Ok(gcd)
}

/// GCD as the largest `m` dividing every non-zero input, found by scanning
/// down from the smallest non-zero input.
pub fn oracle_gcd_bruteforce(xs: &NumberList) -> Result<Natural, OracleError> {
    let nonzero: Vec<&Natural> = xs.iter().filter(|x| !x.is_zero()).collect();
    let Some(min) = nonzero.iter().min() else {
        return Ok(Natural::zero());
    };
    let start = match min.to_u64() {
        Some(v) if v <= SCAN_BOUND => v,
        _ => {
            return Err(OracleError::AboveScanBound {
                value: (*min).clone(),
                bound: SCAN_BOUND,
            })
        }
    };
    let m = (1..=start)
        .rev()
        .find(|&m| nonzero.iter().all(|x| x.rem_u64(m) == 0))
        .expect("1 divides everything");
    Ok(Natural::from(m))
}
