//! Arbitrary-precision non-negative integers.
//!
//! [`Natural`] is a thin newtype over [`BigUint`]. Negative values are not
//! representable, so subtraction is only exposed in checked form.

use std::fmt;
use std::ops::{Add, Mul, Shl};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{Num, ToPrimitive, Zero};
use thiserror::Error;

/// A non-negative integer of unbounded size.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseNaturalError {
    #[error("empty number")]
    Empty,
    #[error("invalid digit in `{0}`")]
    InvalidDigit(String),
}

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::from(1u32))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_even(&self) -> bool {
        !self.0.bit(0)
    }

    pub fn is_odd(&self) -> bool {
        self.0.bit(0)
    }

    /// Floor division by two.
    pub fn halve(&self) -> Natural {
        Natural(&self.0 >> 1u32)
    }

    pub(crate) fn halve_in_place(&mut self) {
        self.0 >>= 1u32;
    }

    /// `self - rhs`, or `None` when the difference would be negative.
    pub fn checked_sub(&self, rhs: &Natural) -> Option<Natural> {
        if self.0 < rhs.0 {
            None
        } else {
            Some(Natural(&self.0 - &rhs.0))
        }
    }

    /// Caller guarantees `self >= rhs`.
    pub(crate) fn sub_in_place(&mut self, rhs: &Natural) {
        debug_assert!(self.0 >= rhs.0);
        self.0 -= &rhs.0;
    }

    /// `self mod rhs`, or `None` when `rhs` is zero.
    pub fn checked_rem(&self, rhs: &Natural) -> Option<Natural> {
        if rhs.is_zero() {
            None
        } else {
            Some(Natural(&self.0 % &rhs.0))
        }
    }

    /// Residue modulo a machine word. Panics if `m` is zero.
    pub fn rem_u64(&self, m: u64) -> u64 {
        assert!(m != 0, "modulus must be non-zero");
        (&self.0 % m)
            .to_u64()
            .expect("residue below a u64 modulus fits in u64")
    }

    /// Number of significant bits; zero has none.
    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    /// Builds a value from little-endian bytes.
    pub fn from_bytes_le(bytes: &[u8]) -> Natural {
        Natural(BigUint::from_bytes_le(bytes))
    }

    /// Parses digits in the given radix with no prefix or sign.
    pub fn from_str_radix(s: &str, radix: u32) -> Result<Natural, ParseNaturalError> {
        if s.is_empty() {
            return Err(ParseNaturalError::Empty);
        }
        // BigUint tolerates '_' separators and a leading '+'; we don't.
        if !s.chars().all(|c| c.is_digit(radix)) {
            return Err(ParseNaturalError::InvalidDigit(s.to_string()));
        }
        BigUint::from_str_radix(s, radix)
            .map(Natural)
            .map_err(|_| ParseNaturalError::InvalidDigit(s.to_string()))
    }

    /// `2^exp`.
    pub fn pow2(exp: u64) -> Natural {
        Natural(BigUint::from(1u32) << exp)
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }
}

impl FromStr for Natural {
    type Err = ParseNaturalError;

    /// Decimal, or hexadecimal with a `0x`/`0X` prefix.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
            Some(hex) => Natural::from_str_radix(hex, 16),
            None => Natural::from_str_radix(s, 10),
        }
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl From<BigUint> for Natural {
    fn from(v: BigUint) -> Self {
        Natural(v)
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Natural {
            fn from(v: $t) -> Self {
                Natural(BigUint::from(v))
            }
        }
    )*};
}
from_prim!(u8, u16, u32, u64, u128, usize);

impl Add<&Natural> for &Natural {
    type Output = Natural;
    fn add(self, rhs: &Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl Add for Natural {
    type Output = Natural;
    fn add(self, rhs: Natural) -> Natural {
        Natural(self.0 + rhs.0)
    }
}

impl Mul<&Natural> for &Natural {
    type Output = Natural;
    fn mul(self, rhs: &Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

impl Mul for Natural {
    type Output = Natural;
    fn mul(self, rhs: Natural) -> Natural {
        Natural(self.0 * rhs.0)
    }
}

impl Shl<u64> for &Natural {
    type Output = Natural;
    fn shl(self, rhs: u64) -> Natural {
        Natural(&self.0 << rhs)
    }
}

impl Shl<u64> for Natural {
    type Output = Natural;
    fn shl(self, rhs: u64) -> Natural {
        Natural(self.0 << rhs)
    }
}

impl std::iter::Sum for Natural {
    fn sum<I: Iterator<Item = Natural>>(iter: I) -> Self {
        iter.fold(Natural::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Natural> for Natural {
    fn sum<I: Iterator<Item = &'a Natural>>(iter: I) -> Self {
        iter.fold(Natural::zero(), |acc, x| &acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimal_and_hex() {
        assert_eq!("98".parse::<Natural>().unwrap(), Natural::from(98u32));
        assert_eq!("0x62".parse::<Natural>().unwrap(), Natural::from(98u32));
        assert_eq!("0XfF".parse::<Natural>().unwrap(), Natural::from(255u32));
        assert_eq!(
            Natural::from_str_radix("ff", 16).unwrap(),
            Natural::from(255u32)
        );
    }

    #[test]
    fn rejects_signs_and_separators() {
        for bad in ["", "-1", "+1", "1_000", "0x", "12a", " 1"] {
            assert!(bad.parse::<Natural>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn parity_and_halving() {
        let x = Natural::from(42u32);
        assert!(x.is_even());
        assert_eq!(x.halve(), Natural::from(21u32));
        assert!(Natural::from(21u32).is_odd());
        assert!(Natural::zero().is_even());
    }

    #[test]
    fn checked_sub_never_goes_negative() {
        let a = Natural::from(3u32);
        let b = Natural::from(5u32);
        assert_eq!(a.checked_sub(&b), None);
        assert_eq!(b.checked_sub(&a), Some(Natural::from(2u32)));
        assert_eq!(a.checked_sub(&a), Some(Natural::zero()));
    }

    #[test]
    fn rem_by_zero_is_none() {
        assert_eq!(Natural::from(7u32).checked_rem(&Natural::zero()), None);
        assert_eq!(
            Natural::from(36u32).checked_rem(&Natural::from(22u32)),
            Some(Natural::from(14u32))
        );
    }

    #[test]
    fn no_overflow_at_large_magnitude() {
        let big = Natural::pow2(300);
        let bigger = &big + &Natural::one();
        assert_eq!(bigger.checked_sub(&big), Some(Natural::one()));
        assert_eq!(big.bits(), 301);
        assert_eq!(big.rem_u64(1 << 20), 0);
        assert_eq!(bigger.to_string().parse::<Natural>().unwrap(), bigger);
    }
}
