//! Exact integer roots and perfect-power detection.
//!
//! Every routine here works on arbitrary-precision integers and brackets
//! roots by bit length, so results are exact for inputs of any size.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("even root (n = {n}) of a negative number is undefined")]
    EvenRootOfNegative { n: u32 },
    #[error("root index must be at least 1")]
    ZeroRootIndex,
}

/// A decomposition `value = base^exponent` with `exponent >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PowerWitness {
    #[serde(with = "crate::json::decimal")]
    pub base: BigInt,
    pub exponent: u32,
}

impl PowerWitness {
    pub fn new(base: BigInt, exponent: u32) -> Self {
        debug_assert!(exponent >= 2);
        Self { base, exponent }
    }

    /// The witnessed value `base^exponent`.
    pub fn value(&self) -> BigInt {
        Pow::pow(&self.base, self.exponent)
    }

    /// True iff the witness reproduces `value` exactly.
    pub fn verifies(&self, value: &BigInt) -> bool {
        self.exponent >= 2 && &self.value() == value
    }
}

impl fmt::Display for PowerWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.is_negative() {
            write!(f, "({})^{}", self.base, self.exponent)
        } else {
            write!(f, "{}^{}", self.base, self.exponent)
        }
    }
}

/// Floor of the `n`-th root of a machine word, by binary search on `[lo, hi)`
/// with `lo^n <= x < hi^n`.
fn root_floor_u64(x: u64, n: u32) -> u64 {
    if x < 2 || n == 1 {
        return x;
    }
    let bits = 64 - x.leading_zeros();
    if n >= bits {
        return 1;
    }
    let mut lo = 1u64 << ((bits - 1) / n);
    let mut hi = 1u64 << bits.div_ceil(n);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match mid.checked_pow(n) {
            Some(p) if p <= x => lo = mid,
            _ => hi = mid,
        }
    }
    lo
}

/// Floor of the `n`-th root of a non-negative big integer.
fn root_floor_unsigned(x: &BigUint, n: u32) -> BigUint {
    if let Some(small) = x.to_u64() {
        return BigUint::from(root_floor_u64(small, n));
    }
    if n == 1 {
        return x.clone();
    }
    let bits = x.bits();
    let n64 = u64::from(n);
    if n64 >= bits {
        return BigUint::one();
    }
    // 2^((bits-1)/n) <= root < 2^ceil(bits/n)
    let mut lo = BigUint::one() << ((bits - 1) / n64);
    let mut hi = BigUint::one() << bits.div_ceil(n64);
    let one = BigUint::one();
    while &hi - &lo > one {
        let mid: BigUint = (&lo + &hi) >> 1u32;
        if Pow::pow(&mid, n) <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Largest `r` with `r^n <= x`.
///
/// Defined for every `x` when `n` is odd; even `n` requires `x >= 0`.
pub fn floor_nth_root(x: &BigInt, n: u32) -> Result<BigInt, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroRootIndex);
    }
    let magnitude = x.magnitude();
    match x.sign() {
        Sign::NoSign => Ok(BigInt::zero()),
        Sign::Plus => Ok(BigInt::from(root_floor_unsigned(magnitude, n))),
        Sign::Minus => {
            if n.is_multiple_of(2) {
                return Err(ArithError::EvenRootOfNegative { n });
            }
            let r = root_floor_unsigned(magnitude, n);
            // floor of a negative root is minus the ceiling of |x|^(1/n)
            let r = if Pow::pow(&r, n) == *magnitude {
                r
            } else {
                r + 1u32
            };
            Ok(-BigInt::from(r))
        }
    }
}

/// Witness that `x` is an `n`-th power, if it is one.
///
/// For even `n` the base is the non-negative root; for odd `n` the base
/// carries the sign of `x`. Returns `None` for `n < 2`.
pub fn is_nth_power(x: &BigInt, n: u32) -> Option<PowerWitness> {
    if n < 2 {
        return None;
    }
    if x.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let magnitude = x.magnitude();
    let r = root_floor_unsigned(magnitude, n);
    if Pow::pow(&r, n) != *magnitude {
        return None;
    }
    let base = BigInt::from_biguint(x.sign(), r);
    let base = if x.is_zero() { BigInt::zero() } else { base };
    Some(PowerWitness::new(base, n))
}

fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes `2 <= p <= limit`, ascending.
fn primes_up_to(limit: u64) -> impl Iterator<Item = u32> {
    let limit = u32::try_from(limit).unwrap_or(u32::MAX);
    (2..=limit).filter(|&p| is_prime_u32(p))
}

/// Canonical perfect-power decomposition of `x`, if `x` is a perfect power.
///
/// The exponent is the largest admissible one; among bases for that
/// exponent the positive one wins. `0`, `1` and `-1` decompose as `0^2`,
/// `1^2` and `(-1)^3`.
pub fn perfect_power_decompose(x: &BigInt) -> Option<PowerWitness> {
    if x.is_zero() {
        return Some(PowerWitness::new(BigInt::zero(), 2));
    }
    if x.is_one() {
        return Some(PowerWitness::new(BigInt::one(), 2));
    }
    if *x == -BigInt::one() {
        return Some(PowerWitness::new(-BigInt::one(), 3));
    }

    // Peel prime roots off greedily. With x = ±r^e, r not a power, every
    // admissible exponent divides e (odd part of e for negative x), so the
    // product of peeled primes ends up maximal.
    let mut base = x.clone();
    let mut exponent = 1u32;
    let mut next_prime = 2u32;
    'peel: loop {
        let bits = base.magnitude().bits();
        for p in primes_up_to(bits).skip_while(|&p| p < next_prime) {
            if let Some(w) = is_nth_power(&base, p) {
                base = w.base;
                exponent *= p;
                next_prime = p;
                continue 'peel;
            }
        }
        break;
    }
    (exponent >= 2).then(|| PowerWitness::new(base, exponent))
}
