use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::arith::{floor_nth_root, is_nth_power};

/// Fundamental solution of `x3^2 - q x1^2 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellSolution {
    #[serde(with = "crate::json::decimal")]
    pub q: BigInt,
    #[serde(with = "crate::json::decimal")]
    pub x3: BigInt,
    #[serde(with = "crate::json::decimal")]
    pub x1: BigInt,
}

impl PellSolution {
    pub fn holds(&self) -> bool {
        &self.x3 * &self.x3 - &self.q * &self.x1 * &self.x1 == BigInt::one()
    }

    /// The corresponding solution `(x1, 1, x3)` of `q x1^2 + x2^2 = x3^2`.
    pub fn as_triple(&self) -> (BigInt, BigInt, BigInt) {
        (self.x1.clone(), BigInt::one(), self.x3.clone())
    }
}

/// Smallest solution with `x1 >= 1`, read off the convergents of the
/// continued fraction of `sqrt(q)`.
pub fn pell_fundamental(q: &BigInt) -> Result<PellSolution, VerifyError> {
    if *q < BigInt::from(2) {
        return Err(VerifyError::DiscriminantTooSmall(q.clone()));
    }
    if is_nth_power(q, 2).is_some() {
        return Err(VerifyError::SquareDiscriminant(q.clone()));
    }
    let a0 = floor_nth_root(q, 2).expect("q is positive");

    // sqrt(q) = [a0; a1, a2, ...] with a_{i+1} = floor((a0 + m) / d)
    let (mut m, mut d, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let (mut h_prev, mut h) = (BigInt::one(), a0.clone());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    loop {
        if &h * &h - q * &k * &k == BigInt::one() {
            return Ok(PellSolution {
                q: q.clone(),
                x3: h,
                x1: k,
            });
        }
        m = &d * &a - m;
        d = (q - &m * &m) / d;
        a = (&a0 + &m) / &d;
        let h_next = &a * &h + h_prev;
        let k_next = &a * &k + k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
}

/// `(x1, x2, x3) = (2s, s^2 - r^2, s^2 + r^2)`, a solution of
/// `r^2 x1^2 + x2^2 = x3^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PythagoreanTriple {
    #[serde(with = "crate::json::decimal")]
    pub r: BigInt,
    #[serde(with = "crate::json::decimal")]
    pub x1: BigInt,
    #[serde(with = "crate::json::decimal")]
    pub x2: BigInt,
    #[serde(with = "crate::json::decimal")]
    pub x3: BigInt,
}

impl PythagoreanTriple {
    pub fn holds(&self) -> bool {
        let q = &self.r * &self.r;
        q * &self.x1 * &self.x1 + &self.x2 * &self.x2 == &self.x3 * &self.x3
    }

    pub fn as_tuple(&self) -> (BigInt, BigInt, BigInt) {
        (self.x1.clone(), self.x2.clone(), self.x3.clone())
    }
}

pub fn pythagorean_family(r: &BigInt, s: &BigInt) -> PythagoreanTriple {
    let (r2, s2) = (r * r, s * s);
    PythagoreanTriple {
        r: r.clone(),
        x1: s * 2u32,
        x2: &s2 - &r2,
        x3: s2 + r2,
    }
}
