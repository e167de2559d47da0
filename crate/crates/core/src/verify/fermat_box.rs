use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::arith::is_nth_power;

/// A solution of `3 x1^m + x2^m = x3^m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FermatTriple {
    #[serde(with = "crate::json::decimal")]
    pub x1: BigInt,
    #[serde(with = "crate::json::decimal")]
    pub x2: BigInt,
    #[serde(with = "crate::json::decimal")]
    pub x3: BigInt,
    pub m: u32,
}

impl FermatTriple {
    pub fn holds(&self) -> bool {
        Pow::pow(&self.x1, self.m) * 3u32 + Pow::pow(&self.x2, self.m) == Pow::pow(&self.x3, self.m)
    }

    pub fn is_trivial(&self) -> bool {
        self.x1.is_zero()
    }
}

/// All solutions with `|x1|, |x2| <= bound`, ordered by `x1` then `x2`.
/// `x3` is the canonical root (non-negative for even `m`).
pub fn check_fermat_box(m: u32, bound: u64) -> Result<Vec<FermatTriple>, VerifyError> {
    if m < 2 {
        return Err(VerifyError::InvalidExponent(m));
    }
    let bound = BigInt::from(bound);
    let powers: Vec<(BigInt, BigInt)> = {
        let mut v = Vec::new();
        let mut t = -bound.clone();
        while t <= bound {
            v.push((t.clone(), Pow::pow(&t, m)));
            t += 1u32;
        }
        v
    };
    let mut triples = Vec::new();
    for (x1, p1) in &powers {
        let scaled = p1 * 3u32;
        for (x2, p2) in &powers {
            if let Some(w) = is_nth_power(&(&scaled + p2), m) {
                triples.push(FermatTriple {
                    x1: x1.clone(),
                    x2: x2.clone(),
                    x3: w.base,
                    m,
                });
            }
        }
    }
    Ok(triples)
}
