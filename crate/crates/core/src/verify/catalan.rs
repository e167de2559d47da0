use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::arith::is_nth_power;
use crate::construct::{mihailescu_factors, GeneralTarget};

/// `z^n - 1 = c^4` with `c > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalanWitness {
    pub z: u64,
    pub n: u32,
    #[serde(with = "crate::json::decimal")]
    pub c: BigInt,
}

/// Every `2 <= z <= z_max`, `2 <= n <= n_max` with `z^n - 1` a positive
/// fourth power.
pub fn catalan_desk_check(z_max: u64, n_max: u32) -> Vec<CatalanWitness> {
    let mut found = Vec::new();
    for z in 2..=z_max {
        let base = BigInt::from(z);
        for n in 2..=n_max {
            let shifted = Pow::pow(&base, n) - 1u32;
            if let Some(w) = is_nth_power(&shifted, 4) {
                if shifted > BigInt::from(0) {
                    found.push(CatalanWitness { z, n, c: w.base });
                }
            }
        }
    }
    found
}

/// True iff `gcd(G(x), (x - 1) G(x) + 1) = 1` at every integer in `[lo, hi]`.
pub fn coprimality_check(
    target: &GeneralTarget,
    lo: &BigInt,
    hi: &BigInt,
) -> Result<bool, VerifyError> {
    if lo > hi {
        return Err(VerifyError::EmptyRange {
            lo: lo.clone(),
            hi: hi.clone(),
        });
    }
    let (g, cofactor) = mihailescu_factors(target);
    let mut x = lo.clone();
    while &x <= hi {
        if !g.evaluate(&x).gcd(&cofactor.evaluate(&x)).is_one() {
            return Ok(false);
        }
        x += 1u32;
    }
    Ok(true)
}
