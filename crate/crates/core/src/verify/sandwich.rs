use num_bigint::BigInt;
use num_traits::{Pow, Signed};
use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::construct::FixedExponentTarget;

/// Record that `f(x)` lies strictly between `B^m` and `(B + 1)^m` for
/// `B = (x(x^2 + 1)g(x))^4`, so it cannot be an `m`-th power.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandwichCertificate {
    #[serde(with = "crate::json::decimal")]
    pub x: BigInt,
    #[serde(with = "crate::json::decimal")]
    pub bound: BigInt,
    #[serde(with = "crate::json::decimal")]
    pub value: BigInt,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

impl SandwichCertificate {
    pub fn is_valid(&self) -> bool {
        self.lower_ok && self.upper_ok
    }
}

/// The three auxiliary inequalities behind the upper half of the sandwich.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HelperInequalities {
    /// `m h^(4m-4) > (x^(2m) - x^2 + 2) g^(2m) + x^m`
    pub scaled_gap: bool,
    /// `h^(4m-4) > (x^(2m) - x^2 + 2) g^(2m)`
    pub correction_term: bool,
    /// `h^(4m-4) >= (x(x^2 + 1))^(4m-4) > |x|^m`
    pub monomial_term: bool,
}

impl HelperInequalities {
    pub fn all(&self) -> bool {
        self.scaled_gap && self.correction_term && self.monomial_term
    }

    pub fn as_triple(&self) -> (bool, bool, bool) {
        (self.scaled_gap, self.correction_term, self.monomial_term)
    }
}

/// Pieces of the Runge-style polynomial evaluated directly at `x`, without
/// going through its coefficient expansion.
struct RungeTerms {
    m: u32,
    /// x(x^2 + 1)
    cubic: BigInt,
    /// x(x^2 + 1) g(x)
    h: BigInt,
    /// (x^(2m) - x^2 + 2) g(x)^(2m)
    correction: BigInt,
    /// x^m
    monomial: BigInt,
}

impl RungeTerms {
    fn at(target: &FixedExponentTarget, x: &BigInt) -> Result<Self, VerifyError> {
        if target.is_excluded(x) {
            return Err(VerifyError::ExcludedPoint(x.clone()));
        }
        let m = target.exponent();
        let g: BigInt = target.bases().iter().map(|a| x - a).product();
        let cubic = x * (x * x + 1u32);
        let h = &cubic * &g;
        let correction = (Pow::pow(x, 2 * m) - x * x + 2u32) * Pow::pow(&g, 2 * m);
        Ok(Self {
            m,
            cubic,
            h,
            correction,
            monomial: Pow::pow(x, m),
        })
    }

    fn value(&self) -> BigInt {
        Pow::pow(&self.h, 4 * self.m) + &self.correction + &self.monomial
    }
}

/// Checks `B^m < f(x) < (B + 1)^m` exactly. Fails for `x = 0` and for the
/// bases, where the polynomial is meant to hit a power.
pub fn certify_sandwich(
    target: &FixedExponentTarget,
    x: &BigInt,
) -> Result<SandwichCertificate, VerifyError> {
    let terms = RungeTerms::at(target, x)?;
    let m = terms.m;
    let bound = Pow::pow(&terms.h, 4u32);
    let value = terms.value();
    let lower_ok = Pow::pow(&bound, m) < value;
    let upper_ok = value < Pow::pow(&(&bound + 1u32), m);
    Ok(SandwichCertificate {
        x: x.clone(),
        bound,
        value,
        lower_ok,
        upper_ok,
    })
}

pub fn certify_helper_inequalities(
    target: &FixedExponentTarget,
    x: &BigInt,
) -> Result<HelperInequalities, VerifyError> {
    let terms = RungeTerms::at(target, x)?;
    let e = 4 * terms.m - 4;
    let h_pow = Pow::pow(&terms.h, e);
    let cubic_pow = Pow::pow(&terms.cubic, e);
    let abs_monomial = terms.monomial.abs();
    Ok(HelperInequalities {
        scaled_gap: &h_pow * terms.m > &terms.correction + &terms.monomial,
        correction_term: h_pow > terms.correction,
        monomial_term: h_pow >= cubic_pow && cubic_pow > abs_monomial,
    })
}
