//! The three polynomial families and the validation of their target sets.
//!
//! * Runge-style: `(x(x^2+1)g)^(4m) + (x^(2m) - x^2 + 2) g^(2m) + x^m` with
//!   `g = (x - a_1)...(x - a_k)`, for any `m >= 2`.
//! * Fermat-style: `3 g^m + x^m`, for `m >= 3`, over the integers or the
//!   rationals.
//! * Catalan-style: `G ((x - 1) G + 1)` with `G = ((x - b_1)...(x - b_k))^4 + 1`,
//!   for an arbitrary finite set of perfect powers.

use num_bigint::BigInt;
use num_traits::{Pow, Signed};
use thiserror::Error;

use crate::arith::perfect_power_decompose;
use crate::poly::{Coefficient, IntPolynomial, Polynomial, RatPolynomial, Rational};

const M2_REASON: &str = "for m = 2 the equation q*x1^2 + x2^2 = x3^2 has solutions with x1 != 0 \
     (Pell solutions when q is not a square, Pythagorean triples when it is); \
     use the runge method instead";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("exponent must be at least 2, got {0}")]
    InvalidExponent(u32),
    #[error("bases at positions {pairs:?} give the same power")]
    DuplicatePower { pairs: Vec<(usize, usize)> },
    #[error("not perfect powers: {}", fmt_offenders(.offenders))]
    NotPerfectPower { offenders: Vec<(usize, BigInt)> },
    #[error("exponent {exponent} is too small for the fermat construction: {reason}")]
    ExponentTooSmall { exponent: u32, reason: &'static str },
    #[error("the fermat construction needs at least one base")]
    EmptyBases,
}

fn fmt_offenders(offenders: &[(usize, BigInt)]) -> String {
    offenders
        .iter()
        .map(|(i, v)| format!("#{i} = {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Raw, unvalidated description of the target set `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetSpec {
    /// `S = {a_1^m, ..., a_k^m}`.
    FixedExponent { exponent: u32, bases: Vec<BigInt> },
    /// `S = {b_1, ..., b_k}`, each `b_i` a perfect power.
    General { powers: Vec<BigInt> },
}

/// A target set that passed [`validate_target`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    FixedExponent(FixedExponentTarget),
    General(GeneralTarget),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedExponentTarget {
    exponent: u32,
    bases: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralTarget {
    powers: Vec<BigInt>,
}

/// Index pairs `(i, j)`, `i < j`, whose keys coincide.
fn colliding_pairs<K: PartialEq>(keys: &[K]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for j in 0..keys.len() {
        for i in 0..j {
            if keys[i] == keys[j] {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// `a^m` and `b^m` coincide iff `a = b`, or `|a| = |b|` when `m` is even.
fn power_keys<T: Coefficient + Signed>(exponent: u32, bases: &[T]) -> Vec<T> {
    bases
        .iter()
        .map(|a| {
            if exponent.is_multiple_of(2) {
                a.abs()
            } else {
                a.clone()
            }
        })
        .collect()
}

impl FixedExponentTarget {
    pub fn new(exponent: u32, bases: Vec<BigInt>) -> Result<Self, ConstructError> {
        if exponent < 2 {
            return Err(ConstructError::InvalidExponent(exponent));
        }
        let pairs = colliding_pairs(&power_keys(exponent, &bases));
        if !pairs.is_empty() {
            return Err(ConstructError::DuplicatePower { pairs });
        }
        Ok(Self { exponent, bases })
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn bases(&self) -> &[BigInt] {
        &self.bases
    }

    /// The target values `a_i^m`.
    pub fn powers(&self) -> Vec<BigInt> {
        self.bases
            .iter()
            .map(|a| Pow::pow(a, self.exponent))
            .collect()
    }

    /// True for `0` and for every base: the points the sandwich argument skips.
    pub fn is_excluded(&self, x: &BigInt) -> bool {
        x.sign() == num_bigint::Sign::NoSign || self.bases.contains(x)
    }
}

impl GeneralTarget {
    pub fn new(powers: Vec<BigInt>) -> Result<Self, ConstructError> {
        let offenders: Vec<(usize, BigInt)> = powers
            .iter()
            .enumerate()
            .filter(|(_, b)| perfect_power_decompose(b).is_none())
            .map(|(i, b)| (i, b.clone()))
            .collect();
        if !offenders.is_empty() {
            return Err(ConstructError::NotPerfectPower { offenders });
        }
        let pairs = colliding_pairs(&powers);
        if !pairs.is_empty() {
            return Err(ConstructError::DuplicatePower { pairs });
        }
        Ok(Self { powers })
    }

    pub fn powers(&self) -> &[BigInt] {
        &self.powers
    }
}

pub fn validate_target(spec: TargetSpec) -> Result<Target, ConstructError> {
    match spec {
        TargetSpec::FixedExponent { exponent, bases } => {
            FixedExponentTarget::new(exponent, bases).map(Target::FixedExponent)
        }
        TargetSpec::General { powers } => GeneralTarget::new(powers).map(Target::General),
    }
}

/// Runge-style polynomial; valid for every `m >= 2` and every `k >= 0`.
///
/// Degree `4m(k + 3)`, monic, `f(a_i) = a_i^m`, `f(0) = 2 (a_1...a_k)^(2m)`.
pub fn build_runge(target: &FixedExponentTarget) -> IntPolynomial {
    let m = target.exponent;
    let g = IntPolynomial::from_roots(&target.bases);
    let x = IntPolynomial::x();
    // x(x^2 + 1) g
    let cubic = IntPolynomial::new(vec![0.into(), 1.into(), 0.into(), 1.into()]);
    let dominant = (&cubic * &g).pow(4 * m);
    let x_2m = IntPolynomial::monomial(1.into(), 2 * m as usize);
    let correction_factor =
        &(&x_2m - &IntPolynomial::monomial(1.into(), 2)) + &IntPolynomial::constant(2.into());
    let correction = &correction_factor * &g.pow(2 * m);
    &(&dominant + &correction) + &x.pow(m)
}

fn fermat_shape<T: Coefficient>(exponent: u32, bases: &[T]) -> Polynomial<T> {
    let g = Polynomial::from_roots(bases);
    let three = T::one() + T::one() + T::one();
    &g.pow(exponent).scale(&three) + &Polynomial::x().pow(exponent)
}

fn check_fermat_exponent(exponent: u32) -> Result<(), ConstructError> {
    if exponent < 2 {
        return Err(ConstructError::InvalidExponent(exponent));
    }
    if exponent == 2 {
        return Err(ConstructError::ExponentTooSmall {
            exponent,
            reason: M2_REASON,
        });
    }
    Ok(())
}

/// Fermat-style polynomial `3 g^m + x^m`; requires `m >= 3` and `k >= 1`.
pub fn build_fermat(target: &FixedExponentTarget) -> Result<IntPolynomial, ConstructError> {
    check_fermat_exponent(target.exponent)?;
    if target.bases.is_empty() {
        return Err(ConstructError::EmptyBases);
    }
    Ok(fermat_shape(target.exponent, &target.bases))
}

/// The two coprime factors `(G, (x - 1) G + 1)` of the Catalan-style polynomial.
pub fn mihailescu_factors(target: &GeneralTarget) -> (IntPolynomial, IntPolynomial) {
    let c = IntPolynomial::from_roots(&target.powers);
    let g = &c.pow(4) + &IntPolynomial::one();
    let x_minus_one = IntPolynomial::from_roots(&[1.into()]);
    let cofactor = &(&x_minus_one * &g) + &IntPolynomial::one();
    (g, cofactor)
}

/// Catalan-style polynomial `G ((x - 1) G + 1)`; degree `8k + 1` and the
/// identity on every `b_i`.
pub fn build_mihailescu(target: &GeneralTarget) -> IntPolynomial {
    let (g, cofactor) = mihailescu_factors(target);
    &g * &cofactor
}

/// Fermat-style polynomial over the rationals for `S = {a_1^m, ..., a_k^m}`
/// with rational `a_i`.
pub fn build_fermat_rational(
    exponent: u32,
    bases: &[Rational],
) -> Result<RatPolynomial, ConstructError> {
    check_fermat_exponent(exponent)?;
    if bases.is_empty() {
        return Err(ConstructError::EmptyBases);
    }
    let pairs = colliding_pairs(&power_keys(exponent, bases));
    if !pairs.is_empty() {
        return Err(ConstructError::DuplicatePower { pairs });
    }
    Ok(fermat_shape(exponent, bases))
}
