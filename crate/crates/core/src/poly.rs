//! Dense univariate polynomials over `BigInt` and over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, NumRef, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::json::{self, ParseError};

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Coefficient ring of a [`Polynomial`]: exact arithmetic plus a text form
/// used on the JSON boundary.
pub trait Coefficient: Num + NumRef + Clone + Neg<Output = Self> + fmt::Debug {
    fn to_text(&self) -> String;
    fn from_text(text: &str) -> Result<Self, ParseError>;
}

impl Coefficient for BigInt {
    fn to_text(&self) -> String {
        self.to_string()
    }

    fn from_text(text: &str) -> Result<Self, ParseError> {
        json::parse_integer(text)
    }
}

impl Coefficient for Rational {
    fn to_text(&self) -> String {
        json::format_rational(self)
    }

    fn from_text(text: &str) -> Result<Self, ParseError> {
        json::parse_rational(text)
    }
}

/// Coefficients in ascending degree order. The highest stored coefficient
/// is never zero; the zero polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<Rational>;

impl<T: Coefficient> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// Monic expansion of `(x - r_1)(x - r_2)...`; the empty product is `1`.
    pub fn from_roots(roots: &[T]) -> Self {
        let mut coeffs = vec![T::one()];
        for r in roots {
            // multiply in place by (x - r)
            coeffs.push(T::zero());
            for i in (0..coeffs.len()).rev() {
                let lower = if i > 0 {
                    coeffs[i - 1].clone()
                } else {
                    T::zero()
                };
                let scaled = coeffs[i].clone() * r;
                coeffs[i] = lower - scaled;
            }
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// `self^e` by repeated squaring; `p^0 = 1`, including for `p = 0`.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + c)
    }

    fn add_impl(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a = a.clone() + b;
        }
        Self::new(coeffs)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a.clone() * b;
                coeffs[i + j] = std::mem::replace(&mut coeffs[i + j], T::zero()) + prod;
            }
        }
        Self::new(coeffs)
    }
}

impl IntPolynomial {
    /// The same polynomial viewed over the rationals.
    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::new(
            self.coeffs
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect(),
        )
    }
}

/// Exact value of `p` at a rational point.
pub fn evaluate_rat(p: &RatPolynomial, x: &Rational) -> Rational {
    p.evaluate(x)
}

impl<T: Coefficient> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        self.add_impl(rhs)
    }
}

impl<T: Coefficient> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        self.add_impl(&rhs)
    }
}

impl<T: Coefficient> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().cloned().map(Neg::neg).collect())
    }
}

impl<T: Coefficient> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        self.add_impl(&-rhs)
    }
}

impl<T: Coefficient> Sub for Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        &self - &rhs
    }
}

impl<T: Coefficient> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        self.mul_impl(rhs)
    }
}

impl<T: Coefficient> Mul for Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        self.mul_impl(&rhs)
    }
}

impl<T: Coefficient + Signed> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = deg == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", mag.to_text().trim_end_matches("/1"))?;
            }
            match deg {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    coeffs: Vec<String>,
}

impl<T: Coefficient> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolynomialJson {
            coeffs: self.coeffs.iter().map(Coefficient::to_text).collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Coefficient> Deserialize<'de> for Polynomial<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = PolynomialJson::deserialize(d)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|c| T::from_text(c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Self::new(coeffs))
    }
}
