//! Text forms for big numbers crossing the JSON boundary.
//!
//! Integers travel as decimal strings and rationals as `"p/q"` strings so
//! nothing is truncated to a machine word.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("invalid integer {0:?}")]
    Integer(String),
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

pub fn parse_integer(text: &str) -> Result<BigInt, ParseError> {
    let t = text.trim();
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Integer(text.to_string()));
    }
    t.parse().map_err(|_| ParseError::Integer(text.to_string()))
}

/// Parses `"p/q"` or a bare integer `"p"`; the result is in lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let bad = || ParseError::Rational(text.to_string());
    match text.split_once('/') {
        None => parse_integer(text)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((num, den)) => {
            let num = parse_integer(num).map_err(|_| bad())?;
            let den = parse_integer(den).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(ParseError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Always `"p/q"`, even for integers (`"3/1"`).
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Shorter display form: `"3"` for integers, `"p/q"` otherwise.
pub fn display_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format_rational(value)
    }
}

/// `#[serde(with = "crate::json::decimal")]` for `BigInt` fields.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_integer(&text).map_err(serde::de::Error::custom)
    }
}

/// `#[serde(with = "crate::json::rational")]` for `Rational` fields.
pub mod rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::poly::Rational;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
