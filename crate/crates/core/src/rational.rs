//! Exact rational values for numeric answers.
//!
//! Benchmark gold answers are integers or short decimals, so predicted and
//! gold values are compared as exact rationals — no epsilon.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// An exact rational answer value.
///
/// Displayed as `n` when integral, `n/d` otherwise. Parses integers,
/// fractions (`15/4`) and plain decimals (`3.75`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericValue(Rational64);

#[derive(Debug, Error, PartialEq, Eq)]
#[error("not a rational number: {0:?}")]
pub struct ParseNumericError(pub String);

impl NumericValue {
    pub fn from_integer(n: i64) -> Self {
        NumericValue(Rational64::from_integer(n))
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        NumericValue(Rational64::new(numer, denom))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for NumericValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for NumericValue {
    type Err = ParseNumericError;

    /// Accepts `-12`, `15/4` and `3.75`. No separators or units; callers
    /// normalize those away first.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || ParseNumericError(s.to_string());
        if s.is_empty() {
            return Err(err());
        }
        if let Some((n, d)) = s.split_once('/') {
            let numer: i64 = n.trim().parse().map_err(|_| err())?;
            let denom: i64 = d.trim().parse().map_err(|_| err())?;
            if denom == 0 {
                return Err(err());
            }
            return Ok(NumericValue(Rational64::new(numer, denom)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let negative = int_part.trim_start().starts_with('-');
            let int: i64 = if int_part == "-" || int_part.is_empty() {
                0
            } else {
                int_part.parse().map_err(|_| err())?
            };
            let scale = 10_i64
                .checked_pow(frac_part.len() as u32)
                .ok_or_else(err)?;
            let frac: i64 = frac_part.parse().map_err(|_| err())?;
            let magnitude = int
                .abs()
                .checked_mul(scale)
                .and_then(|v| v.checked_add(frac))
                .ok_or_else(err)?;
            let numer = if negative || int < 0 { -magnitude } else { magnitude };
            return Ok(NumericValue(Rational64::new(numer, scale)));
        }
        let n: i64 = s.parse().map_err(|_| err())?;
        Ok(NumericValue::from_integer(n))
    }
}

impl Serialize for NumericValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for NumericValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
