use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Tropical numbers under `(max, +)`. `NegInf` is the additive identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropicalNumber {
    NegInf,
    Finite(BigRational),
}

impl fmt::Debug for TropicalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TropicalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalNumber::NegInf => write!(f, "-inf"),
            TropicalNumber::Finite(q) => write!(f, "{q}"),
        }
    }
}

impl From<i64> for TropicalNumber {
    fn from(n: i64) -> Self {
        TropicalNumber::Finite(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigRational> for TropicalNumber {
    fn from(q: BigRational) -> Self {
        TropicalNumber::Finite(q)
    }
}

impl TropicalNumber {
    pub fn zero() -> Self {
        TropicalNumber::from(0)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropicalNumber::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            TropicalNumber::Finite(q) => Some(q),
            TropicalNumber::NegInf => None,
        }
    }

    /// Integer value, if finite and integral.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            TropicalNumber::Finite(q) if q.is_integer() => q.to_integer().to_i64(),
            _ => None,
        }
    }

    /// Tropical addition: `max`.
    pub fn plus(&self, rhs: &Self) -> Self {
        self.clone().max(rhs.clone())
    }

    /// Tropical multiplication: ordinary `+`, absorbing at `-inf`.
    pub fn times(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (TropicalNumber::Finite(a), TropicalNumber::Finite(b)) => TropicalNumber::Finite(a + b),
            _ => TropicalNumber::NegInf,
        }
    }

    pub fn is_tropical_one(&self) -> bool {
        self.finite().is_some_and(|q| q.is_zero())
    }
}

impl FromStr for TropicalNumber {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-inf" {
            return Ok(TropicalNumber::NegInf);
        }
        crate::tropical::parse_rational(s)
            .map(TropicalNumber::Finite)
            .ok_or_else(|| format!("not a rational: {s:?}"))
    }
}

impl Serialize for TropicalNumber {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TropicalNumber {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
