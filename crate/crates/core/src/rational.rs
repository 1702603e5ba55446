//! Exact rational rates. Every ceiling and floor downstream must be
//! computed in integer arithmetic; a floating-point rate would silently
//! corrupt them.

use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// A rate `r = p/q` with `0 < r <= 1`, stored reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalRate(Ratio<i64>);

impl RationalRate {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p <= 0 || q <= 0 {
            return Err(Error::Rate(format!(
                "need positive numerator and denominator, got {p}/{q}"
            )));
        }
        if p > q {
            return Err(Error::Rate(format!(
                "rate must satisfy 0 < p/q <= 1, got {p}/{q}"
            )));
        }
        Ok(Self(Ratio::new(p, q)))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn as_ratio(&self) -> Ratio<i64> {
        self.0
    }

    /// `k = floor(1/r) = floor(q/p)`.
    pub fn floor_inverse(&self) -> usize {
        (self.denom() / self.numer()) as usize
    }

    /// Whether `1/r` is an integer, i.e. `p` divides `q`.
    pub fn is_integer_reciprocal(&self) -> bool {
        self.denom() % self.numer() == 0
    }

    /// `ceil(r * n)` exactly.
    pub fn ceil_mul(&self, n: usize) -> usize {
        let v = (self.0 * Ratio::from_integer(n as i64)).ceil();
        v.to_integer().to_usize().expect("rate * n fits usize")
    }
}

impl fmt::Display for RationalRate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for RationalRate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('.') || s.contains(',') {
            return Err(Error::Rate(format!(
                "'{s}' looks like a decimal; rates must be exact fractions P/Q because \
                 ceil(r*n) and floor(1/r) computed from a float can be off by one"
            )));
        }
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let p: i64 = p
            .trim()
            .parse()
            .map_err(|_| Error::Rate(format!("bad numerator in '{s}'")))?;
        let q: i64 = q
            .trim()
            .parse()
            .map_err(|_| Error::Rate(format!("bad denominator in '{s}'")))?;
        Self::new(p, q)
    }
}

impl Serialize for RationalRate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalRate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reduce() {
        let r: RationalRate = "4/10".parse().unwrap();
        assert_eq!((r.numer(), r.denom()), (2, 5));
        assert_eq!(r.to_string(), "2/5");
        let one: RationalRate = "1".parse().unwrap();
        assert_eq!(one.floor_inverse(), 1);
    }

    #[test]
    fn rejects_decimals_and_bad_ranges() {
        assert!(matches!("0.4".parse::<RationalRate>(), Err(Error::Rate(_))));
        assert!("3/2".parse::<RationalRate>().is_err());
        assert!("0/5".parse::<RationalRate>().is_err());
        assert!("-1/5".parse::<RationalRate>().is_err());
    }

    #[test]
    fn exact_arithmetic() {
        let r = RationalRate::new(2, 5).unwrap();
        assert_eq!(r.floor_inverse(), 2);
        assert!(!r.is_integer_reciprocal());
        assert_eq!(r.ceil_mul(20), 8);
        assert_eq!(r.ceil_mul(7), 3);

        let third = RationalRate::new(1, 3).unwrap();
        assert!(third.is_integer_reciprocal());
        assert_eq!(third.floor_inverse(), 3);
        assert_eq!(third.ceil_mul(7), 3);
    }
}
