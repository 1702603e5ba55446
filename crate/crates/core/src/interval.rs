use serde::{Deserialize, Serialize};
use std::fmt;

/// Integer interval `[lo, hi]` with an open upper end when `hi` is `None`.
///
/// Carries quantities whose exact value may be unknown (e.g. a Ramsey
/// number known only within published bounds). The value is exact iff
/// `lo == hi`. Arithmetic is componentwise and never manufactures
/// exactness: combining an exact value with an interval yields an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ValueInterval {
    pub lo: usize,
    pub hi: Option<usize>,
}

impl ValueInterval {
    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(lo <= hi, "interval bounds out of order: [{lo},{hi}]");
        Self { lo, hi: Some(hi) }
    }

    pub fn exact(v: usize) -> Self {
        Self { lo: v, hi: Some(v) }
    }

    /// `[lo, ∞)`.
    pub fn at_least(lo: usize) -> Self {
        Self { lo, hi: None }
    }

    pub fn is_exact(&self) -> bool {
        self.hi == Some(self.lo)
    }

    pub fn exact_value(&self) -> Option<usize> {
        if self.is_exact() {
            Some(self.lo)
        } else {
            None
        }
    }

    /// Componentwise sum; an open end is absorbing.
    pub fn sum(&self, other: &Self) -> Self {
        Self {
            lo: self.lo + other.lo,
            hi: match (self.hi, other.hi) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            },
        }
    }

    /// Componentwise minimum (lower ends and upper ends independently).
    pub fn min_merge(&self, other: &Self) -> Self {
        Self {
            lo: self.lo.min(other.lo),
            hi: match (self.hi, other.hi) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (Some(a), None) | (None, Some(a)) => Some(a),
                (None, None) => None,
            },
        }
    }

    pub fn add_const(&self, c: usize) -> Self {
        Self {
            lo: self.lo + c,
            hi: self.hi.map(|h| h + c),
        }
    }

    /// Subtracts a constant from both ends, saturating at zero.
    pub fn sub_const(&self, c: usize) -> Self {
        Self {
            lo: self.lo.saturating_sub(c),
            hi: self.hi.map(|h| h.saturating_sub(c)),
        }
    }
}

impl fmt::Display for ValueInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(hi) if hi == self.lo => write!(f, "{}", self.lo),
            Some(hi) => write!(f, "[{},{}]", self.lo, hi),
            None => write!(f, "[{},inf)", self.lo),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactness() {
        assert!(ValueInterval::exact(6).is_exact());
        assert!(!ValueInterval::new(43, 48).is_exact());
        assert!(!ValueInterval::at_least(5).is_exact());
        assert_eq!(ValueInterval::exact(6).exact_value(), Some(6));
        assert_eq!(ValueInterval::new(43, 48).exact_value(), None);
    }

    #[test]
    fn componentwise_ops() {
        let a = ValueInterval::new(2, 3);
        let b = ValueInterval::exact(4);
        assert_eq!(a.sum(&b), ValueInterval::new(6, 7));
        assert_eq!(a.min_merge(&b), ValueInterval::new(2, 3));
        assert_eq!(
            ValueInterval::at_least(5).min_merge(&b),
            ValueInterval::new(4, 4)
        );
        assert_eq!(
            ValueInterval::at_least(5).sum(&b),
            ValueInterval::at_least(9)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(ValueInterval::exact(6).to_string(), "6");
        assert_eq!(ValueInterval::new(43, 48).to_string(), "[43,48]");
        assert_eq!(ValueInterval::at_least(49).to_string(), "[49,inf)");
    }
}
