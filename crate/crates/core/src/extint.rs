use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// Extended non-negative integer: the value domain of orders, multiplicities,
/// Milnor numbers and colengths. `Infinity` is a distinguished value (the
/// order of the zero polynomial, the colength of a non-zero-dimensional
/// ideal), never a sentinel integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtInt {
    Finite(u64),
    Infinity,
}

impl ExtInt {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtInt::Finite(n) => Some(n),
            ExtInt::Infinity => None,
        }
    }

    /// Unwraps a finite value; panics on infinity.
    pub fn expect_finite(self, what: &str) -> u64 {
        match self {
            ExtInt::Finite(n) => n,
            ExtInt::Infinity => panic!("{what} is infinite"),
        }
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::Infinity, ExtInt::Infinity) => Ordering::Equal,
            (ExtInt::Infinity, ExtInt::Finite(_)) => Ordering::Greater,
            (ExtInt::Finite(_), ExtInt::Infinity) => Ordering::Less,
            (ExtInt::Finite(a), ExtInt::Finite(b)) => a.cmp(b),
        }
    }
}

impl From<u64> for ExtInt {
    fn from(n: u64) -> Self {
        ExtInt::Finite(n)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(n) => write!(f, "{n}"),
            ExtInt::Infinity => write!(f, "infinity"),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtInt::Finite(n) => s.serialize_u64(*n),
            ExtInt::Infinity => s.serialize_str("infinity"),
        }
    }
}

/// A difference of two extended orders, `V(F_t) − min V(F_{z_i})`.
/// `Undefined` is infinity minus infinity: the arc carries no information.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gap {
    Finite(i64),
    PlusInfinity,
    MinusInfinity,
    Undefined,
}

impl Gap {
    /// Difference of extended non-negative integers.
    pub fn difference(a: ExtInt, b: ExtInt) -> Gap {
        match (a, b) {
            (ExtInt::Infinity, ExtInt::Infinity) => Gap::Undefined,
            (ExtInt::Infinity, ExtInt::Finite(_)) => Gap::PlusInfinity,
            (ExtInt::Finite(_), ExtInt::Infinity) => Gap::MinusInfinity,
            (ExtInt::Finite(a), ExtInt::Finite(b)) => Gap::Finite(a as i64 - b as i64),
        }
    }

    /// A certificate gap: defined and ≤ 0.
    pub fn refutes(self) -> bool {
        match self {
            Gap::Finite(g) => g <= 0,
            Gap::MinusInfinity => true,
            Gap::PlusInfinity | Gap::Undefined => false,
        }
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gap::Finite(g) => write!(f, "{g}"),
            Gap::PlusInfinity => write!(f, "+infinity"),
            Gap::MinusInfinity => write!(f, "-infinity"),
            Gap::Undefined => write!(f, "undefined"),
        }
    }
}

impl Serialize for Gap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Gap::Finite(g) => s.serialize_i64(*g),
            Gap::PlusInfinity => s.serialize_str("+infinity"),
            Gap::MinusInfinity => s.serialize_str("-infinity"),
            Gap::Undefined => s.serialize_str("undefined"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_treats_infinity_as_top() {
        assert!(ExtInt::Finite(1_000_000) < ExtInt::Infinity);
        assert_eq!(
            ExtInt::Finite(3).min(ExtInt::Infinity),
            ExtInt::Finite(3)
        );
    }

    #[test]
    fn gap_arithmetic() {
        assert_eq!(
            Gap::difference(ExtInt::Finite(2), ExtInt::Finite(3)),
            Gap::Finite(-1)
        );
        assert_eq!(
            Gap::difference(ExtInt::Infinity, ExtInt::Infinity),
            Gap::Undefined
        );
        assert!(!Gap::Undefined.refutes());
        assert!(Gap::Finite(0).refutes());
        assert!(!Gap::Finite(1).refutes());
    }
}
