//! Exact rationals extended with a single positive infinity.
//!
//! Toughness of a complete graph and σ₂ of a complete graph are both
//! infinite, so every invariant and threshold in the crate is carried as a
//! [`Rational`]. The finite part is `num_rational::Ratio<i64>`, which keeps
//! values reduced with a positive denominator.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rational {
    Finite(Ratio<i64>),
    Infinity,
}

impl Rational {
    pub const ZERO: Rational = Rational::Finite(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational::Finite(Ratio::new_raw(1, 1));

    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        Rational::Finite(Ratio::new(num, den))
    }

    pub fn from_int(v: i64) -> Self {
        Rational::Finite(Ratio::from_integer(v))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Rational::Infinity)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn finite(&self) -> Option<Ratio<i64>> {
        match self {
            Rational::Finite(r) => Some(*r),
            Rational::Infinity => None,
        }
    }

    pub fn numer(&self) -> Option<i64> {
        self.finite().map(|r| *r.numer())
    }

    pub fn denom(&self) -> Option<i64> {
        self.finite().map(|r| *r.denom())
    }

    pub fn is_positive(&self) -> bool {
        *self > Rational::ZERO
    }

    pub fn is_integer(&self) -> bool {
        self.finite().is_some_and(|r| r.is_integer())
    }

    /// Smallest integer not below `self`; `None` for infinity.
    pub fn ceil(&self) -> Option<i64> {
        self.finite()
            .map(|r| Integer::div_ceil(r.numer(), r.denom()))
    }

    /// Largest integer not above `self`; `None` for infinity.
    pub fn floor(&self) -> Option<i64> {
        self.finite()
            .map(|r| Integer::div_floor(r.numer(), r.denom()))
    }

    /// Compares `count` against `self` without building a new value.
    pub fn cmp_int(&self, count: i64) -> Ordering {
        self.cmp(&Rational::from_int(count))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

impl From<usize> for Rational {
    fn from(v: usize) -> Self {
        Rational::from_int(i64::try_from(v).expect("count fits in i64"))
    }
}

impl From<Ratio<i64>> for Rational {
    fn from(r: Ratio<i64>) -> Self {
        Rational::Finite(r)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Finite(a), Rational::Finite(b)) => a.cmp(b),
            (Rational::Finite(_), Rational::Infinity) => Ordering::Less,
            (Rational::Infinity, Rational::Finite(_)) => Ordering::Greater,
            (Rational::Infinity, Rational::Infinity) => Ordering::Equal,
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        match (self, rhs) {
            (Rational::Finite(a), Rational::Finite(b)) => Rational::Finite(a + b),
            _ => Rational::Infinity,
        }
    }
}

impl Sub for Rational {
    type Output = Rational;
    /// Panics on `inf - inf` and `finite - inf`.
    fn sub(self, rhs: Rational) -> Rational {
        match (self, rhs) {
            (Rational::Finite(a), Rational::Finite(b)) => Rational::Finite(a - b),
            (Rational::Infinity, Rational::Finite(_)) => Rational::Infinity,
            _ => panic!("subtraction of infinity is undefined"),
        }
    }
}

impl Mul for Rational {
    type Output = Rational;
    /// Panics on `0 * inf` and on infinity times a negative value.
    fn mul(self, rhs: Rational) -> Rational {
        match (self, rhs) {
            (Rational::Finite(a), Rational::Finite(b)) => Rational::Finite(a * b),
            (Rational::Finite(a), Rational::Infinity)
            | (Rational::Infinity, Rational::Finite(a)) => {
                assert!(
                    a > Ratio::from_integer(0),
                    "infinity times a non-positive value"
                );
                Rational::Infinity
            }
            (Rational::Infinity, Rational::Infinity) => Rational::Infinity,
        }
    }
}

impl Div for Rational {
    type Output = Rational;
    /// Finite over infinity is zero. Panics on division by zero and on
    /// `inf / inf`.
    fn div(self, rhs: Rational) -> Rational {
        match (self, rhs) {
            (Rational::Finite(a), Rational::Finite(b)) => {
                assert!(*b.numer() != 0, "division by zero");
                Rational::Finite(a / b)
            }
            (Rational::Finite(_), Rational::Infinity) => Rational::ZERO,
            (Rational::Infinity, Rational::Finite(b)) => {
                assert!(
                    b > Ratio::from_integer(0),
                    "infinity over a non-positive value"
                );
                Rational::Infinity
            }
            (Rational::Infinity, Rational::Infinity) => panic!("inf / inf is undefined"),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self {
            Rational::Finite(a) => Rational::Finite(-a),
            Rational::Infinity => panic!("negative infinity is not representable"),
        }
    }
}

impl fmt::Display for Rational {
    /// `num/den` for finite values (denominator always present), `inf`
    /// otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Rational::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as a rational (expected `p/q`, `p` or `inf`)")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Rational::Infinity);
        }
        let err = || ParseRationalError(s.to_owned());
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| err())?;
                let q: i64 = q.trim().parse().map_err(|_| err())?;
                if q == 0 {
                    return Err(err());
                }
                Ok(Rational::new(p, q))
            }
            None => s.parse::<i64>().map(Rational::from_int).map_err(|_| err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form() {
        let r = Rational::new(4, -6);
        assert_eq!(r.numer(), Some(-2));
        assert_eq!(r.denom(), Some(3));
        assert_eq!(r.to_string(), "-2/3");
    }

    #[test]
    fn infinity_dominates() {
        assert!(Rational::Infinity > Rational::from_int(i64::MAX / 2));
        assert_eq!(Rational::from_int(3) / Rational::Infinity, Rational::ZERO);
        assert_eq!(Rational::Infinity + Rational::ONE, Rational::Infinity);
    }

    #[test]
    fn ceil_and_floor() {
        assert_eq!(Rational::new(8, 3).ceil(), Some(3));
        assert_eq!(Rational::new(8, 3).floor(), Some(2));
        assert_eq!(Rational::new(-8, 3).ceil(), Some(-2));
        assert_eq!(Rational::from_int(4).ceil(), Some(4));
        assert_eq!(Rational::Infinity.ceil(), None);
    }

    #[test]
    fn parse_forms() {
        assert_eq!("2/3".parse::<Rational>().unwrap(), Rational::new(2, 3));
        assert_eq!("6/4".parse::<Rational>().unwrap(), Rational::new(3, 2));
        assert_eq!("5".parse::<Rational>().unwrap(), Rational::from_int(5));
        assert_eq!("inf".parse::<Rational>().unwrap(), Rational::Infinity);
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for r in [
            Rational::new(7, 10),
            Rational::from_int(4),
            Rational::Infinity,
        ] {
            assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
}
