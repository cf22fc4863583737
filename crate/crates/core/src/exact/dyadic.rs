use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A rational of the form `numerator / 2^exp2`.
///
/// Values are kept normalized: the numerator is odd unless `exp2` is zero,
/// and zero is stored as `0 / 2^0`. Equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    numerator: BigInt,
    exp2: u64,
}

impl DyadicRational {
    pub fn new(numerator: BigInt, exp2: u64) -> Self {
        let mut value = Self { numerator, exp2 };
        value.normalize();
        value
    }

    pub fn zero() -> Self {
        Self::from(BigInt::zero())
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exp2(&self) -> u64 {
        self.exp2
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.numerator.is_positive()
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.exp2 = 0;
            return;
        }
        let shift = self.numerator.trailing_zeros().unwrap_or(0).min(self.exp2);
        if shift > 0 {
            self.numerator >>= shift;
            self.exp2 -= shift;
        }
    }

    /// Numerator rescaled to denominator `2^exp2`; requires `exp2 >= self.exp2`.
    fn scaled_numerator(&self, exp2: u64) -> BigInt {
        &self.numerator << (exp2 - self.exp2)
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.numerator.clone(), BigInt::one() << self.exp2)
    }

    /// Converts a rational whose reduced denominator is a power of two.
    pub fn try_from_rational(value: &Rational) -> Result<Self> {
        let denom = value.denom();
        let tz = denom.trailing_zeros().unwrap_or(0);
        if (denom >> tz) != BigInt::one() {
            return Err(Error::NotDyadic {
                value: super::format_rational(value),
            });
        }
        Ok(Self::new(value.numer().clone(), tz))
    }
}

impl From<BigInt> for DyadicRational {
    fn from(numerator: BigInt) -> Self {
        Self { numerator, exp2: 0 }
    }
}

impl From<&DyadicRational> for Rational {
    fn from(value: &DyadicRational) -> Self {
        value.to_rational()
    }
}

impl TryFrom<&Rational> for DyadicRational {
    type Error = Error;

    fn try_from(value: &Rational) -> Result<Self> {
        Self::try_from_rational(value)
    }
}

impl Add for &DyadicRational {
    type Output = DyadicRational;

    fn add(self, rhs: Self) -> DyadicRational {
        let exp2 = self.exp2.max(rhs.exp2);
        DyadicRational::new(
            self.scaled_numerator(exp2) + rhs.scaled_numerator(exp2),
            exp2,
        )
    }
}

impl Sub for &DyadicRational {
    type Output = DyadicRational;

    fn sub(self, rhs: Self) -> DyadicRational {
        let exp2 = self.exp2.max(rhs.exp2);
        DyadicRational::new(
            self.scaled_numerator(exp2) - rhs.scaled_numerator(exp2),
            exp2,
        )
    }
}

impl Mul for &DyadicRational {
    type Output = DyadicRational;

    fn mul(self, rhs: Self) -> DyadicRational {
        DyadicRational::new(&self.numerator * &rhs.numerator, self.exp2 + rhs.exp2)
    }
}

impl Neg for DyadicRational {
    type Output = DyadicRational;

    fn neg(self) -> DyadicRational {
        DyadicRational {
            numerator: -self.numerator,
            exp2: self.exp2,
        }
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp2 = self.exp2.max(other.exp2);
        self.scaled_numerator(exp2)
            .cmp(&other.scaled_numerator(exp2))
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp2 == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.exp2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    #[test]
    fn normalizes_on_construction() {
        let v = DyadicRational::new(BigInt::from(12), 4);
        assert_eq!(v.numerator(), &BigInt::from(3));
        assert_eq!(v.exp2(), 2);
        let z = DyadicRational::new(BigInt::zero(), 9);
        assert_eq!(z, DyadicRational::zero());
        // Even integers keep exp2 = 0.
        let e = DyadicRational::new(BigInt::from(8), 0);
        assert_eq!(e.numerator(), &BigInt::from(8));
    }

    #[test]
    fn rejects_non_dyadic() {
        assert!(DyadicRational::try_from_rational(&ratio(1, 3)).is_err());
        assert_eq!(
            DyadicRational::try_from_rational(&ratio(21, 8)).unwrap(),
            DyadicRational::new(BigInt::from(21), 3)
        );
    }

    #[test]
    fn arithmetic_matches_rationals() {
        let a = DyadicRational::new(BigInt::from(21), 3);
        let b = DyadicRational::new(BigInt::from(-5), 1);
        assert_eq!((&a + &b).to_rational(), ratio(1, 8));
        assert_eq!((&a - &b).to_rational(), ratio(41, 8));
        assert_eq!((&a * &b).to_rational(), ratio(-105, 16));
        assert!(b < a);
    }

    proptest! {
        #[test]
        fn round_trip_through_rational(n in -100_000i64..100_000, e in 0u64..80) {
            let d = DyadicRational::new(BigInt::from(n), e);
            let back = DyadicRational::try_from_rational(&d.to_rational()).unwrap();
            prop_assert_eq!(back, d);
        }

        #[test]
        fn order_matches_rational_order(a in -5000i64..5000, ea in 0u64..20, b in -5000i64..5000, eb in 0u64..20) {
            let x = DyadicRational::new(BigInt::from(a), ea);
            let y = DyadicRational::new(BigInt::from(b), eb);
            prop_assert_eq!(x.cmp(&y), x.to_rational().cmp(&y.to_rational()));
            prop_assert_eq!((&x + &y).to_rational(), x.to_rational() + y.to_rational());
        }
    }
}
