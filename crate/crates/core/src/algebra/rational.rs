use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;

use super::{AlgebraError, DivisionRing, Ring};

/// Exact rational number in canonical form: positive denominator, coprime
/// numerator and denominator, zero stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Rational(RBig);

impl Rational {
    /// Canonical `num/den`. Fails on a zero denominator.
    pub fn new(num: impl Into<IBig>, den: impl Into<IBig>) -> Result<Self, AlgebraError> {
        let den = den.into();
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Rational(RBig::from_parts_signed(num.into(), den)))
    }

    pub fn from_integer(value: impl Into<IBig>) -> Self {
        Rational(RBig::from(value.into()))
    }

    pub fn zero() -> Self {
        Rational(RBig::ZERO)
    }

    pub fn one() -> Self {
        Rational(RBig::ONE)
    }

    pub fn numerator(&self) -> &IBig {
        self.0.numerator()
    }

    pub fn denominator(&self) -> &UBig {
        self.0.denominator()
    }

    pub fn is_integer(&self) -> bool {
        self.0.denominator().is_one()
    }
}

impl Ring for Rational {
    type Params = ();

    fn params(&self) -> Self::Params {}

    fn zero(_: &()) -> Self {
        Rational::zero()
    }

    fn one(_: &()) -> Self {
        Rational::one()
    }

    fn from_i64(_: &(), value: i64) -> Self {
        Rational::from_integer(value)
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn is_zero(&self) -> bool {
        self.0.numerator().is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl DivisionRing for Rational {
    fn reciprocal(&self) -> Result<Self, AlgebraError> {
        if Ring::is_zero(self) {
            return Err(AlgebraError::ZeroReciprocal);
        }
        Ok(Rational(RBig::ONE / &self.0))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `p/q` or `p`, with an optional sign on either part.
impl FromStr for Rational {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_int = |part: &str| {
            let part = part.strip_prefix('+').unwrap_or(part);
            IBig::from_str(part).map_err(|e| AlgebraError::Parse {
                literal: s.to_string(),
                reason: e.to_string(),
            })
        };
        match s.split_once('/') {
            Some((num, den)) => Rational::new(parse_int(num)?, parse_int(den)?),
            None => Ok(Rational::from_integer(parse_int(s)?)),
        }
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl From<IBig> for Rational {
    fn from(value: IBig) -> Self {
        Rational::from_integer(value)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

impl Div<&Rational> for &Rational {
    type Output = Rational;

    /// Panics on division by zero, like primitive integer division.
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!Ring::is_zero(rhs), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;

    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn normalize() {
        assert_eq!(Rational::new(2, 4).unwrap(), q("1/2"));
        assert_eq!(Rational::new(3, -6).unwrap(), q("-1/2"));
        let zero = Rational::new(0, 7).unwrap();
        assert_eq!(zero.numerator(), &IBig::ZERO);
        assert_eq!(zero.denominator(), &UBig::ONE);
        assert_eq!(Rational::new(1, 0), Err(AlgebraError::ZeroDenominator));
    }

    #[test]
    fn canonical_parts() {
        let x = Rational::new(-84, -126).unwrap();
        assert_eq!(x.numerator(), &IBig::from(2));
        assert_eq!(x.denominator(), &UBig::from(3u8));
    }

    #[test]
    fn reciprocal() {
        assert_eq!(q("3/4").reciprocal().unwrap(), q("4/3"));
        assert_eq!(q("-1").reciprocal().unwrap(), q("-1"));
        assert_eq!(q("0").reciprocal(), Err(AlgebraError::ZeroReciprocal));
    }

    #[test]
    fn text_syntax() {
        assert_eq!(q("7").to_string(), "7");
        assert_eq!(q("-14/4").to_string(), "-7/2");
        assert_eq!(q("+3/-9").to_string(), "-1/3");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }
}
