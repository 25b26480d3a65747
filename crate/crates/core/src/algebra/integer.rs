use std::fmt;
use std::str::FromStr;

use dashu_int::IBig;

use super::{AlgebraError, Ring};

/// Arbitrary-precision integer, the coefficient ring of fraction-free
/// elimination.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Integer(pub IBig);

impl Integer {
    pub fn as_ibig(&self) -> &IBig {
        &self.0
    }

    pub fn into_ibig(self) -> IBig {
        self.0
    }
}

impl Ring for Integer {
    type Params = ();

    fn params(&self) -> Self::Params {}

    fn zero(_: &()) -> Self {
        Integer(IBig::ZERO)
    }

    fn one(_: &()) -> Self {
        Integer(IBig::ONE)
    }

    fn from_i64(_: &(), value: i64) -> Self {
        Integer(IBig::from(value))
    }

    fn add(&self, rhs: &Self) -> Self {
        Integer(&self.0 + &rhs.0)
    }

    fn neg(&self) -> Self {
        Integer(-&self.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Integer(&self.0 * &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Integer(&self.0 - &rhs.0)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl From<i64> for Integer {
    fn from(value: i64) -> Self {
        Integer(IBig::from(value))
    }
}

impl From<IBig> for Integer {
    fn from(value: IBig) -> Self {
        Integer(value)
    }
}

impl FromStr for Integer {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s.strip_prefix('+').unwrap_or(s);
        IBig::from_str(digits).map(Integer).map_err(|e| AlgebraError::Parse {
            literal: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
