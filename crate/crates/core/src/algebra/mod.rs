//! Coefficient domains.
//!
//! Every algorithm in this crate is written against [`Ring`] and
//! [`DivisionRing`]. Elements that need runtime configuration (the modulus of
//! a prime field) expose it through [`Ring::Params`]; containers such as
//! [`Matrix`](crate::matrix::Matrix) carry the params so that zeros and ones
//! can be produced even for empty inputs.

mod axioms;
mod integer;
mod prime_field;
mod rational;
mod xgcd;

use std::fmt;

pub use axioms::{AxiomOutcome, AxiomReport, AxiomSuite};
pub use integer::Integer;
pub use prime_field::{PrimeField, PrimeFieldElement};
pub use rational::Rational;
pub use xgcd::{gcd, xgcd, XgcdInteger};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("attempted to invert zero")]
    ZeroReciprocal,
    #[error("elements of F_{left} and F_{right} cannot be combined")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("invalid literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },
}

/// Unital ring with decidable zero.
///
/// Arithmetic methods take references and return fresh values; all values
/// are immutable.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    /// Runtime description of the ring an element lives in.
    type Params: Clone + PartialEq + fmt::Debug;

    fn params(&self) -> Self::Params;
    fn zero(params: &Self::Params) -> Self;
    fn one(params: &Self::Params) -> Self;
    fn from_i64(params: &Self::Params, value: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.params())
    }
}

/// Ring in which every nonzero element is invertible.
pub trait DivisionRing: Ring {
    /// Over a division ring this is exactly `!is_zero()`.
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    /// Two-sided inverse. Fails only on zero.
    fn reciprocal(&self) -> Result<Self, AlgebraError>;
}
