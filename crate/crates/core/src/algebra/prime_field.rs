use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand_core::Rng as RandomSource;

use super::{xgcd, AlgebraError, DivisionRing, Ring};

/// The field `F_p` for a word-sized prime `p`.
///
/// Primality is checked once, here; elements built through the field are
/// trusted afterwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self, AlgebraError> {
        if is_prime(modulus) {
            Ok(PrimeField { modulus })
        } else {
            Err(AlgebraError::NotPrime(modulus))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The residue class of `value`.
    pub fn element(&self, value: i64) -> PrimeFieldElement {
        let residue = (value as i128).rem_euclid(self.modulus as i128) as u64;
        PrimeFieldElement { residue, modulus: self.modulus }
    }

    pub fn element_from_residue(&self, residue: u64) -> PrimeFieldElement {
        PrimeFieldElement { residue: residue % self.modulus, modulus: self.modulus }
    }

    /// All `p` elements in residue order. Intended for small fields.
    pub fn elements(&self) -> impl Iterator<Item = PrimeFieldElement> + '_ {
        (0..self.modulus).map(|r| self.element_from_residue(r))
    }

    /// Uniform random element.
    pub fn random_element<R: RandomSource + ?Sized>(&self, rng: &mut R) -> PrimeFieldElement {
        let residue = crate::tools::uniform_u64_below(rng, self.modulus);
        PrimeFieldElement { residue, modulus: self.modulus }
    }
}

/// Element of `F_p`, carrying its modulus.
///
/// Combining elements of different fields through the [`Ring`] methods or
/// operators panics; the `try_*` methods report it as an error instead.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, rhs: &Self) -> Result<u64, AlgebraError> {
        if self.modulus == rhs.modulus {
            Ok(self.modulus)
        } else {
            Err(AlgebraError::ModulusMismatch { left: self.modulus, right: rhs.modulus })
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        let p = self.check(rhs)?;
        let residue = ((self.residue as u128 + rhs.residue as u128) % p as u128) as u64;
        Ok(PrimeFieldElement { residue, modulus: p })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check(rhs)?;
        self.try_add(&Ring::neg(rhs))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        let p = self.check(rhs)?;
        let residue = ((self.residue as u128 * rhs.residue as u128) % p as u128) as u64;
        Ok(PrimeFieldElement { residue, modulus: p })
    }

    fn expect_same(result: Result<Self, AlgebraError>) -> Self {
        match result {
            Ok(value) => value,
            Err(err) => panic!("{err}"),
        }
    }
}

impl Ring for PrimeFieldElement {
    type Params = PrimeField;

    fn params(&self) -> PrimeField {
        PrimeField { modulus: self.modulus }
    }

    fn zero(field: &PrimeField) -> Self {
        field.element_from_residue(0)
    }

    fn one(field: &PrimeField) -> Self {
        field.element_from_residue(1)
    }

    fn from_i64(field: &PrimeField, value: i64) -> Self {
        field.element(value)
    }

    fn add(&self, rhs: &Self) -> Self {
        Self::expect_same(self.try_add(rhs))
    }

    fn neg(&self) -> Self {
        let residue = if self.residue == 0 { 0 } else { self.modulus - self.residue };
        PrimeFieldElement { residue, modulus: self.modulus }
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self::expect_same(self.try_mul(rhs))
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self::expect_same(self.try_sub(rhs))
    }

    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn is_one(&self) -> bool {
        self.residue == 1
    }
}

impl DivisionRing for PrimeFieldElement {
    fn reciprocal(&self) -> Result<Self, AlgebraError> {
        if self.residue == 0 {
            return Err(AlgebraError::ZeroReciprocal);
        }
        let (x, _) = xgcd(self.residue as i128, self.modulus as i128);
        let residue = x.rem_euclid(self.modulus as i128) as u64;
        Ok(PrimeFieldElement { residue, modulus: self.modulus })
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $ring_method:ident) => {
        impl $trait for PrimeFieldElement {
            type Output = PrimeFieldElement;
            fn $method(self, rhs: PrimeFieldElement) -> PrimeFieldElement {
                Ring::$ring_method(&self, &rhs)
            }
        }
        impl $trait<&PrimeFieldElement> for &PrimeFieldElement {
            type Output = PrimeFieldElement;
            fn $method(self, rhs: &PrimeFieldElement) -> PrimeFieldElement {
                Ring::$ring_method(self, rhs)
            }
        }
    };
}

forward_op!(Add, add, add);
forward_op!(Sub, sub, sub);
forward_op!(Mul, mul, mul);

impl Neg for PrimeFieldElement {
    type Output = PrimeFieldElement;

    fn neg(self) -> PrimeFieldElement {
        Ring::neg(&self)
    }
}

// Deterministic Miller-Rabin; these witnesses are exact for all of u64.
fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            exp >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reciprocal_mod_seven() {
        let f7 = PrimeField::new(7).unwrap();
        // brute force: the unique x in 1..7 with 3x = 1
        let expected = (1..7).find(|x| (3 * x) % 7 == 1).unwrap();
        assert_eq!(f7.element(3).reciprocal().unwrap().residue(), expected);
        assert_eq!(expected, 5);
        assert_eq!(f7.element(0).reciprocal(), Err(AlgebraError::ZeroReciprocal));
    }

    #[test]
    fn reciprocal_exhaustive_small_fields() {
        for p in [2u64, 3, 5, 7, 11, 13, 101] {
            let f = PrimeField::new(p).unwrap();
            for x in f.elements().skip(1) {
                let inv = x.reciprocal().unwrap();
                assert!((x * inv).is_one());
                assert!((inv * x).is_one());
            }
        }
    }

    #[test]
    fn primality_gate() {
        assert!(PrimeField::new(1_000_000_007).is_ok());
        assert!(PrimeField::new(18_446_744_073_709_551_557).is_ok());
        for composite in [0u64, 1, 4, 9, 561, 1_000_000_007 * 3, 3_215_031_751] {
            assert_eq!(PrimeField::new(composite), Err(AlgebraError::NotPrime(composite)));
        }
    }

    #[test]
    fn large_modulus_arithmetic_does_not_overflow() {
        let f = PrimeField::new(18_446_744_073_709_551_557).unwrap();
        let a = f.element_from_residue(f.modulus() - 1);
        assert_eq!((a + a).residue(), f.modulus() - 2);
        assert!((a * a).is_one());
        assert!((a * a.reciprocal().unwrap()).is_one());
    }

    #[test]
    fn mixed_moduli_rejected() {
        let a = PrimeField::new(5).unwrap().element(2);
        let b = PrimeField::new(7).unwrap().element(2);
        let mismatch = AlgebraError::ModulusMismatch { left: 5, right: 7 };
        assert_eq!(a.try_add(&b), Err(mismatch.clone()));
        assert_eq!(a.try_sub(&b), Err(mismatch.clone()));
        assert_eq!(a.try_mul(&b), Err(mismatch));
        assert!(std::panic::catch_unwind(|| a + b).is_err());
        assert!(std::panic::catch_unwind(|| a * b).is_err());
    }

    #[test]
    fn negative_literals_reduce() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.element(-1).residue(), 6);
        assert_eq!(f.element(-15).residue(), 6);
        assert_eq!(Ring::neg(&f.element(0)).residue(), 0);
    }
}
