use std::ops::{Add, Mul, Sub};

/// Bezout coefficients `(x, y)` with `x*a + y*b = gcd(a, b)` for `a, b >= 0`.
///
/// The computation is an unfold of Euclidean reduction steps, each step
/// writing `(a, b) = (b, r) * [[t, 1], [1, 0]]`, followed by a fold that
/// multiplies the inverses of those elementary matrices onto the identity.
/// `xgcd(0, 0)` is `(1, 0)`.
pub fn xgcd<T: XgcdInteger>(a: T, b: T) -> (T, T) {
    let steps = std::iter::successors(reduce((a, b)), |(_, state)| reduce(state.clone()))
        .map(|(t, _)| t);
    let (x, _, y, _) = steps.fold((T::one(), T::zero(), T::zero(), T::one()), mulinv);
    (x, y)
}

/// Greatest common divisor of non-negative integers, with `gcd(0, 0) = 0`.
pub fn gcd<T: XgcdInteger>(a: T, b: T) -> T {
    let (x, y) = xgcd(a.clone(), b.clone());
    x * a + y * b
}

// One reduction step: quotient and the next pair, or `None` once `b = 0`.
fn reduce<T: XgcdInteger>((a, b): (T, T)) -> Option<(T, (T, T))> {
    if b.is_zero() {
        None
    } else if a.is_zero() {
        Some((T::zero() - T::one(), (b.clone(), b)))
    } else {
        let (t, r) = a.quot_rem(&b);
        Some((t, (b, r)))
    }
}

fn mulinv<T: XgcdInteger>((a, b, c, d): (T, T, T, T), t: T) -> (T, T, T, T) {
    let next_b = a - t.clone() * b.clone();
    let next_d = c - t * d.clone();
    (b, next_b, d, next_d)
}

/// Signed integer type usable by [`xgcd`](super::xgcd).
pub trait XgcdInteger:
    Clone + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Truncated quotient and remainder.
    fn quot_rem(&self, rhs: &Self) -> (Self, Self);
}

macro_rules! euclid_primitive {
    ($($t:ty),*) => {$(
        impl XgcdInteger for $t {
            fn zero() -> Self { 0 }
            fn one() -> Self { 1 }
            fn is_zero(&self) -> bool { *self == 0 }
            fn quot_rem(&self, rhs: &Self) -> (Self, Self) { (self / rhs, self % rhs) }
        }
    )*};
}

euclid_primitive!(i8, i16, i32, i64, i128, isize);

impl XgcdInteger for dashu_int::IBig {
    fn zero() -> Self {
        dashu_int::IBig::ZERO
    }
    fn one() -> Self {
        dashu_int::IBig::ONE
    }
    fn is_zero(&self) -> bool {
        dashu_int::IBig::is_zero(self)
    }
    fn quot_rem(&self, rhs: &Self) -> (Self, Self) {
        (self / rhs, self % rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_second_argument_is_empty_unfold() {
        assert_eq!(xgcd(7i64, 0), (1, 0));
        assert_eq!(xgcd(0i64, 0), (1, 0));
        assert_eq!(gcd(0i64, 0), 0);
    }

    #[test]
    fn traced_examples() {
        // (12, 8): steps [1, 2]
        assert_eq!(xgcd(12i64, 8), (1, -1));
        // (0, 5): the zero branch emits -1 and moves to (5, 5)
        assert_eq!(xgcd(0i64, 5), (1, 1));
    }

    #[test]
    fn big_integers() {
        let a: dashu_int::IBig = "123456789012345678901234567890".parse().unwrap();
        let b: dashu_int::IBig = "987654321098765432109876543210".parse().unwrap();
        let (x, y) = xgcd(a.clone(), b.clone());
        let g = &x * &a + &y * &b;
        assert_eq!(g, "9000000000900000000090".parse::<dashu_int::IBig>().unwrap());
    }
}
