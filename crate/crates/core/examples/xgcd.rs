//! Bezout coefficients from the extended Euclidean algorithm.
use dashu_int::IBig;
use exactple::algebra::{gcd, xgcd};

fn main() {
    for (a, b) in [(240i64, 46i64), (17, 5), (0, 9), (12, 0)] {
        let (x, y) = xgcd(a, b);
        println!("{x}*{a} + {y}*{b} = {}", gcd(a, b));
    }
    let a = IBig::from(2u8).pow(100) + IBig::ONE;
    let b = IBig::from(3u8).pow(50);
    let (x, y) = xgcd(a.clone(), b.clone());
    println!("gcd(2^100 + 1, 3^50) = {}", &x * &a + &y * &b);
}
