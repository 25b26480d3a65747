//! Seeded generators for benchmark and test matrices.
//!
//! All sampling is built from raw `next_u64` words of xoshiro256++, so a
//! given `(params, seed)` yields the same matrix on every platform.

use dashu_int::ops::BitTest;
use dashu_int::{IBig, UBig};
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::algebra::{DivisionRing, PrimeField, PrimeFieldElement, Rational, Ring};
use crate::matrix::{Matrix, RPermute};
use crate::ple::{EchelonForm, EchelonFormRow, LeftTransformation, LeftTransformationColumn};

use super::ToolsError;

pub type Prng = Xoshiro256PlusPlus;

pub fn prng(seed: u64) -> Prng {
    Prng::seed_from_u64(seed)
}

/// Uniform in `0..bound`. Panics if `bound == 0`.
pub fn uniform_u64_below<R: Rng + ?Sized>(rng: &mut R, bound: u64) -> u64 {
    assert!(bound > 0, "empty range");
    // Reject the low 2^64 mod bound words so the remainder is unbiased.
    let threshold = bound.wrapping_neg() % bound;
    loop {
        let x = rng.next_u64();
        if x >= threshold {
            return x % bound;
        }
    }
}

/// Uniform in `lo..=hi`.
pub fn uniform_i64_inclusive<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64) -> i64 {
    assert!(lo <= hi, "empty range");
    let span = hi.wrapping_sub(lo) as u64;
    match span.checked_add(1) {
        Some(n) => lo.wrapping_add(uniform_u64_below(rng, n) as i64),
        None => rng.next_u64() as i64,
    }
}

/// Uniform in `0..2^bits`.
pub fn uniform_bits<R: Rng + ?Sized>(rng: &mut R, bits: usize) -> UBig {
    let words = bits.div_ceil(64);
    let mut bytes = Vec::with_capacity(words * 8);
    for k in 0..words {
        let mut w = rng.next_u64();
        let spare = words * 64 - bits;
        if k + 1 == words && spare > 0 {
            w &= u64::MAX >> spare;
        }
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    UBig::from_le_bytes(&bytes)
}

/// Uniform in `0..bound`. Panics if `bound == 0`.
pub fn uniform_ubig_below<R: Rng + ?Sized>(rng: &mut R, bound: &UBig) -> UBig {
    assert!(*bound > UBig::ZERO, "empty range");
    let bits = bound.bit_len();
    loop {
        let x = uniform_bits(rng, bits);
        if x < *bound {
            return x;
        }
    }
}

/// Uniformly random permutation of `0..n` (Fisher-Yates).
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> RPermute {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = uniform_u64_below(rng, i as u64 + 1) as usize;
        images.swap(i, j);
    }
    RPermute::from_images(images).expect("shuffle of 0..n")
}

/// Uniformly random `k`-subset of `0..n`, sorted.
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Vec<usize> {
    assert!(k <= n);
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = i + uniform_u64_below(rng, (n - i) as u64) as usize;
        pool.swap(i, j);
    }
    let mut chosen = pool[..k].to_vec();
    chosen.sort_unstable();
    chosen
}

/// Size and entry distribution of a generated rational matrix.
///
/// Sizes are in 64-bit words. Numerators are uniform in
/// `[-2^(64 snum), 2^(64 snum)]`. Each matrix draws a pool of `nden`
/// factors, each uniform in `1..2^(64 sden)`; an entry's denominator is the
/// product of a uniformly random `k`-subset of the pool, `k` uniform in
/// `1..=nden`. Every denominator in a matrix therefore divides the product
/// of the pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct GenParams {
    pub nrs: usize,
    pub ncs: usize,
    pub snum: usize,
    pub nden: usize,
    pub sden: usize,
    pub seed: u64,
}

impl GenParams {
    pub fn new(nrs: usize, ncs: usize, snum: usize, nden: usize, sden: usize, seed: u64) -> Self {
        GenParams { nrs, ncs, snum, nden, sden, seed }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        GenParams { seed, ..self }
    }

    pub fn validate(&self) -> Result<(), ToolsError> {
        for (name, v) in [("snum", self.snum), ("nden", self.nden), ("sden", self.sden)] {
            if v == 0 {
                return Err(ToolsError::InvalidParams(format!("{name} must be at least 1")));
            }
        }
        Ok(())
    }

    /// Draws the denominator pool of one matrix.
    pub fn sampler<R: Rng + ?Sized>(&self, rng: &mut R) -> EntrySampler {
        let factor_bound = (UBig::ONE << (64 * self.sden)) - UBig::ONE;
        let pool = (0..self.nden).map(|_| uniform_ubig_below(rng, &factor_bound) + UBig::ONE).collect();
        let half = UBig::ONE << (64 * self.snum);
        EntrySampler { span: (&half << 1) + UBig::ONE, half: IBig::from(half), pool }
    }
}

impl std::fmt::Display for GenParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}x{} snum={} nden={} sden={} seed={}",
            self.nrs, self.ncs, self.snum, self.nden, self.sden, self.seed
        )
    }
}

/// Entry distribution of one generated matrix; see [`GenParams`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntrySampler {
    half: IBig,
    span: UBig,
    pool: Vec<UBig>,
}

impl EntrySampler {
    pub fn pool(&self) -> &[UBig] {
        &self.pool
    }

    /// Product of the whole pool; a multiple of every denominator drawn.
    pub fn denominator_bound(&self) -> UBig {
        self.pool.iter().fold(UBig::ONE, |acc, d| acc * d)
    }

    pub fn entry<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        let num = IBig::from(uniform_ubig_below(rng, &self.span)) - &self.half;
        let k = uniform_u64_below(rng, self.pool.len() as u64) as usize + 1;
        let den = random_subset(rng, self.pool.len(), k)
            .into_iter()
            .fold(UBig::ONE, |acc, i| acc * &self.pool[i]);
        Rational::new(num, IBig::from(den)).expect("denominator is positive")
    }

    /// Like [`EntrySampler::entry`] but never zero.
    pub fn unit<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        loop {
            let x = self.entry(rng);
            if !Ring::is_zero(&x) {
                return x;
            }
        }
    }
}

/// Random `nrs x ncs` rational matrix with independent entries.
pub fn gen_random_matrix(p: &GenParams) -> Result<Matrix<Rational>, ToolsError> {
    p.validate()?;
    let mut rng = prng(p.seed);
    let s = p.sampler(&mut rng);
    let m = Matrix::from_fn((), p.nrs, p.ncs, |_, _| s.entry(&mut rng));
    debug_assert!({
        let bound = s.denominator_bound();
        m.rows().iter().flatten().all(|x| (&bound % x.denominator()).is_zero())
    });
    Ok(m)
}

/// Random `P * L * E` with rank uniform in `0..=min(nrs, ncs)`.
pub fn gen_random_ple_matrix(p: &GenParams) -> Result<Matrix<Rational>, ToolsError> {
    p.validate()?;
    let mut rng = prng(p.seed);
    let rank = uniform_u64_below(&mut rng, p.nrs.min(p.ncs) as u64 + 1) as usize;
    Ok(ple_product_with(p, rank, &mut rng))
}

/// Random `P * L * E` of the given rank.
pub fn gen_random_ple_matrix_with_rank(
    p: &GenParams,
    rank: usize,
) -> Result<Matrix<Rational>, ToolsError> {
    p.validate()?;
    if rank > p.nrs.min(p.ncs) {
        return Err(ToolsError::InvalidParams(format!(
            "rank {rank} exceeds min({}, {})",
            p.nrs, p.ncs
        )));
    }
    let mut rng = prng(p.seed);
    Ok(ple_product_with(p, rank, &mut rng))
}

fn ple_product_with(p: &GenParams, rank: usize, rng: &mut Prng) -> Matrix<Rational> {
    let s = p.sampler(rng);
    random_ple_product((), p.nrs, p.ncs, rank, rng, |r| s.entry(r), |r| s.unit(r))
}

/// Uniformly random matrix over a prime field.
pub fn gen_random_fp_matrix(
    field: PrimeField,
    nrs: usize,
    ncs: usize,
    seed: u64,
) -> Matrix<PrimeFieldElement> {
    let mut rng = prng(seed);
    Matrix::from_fn(field, nrs, ncs, |_, _| field.random_element(&mut rng))
}

/// Random `P * L * E` of the given rank over a prime field.
pub fn gen_random_fp_ple_matrix(
    field: PrimeField,
    nrs: usize,
    ncs: usize,
    rank: usize,
    seed: u64,
) -> Matrix<PrimeFieldElement> {
    assert!(rank <= nrs.min(ncs), "rank exceeds the matrix size");
    let mut rng = prng(seed);
    random_ple_product(field, nrs, ncs, rank, &mut rng, |r| field.random_element(r), |r| loop {
        let x = field.random_element(r);
        if !x.is_zero() {
            break x;
        }
    })
}

/// `P * L * E` for a uniform permutation `P`, a full lower triangular `L`
/// with entries from `entry` and diagonal from `unit`, and a normalized
/// echelon form `E` of the given rank with uniformly chosen pivot columns.
pub fn random_ple_product<T, R, E, U>(
    params: T::Params,
    nrs: usize,
    ncs: usize,
    rank: usize,
    rng: &mut R,
    mut entry: E,
    mut unit: U,
) -> Matrix<T>
where
    T: DivisionRing,
    R: Rng + ?Sized,
    E: FnMut(&mut R) -> T,
    U: FnMut(&mut R) -> T,
{
    let perm = random_permutation(rng, nrs);
    let columns = (0..nrs)
        .map(|j| {
            let head = unit(rng);
            let tail = (j + 1..nrs).map(|_| entry(rng)).collect();
            LeftTransformationColumn::new(j, head, tail).expect("unit head")
        })
        .collect();
    let lt = LeftTransformation::new(params.clone(), nrs, columns).expect("full column run");
    let pivots = random_subset(rng, ncs, rank);
    let one = T::one(&params);
    let rows = pivots
        .iter()
        .map(|&c| {
            let row = std::iter::once(one.clone()).chain((c + 1..ncs).map(|_| entry(rng))).collect();
            EchelonFormRow::new(c, row).expect("unit pivot")
        })
        .collect();
    let ef = EchelonForm::new(params, nrs, ncs, 0, rows).expect("increasing pivots");
    lt.to_matrix()
        .mul(&ef.to_matrix())
        .and_then(|le| le.permute_rows(&perm))
        .expect("compatible shapes")
}
