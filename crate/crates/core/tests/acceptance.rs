//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or exceeds its time budget.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use dashu_int::IBig;
use exactple::algebra::{xgcd, AxiomSuite, DivisionRing, PrimeField, Rational};
use exactple::ffge::ffge_rref;
use exactple::matrix::{Matrix, RPermute};
use exactple::ple::{check_dense_supports, ple, PLEHook};
use exactple::reduce::rref_matrix;
use exactple::tools::bench::{read_csv, run_bench, write_csv, Algorithm, BenchConfig, Family};
use exactple::tools::{
    gen_random_fp_matrix, gen_random_fp_ple_matrix, gen_random_matrix, gen_random_ple_matrix, prng,
    uniform_u64_below, GenParams,
};

use common::{check_hook_algebra, gauss_jordan, naive_gcd, ple_product, plue_product};

/// Outcomes of the hook-algebra checks made inside the other suites.
#[derive(Default)]
struct HookTally {
    sequences: usize,
    failures: Vec<String>,
}

static HOOKS: Mutex<HookTally> = Mutex::new(HookTally { sequences: 0, failures: Vec::new() });

fn tally_hooks<T: DivisionRing>(label: &str, m: &Matrix<T>) {
    let outcome = check_hook_algebra(m);
    let mut tally = HOOKS.lock().unwrap();
    tally.sequences += 1;
    if let Err(e) = outcome {
        tally.failures.push(format!("{label}: {e}"));
    }
}

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn q_rows(rows: &[&[&str]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()).unwrap()
}

type Outcome = Result<String, String>;

/// Name, time budget and check of one criterion.
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_example() -> Outcome {
    let m: Matrix<Rational> = Matrix::from_i64_rows(&[
        &[84, 168, 588, -252, 336, 49],
        &[672, 1344, 4704, -1992, 4722, 2552],
        &[-504, -1008, -3528, 2100, -1575, -4998],
        &[168, 336, 1176, -168, 1428, -2002],
    ])
    .unwrap();
    let expected_l: Matrix<Rational> =
        Matrix::from_i64_rows(&[&[84, 0, 0, 0], &[672, 24, 0, 0], &[-504, 588, -49392, 0], &[168, 336, -27720, 1]])
            .unwrap();
    let expected_tail = q_rows(&[
        &["0", "0", "0", "1", "339/4", "90"],
        &["0", "0", "0", "0", "1", "7/6"],
        &["0", "0", "0", "0", "0", "0"],
    ]);
    let (p, l, e) = ple(&m).to_matrices();
    ensure(p == Matrix::identity((), 4), || format!("P is not the identity:\n{p}"))?;
    ensure(l == expected_l, || format!("L differs:\n{l}"))?;
    ensure(e.rows()[1..] == *expected_tail.rows(), || format!("E rows 2-4 differ:\n{e}"))?;
    let first: Vec<Rational> = [1, 2, 7, -3, 4].into_iter().map(Rational::from).collect();
    ensure(e.row(0)[..5] == first[..], || format!("E row 1 differs:\n{e}"))?;
    let product = p.mul(&l).and_then(|x| x.mul(&e)).unwrap();
    ensure(product == m, || "P*L*E differs from m".into())?;
    Ok(format!("E[0][5] = {} (reconstruction exact)", e.get(0, 5)))
}

fn hook_example() -> Outcome {
    let p: Matrix<Rational> =
        Matrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0]]).unwrap();
    let l = q_rows(&[
        &["1", "0", "0", "0"],
        &["0", "1/2", "0", "0"],
        &["0", "-3", "4", "0"],
        &["0", "7/3", "-17", "1"],
    ]);
    let e = q_rows(&[
        &["0", "0", "0", "0", "0", "0"],
        &["0", "0", "0", "1", "-3", "1/13"],
        &["0", "0", "0", "0", "1", "0"],
        &["0", "0", "0", "0", "0", "0"],
    ]);
    check_dense_supports(&p, &l, &e, 2, 1).map_err(|err| format!("dense supports: {err}"))?;
    let perm = RPermute::from_matrix(&p).ok_or("P is not a permutation matrix")?;
    let hook = PLEHook::from_matrices(&p, &l, &e, 2, 1).map_err(|err| format!("construction: {err}"))?;
    hook.check_supports().map_err(|err| format!("structural supports: {err}"))?;
    ensure(hook.size() == 4 && hook.rank() == 2 && hook.corank() == 1, || "size/rank/corank".into())?;
    ensure(hook.perm() == &perm, || "permutation differs".into())?;
    ensure(hook.to_matrices() == (p, l, e), || "materialized matrices differ".into())?;
    Ok(format!("band starts at row {}, permutation images {:?}", hook.band_start(), perm.images()))
}

fn reconstruction() -> Outcome {
    let mut rng = prng(0x5eed);
    for seed in 0..500u64 {
        let nrs = uniform_u64_below(&mut rng, 13) as usize;
        let ncs = uniform_u64_below(&mut rng, 13) as usize;
        let snum = 1 + uniform_u64_below(&mut rng, 2) as usize;
        let nden = 1 + uniform_u64_below(&mut rng, 2) as usize;
        let params = GenParams::new(nrs, ncs, snum, nden, 1, seed);
        let m = if seed % 2 == 0 { gen_random_matrix(&params) } else { gen_random_ple_matrix(&params) }
            .map_err(|e| e.to_string())?;
        ensure(ple_product(&m) == m, || format!("PLE fails over Q for {params}"))?;
        ensure(plue_product(&m) == m, || format!("PLUE fails over Q for {params}"))?;
        tally_hooks(&format!("Q {params}"), &m);
    }
    let field = PrimeField::new(1_000_000_007).unwrap();
    for seed in 0..500u64 {
        let nrs = uniform_u64_below(&mut rng, 13) as usize;
        let ncs = uniform_u64_below(&mut rng, 13) as usize;
        let m = if seed % 2 == 0 {
            gen_random_fp_matrix(field, nrs, ncs, seed)
        } else {
            let rank = uniform_u64_below(&mut rng, nrs.min(ncs) as u64 + 1) as usize;
            gen_random_fp_ple_matrix(field, nrs, ncs, rank, seed)
        };
        ensure(ple_product(&m) == m, || format!("PLE fails over F_p for {nrs}x{ncs} seed {seed}"))?;
        ensure(plue_product(&m) == m, || format!("PLUE fails over F_p for {nrs}x{ncs} seed {seed}"))?;
        tally_hooks(&format!("F_p {nrs}x{ncs} seed {seed}"), &m);
    }
    Ok("500 over Q, 500 over F_1000000007".into())
}

fn oracle_equivalence() -> Outcome {
    let f3 = PrimeField::new(3).unwrap();
    let mut count = 0;
    for code in 0..3u64.pow(9) {
        let m = Matrix::from_fn(f3, 3, 3, |i, j| f3.element_from_residue(code / 3u64.pow((3 * i + j) as u32) % 3));
        let (oracle, rank) = gauss_jordan(&m);
        ensure(rref_matrix(&m) == oracle, || format!("rref differs on\n{m}"))?;
        ensure(ple(&m).rank() == rank, || format!("rank differs on\n{m}"))?;
        tally_hooks("F3 3x3", &m);
        count += 1;
    }
    Ok(format!("{count} matrices"))
}

fn cross_algorithm() -> Outcome {
    let mut rng = prng(0xcafe);
    for seed in 0..200u64 {
        let nrs = 1 + uniform_u64_below(&mut rng, 10) as usize;
        let ncs = 1 + uniform_u64_below(&mut rng, 10) as usize;
        let snum = 1 + uniform_u64_below(&mut rng, 2) as usize;
        let nden = 1 + uniform_u64_below(&mut rng, 3) as usize;
        let params = GenParams::new(nrs, ncs, snum, nden, 1, seed);
        let m = if seed % 2 == 0 { gen_random_matrix(&params) } else { gen_random_ple_matrix(&params) }
            .map_err(|e| e.to_string())?;
        // An inexact Bareiss division surfaces as an error here.
        let ff = ffge_rref(&m).map_err(|e| format!("{params}: {e}"))?;
        ensure(ff == rref_matrix(&m), || format!("outputs differ for {params}"))?;
        tally_hooks(&format!("cross {params}"), &m);
    }
    Ok("200 matrices, all divisions exact".into())
}

fn hook_algebra() -> Outcome {
    let tally = HOOKS.lock().unwrap();
    ensure(tally.sequences > 0, || "no hook sequences were checked".into())?;
    match tally.failures.first() {
        None => Ok(format!("{} unfolded sequences", tally.sequences)),
        Some(first) => Err(format!("{} of {} sequences fail; first: {first}", tally.failures.len(), tally.sequences)),
    }
}

fn axioms() -> Outcome {
    let params = GenParams::new(1, 1, 1, 2, 1, 0);
    let report = AxiomSuite::<Rational>::new(()).commutative(true).run_random(10_000, 77, |rng| {
        // One in eight samples is a small value so that zero and one occur.
        if uniform_u64_below(rng, 8) == 0 {
            Rational::from(uniform_u64_below(rng, 3) as i64 - 1)
        } else {
            params.sampler(rng).entry(rng)
        }
    });
    ensure(report.all_passed(), || format!("Q:\n{report}"))?;
    let f7 = PrimeField::new(7).unwrap();
    let elements: Vec<_> = f7.elements().collect();
    let report_f7 = AxiomSuite::new(f7).commutative(true).run_exhaustive(&elements);
    ensure(report_f7.all_passed(), || format!("F7:\n{report_f7}"))?;
    Ok(format!("Q: {} laws x 10000 samples; F7: {} laws exhaustive", report.outcomes.len(), report_f7.outcomes.len()))
}

fn xgcd_oracle() -> Outcome {
    for a in 0..=200i64 {
        for b in 0..=200i64 {
            let (x, y) = xgcd(a, b);
            ensure(x * a + y * b == naive_gcd(a, b), || format!("machine words: ({a}, {b})"))?;
            let (bx, by) = xgcd(IBig::from(a), IBig::from(b));
            ensure(bx * a + by * b == IBig::from(naive_gcd(a, b)), || format!("big integers: ({a}, {b})"))?;
        }
    }
    Ok("201 x 201 pairs".into())
}

fn benchmark() -> Outcome {
    let mut records = Vec::new();
    for family in [Family::Random, Family::RandomPle] {
        let config = BenchConfig::new(family, 0).reps(1);
        records.extend(run_bench(&config, |_| {}).map_err(|e| e.to_string())?);
    }
    let mut csv = Vec::new();
    write_csv(&mut csv, &records).map_err(|e| e.to_string())?;
    let out = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance_bench.csv");
    std::fs::write(&out, &csv).map_err(|e| e.to_string())?;

    let rows = read_csv(csv.as_slice()).map_err(|e| format!("CSV does not parse: {e}"))?;
    ensure(rows.len() == 2 * (8 + 10), || format!("{} CSV rows", rows.len()))?;
    for row in &rows {
        let times = row.cpu_times().map_err(|e| e.to_string())?;
        ensure(row.reps == 1 && times.len() == 1, || "rep count".into())?;
        ensure(times[0] > 0.0 && row.mean_ms == times[0] && row.median_ms == times[0], || {
            format!("inconsistent times in {row:?}")
        })?;
    }
    let target = |r: &&exactple::tools::bench::CsvRow| {
        r.family == Family::Random && (r.nrs, r.ncs, r.snum, r.nden, r.sden) == (10, 40, 10, 5, 4)
    };
    let algos: Vec<Algorithm> = rows.iter().filter(target).map(|r| r.algorithm).collect();
    ensure(algos == Algorithm::BOTH, || format!("(10, 40, 10, 5x4) rows: {algos:?}"))?;

    let m = gen_random_matrix(&GenParams::new(10, 40, 10, 5, 4, 0)).map_err(|e| e.to_string())?;
    let classical = Algorithm::Classical.run(&m).map_err(|e| e.to_string())?;
    let fraction_free = Algorithm::FractionFree.run(&m).map_err(|e| e.to_string())?;
    ensure(classical == fraction_free, || "(10, 40, 10, 5x4): outputs differ".into())?;

    let (c, f) = rows.iter().filter(target).fold((0.0, 0.0), |(c, f), r| match r.algorithm {
        Algorithm::Classical => (r.mean_ms, f),
        Algorithm::FractionFree => (c, r.mean_ms),
    });
    Ok(format!(
        "{} rows in {}; (10, 40, 10, 5x4): classical {c:.0} ms, fraction-free {f:.0} ms",
        rows.len(),
        out.display()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("golden example", Some(Duration::from_secs(1)), golden_example),
        ("hook example round trip", Some(Duration::from_secs(1)), hook_example),
        ("reconstruction suite", Some(Duration::from_secs(120)), reconstruction),
        ("oracle equivalence over F3", Some(Duration::from_secs(120)), oracle_equivalence),
        ("cross-algorithm agreement", Some(Duration::from_secs(120)), cross_algorithm),
        ("hook algebra", None, hook_algebra),
        ("algebra axioms", Some(Duration::from_secs(30)), axioms),
        ("xgcd", Some(Duration::from_secs(5)), xgcd_oracle),
        ("benchmark harness", None, benchmark),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("exceeded {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  {name} [{:.2} s]: {detail}", elapsed.as_secs_f64()),
            Err(reason) => {
                failed += 1;
                println!("FAIL  {name} [{:.2} s]: {reason}", elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
