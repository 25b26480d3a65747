//! Timing harness comparing classical elimination (`ple` then `reduce`)
//! against fraction-free elimination followed by normalization.
//!
//! Every rep regenerates its input from `seed + rep`, so both algorithms
//! see identical matrices. Their normalized outputs are compared on every
//! input; a disagreement aborts the run with [`ToolsError::Mismatch`].

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::ffge::ffge_rref;
use crate::matrix::Matrix;
use crate::reduce::rref_matrix;

use super::random::{gen_random_matrix, gen_random_ple_matrix, GenParams};
use super::ToolsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "random")]
    Random,
    #[serde(rename = "random-PLE")]
    RandomPle,
}

impl Family {
    pub fn generate(self, params: &GenParams) -> Result<Matrix<Rational>, ToolsError> {
        match self {
            Family::Random => gen_random_matrix(params),
            Family::RandomPle => gen_random_ple_matrix(params),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::RandomPle => "random-PLE",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ToolsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "random" => Ok(Family::Random),
            "random-ple" | "ple" => Ok(Family::RandomPle),
            _ => Err(ToolsError::InvalidParams(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "classical")]
    Classical,
    #[serde(rename = "fraction-free")]
    FractionFree,
}

impl Algorithm {
    pub const BOTH: [Algorithm; 2] = [Algorithm::Classical, Algorithm::FractionFree];

    /// Reduced row echelon form of `m`.
    pub fn run(self, m: &Matrix<Rational>) -> Result<Matrix<Rational>, ToolsError> {
        match self {
            Algorithm::Classical => Ok(rref_matrix(m)),
            Algorithm::FractionFree => Ok(ffge_rref(m)?),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Classical => "classical",
            Algorithm::FractionFree => "fraction-free",
        }
    }

    fn other(self) -> Self {
        match self {
            Algorithm::Classical => Algorithm::FractionFree,
            Algorithm::FractionFree => Algorithm::Classical,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = ToolsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "classical" => Ok(Algorithm::Classical),
            "fraction-free" | "ffge" => Ok(Algorithm::FractionFree),
            _ => Err(ToolsError::InvalidParams(format!("unknown algorithm {s:?}"))),
        }
    }
}

/// The eight `(nrs, ncs, snum, nden, sden)` rows used for random matrices.
pub fn random_grid(seed: u64) -> Vec<GenParams> {
    [
        (10, 10, 10, 5, 2),
        (10, 20, 10, 5, 2),
        (10, 30, 10, 5, 3),
        (10, 40, 10, 5, 4),
        (10, 10, 50, 5, 5),
        (10, 20, 50, 5, 5),
        (10, 30, 50, 5, 5),
        (20, 20, 50, 5, 5),
    ]
    .into_iter()
    .map(|(nrs, ncs, snum, nden, sden)| GenParams::new(nrs, ncs, snum, nden, sden, seed))
    .collect()
}

/// The random grid plus two large rows with single-word entries, used for
/// random-PLE matrices.
pub fn random_ple_grid(seed: u64) -> Vec<GenParams> {
    let mut grid = random_grid(seed);
    grid.push(GenParams::new(60, 60, 1, 1, 1, seed));
    grid.push(GenParams::new(100, 100, 1, 1, 1, seed));
    grid
}

pub fn default_grid(family: Family, seed: u64) -> Vec<GenParams> {
    match family {
        Family::Random => random_grid(seed),
        Family::RandomPle => random_ple_grid(seed),
    }
}

/// CPU time consumed by the calling thread.
pub fn thread_cpu_time() -> Duration {
    let mut ts = libc::timespec { tv_sec: 0, tv_nsec: 0 };
    // SAFETY: `ts` is a valid, writable timespec for the duration of the call.
    let rc = unsafe { libc::clock_gettime(libc::CLOCK_THREAD_CPUTIME_ID, &mut ts) };
    assert_eq!(rc, 0, "clock_gettime(CLOCK_THREAD_CPUTIME_ID) failed");
    Duration::new(ts.tv_sec as u64, ts.tv_nsec as u32)
}

/// Runs `f`, returning its result with CPU and wall time in milliseconds.
pub fn time_ms<R>(f: impl FnOnce() -> R) -> (R, f64, f64) {
    let (cpu0, wall0) = (thread_cpu_time(), Instant::now());
    let out = f();
    let wall = wall0.elapsed();
    let cpu = thread_cpu_time().saturating_sub(cpu0);
    (out, cpu.as_secs_f64() * 1e3, wall.as_secs_f64() * 1e3)
}

fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn median(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        (v[mid - 1] + v[mid]) / 2.0
    }
}

/// Timings of one algorithm on one grid row.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub family: Family,
    pub algorithm: Algorithm,
    pub params: GenParams,
    pub cpu_ms: Vec<f64>,
    pub wall_ms: Vec<f64>,
}

impl BenchRecord {
    pub fn reps(&self) -> usize {
        self.cpu_ms.len()
    }

    pub fn mean_ms(&self) -> f64 {
        mean(&self.cpu_ms)
    }

    pub fn median_ms(&self) -> f64 {
        median(&self.cpu_ms)
    }

    pub fn wall_mean_ms(&self) -> f64 {
        mean(&self.wall_ms)
    }

    pub fn to_row(&self) -> Result<CsvRow, ToolsError> {
        Ok(CsvRow {
            family: self.family,
            algorithm: self.algorithm,
            nrs: self.params.nrs,
            ncs: self.params.ncs,
            snum: self.params.snum,
            nden: self.params.nden,
            sden: self.params.sden,
            seed: self.params.seed,
            reps: self.reps(),
            mean_ms: self.mean_ms(),
            median_ms: self.median_ms(),
            wall_mean_ms: self.wall_mean_ms(),
            cpu_times_ms: serde_json::to_string(&self.cpu_ms)?,
        })
    }
}

/// One CSV line. `cpu_times_ms` holds the raw per-rep CPU times as a JSON
/// array.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub family: Family,
    pub algorithm: Algorithm,
    pub nrs: usize,
    pub ncs: usize,
    pub snum: usize,
    pub nden: usize,
    pub sden: usize,
    pub seed: u64,
    pub reps: usize,
    pub mean_ms: f64,
    pub median_ms: f64,
    pub wall_mean_ms: f64,
    pub cpu_times_ms: String,
}

impl CsvRow {
    pub fn cpu_times(&self) -> Result<Vec<f64>, ToolsError> {
        Ok(serde_json::from_str(&self.cpu_times_ms)?)
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub family: Family,
    pub algorithms: Vec<Algorithm>,
    pub grid: Vec<GenParams>,
    pub reps: usize,
    /// Compare normalized outputs of both algorithms on every input. With a
    /// single timed algorithm the other one runs untimed.
    pub cross_check: bool,
}

impl BenchConfig {
    pub const DEFAULT_REPS: usize = 5;

    pub fn new(family: Family, seed: u64) -> Self {
        BenchConfig {
            family,
            algorithms: Algorithm::BOTH.to_vec(),
            grid: default_grid(family, seed),
            reps: Self::DEFAULT_REPS,
            cross_check: true,
        }
    }

    pub fn reps(mut self, reps: usize) -> Self {
        self.reps = reps;
        self
    }

    pub fn grid(mut self, grid: Vec<GenParams>) -> Self {
        self.grid = grid;
        self
    }

    pub fn algorithms(mut self, algorithms: Vec<Algorithm>) -> Self {
        self.algorithms = algorithms;
        self
    }

    pub fn cross_check(mut self, on: bool) -> Self {
        self.cross_check = on;
        self
    }
}

/// Runs the configured grid. `progress` receives each finished record.
pub fn run_bench(
    config: &BenchConfig,
    mut progress: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>, ToolsError> {
    if config.reps == 0 {
        return Err(ToolsError::InvalidParams("reps must be at least 1".into()));
    }
    if config.algorithms.is_empty() {
        return Err(ToolsError::InvalidParams("no algorithms selected".into()));
    }
    let mut out = Vec::new();
    for params in &config.grid {
        params.validate()?;
        let mut records: Vec<BenchRecord> = config
            .algorithms
            .iter()
            .map(|&algorithm| BenchRecord {
                family: config.family,
                algorithm,
                params: *params,
                cpu_ms: Vec::with_capacity(config.reps),
                wall_ms: Vec::with_capacity(config.reps),
            })
            .collect();
        for rep in 0..config.reps {
            let input = config.family.generate(&params.with_seed(params.seed.wrapping_add(rep as u64)))?;
            let mut outputs = Vec::with_capacity(2);
            for record in &mut records {
                let (result, cpu, wall) = time_ms(|| record.algorithm.run(&input));
                record.cpu_ms.push(cpu);
                record.wall_ms.push(wall);
                outputs.push((record.algorithm, result?));
            }
            if config.cross_check {
                if outputs.len() == 1 {
                    let other = outputs[0].0.other();
                    outputs.push((other, other.run(&input)?));
                }
                if outputs.iter().any(|(_, e)| *e != outputs[0].1) {
                    return Err(ToolsError::Mismatch(format!(
                        "{} vs {} disagree on {} input {params} rep {rep}",
                        outputs[0].0, outputs[1].0, config.family
                    )));
                }
            }
        }
        for record in records {
            progress(&record);
            out.push(record);
        }
    }
    Ok(out)
}

pub fn write_csv<W: Write>(writer: W, records: &[BenchRecord]) -> Result<(), ToolsError> {
    let mut w = csv::Writer::from_writer(writer);
    for record in records {
        w.serialize(record.to_row()?)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(reader: R) -> Result<Vec<CsvRow>, ToolsError> {
    csv::Reader::from_reader(reader)
        .deserialize()
        .map(|row| row.map_err(ToolsError::from))
        .collect()
}
