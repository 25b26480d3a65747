//! A reduced benchmark grid, printed as CSV.
//!
//! `cargo run --release --example bench_grid -- 3` runs three reps per row.
use exactple::tools::bench::{random_grid, run_bench, write_csv, BenchConfig, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let reps = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1);
    let grid = random_grid(0).into_iter().filter(|p| p.snum == 10).collect();
    let config = BenchConfig::new(Family::Random, 0).grid(grid).reps(reps);
    let records = run_bench(&config, |r| {
        eprintln!("{} {}: {:.2} ms", r.algorithm, r.params, r.median_ms());
    })?;
    write_csv(std::io::stdout().lock(), &records)?;
    Ok(())
}
