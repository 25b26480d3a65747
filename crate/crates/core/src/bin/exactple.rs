use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use exactple::algebra::{DivisionRing, PrimeField, Rational};
use exactple::ffge::{ffge_rational, normalize};
use exactple::matrix::Matrix;
use exactple::ple::ple;
use exactple::reduce::rref;
use exactple::tools::bench::{run_bench, write_csv, Algorithm, BenchConfig, Family};
use exactple::tools::io::{read_matrix, to_text, AnyMatrix, FileDomain};
use exactple::tools::{self, GenParams, ToolsError};

#[derive(Parser)]
#[command(name = "exactple", version, about = "Exact PLE, PLUE and fraction-free elimination")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random matrix file
    Gen(GenArgs),
    /// Print P, L, E with P*L*E = M
    Ple { file: PathBuf },
    /// Print P, L, U, E' with P*L*U*E' = M and E' reduced
    Rref { file: PathBuf },
    /// Fraction-free elimination of a rational matrix
    Ffge { file: PathBuf },
    /// Time classical against fraction-free elimination and write CSV
    Bench(BenchArgs),
    /// Run quick internal consistency checks
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Random,
    RandomPle,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Random => Family::Random,
            FamilyArg::RandomPle => Family::RandomPle,
        }
    }
}

#[derive(Args)]
struct SizeArgs {
    #[arg(long)]
    nrs: Option<usize>,
    #[arg(long)]
    ncs: Option<usize>,
    /// Numerator size bound in 64-bit words
    #[arg(long)]
    snum: Option<usize>,
    /// Bound on the number of denominator factors
    #[arg(long)]
    nden: Option<usize>,
    /// Denominator factor size bound in 64-bit words
    #[arg(long)]
    sden: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SizeArgs {
    fn any_size(&self) -> bool {
        self.nrs.is_some() || self.ncs.is_some()
    }

    fn params(&self) -> GenParams {
        GenParams::new(
            self.nrs.unwrap_or(10),
            self.ncs.unwrap_or(10),
            self.snum.unwrap_or(1),
            self.nden.unwrap_or(1),
            self.sden.unwrap_or(1),
            self.seed,
        )
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    size: SizeArgs,
    #[arg(long, value_enum, default_value = "random")]
    family: FamilyArg,
    /// Rank of a random-PLE matrix; uniform when omitted
    #[arg(long)]
    rank: Option<usize>,
    /// Generate over the prime field of this order instead of the rationals
    #[arg(long)]
    modulus: Option<u64>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Classical,
    FractionFree,
    Both,
}

#[derive(Args)]
struct BenchArgs {
    /// Single grid row from the size flags; the default grid otherwise
    #[command(flatten)]
    size: SizeArgs,
    /// Matrix family; both families when omitted
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long, value_enum, default_value = "both")]
    algorithm: AlgorithmArg,
    #[arg(long, default_value_t = BenchConfig::DEFAULT_REPS)]
    reps: usize,
    /// Skip comparing the normalized outputs of the two algorithms
    #[arg(long)]
    no_check: bool,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, ToolsError> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn section<T: FileDomain>(out: &mut dyn Write, name: &str, m: &Matrix<T>) -> io::Result<()> {
    writeln!(out, "# {name}")?;
    out.write_all(to_text(m).as_bytes())
}

fn print_ple<T: FileDomain + DivisionRing>(m: &Matrix<T>) -> io::Result<()> {
    let hook = ple(m);
    let (p, l, e) = hook.to_matrices();
    let mut out = io::stdout().lock();
    writeln!(out, "# rank {}", hook.rank())?;
    section(&mut out, "P", &p)?;
    section(&mut out, "L", &l)?;
    section(&mut out, "E", &e)
}

fn print_rref<T: FileDomain + DivisionRing>(m: &Matrix<T>) -> io::Result<()> {
    let plue = rref(m);
    let (p, l, u, e) = plue.to_matrices();
    let mut out = io::stdout().lock();
    writeln!(out, "# rank {}", plue.rank())?;
    section(&mut out, "P", &p)?;
    section(&mut out, "L", &l)?;
    section(&mut out, "U", &u)?;
    section(&mut out, "E'", &e)
}

fn print_ffge(m: &Matrix<Rational>) -> Result<(), ToolsError> {
    let scaled = ffge_rational(m)?;
    let res = &scaled.result;
    let mut out = io::stdout().lock();
    writeln!(out, "# rank {}", res.rank)?;
    writeln!(out, "# det_factor {}", res.det_factor)?;
    writeln!(out, "# perm {:?}", res.perm.images())?;
    let scales: Vec<String> = scaled.row_scales.iter().map(ToString::to_string).collect();
    writeln!(out, "# row_scales {}", scales.join(" "))?;
    let echelon = res.echelon.map((), |x| Rational::from_integer(x.as_ibig().clone()));
    section(&mut out, "echelon", &echelon)?;
    section(&mut out, "normalized", &normalize(res)?)?;
    Ok(())
}

fn gen(args: &GenArgs) -> Result<(), ToolsError> {
    let params = args.size.params();
    params.validate()?;
    let min = params.nrs.min(params.ncs);
    if args.rank.is_some_and(|r| r > min) {
        return Err(ToolsError::InvalidParams(format!("rank exceeds min({}, {})", params.nrs, params.ncs)));
    }
    let text = match (args.modulus, args.family) {
        (Some(p), family) => {
            let field = PrimeField::new(p).map_err(|e| ToolsError::InvalidParams(e.to_string()))?;
            let m = match family {
                FamilyArg::Random => tools::gen_random_fp_matrix(field, params.nrs, params.ncs, params.seed),
                FamilyArg::RandomPle => {
                    let rank = args.rank.unwrap_or(min);
                    tools::gen_random_fp_ple_matrix(field, params.nrs, params.ncs, rank, params.seed)
                }
            };
            to_text(&m)
        }
        (None, FamilyArg::Random) => to_text(&tools::gen_random_matrix(&params)?),
        (None, FamilyArg::RandomPle) => match args.rank {
            Some(rank) => to_text(&tools::gen_random_ple_matrix_with_rank(&params, rank)?),
            None => to_text(&tools::gen_random_ple_matrix(&params)?),
        },
    };
    output(&args.out)?.write_all(text.as_bytes())?;
    Ok(())
}

fn bench(args: &BenchArgs) -> Result<(), ToolsError> {
    let families = match args.family {
        Some(f) => vec![Family::from(f)],
        None => vec![Family::Random, Family::RandomPle],
    };
    let algorithms = match args.algorithm {
        AlgorithmArg::Classical => vec![Algorithm::Classical],
        AlgorithmArg::FractionFree => vec![Algorithm::FractionFree],
        AlgorithmArg::Both => Algorithm::BOTH.to_vec(),
    };
    let mut records = Vec::new();
    for family in families {
        let mut config = BenchConfig::new(family, args.size.seed)
            .reps(args.reps)
            .algorithms(algorithms.clone())
            .cross_check(!args.no_check);
        if args.size.any_size() {
            config = config.grid(vec![args.size.params()]);
        }
        records.extend(run_bench(&config, |r| {
            eprintln!("{:>10} {:>13} {}  mean {:.1} ms", r.family, r.algorithm, r.params, r.mean_ms());
        })?);
    }
    write_csv(output(&args.out)?, &records)
}

fn run(cli: Cli) -> Result<bool, ToolsError> {
    match cli.command {
        Command::Gen(args) => gen(&args)?,
        Command::Ple { file } => match read_matrix(file)? {
            AnyMatrix::Rational(m) => print_ple(&m)?,
            AnyMatrix::PrimeField(m) => print_ple(&m)?,
        },
        Command::Rref { file } => match read_matrix(file)? {
            AnyMatrix::Rational(m) => print_rref(&m)?,
            AnyMatrix::PrimeField(m) => print_rref(&m)?,
        },
        Command::Ffge { file } => match read_matrix(file)? {
            AnyMatrix::Rational(m) => print_ffge(&m)?,
            AnyMatrix::PrimeField(_) => {
                return Err(ToolsError::InvalidParams("ffge needs a rational matrix".into()));
            }
        },
        Command::Bench(args) => bench(&args)?,
        Command::Selftest { seed } => {
            let checks = tools::selftest::run(seed);
            for c in &checks {
                println!("{c}");
            }
            return Ok(checks.iter().all(|c| c.passed));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(ToolsError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
