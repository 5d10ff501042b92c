use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rotkit::bench::{self, AmountPolicy, SweepConfig};
use rotkit::modular::decompose;
use rotkit::verify::{oracle_rotate, run_checked_with_limit, CheckError, DEFAULT_CHECK_LIMIT};
use rotkit::{normalize, Algorithm, Counters};

mod selftest;
mod units;

/// Rotate files and inspect rotation algorithms.
#[derive(Debug, Parser)]
#[command(name = "rotkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rotate the bytes or lines of a file to the left (or right).
    Rotate(RotateArgs),
    /// Print the cycles followed by the modular-visit rotation.
    Decompose(DecomposeArgs),
    /// Time every algorithm over a range of sizes and amounts; write CSV.
    Bench(BenchArgs),
    /// Run the lemma checkers and the invariant-checked suite.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Unit {
    Bytes,
    Lines,
}

#[derive(Debug, Args)]
struct RotateArgs {
    #[arg(long, default_value = "swap", value_parser = parse_algorithm)]
    algo: Algorithm,
    /// Rotation amount; negative values rotate the other way.
    #[arg(long, allow_negative_numbers = true)]
    by: i64,
    /// Rotate to the right instead of to the left.
    #[arg(long)]
    right: bool,
    #[arg(long, value_enum, default_value_t = Unit::Bytes)]
    unit: Unit,
    /// Evaluate every loop invariant while rotating.
    #[arg(long)]
    check: bool,
    /// Largest input accepted by --check, in units.
    #[arg(long, default_value_t = DEFAULT_CHECK_LIMIT, requires = "check")]
    check_limit: usize,
    /// Compare the result against the reference rotation.
    #[arg(long)]
    verify: bool,
    /// Corrupt the result after rotating, to exercise --verify.
    #[arg(long, hide = true)]
    inject_fault: bool,
    /// Output file; standard output if absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Input file; standard input if absent.
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_negative_numbers = true)]
    by: i64,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "1000")]
    sizes: Vec<usize>,
    /// Comma-separated algorithm names, or `all` for every algorithm except swap-rec.
    #[arg(long, default_value = "all")]
    algos: String,
    /// `all`, `sample:K`, or a comma-separated list of amounts.
    #[arg(long, default_value = "all")]
    rs: String,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run cells on all cores.
    #[arg(long)]
    parallel: bool,
    /// CSV destination; standard output if absent.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SelftestArgs {
    /// Bound for the size-indexed checks (pointwise, invert_mp, wrap, invariant suite).
    #[arg(long)]
    max_n: Option<usize>,
    /// Bound for the sequence-length checks (rev_cat, rot_swap).
    #[arg(long)]
    max_len: Option<usize>,
}

/// Failure classes, mapped to exit codes 1, 2 and 3.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verification(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Verification(m) | Failure::Io(m) => m,
        }
    }
}

impl From<rotkit::Error> for Failure {
    fn from(err: rotkit::Error) -> Self {
        match err {
            rotkit::Error::Io(m) => Failure::Io(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn io_failure(what: &str, err: io::Error) -> Failure {
    Failure::Io(format!("{what}: {err}"))
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: rotkit::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Rotate(args) => cmd_rotate(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Selftest(args) => selftest::run(args.max_n, args.max_len),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("rotkit: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<Vec<u8>, Failure> {
    match path {
        Some(path) => fs::read(path).map_err(|e| io_failure(&format!("cannot read {}", path.display()), e)),
        None => {
            let mut data = Vec::new();
            io::stdin().read_to_end(&mut data).map_err(|e| io_failure("cannot read standard input", e))?;
            Ok(data)
        }
    }
}

fn write_output(path: Option<&PathBuf>, data: &[u8]) -> Result<(), Failure> {
    match path {
        Some(path) => fs::write(path, data).map_err(|e| io_failure(&format!("cannot write {}", path.display()), e)),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(data).and_then(|()| out.flush()).map_err(|e| io_failure("cannot write standard output", e))
        }
    }
}

fn cmd_rotate(args: RotateArgs) -> Result<(), Failure> {
    let data = read_input(args.input.as_ref())?;
    let rotated = match args.unit {
        Unit::Bytes => {
            let mut bytes = data;
            rotate_units(&mut bytes, &args)?;
            bytes
        }
        Unit::Lines => {
            let mut lines = units::split_lines(&data);
            rotate_units(&mut lines, &args)?;
            lines.concat()
        }
    };
    write_output(args.output.as_ref(), &rotated)
}

fn rotate_units<T>(buf: &mut [T], args: &RotateArgs) -> Result<(), Failure>
where
    T: Clone + Send + PartialEq + std::fmt::Debug,
{
    let n = buf.len();
    let left = normalize(args.by, n).r_left;
    let r = if args.right && left != 0 { n - left } else { left };
    let expected = args.verify.then(|| oracle_rotate(buf, r as i64));

    if args.check {
        run_checked_with_limit(args.algo, buf, r, args.check_limit).map_err(|err| match err {
            CheckError::Violation(v) => Failure::Verification(v.to_string()),
            CheckError::Rejected(e) => Failure::from(e),
        })?;
    } else {
        args.algo.apply(buf, r, &mut Counters::default())?;
    }
    if args.inject_fault {
        if let Some(k) = (1..n).find(|&k| buf[k] != buf[0]) {
            buf.swap(0, k);
        }
    }

    if let Some(expected) = expected {
        if let Some(k) = (0..n).find(|&k| buf[k] != expected[k]) {
            return Err(Failure::Verification(format!(
                "{} result differs from the reference rotation at unit {k}",
                args.algo
            )));
        }
    }
    Ok(())
}

fn cmd_decompose(args: DecomposeArgs) -> Result<(), Failure> {
    let r = normalize(args.by, args.n).r_left;
    if r == 0 {
        return Err(Failure::Usage(format!(
            "rotation by {} of {} elements is the identity; need 0 < r < n",
            args.by, args.n
        )));
    }
    let dec = decompose(args.n, r)?;
    let mut text = format!("n = {}, r = {}, step = {}\ng = {}\ntau = {}\n", dec.n, r, dec.step, dec.g, dec.tau);
    for start in &dec.starts {
        let path: Vec<String> = dec.cycle(*start).chain([*start]).map(|k| k.to_string()).collect();
        text.push_str(&path.join(" → "));
        text.push('\n');
    }
    write_output(None, text.as_bytes())
}

fn parse_algorithms(spec: &str) -> Result<Vec<Algorithm>, Failure> {
    if spec == "all" {
        return Ok(Algorithm::BENCHMARKED.to_vec());
    }
    let mut algorithms = Vec::new();
    for name in spec.split(',').map(str::trim) {
        let algorithm: Algorithm = name.parse()?;
        if !algorithms.contains(&algorithm) {
            algorithms.push(algorithm);
        }
    }
    Ok(algorithms)
}

fn parse_amounts(spec: &str) -> Result<AmountPolicy, Failure> {
    let invalid = || Failure::Usage(format!("--rs expects `all`, `sample:K` or a list of amounts, got `{spec}`"));
    if spec == "all" {
        return Ok(AmountPolicy::All);
    }
    if let Some(k) = spec.strip_prefix("sample:") {
        return k.parse().map(AmountPolicy::Sample).map_err(|_| invalid());
    }
    spec.split(',')
        .map(|r| r.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map(AmountPolicy::Fixed)
        .map_err(|_| invalid())
}

fn cmd_bench(args: BenchArgs) -> Result<(), Failure> {
    let config = SweepConfig {
        sizes: args.sizes,
        amounts: parse_amounts(&args.rs)?,
        algorithms: parse_algorithms(&args.algos)?,
        seed: args.seed,
        repetitions: args.reps,
        parallel: args.parallel,
    };
    let outcome = bench::sweep(&config)?;
    for skip in &outcome.skipped {
        eprintln!("rotkit: skipped {} at n = {}: {}", skip.algorithm, skip.n, skip.reason);
    }
    let mut csv = Vec::new();
    bench::write_csv(&outcome.records, &mut csv)?;
    write_output(args.csv.as_ref(), &csv)?;
    if let Err(discrepancies) = bench::verify_counters(&outcome.records) {
        for d in &discrepancies {
            eprintln!("rotkit: counter identity failed: {d}");
        }
        return Err(Failure::Verification(format!("{} counter identities failed", discrepancies.len())));
    }
    eprintln!("rotkit: {} records, counters verified", outcome.records.len());
    Ok(())
}
