//! Command-line front end for the lattice rectangle counters.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use latrect::asymptotics::{constants, residual};
use latrect::golden::power_of_two;
use latrect::{compute, compute_table, Algorithm, Error, ExactInt};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "latrect", version, about = "Exact counts of lattice rectangles in an n x n grid of points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute F(n) with one algorithm.
    Compute {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value = "auto", value_parser = parse_algo)]
        algo: Algorithm,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Compute F(1), .., F(max) with the all-values algorithm.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Cross-check algorithms on a range or a random sample of n.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        min_n: u64,
        /// `all`, or a comma-separated list of algorithm ids and `table`.
        #[arg(long, default_value = "all")]
        algos: String,
        /// Check this many random n in min-n..=max-n instead of all of them.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time algorithms; prints `algo,n,seconds,repeats,digest` rows.
    Bench {
        #[arg(long, default_value = "divisorlayer", value_delimiter = ',', value_parser = parse_algo)]
        algo: Vec<Algorithm>,
        #[command(flatten)]
        points: Points,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        repeats: u32,
        #[arg(long)]
        header: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print `k,n,residual,residual-B` for powers of two.
    Asymptotic {
        /// Read `n,F(n)` rows from this file instead of computing them.
        #[arg(long, conflicts_with_all = ["powers", "reference", "algo"])]
        input: Option<PathBuf>,
        #[arg(long, default_value = "14..20", value_parser = parse_powers)]
        powers: RangeInclusive<u32>,
        /// Use the built-in reference values of F(2^k), k <= 40.
        #[arg(long, conflicts_with = "algo")]
        reference: bool,
        #[arg(long, default_value = "auto", value_parser = parse_algo)]
        algo: Algorithm,
        #[arg(long)]
        header: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Emit a header row (csv only).
    #[arg(long)]
    header: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Points {
    /// Comma-separated values of n.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
    n: Vec<u64>,
    /// Powers of two `k1..k2`, inclusive.
    #[arg(long, value_parser = parse_powers)]
    powers: Option<RangeInclusive<u32>>,
}

impl Points {
    fn values(&self) -> Vec<u64> {
        match &self.powers {
            Some(ks) => ks.clone().map(|k| 1u64 << k).collect(),
            None => self.n.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
    Plain,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    n: u64,
    value: String,
    algo: &'a str,
}

#[derive(Debug)]
enum Failure {
    Mismatch(String),
    Usage(String),
    Limit(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Limit(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Arith(_) | Error::OutOfRange { .. } | Error::OracleLimit { .. } | Error::InvalidLimit => {
                Failure::Limit(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_algo(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `k` or `k1..k2`, inclusive, with `1 <= k1 <= k2 <= 62`.
fn parse_powers(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (lo, hi) = s.split_once("..").unwrap_or((s, s));
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("bad exponent '{t}'"));
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo == 0 || lo > hi || hi > 62 {
        return Err(format!("need 1 <= k1 <= k2 <= 62, got {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// Leading eight digits and digit count, e.g. `12757971/13`.
fn digest(v: ExactInt) -> String {
    let s = v.to_decimal();
    let digits = s.trim_start_matches('-');
    format!("{}/{}", &digits[..digits.len().min(8)], digits.len())
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

fn writer(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_row(w: &mut dyn Write, format: Format, n: u64, value: ExactInt, algo: &str) -> io::Result<()> {
    match format {
        Format::Csv => writeln!(w, "{n},{value}"),
        Format::Plain => writeln!(w, "{n} {value}"),
        Format::Jsonl => {
            let row = JsonRow { n, value: value.to_decimal(), algo };
            writeln!(w, "{}", serde_json::to_string(&row).map_err(io::Error::other)?)
        }
    }
}

fn run_compute(n: u64, algo: Algorithm, format: Format) -> Result<(), Failure> {
    let r = compute(n, algo)?;
    let mut out = io::stdout().lock();
    match format {
        Format::Plain => {
            writeln!(out, "{}", r.value)?;
            eprintln!("algorithm: {}, elapsed: {:.6}s", r.algo, r.elapsed.as_secs_f64());
        }
        Format::Csv => writeln!(out, "{},{},{}", r.n, r.value, r.algo)?,
        Format::Jsonl => write_row(&mut out, Format::Jsonl, r.n, r.value, r.algo.id())?,
    }
    Ok(())
}

fn run_table(max: u64, output: &Output) -> Result<(), Failure> {
    let table = compute_table(max)?;
    let mut w = writer(&output.out)?;
    if output.header && output.format == Format::Csv {
        writeln!(w, "n,value")?;
    }
    for (i, &v) in table.iter().enumerate() {
        write_row(&mut w, output.format, i as u64 + 1, v, "table")?;
    }
    w.flush()?;
    Ok(())
}

/// A source of values checked by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Source {
    Algo(Algorithm),
    Table,
}

impl Source {
    fn id(self) -> &'static str {
        match self {
            Source::Algo(a) => a.id(),
            Source::Table => "table",
        }
    }
}

fn parse_sources(s: &str) -> Result<Vec<Source>, Failure> {
    if s == "all" {
        return Ok(Algorithm::CONCRETE.iter().map(|&a| Source::Algo(a)).chain([Source::Table]).collect());
    }
    let sources = s
        .split(',')
        .map(|id| match id.trim() {
            "table" => Ok(Source::Table),
            id => id.parse().map(Source::Algo).map_err(|e: Error| Failure::Usage(e.to_string())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if sources.len() < 2 {
        return Err(Failure::Usage("verify needs at least two algorithms".into()));
    }
    Ok(sources)
}

fn run_verify(min_n: u64, max_n: u64, algos: &str, sample: Option<u64>, seed: u64) -> Result<(), Failure> {
    if min_n > max_n {
        return Err(Failure::Usage(format!("min-n {min_n} exceeds max-n {max_n}")));
    }
    let sources = parse_sources(algos)?;
    let ns: Vec<u64> = match sample {
        Some(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..k).map(|_| rng.gen_range(min_n..=max_n)).collect()
        }
        None => (min_n..=max_n).collect(),
    };
    let table = if sources.contains(&Source::Table) { Some(compute_table(max_n)?) } else { None };
    let value = |s: Source, n: u64| -> Result<ExactInt, Failure> {
        match s {
            Source::Algo(a) => Ok(a.run(n)?),
            Source::Table => Ok(table.as_ref().expect("table computed")[n as usize - 1]),
        }
    };
    let start = Instant::now();
    for &n in &ns {
        let want = value(sources[0], n)?;
        for &s in &sources[1..] {
            let got = value(s, n)?;
            if got != want {
                return Err(Failure::Mismatch(format!(
                    "mismatch at n = {n}: {} = {want}, {} = {got}",
                    sources[0].id(),
                    s.id()
                )));
            }
        }
    }
    let ids: Vec<_> = sources.iter().map(|s| s.id()).collect();
    println!("ok: {} values of n agree across {} ({:.3}s)", ns.len(), ids.join(","), start.elapsed().as_secs_f64());
    Ok(())
}

fn run_bench(algos: &[Algorithm], ns: &[u64], repeats: u32, header: bool, out: &Option<PathBuf>) -> Result<(), Failure> {
    let mut w = writer(out)?;
    if header {
        writeln!(w, "algo,n,seconds,repeats,digest")?;
    }
    for &n in ns {
        for &algo in algos {
            let warm = compute(n, algo)?;
            let first = digest(warm.value);
            let mut times = Vec::with_capacity(repeats as usize);
            for _ in 0..repeats {
                let r = compute(n, algo)?;
                if digest(r.value) != first {
                    return Err(Failure::Mismatch(format!("{algo} at n = {n} changed value between repeats")));
                }
                times.push(r.elapsed.as_secs_f64());
            }
            writeln!(w, "{},{n},{:.6},{repeats},{first}", warm.algo, median(times))?;
            w.flush()?;
        }
    }
    Ok(())
}

fn read_rows(path: &PathBuf) -> Result<Vec<(u64, ExactInt)>, Failure> {
    let mut rows = Vec::new();
    for (i, line) in BufReader::new(File::open(path)?).lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || (i == 0 && line.starts_with('n')) {
            continue;
        }
        let bad = || Failure::Usage(format!("{}:{}: expected 'n,value'", path.display(), i + 1));
        let (n, v) = line.split_once(',').ok_or_else(bad)?;
        let n = n.trim().parse().map_err(|_| bad())?;
        let v = ExactInt::parse_decimal(v.trim()).map_err(|_| bad())?;
        rows.push((n, v));
    }
    Ok(rows)
}

fn run_asymptotic(
    input: &Option<PathBuf>,
    powers: RangeInclusive<u32>,
    reference: bool,
    algo: Algorithm,
    header: bool,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let rows = match input {
        Some(path) => read_rows(path)?,
        None => powers
            .map(|k| {
                let n = 1u64 << k;
                let v = if reference {
                    power_of_two(k).ok_or_else(|| Failure::Limit(format!("no reference value for k = {k}")))?
                } else {
                    algo.run(n)?
                };
                Ok((n, v))
            })
            .collect::<Result<_, Failure>>()?,
    };
    let b = constants().b;
    let mut w = writer(out)?;
    if header {
        writeln!(w, "k,n,residual,residual_minus_b")?;
    }
    // The residual is undefined below n = 2.
    for (n, v) in rows.into_iter().filter(|&(n, _)| n >= 2) {
        let k = if n.is_power_of_two() { n.trailing_zeros().to_string() } else { String::new() };
        let r = residual(n, v)?;
        writeln!(w, "{k},{n},{r:.12},{:.12}", r - b)?;
    }
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute { n, algo, format } => run_compute(n, algo, format),
        Command::Table { max, output } => run_table(max, &output),
        Command::Verify { max_n, min_n, algos, sample, seed } => run_verify(min_n, max_n, &algos, sample, seed),
        Command::Bench { algo, points, repeats, header, out } => {
            run_bench(&algo, &points.values(), repeats, header, &out)
        }
        Command::Asymptotic { input, powers, reference, algo, header, out } => {
            run_asymptotic(&input, powers, reference, algo, header, &out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Mismatch(msg) => println!("{msg}"),
                Failure::Usage(msg) | Failure::Limit(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(f.code())
        }
    }
}
