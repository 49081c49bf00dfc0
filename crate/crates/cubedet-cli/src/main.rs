//! Command-line front end for cubic-matrix determinants.
//!
//! Subcommands: `det` (evaluate), `verify` (law battery on one matrix),
//! `gen` (seeded random matrix documents), `props` (randomized law trials),
//! `bench` (engine timing table).
//!
//! stdout carries only the machine-parseable payload; diagnostics go to
//! stderr. Exit codes: 0 success, 1 law failure, 2 bad input or flags,
//! 3 strict-mode order guard, 4 arithmetic overflow.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use cubedet::{
    det, det_permutation_counted, io as matio, props, CubicMatrix, DetError, DetMethod, DetOptions,
    Rational, Scalar, TransformError, DEFAULT_MAX_ORDER,
};

#[derive(Parser)]
#[command(
    name = "cubedet",
    version,
    about = "Determinants of cubic (n x n x n) matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Explicit,
    Cofactor,
    Permutation,
}

impl From<MethodArg> for DetMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Explicit => DetMethod::Explicit,
            MethodArg::Cofactor => DetMethod::Cofactor,
            MethodArg::Permutation => DetMethod::Permutation,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ScalarArg {
    Int,
    Rat,
    F64,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum FormatArg {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the determinant of a matrix file; prints one scalar.
    Det {
        /// Input path, or '-' for stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value = "cofactor")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "int")]
        scalar: ScalarArg,
        /// Refuse orders above 3, like the original order-guarded procedures.
        #[arg(long)]
        paper_strict: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Cap for the factorial-cost engines.
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Run the determinant-law battery on one matrix; prints PASS/FAIL lines.
    Verify {
        /// Input path, or '-' for stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value = "int")]
        scalar: ScalarArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Emit a seeded random matrix document.
    Gen {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = -9, allow_hyphen_values = true)]
        min: i64,
        #[arg(long, default_value_t = 9, allow_hyphen_values = true)]
        max: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Randomized law trials; prints summary counts.
    Props {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = -9, allow_hyphen_values = true)]
        min: i64,
        #[arg(long, default_value_t = 9, allow_hyphen_values = true)]
        max: i64,
    },
    /// Time every applicable engine; CSV on stdout, a table on stderr.
    Bench {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 10)]
        reps: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A diagnostic plus the process exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<matio::ParseError> for Failure {
    fn from(e: matio::ParseError) -> Self {
        Failure::new(2, e.to_string())
    }
}

impl From<DetError> for Failure {
    fn from(e: DetError) -> Self {
        let code = match e {
            DetError::PaperStrictOrderExceeded { .. } => 3,
            DetError::Overflow => 4,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<props::PropsError> for Failure {
    fn from(e: props::PropsError) -> Self {
        let code = match &e {
            props::PropsError::Det(DetError::Overflow) => 4,
            props::PropsError::Transform(TransformError::Overflow) => 4,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("cubedet: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Det {
            file,
            method,
            scalar,
            paper_strict,
            format,
            max_order,
        } => {
            let opts = DetOptions {
                method: method.into(),
                paper_strict,
                max_order,
            };
            let input = read_input(&file)?;
            match scalar {
                ScalarArg::Int => cmd_det::<i64>(&input, format, &opts),
                ScalarArg::Rat => cmd_det::<Rational>(&input, format, &opts),
                ScalarArg::F64 => cmd_det::<f64>(&input, format, &opts),
            }
        }
        Command::Verify {
            file,
            scalar,
            format,
        } => {
            let input = read_input(&file)?;
            match scalar {
                ScalarArg::Int => cmd_verify::<i64>(&input, format),
                ScalarArg::Rat => cmd_verify::<Rational>(&input, format),
                ScalarArg::F64 => cmd_verify::<f64>(&input, format),
            }
        }
        Command::Gen {
            order,
            seed,
            min,
            max,
            format,
        } => cmd_gen(order, seed, min, max, format),
        Command::Props {
            order,
            trials,
            seed,
            min,
            max,
        } => cmd_props(order, trials, seed, min, max),
        Command::Bench { order, reps, seed } => cmd_bench(order, reps, seed),
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::new(2, format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::new(2, format!("cannot read {}: {e}", path.display())))
    }
}

fn parse_matrix<S: Scalar>(input: &str, format: FormatArg) -> Result<CubicMatrix<S>, Failure> {
    Ok(match format {
        FormatArg::Text => matio::parse_text::<S>(input)?,
        FormatArg::Json => matio::parse_json::<S>(input)?,
    })
}

fn cmd_det<S: Scalar>(
    input: &str,
    format: FormatArg,
    opts: &DetOptions,
) -> Result<ExitCode, Failure> {
    let matrix = parse_matrix::<S>(input, format)?;
    let value = det(&matrix, opts)?;
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify<S: Scalar>(input: &str, format: FormatArg) -> Result<ExitCode, Failure> {
    let matrix = parse_matrix::<S>(input, format)?;
    let results = props::verify_matrix(&matrix)?;
    let mut failures = 0usize;
    for r in &results {
        if r.name == "det" {
            println!("{}", r.detail);
            continue;
        }
        if r.passed {
            println!("PASS {}", r.name);
        } else {
            failures += 1;
            println!("FAIL {}: {}", r.name, r.detail);
        }
    }
    if failures == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("cubedet: {failures} determinant law(s) failed; this is an implementation bug");
        Ok(ExitCode::from(1))
    }
}

fn cmd_gen(
    order: usize,
    seed: u64,
    min: i64,
    max: i64,
    format: FormatArg,
) -> Result<ExitCode, Failure> {
    let matrix: CubicMatrix<i64> =
        CubicMatrix::random(order, seed, min, max).map_err(|e| Failure::new(2, e.to_string()))?;
    match format {
        FormatArg::Text => print!("{}", matio::emit_text(&matrix)),
        FormatArg::Json => print!("{}", matio::emit_json(&matrix)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_props(
    order: usize,
    trials: usize,
    seed: u64,
    min: i64,
    max: i64,
) -> Result<ExitCode, Failure> {
    if order > DEFAULT_MAX_ORDER {
        return Err(Failure::new(
            2,
            format!("order {order} exceeds the maximum {DEFAULT_MAX_ORDER} for law trials"),
        ));
    }
    let summary = props::run_trials(order, trials, seed, min, max)?;
    println!(
        "trials={} checks={} failures={}",
        summary.trials, summary.checks, summary.failures
    );
    for f in &summary.failed {
        eprintln!("cubedet: FAIL {f}");
    }
    if summary.failures == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn factorial_squared(n: usize) -> u64 {
    let f: u64 = (1..=n as u64).product();
    f * f
}

fn time_engine<R>(run: impl Fn() -> Result<R, DetError>, reps: u32) -> Result<u64, Failure> {
    run().map_err(Failure::from)?; // warm up and surface errors once
    let start = Instant::now();
    for _ in 0..reps {
        std::hint::black_box(run().map_err(Failure::from)?);
    }
    Ok((start.elapsed().as_nanos() / u128::from(reps.max(1))) as u64)
}

fn cmd_bench(order: usize, reps: u32, seed: u64) -> Result<ExitCode, Failure> {
    if order > DEFAULT_MAX_ORDER {
        return Err(Failure::new(
            2,
            format!("order {order} exceeds the maximum {DEFAULT_MAX_ORDER} for benching"),
        ));
    }
    if reps == 0 {
        return Err(Failure::new(2, "reps must be at least 1"));
    }
    let matrix: CubicMatrix<i64> =
        CubicMatrix::random(order, seed, -9, 9).map_err(|e| Failure::new(2, e.to_string()))?;
    let terms = factorial_squared(order);

    let mut rows: Vec<(DetMethod, u64)> = Vec::new();
    if order <= 3 {
        let opts = DetOptions::method(DetMethod::Explicit);
        rows.push((
            DetMethod::Explicit,
            time_engine(|| det(&matrix, &opts), reps)?,
        ));
    }
    let cofactor_opts = DetOptions::method(DetMethod::Cofactor);
    rows.push((
        DetMethod::Cofactor,
        time_engine(|| det(&matrix, &cofactor_opts), reps)?,
    ));
    rows.push((
        DetMethod::Permutation,
        time_engine(|| det_permutation_counted(&matrix), reps)?,
    ));

    println!("method,order,reps,mean_ns,terms");
    eprintln!(
        "{:<12} {:>5} {:>5} {:>12} {:>8}",
        "method", "order", "reps", "mean_ns", "terms"
    );
    for (method, mean_ns) in rows {
        println!("{method},{order},{reps},{mean_ns},{terms}");
        eprintln!(
            "{:<12} {:>5} {:>5} {:>12} {:>8}",
            method.to_string(),
            order,
            reps,
            mean_ns,
            terms
        );
    }
    Ok(ExitCode::SUCCESS)
}
