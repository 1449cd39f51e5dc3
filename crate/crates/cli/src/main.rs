//! Command-line front end: generate, verify, invert, and sweep the unit
//! family. Exit codes: 0 all checks pass, 1 a verification failed, 2 usage
//! error (composite d, empty range, malformed flags).

use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use promislow::{build_unit, invert_unit, UnitParams};
use promislow_cli::{render_text, run_point, PointReport, UnitDocument};

#[derive(Parser)]
#[command(
    name = "promislow",
    about = "Nontrivial units in the group algebra of the Promislow group",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the unit u(d,t,w,n).
    Unit(PointArgs),
    /// Check that u(d,t,w,n) is a nontrivial unit with determinant 1.
    Verify(VerifyArgs),
    /// Verify every point of a parameter grid.
    Sweep(SweepArgs),
    /// Print the inverse of u(d,t,w,n).
    Invert(PointArgs),
}

#[derive(Args)]
struct PointArgs {
    #[command(flatten)]
    point: Point,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    point: Point,
}

#[derive(Args)]
struct Point {
    /// Field characteristic (a prime).
    #[arg(long)]
    d: i64,
    /// Twist parameter t.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    t: i64,
    /// Twist parameter w.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    w: i64,
    /// Length parameter n (at least 1).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated list of primes.
    #[arg(long, value_delimiter = ',', required = true)]
    d_list: Vec<i64>,
    /// Inclusive range LO..HI for t.
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    t_range: String,
    /// Inclusive range LO..HI for w.
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    w_range: String,
    /// Inclusive range LO..HI for n (LO at least 1).
    #[arg(long, default_value = "1..3")]
    n_range: String,
    /// Number of worker threads.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Unit(args) => cmd_unit(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Invert(args) => cmd_invert(args),
    }
}

const USAGE: u8 = 2;
const FAILED: u8 = 1;

/// Builds parameters from flags, mapping invalid values to a usage error.
fn make_params(point: &Point) -> Result<UnitParams, ExitCode> {
    match UnitParams::new(point.d, point.t, point.w, point.n) {
        Ok(params) => Ok(params),
        Err(promislow::Error::NotPrime(_)) => {
            eprintln!("d must be prime");
            Err(ExitCode::from(USAGE))
        }
        Err(e) => {
            eprintln!("invalid parameters: {e}");
            Err(ExitCode::from(USAGE))
        }
    }
}

fn emit(params: &UnitParams, elem: &promislow::GroupRingElem, format: Format) {
    match format {
        // render_text ends with a newline already
        Format::Text => print!("{}", render_text(elem)),
        Format::Json => println!("{}", UnitDocument::from_element(params, elem).to_json()),
    }
}

fn cmd_unit(args: PointArgs) -> ExitCode {
    let params = match make_params(&args.point) {
        Ok(p) => p,
        Err(code) => return code,
    };
    match build_unit(&params) {
        Ok(u) => {
            emit(&params, &u, args.format);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("failed to build unit: {e}");
            ExitCode::from(FAILED)
        }
    }
}

fn cmd_invert(args: PointArgs) -> ExitCode {
    let params = match make_params(&args.point) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let inverse = build_unit(&params).and_then(|u| invert_unit(&u));
    match inverse {
        Ok(u_inv) => {
            emit(&params, &u_inv, args.format);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("inversion failed: {e}");
            ExitCode::from(FAILED)
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let params = match make_params(&args.point) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let report = match run_point(&params) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("verification error: {e}");
            return ExitCode::from(FAILED);
        }
    };
    println!(
        "d={} t={} w={} n={}",
        params.d(),
        params.t(),
        params.w(),
        params.n()
    );
    println!("is_unit: {}", report.is_unit);
    println!("is_nontrivial: {}", report.is_nontrivial);
    println!("support: {}", report.support);
    println!("det: {}", report.det_u);
    match &report.det_u_inv {
        Some(det) => println!("det_inverse: {det}"),
        None => println!("det_inverse: unavailable"),
    }
    println!("z_one_lemma: {}", report.z_one_lemma);
    println!("xy_minus_one_lemma: {}", report.xy_minus_one_lemma);
    println!("factorization: {}", report.factorization);
    if report.passed() {
        println!("verdict: PASS");
        ExitCode::SUCCESS
    } else {
        println!("verdict: FAIL");
        ExitCode::from(FAILED)
    }
}

/// Parses an inclusive `LO..HI` range with LO ≤ HI.
fn parse_range(text: &str) -> Option<RangeInclusive<i64>> {
    let (lo, hi) = text.split_once("..")?;
    let lo: i64 = lo.trim().parse().ok()?;
    let hi: i64 = hi.trim().parse().ok()?;
    if lo > hi {
        return None;
    }
    Some(lo..=hi)
}

fn cmd_sweep(args: SweepArgs) -> ExitCode {
    let usage = |msg: &str| {
        eprintln!("{msg}");
        ExitCode::from(USAGE)
    };
    let Some(t_range) = parse_range(&args.t_range) else {
        return usage("invalid --t-range: expected LO..HI with LO <= HI");
    };
    let Some(w_range) = parse_range(&args.w_range) else {
        return usage("invalid --w-range: expected LO..HI with LO <= HI");
    };
    let Some(n_range) = parse_range(&args.n_range) else {
        return usage("invalid --n-range: expected LO..HI with LO <= HI");
    };
    if *n_range.start() < 1 || *n_range.end() > u32::MAX as i64 {
        return usage("invalid --n-range: n must be at least 1");
    }
    if args.d_list.is_empty() {
        return usage("--d-list must name at least one prime");
    }

    // validate every point up front so usage errors precede any output
    let mut points: Vec<UnitParams> = Vec::new();
    for &d in &args.d_list {
        for t in t_range.clone() {
            for w in w_range.clone() {
                for n in n_range.clone() {
                    match UnitParams::new(d, t, w, n as u32) {
                        Ok(params) => points.push(params),
                        Err(promislow::Error::NotPrime(_)) => return usage("d must be prime"),
                        Err(e) => {
                            eprintln!("invalid parameters at d={d} t={t} w={w} n={n}: {e}");
                            return ExitCode::from(USAGE);
                        }
                    }
                }
            }
        }
    }

    let jobs = args
        .jobs
        .map(|j| j as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
        .min(points.len())
        .max(1);

    // points are independent; workers pull indices and results are reordered
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, promislow::Result<PointReport>)>> =
        Mutex::new(Vec::with_capacity(points.len()));
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                let Some(params) = points.get(idx) else { break };
                let report = run_point(params);
                results.lock().unwrap().push((idx, report));
            });
        }
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by_key(|(idx, _)| *idx);

    let mut passed = 0usize;
    let mut failed = 0usize;
    for (idx, outcome) in results {
        let params = &points[idx];
        print!(
            "d={} t={} w={} n={} ",
            params.d(),
            params.t(),
            params.w(),
            params.n()
        );
        match outcome {
            Ok(report) => {
                let det_one =
                    report.det_u.is_one() && report.det_u_inv.as_ref().is_some_and(|d| d.is_one());
                let lemmas = report.z_one_lemma && report.xy_minus_one_lemma;
                let ok = report.passed();
                println!(
                    "is_unit={} is_nontrivial={} det_one={} lemmas={} factorization={} {}",
                    report.is_unit,
                    report.is_nontrivial,
                    det_one,
                    lemmas,
                    report.factorization,
                    if ok { "PASS" } else { "FAIL" },
                );
                if ok {
                    passed += 1;
                } else {
                    failed += 1;
                }
            }
            Err(e) => {
                println!("error={e} FAIL");
                failed += 1;
            }
        }
    }
    println!(
        "swept {} points: {passed} passed, {failed} failed",
        points.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(FAILED)
    }
}
