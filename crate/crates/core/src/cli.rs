//! Command-line front end. Every big number crosses this boundary as a
//! decimal string; every result is JSON.
//!
//! Exit status: 0 on success, 1 on invalid input, 2 when a check that the
//! constructions guarantee turns out false.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::arith::{is_nth_power, perfect_power_decompose};
use crate::construct::{
    build_fermat, build_fermat_rational, build_mihailescu, build_runge, ConstructError,
    FixedExponentTarget, GeneralTarget,
};
use crate::json::{parse_integer, parse_rational};
use crate::poly::{IntPolynomial, RatPolynomial, Rational};
use crate::verify::{self, ScanMode, VerifyError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VALIDATION: u8 = 1;
pub const EXIT_VIOLATION: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "revdioph",
    version,
    about = "Build polynomials whose values hit perfect powers only on a chosen set, and check them"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write JSON here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a polynomial from a target set.
    Construct(ConstructArgs),
    /// Scan an integer range for perfect-power values of a polynomial.
    Scan(ScanArgs),
    /// Check sandwich certificates (runge) or factor coprimality (mihailescu) over a range.
    Certify(CertifyArgs),
    /// Fundamental Pell solution, or a Pythagorean-family triple with --r/--s.
    Pell(PellArgs),
    /// Search a box for solutions of 3*x1^m + x2^m = x3^m.
    FermatScan(FermatScanArgs),
    /// Look for z^n - 1 = c^4 with z, n in a box.
    CatalanCheck(CatalanArgs),
    /// Test one integer for perfect-power membership.
    PowerTest(PowerTestArgs),
    /// Scan rationals of bounded height for m-th power values.
    RationalScan(RationalScanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Runge,
    Fermat,
    Mihailescu,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Any,
    Fixed,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub method: Method,
    /// The common exponent m (runge, fermat).
    #[arg(long)]
    pub exponent: Option<u32>,
    /// Comma-separated bases a_1,...,a_k (runge, fermat); rationals p/q with --rational.
    #[arg(long, allow_hyphen_values = true)]
    pub bases: Option<String>,
    /// Comma-separated perfect powers b_1,...,b_k (mihailescu).
    #[arg(long, allow_hyphen_values = true)]
    pub powers: Option<String>,
    /// Build the fermat polynomial over the rationals.
    #[arg(long)]
    pub rational: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Polynomial JSON file ({"coeffs": [...]}).
    #[arg(long)]
    pub poly: PathBuf,
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    /// Exponent for --mode fixed.
    #[arg(long)]
    pub exponent: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub from: String,
    #[arg(long, allow_hyphen_values = true)]
    pub to: String,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct RationalScanArgs {
    /// Rational polynomial JSON file ({"coeffs": ["p/q", ...]}).
    #[arg(long)]
    pub poly: PathBuf,
    #[arg(long)]
    pub exponent: u32,
    #[arg(long)]
    pub height: u64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long)]
    pub exponent: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub bases: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub powers: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub from: String,
    #[arg(long, allow_hyphen_values = true)]
    pub to: String,
}

#[derive(Debug, Args)]
pub struct PellArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
}

#[derive(Debug, Args)]
pub struct FermatScanArgs {
    #[arg(long)]
    pub exponent: u32,
    #[arg(long)]
    pub bound: u64,
}

#[derive(Debug, Args)]
pub struct CatalanArgs {
    #[arg(long)]
    pub z_max: u64,
    #[arg(long)]
    pub n_max: u32,
}

#[derive(Debug, Args)]
pub struct PowerTestArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub value: String,
    #[arg(long)]
    pub exponent: Option<u32>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{flag}: {message}")]
    Flag { flag: &'static str, message: String },
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

fn flag_error(flag: &'static str, message: impl Into<String>) -> CliError {
    CliError::Flag {
        flag,
        message: message.into(),
    }
}

/// JSON result plus, when a guaranteed property failed, what failed.
#[derive(Debug)]
pub struct Outcome {
    pub json: String,
    pub violation: Option<String>,
}

impl Outcome {
    fn ok<T: Serialize>(value: &T) -> Self {
        Self {
            json: to_json(value),
            violation: None,
        }
    }

    fn checked<T: Serialize>(value: &T, violation: Option<String>) -> Self {
        Self {
            json: to_json(value),
            violation,
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.violation.is_some() {
            EXIT_VIOLATION
        } else {
            EXIT_OK
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON serialization");
    text.push('\n');
    text
}

fn required<T>(value: Option<T>, flag: &'static str, context: &str) -> Result<T, CliError> {
    value.ok_or_else(|| flag_error(flag, format!("required {context}")))
}

fn integer_flag(text: &str, flag: &'static str) -> Result<BigInt, CliError> {
    parse_integer(text).map_err(|e| flag_error(flag, e.to_string()))
}

/// Comma-separated integers; an empty string is the empty list.
fn integer_list(text: &str, flag: &'static str) -> Result<Vec<BigInt>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| integer_flag(t, flag)).collect()
}

fn rational_list(text: &str, flag: &'static str) -> Result<Vec<Rational>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| parse_rational(t).map_err(|e| flag_error(flag, e.to_string())))
        .collect()
}

fn jobs_flag(jobs: usize) -> Result<usize, CliError> {
    if jobs == 0 {
        return Err(flag_error("--jobs", "must be at least 1"));
    }
    Ok(jobs)
}

fn range_flags(from: &str, to: &str) -> Result<(BigInt, BigInt), CliError> {
    let lo = integer_flag(from, "--from")?;
    let hi = integer_flag(to, "--to")?;
    if lo > hi {
        return Err(flag_error("--from", format!("{lo} exceeds --to {hi}")));
    }
    Ok((lo, hi))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: shown,
        source,
    })
}

fn fixed_target(
    exponent: Option<u32>,
    bases: Option<&str>,
    method: &str,
) -> Result<FixedExponentTarget, CliError> {
    let exponent = required(exponent, "--exponent", &format!("for {method}"))?;
    let bases = integer_list(bases.unwrap_or(""), "--bases")?;
    Ok(FixedExponentTarget::new(exponent, bases)?)
}

fn construct(args: &ConstructArgs) -> Result<Outcome, CliError> {
    if args.rational && args.method != Method::Fermat {
        return Err(flag_error("--rational", "only applies to --method fermat"));
    }
    match args.method {
        Method::Runge | Method::Fermat if args.powers.is_some() => Err(flag_error(
            "--powers",
            "only applies to --method mihailescu; use --bases",
        )),
        Method::Mihailescu if args.bases.is_some() || args.exponent.is_some() => Err(flag_error(
            "--bases",
            "mihailescu takes --powers only (no --bases or --exponent)",
        )),
        Method::Runge => {
            let target = fixed_target(args.exponent, args.bases.as_deref(), "runge")?;
            Ok(Outcome::ok(&build_runge(&target)))
        }
        Method::Fermat if args.rational => {
            let exponent = required(args.exponent, "--exponent", "for fermat")?;
            let bases = rational_list(args.bases.as_deref().unwrap_or(""), "--bases")?;
            Ok(Outcome::ok(&build_fermat_rational(exponent, &bases)?))
        }
        Method::Fermat => {
            let target = fixed_target(args.exponent, args.bases.as_deref(), "fermat")?;
            Ok(Outcome::ok(&build_fermat(&target)?))
        }
        Method::Mihailescu => {
            let powers = integer_list(args.powers.as_deref().unwrap_or(""), "--powers")?;
            Ok(Outcome::ok(&build_mihailescu(&GeneralTarget::new(powers)?)))
        }
    }
}

fn scan(args: &ScanArgs) -> Result<Outcome, CliError> {
    let mode = match (args.mode, args.exponent) {
        (ModeArg::Any, None) => ScanMode::Any,
        (ModeArg::Any, Some(_)) => {
            return Err(flag_error("--exponent", "not used with --mode any"))
        }
        (ModeArg::Fixed, m) => ScanMode::Fixed(required(m, "--exponent", "for --mode fixed")?),
    };
    let (lo, hi) = range_flags(&args.from, &args.to)?;
    let jobs = jobs_flag(args.jobs)?;
    let poly: IntPolynomial = read_json(&args.poly)?;
    let report = verify::scan_integers_parallel(&poly, mode, &lo, &hi, jobs)?;
    Ok(Outcome::ok(&report))
}

fn rational_scan(args: &RationalScanArgs) -> Result<Outcome, CliError> {
    let jobs = jobs_flag(args.jobs)?;
    let poly: RatPolynomial = read_json(&args.poly)?;
    let report =
        verify::scan_rationals_by_height_parallel(&poly, args.exponent, args.height, jobs)?;
    Ok(Outcome::ok(&report))
}

#[derive(Serialize)]
struct CertifiedPoint {
    #[serde(flatten)]
    sandwich: verify::SandwichCertificate,
    helpers: verify::HelperInequalities,
}

fn certify(args: &CertifyArgs) -> Result<Outcome, CliError> {
    let (lo, hi) = range_flags(&args.from, &args.to)?;
    if let Some(powers) = &args.powers {
        if args.bases.is_some() || args.exponent.is_some() {
            return Err(flag_error(
                "--powers",
                "cannot be combined with --bases/--exponent",
            ));
        }
        let target = GeneralTarget::new(integer_list(powers, "--powers")?)?;
        let coprime = verify::coprimality_check(&target, &lo, &hi)?;
        let report = json!({
            "powers": target.powers().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "lo": lo.to_string(),
            "hi": hi.to_string(),
            "coprime": coprime,
        });
        let violation = (!coprime).then(|| "factors share a common divisor".to_string());
        return Ok(Outcome::checked(&report, violation));
    }

    let target = fixed_target(args.exponent, args.bases.as_deref(), "certify")?;
    let mut points = Vec::new();
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    let mut x = lo.clone();
    while x <= hi {
        if target.is_excluded(&x) {
            skipped.push(x.to_string());
        } else {
            let sandwich = verify::certify_sandwich(&target, &x)?;
            let helpers = verify::certify_helper_inequalities(&target, &x)?;
            if !sandwich.is_valid() || !helpers.all() {
                failures.push(x.to_string());
            }
            points.push(CertifiedPoint { sandwich, helpers });
        }
        x += 1u32;
    }
    let violation = (!failures.is_empty())
        .then(|| format!("certificate failed at x = {}", failures.join(", ")));
    let report = json!({
        "exponent": target.exponent(),
        "bases": target.bases().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "lo": lo.to_string(),
        "hi": hi.to_string(),
        "skipped": skipped,
        "failures": failures,
        "certificates": points,
    });
    Ok(Outcome::checked(&report, violation))
}

fn pell(args: &PellArgs) -> Result<Outcome, CliError> {
    match (&args.q, &args.r, &args.s) {
        (Some(q), None, None) => {
            let q = integer_flag(q, "--q")?;
            let solution = verify::pell_fundamental(&q)?;
            let violation = (!solution.holds()).then(|| "Pell identity failed".to_string());
            Ok(Outcome::checked(&solution, violation))
        }
        (None, Some(r), Some(s)) => {
            let r = integer_flag(r, "--r")?;
            if r < BigInt::from(1) {
                return Err(flag_error("--r", "must be at least 1"));
            }
            let triple = verify::pythagorean_family(&r, &integer_flag(s, "--s")?);
            let violation = (!triple.holds()).then(|| "Pythagorean identity failed".to_string());
            Ok(Outcome::checked(&triple, violation))
        }
        _ => Err(flag_error("--q", "give either --q, or both --r and --s")),
    }
}

fn fermat_scan(args: &FermatScanArgs) -> Result<Outcome, CliError> {
    let triples = verify::check_fermat_box(args.exponent, args.bound)?;
    let nontrivial: Vec<_> = triples.iter().filter(|t| !t.is_trivial()).collect();
    let violation = (args.exponent >= 3 && !nontrivial.is_empty()).then(|| {
        let t = nontrivial[0];
        format!(
            "nontrivial solution x1 = {}, x2 = {}, x3 = {}",
            t.x1, t.x2, t.x3
        )
    });
    let report = json!({
        "exponent": args.exponent,
        "bound": args.bound,
        "nontrivial": nontrivial.len(),
        "triples": triples,
    });
    Ok(Outcome::checked(&report, violation))
}

fn catalan_check(args: &CatalanArgs) -> Result<Outcome, CliError> {
    let witnesses = verify::catalan_desk_check(args.z_max, args.n_max);
    let violation = witnesses
        .first()
        .map(|w| format!("{}^{} - 1 = {}^4", w.z, w.n, w.c));
    let report = json!({
        "z_max": args.z_max,
        "n_max": args.n_max,
        "witnesses": witnesses,
    });
    Ok(Outcome::checked(&report, violation))
}

fn power_test(args: &PowerTestArgs) -> Result<Outcome, CliError> {
    let value = integer_flag(&args.value, "--value")?;
    let witness = match args.exponent {
        Some(n) if n < 2 => return Err(flag_error("--exponent", "must be at least 2")),
        Some(n) => is_nth_power(&value, n),
        None => perfect_power_decompose(&value),
    };
    Ok(Outcome::ok(&json!({
        "value": value.to_string(),
        "witness": witness,
    })))
}

/// Dispatches a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Scan(a) => scan(a),
        Command::Certify(a) => certify(a),
        Command::Pell(a) => pell(a),
        Command::FermatScan(a) => fermat_scan(a),
        Command::CatalanCheck(a) => catalan_check(a),
        Command::PowerTest(a) => power_test(a),
        Command::RationalScan(a) => rational_scan(a),
    }
}

fn write_output(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".to_string(),
                source,
            }),
    }
}

/// Runs the command, writes its output, reports problems on stderr and
/// returns the exit status.
pub fn main_with(cli: Cli) -> u8 {
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_VALIDATION;
        }
    };
    if let Err(err) = write_output(&cli, &outcome.json) {
        eprintln!("error: {err}");
        return EXIT_VALIDATION;
    }
    if let Some(violation) = &outcome.violation {
        eprintln!("violation: {violation}");
    }
    outcome.exit_code()
}
