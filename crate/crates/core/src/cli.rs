//! Command-line interface: `eval`, `seminorm`, `quotient`, `verify`,
//! `report`.
//!
//! Exit codes: 0 success (and every check passed), 1 at least one check
//! failed, 2 invalid input (bad flags, malformed specs, precondition
//! violations). All configuration is explicit — no environment variables.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::funcspec::parse_function_spec;
use crate::functions::HoloFunction;
use crate::geometry::Point;
use crate::harness::{run_suite, Suite};
use crate::report::{write_atomic, Report};
use crate::sampling::SamplingPlan;
use crate::seminorms::{
    estimate_seminorm, lipschitz_quotient, weighted_quotient, SeminormKind, WeightConvention,
};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "blochball",
    version,
    about = "Bloch-type seminorms and norm-equivalence checks on the unit ball"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function spec at a point of the ball
    Eval(EvalArgs),
    /// Estimate a seminorm (certified lower bound) of a function spec
    Seminorm(SeminormArgs),
    /// Estimate a Lipschitz or weighted difference quotient
    Quotient(QuotientArgs),
    /// Run a named check suite and optionally write a report
    Verify(VerifyArgs),
    /// Re-render a stored JSON report
    Report(ReportArgs),
}

/// Sampling-plan knobs shared by every estimating subcommand.
#[derive(Args)]
struct PlanArgs {
    /// Seed for every sampled artifact (directions, pairs, families)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Dyadic radial levels of the sampling grid
    #[arg(long, default_value_t = 20)]
    levels: u32,
    /// Random unit directions appended to the coordinate axes
    #[arg(long, default_value_t = 8)]
    dirs: u32,
    /// Seeded point pairs for quotient estimates
    #[arg(long, default_value_t = 2000)]
    pairs: u32,
    /// Golden-section refinement steps around grid maxima
    #[arg(long, default_value_t = 48)]
    refine: u32,
}

impl PlanArgs {
    fn plan(&self) -> Result<SamplingPlan> {
        SamplingPlan::new(self.levels, self.dirs, self.pairs, self.refine, self.seed)
    }
}

#[derive(Args)]
struct EvalArgs {
    /// Path to a JSON function spec
    #[arg(long = "fn", value_name = "PATH")]
    function: PathBuf,
    /// Point as a JSON array of reals or [re,im] pairs, e.g. "[0.3,0.5]"
    #[arg(long)]
    point: String,
}

#[derive(Args)]
struct SeminormArgs {
    /// Path to a JSON function spec
    #[arg(long = "fn", value_name = "PATH")]
    function: PathBuf,
    /// Seminorm kind: 1|2|3|4|growth|normal|qf
    #[arg(long)]
    kind: String,
    /// Weight exponent
    #[arg(long)]
    alpha: f64,
    /// Weight convention override: one-minus-norm | one-minus-norm-sq
    #[arg(long)]
    convention: Option<String>,
    /// Assert the function's ambient dimension before computing
    #[arg(long)]
    dim: Option<usize>,
    #[command(flatten)]
    plan: PlanArgs,
}

#[derive(Args)]
struct QuotientArgs {
    /// Path to a JSON function spec
    #[arg(long = "fn", value_name = "PATH")]
    function: PathBuf,
    /// Quotient exponent
    #[arg(long)]
    alpha: f64,
    /// Split the weight as (1-|x|)^lambda (1-|y|)^(alpha-lambda); omit for
    /// the unweighted Lipschitz-alpha quotient
    #[arg(long)]
    lambda: Option<f64>,
    #[command(flatten)]
    plan: PlanArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which checks to run
    #[arg(long, default_value = "all")]
    suite: String,
    /// Ambient dimension the generated families live in
    #[arg(long, default_value_t = 3)]
    dim: usize,
    /// Report format when --output is given
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write the report here (atomically); prints verdicts either way
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    plan: PlanArgs,
}

#[derive(Args)]
struct ReportArgs {
    /// A JSON report produced by `verify --format json`
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Destination; prints to stdout when omitted
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

/// Parse argv and dispatch; the process exit code distinguishes pass, check
/// failure, and input error.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command) -> Result<ExitCode> {
    match command {
        Command::Eval(args) => cmd_eval(&args),
        Command::Seminorm(args) => cmd_seminorm(&args),
        Command::Quotient(args) => cmd_quotient(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Report(args) => cmd_report(&args),
    }
}

fn load_function(path: &Path) -> Result<HoloFunction> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    parse_function_spec(&text)
}

fn parse_point(text: &str, dim: usize) -> Result<Point> {
    let coords: Vec<crate::geometry::Complex> =
        if let Ok(reals) = serde_json::from_str::<Vec<f64>>(text) {
            reals
                .into_iter()
                .map(|re| crate::geometry::Complex::new(re, 0.0))
                .collect()
        } else if let Ok(pairs) = serde_json::from_str::<Vec<[f64; 2]>>(text) {
            pairs
                .into_iter()
                .map(|p| crate::geometry::Complex::new(p[0], p[1]))
                .collect()
        } else {
            return Err(Error::Spec(format!(
                "point: expected a JSON array of reals or [re,im] pairs, got {:?}",
                text
            )));
        };
    if coords.len() != dim {
        return Err(Error::DimensionMismatch {
            left: dim,
            right: coords.len(),
        });
    }
    Ok(Point::new(coords))
}

fn parse_kind(text: &str) -> Result<SeminormKind> {
    match text.to_ascii_lowercase().as_str() {
        "1" | "s1" => Ok(SeminormKind::S1),
        "2" | "s2" => Ok(SeminormKind::S2),
        "3" | "s3" => Ok(SeminormKind::S3),
        "4" | "s4" => Ok(SeminormKind::S4),
        "growth" => Ok(SeminormKind::Growth),
        "normal" => Ok(SeminormKind::Normal),
        "qf" => Ok(SeminormKind::Qf),
        other => Err(Error::Spec(format!(
            "unknown seminorm kind '{}'; expected 1|2|3|4|growth|normal|qf",
            other
        ))),
    }
}

fn parse_convention(text: &str) -> Result<WeightConvention> {
    match text.to_ascii_lowercase().as_str() {
        "one-minus-norm" | "one_minus_norm" => Ok(WeightConvention::OneMinusNorm),
        "one-minus-norm-sq" | "one_minus_norm_sq" => Ok(WeightConvention::OneMinusNormSq),
        other => Err(Error::Spec(format!(
            "unknown convention '{}'; expected one-minus-norm | one-minus-norm-sq",
            other
        ))),
    }
}

fn cmd_eval(args: &EvalArgs) -> Result<ExitCode> {
    let f = load_function(&args.function)?;
    let x = parse_point(&args.point, f.dim())?;
    let v = f.evaluate(&x)?;
    println!("f(x) = {} + {}i  (|f(x)| = {})", v.re, v.im, v.norm());
    Ok(ExitCode::SUCCESS)
}

fn cmd_seminorm(args: &SeminormArgs) -> Result<ExitCode> {
    let f = load_function(&args.function)?;
    if let Some(dim) = args.dim {
        if dim != f.dim() {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: f.dim(),
            });
        }
    }
    let kind = parse_kind(&args.kind)?;
    let convention = match &args.convention {
        Some(text) => parse_convention(text)?,
        None => kind.default_convention(),
    };
    let plan = args.plan.plan()?;
    let est = estimate_seminorm(&f, kind, args.alpha, &plan, convention)?;
    println!(
        "{}[alpha={}] = {}  (convention {}, witness radius {:.6})",
        kind.label(),
        args.alpha,
        est.value,
        convention.label(),
        est.witness.radius()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_quotient(args: &QuotientArgs) -> Result<ExitCode> {
    let f = load_function(&args.function)?;
    let plan = args.plan.plan()?;
    let est = match args.lambda {
        Some(lambda) => weighted_quotient(&f, args.alpha, lambda, &plan)?,
        None => lipschitz_quotient(&f, args.alpha, &plan)?,
    };
    match args.lambda {
        Some(lambda) => println!(
            "{}[alpha={},lambda={}] = {}  (witness radius {:.6})",
            est.kind.label(),
            args.alpha,
            lambda,
            est.value,
            est.witness.radius()
        ),
        None => println!(
            "{}[alpha={}] = {}  (witness radius {:.6})",
            est.kind.label(),
            args.alpha,
            est.value,
            est.witness.radius()
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let suite = Suite::parse(&args.suite).ok_or_else(|| {
        Error::Spec(format!(
            "unknown suite '{}'; expected identities|equivalence|t-alpha|integral|schlicht|\
             hardy-littlewood|growth|dai|derivative-growth|all",
            args.suite
        ))
    })?;
    let plan = args.plan.plan()?;
    let results = run_suite(suite, args.dim, &plan)?;
    let passed = results.iter().filter(|r| r.pass).count();
    for result in &results {
        println!(
            "{} {}",
            if result.pass { "pass" } else { "FAIL" },
            result.check_id
        );
    }
    println!(
        "suite {}: {}/{} checks passed",
        suite.label(),
        passed,
        results.len()
    );
    let report = Report::new(suite.label(), args.dim, &plan, results);
    if let Some(path) = &args.output {
        let content = match args.format {
            OutputFormat::Csv => report.to_csv(),
            OutputFormat::Json => report.to_json(),
        };
        write_atomic(path, &content)?;
        println!("report written to {}", path.display());
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_report(args: &ReportArgs) -> Result<ExitCode> {
    let text = std::fs::read_to_string(&args.input).map_err(|e| Error::Io {
        path: args.input.display().to_string(),
        source: e,
    })?;
    let report = Report::from_json(&text)?;
    let content = match args.format {
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Json => report.to_json(),
    };
    match &args.output {
        Some(path) => {
            write_atomic(path, &content)?;
            println!("report written to {}", path.display());
        }
        None => print!("{}", content),
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_parsing_accepts_numbers_and_names() {
        assert_eq!(parse_kind("1").unwrap(), SeminormKind::S1);
        assert_eq!(parse_kind("s3").unwrap(), SeminormKind::S3);
        assert_eq!(parse_kind("4").unwrap(), SeminormKind::S4);
        assert_eq!(parse_kind("growth").unwrap(), SeminormKind::Growth);
        assert_eq!(parse_kind("QF").unwrap(), SeminormKind::Qf);
        assert!(parse_kind("lip").is_err());
        assert!(parse_kind("5").is_err());
    }

    #[test]
    fn convention_parsing() {
        assert_eq!(
            parse_convention("one-minus-norm").unwrap(),
            WeightConvention::OneMinusNorm
        );
        assert_eq!(
            parse_convention("ONE_MINUS_NORM_SQ").unwrap(),
            WeightConvention::OneMinusNormSq
        );
        assert!(parse_convention("squared").is_err());
    }

    #[test]
    fn point_parsing_accepts_real_and_complex_arrays() {
        let p = parse_point("[0.3,0.5]", 2).unwrap();
        assert_eq!(p.coords()[0].re, 0.3);
        let p = parse_point("[[0.3,0.1],[0.0,-0.2]]", 2).unwrap();
        assert_eq!(p.coords()[1].im, -0.2);
        assert!(matches!(
            parse_point("[0.3]", 2),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(parse_point("nonsense", 2).is_err());
    }

    #[test]
    fn argv_defaults_and_suite_flag() {
        let cli = Cli::try_parse_from(["blochball", "verify"]).unwrap();
        match cli.command {
            Command::Verify(args) => {
                assert_eq!(args.suite, "all");
                assert_eq!(args.dim, 3);
                assert_eq!(args.plan.seed, 42);
                assert_eq!(args.plan.levels, 20);
                assert_eq!(args.format, OutputFormat::Csv);
            }
            _ => panic!("expected verify"),
        }
        let cli = Cli::try_parse_from([
            "blochball",
            "seminorm",
            "--fn",
            "f.json",
            "--kind",
            "1",
            "--alpha",
            "1.0",
        ])
        .unwrap();
        match cli.command {
            Command::Seminorm(args) => {
                assert_eq!(args.kind, "1");
                assert_eq!(args.alpha, 1.0);
                assert!(args.convention.is_none());
            }
            _ => panic!("expected seminorm"),
        }
        // missing required flags is a usage error
        assert!(Cli::try_parse_from(["blochball", "seminorm"]).is_err());
    }
}
