//! `frelkit` — fuzzy relational compositions from the shell.
//!
//! Subcommands:
//! - `compose`  — evaluate b = x ∘ A for a chosen operator pair,
//! - `diagnose` — classify every output column into an exactness regime,
//! - `verify`   — run the randomized property suite and report the outcome,
//! - `demo`     — reproduce the built-in worked example end to end.
//!
//! Exit codes: 0 success, 1 usage or input syntax error, 2 validation error
//! (well-formed input that violates a domain rule), 3 property-suite failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use frelkit_core::{
    build_compose_report, classify_regime, demo_reports, detect_format, emit_regime, emit_report,
    emit_suite, load_csv_instance, load_json_instance, render_text, run_suite, ComposeMode,
    Instance, InstanceFormat, LoadError, ReportFormat, SuiteConfig, TConormKind, TNormKind,
    DEFAULT_SEED,
};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_SUITE_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "frelkit", version, about = "Fuzzy relational composition toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compose an input vector with a relation matrix.
    Compose(ComposeArgs),
    /// Classify each output column into an exactness regime.
    Diagnose(DiagnoseArgs),
    /// Run the randomized property suite.
    Verify(VerifyArgs),
    /// Reproduce the built-in worked example.
    Demo(DemoArgs),
}

#[derive(Args)]
struct ComposeArgs {
    /// Matrix file: CSV, or a JSON instance document that already carries x.
    #[arg(long, value_name = "PATH")]
    matrix: PathBuf,

    /// Input vector file, one value per line (required with a CSV matrix).
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,

    /// T-norm: min, product, lukasiewicz, or drastic-product.
    #[arg(long, value_parser = parse_tnorm)]
    tnorm: TNormKind,

    /// T-conorm for the outer aggregation (convex requires --lambda).
    #[arg(long, value_enum, default_value_t = SconormArg::Max)]
    sconorm: SconormArg,

    /// Convex weight in [0, 1], or 'auto' for per-column adaptive weights.
    #[arg(long, value_name = "VALUE|auto", value_parser = parse_lambda)]
    lambda: Option<LambdaArg>,

    /// Also compute the similarity reference and compare every result to it.
    #[arg(long)]
    oracle: bool,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct DiagnoseArgs {
    /// Matrix file: CSV, or a JSON instance document that already carries x.
    #[arg(long, value_name = "PATH")]
    matrix: PathBuf,

    /// Input vector file, one value per line (required with a CSV matrix).
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Randomized trials per property.
    #[arg(long, default_value_t = 10_000)]
    trials: u32,

    /// Master seed for the deterministic trial streams.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Largest sampled row count (at least 2).
    #[arg(long = "max-n", value_name = "ROWS", default_value_t = 6)]
    max_n: usize,

    /// Largest sampled column count (at least 1).
    #[arg(long = "max-m", value_name = "COLS", default_value_t = 6)]
    max_m: usize,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Args)]
struct DemoArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SconormArg {
    Max,
    DrasticSum,
    Convex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for ReportFormat {
    fn from(arg: FormatArg) -> Self {
        match arg {
            FormatArg::Text => ReportFormat::Text,
            FormatArg::Json => ReportFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum LambdaArg {
    Auto,
    Fixed(f64),
}

fn parse_tnorm(text: &str) -> Result<TNormKind, String> {
    text.parse()
}

fn parse_lambda(text: &str) -> Result<LambdaArg, String> {
    if text.eq_ignore_ascii_case("auto") {
        return Ok(LambdaArg::Auto);
    }
    let value: f64 = text
        .parse()
        .map_err(|_| format!("expected a number in [0, 1] or 'auto', got '{text}'"))?;
    if (0.0..=1.0).contains(&value) {
        Ok(LambdaArg::Fixed(value))
    } else {
        Err(format!("weight {value} is outside [0, 1]"))
    }
}

fn main() -> ExitCode {
    ExitCode::from(run())
}

fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Compose(args) => compose(&args),
        Command::Diagnose(args) => diagnose(&args),
        Command::Verify(args) => verify(&args),
        Command::Demo(args) => demo(&args),
    }
}

fn fail(message: &str, code: u8) -> u8 {
    eprintln!("error: {message}");
    code
}

/// Resolve the operator pair from the flag combination, rejecting
/// combinations that would silently ignore one of the flags.
fn compose_mode(args: &ComposeArgs) -> Result<ComposeMode, String> {
    match (args.sconorm, args.lambda) {
        (SconormArg::Convex, None) => {
            Err("--sconorm convex requires --lambda <VALUE|auto>".to_string())
        }
        (SconormArg::Convex, Some(LambdaArg::Auto)) => {
            if args.tnorm == TNormKind::Min {
                Ok(ComposeMode::Adaptive)
            } else {
                Err(format!(
                    "--lambda auto mixes max-min with the drastic sum; it requires --tnorm min, not {}",
                    args.tnorm.name()
                ))
            }
        }
        (SconormArg::Convex, Some(LambdaArg::Fixed(weight))) => {
            let sconorm = TConormKind::convex(weight).map_err(|err| err.to_string())?;
            Ok(ComposeMode::Standard { tnorm: args.tnorm, sconorm })
        }
        (_, Some(_)) => Err("--lambda applies only with --sconorm convex".to_string()),
        (SconormArg::Max, None) => {
            Ok(ComposeMode::Standard { tnorm: args.tnorm, sconorm: TConormKind::Max })
        }
        (SconormArg::DrasticSum, None) => {
            Ok(ComposeMode::Standard { tnorm: args.tnorm, sconorm: TConormKind::DrasticSum })
        }
    }
}

/// Load an instance from either a self-contained JSON document or a
/// CSV matrix plus a separate vector file. Returns the message and exit
/// code to use on failure.
fn load_instance(matrix: &Path, input: Option<&Path>) -> Result<Instance, (String, u8)> {
    match detect_format(matrix) {
        InstanceFormat::Json => {
            if input.is_some() {
                return Err((
                    "--input does not apply to a JSON instance document; it already carries x"
                        .to_string(),
                    EXIT_USAGE,
                ));
            }
            load_json_instance(matrix).map_err(load_failure)
        }
        InstanceFormat::Csv => {
            let Some(vector) = input else {
                return Err((
                    "a CSV matrix needs --input <PATH> with one value per line".to_string(),
                    EXIT_USAGE,
                ));
            };
            load_csv_instance(matrix, vector).map_err(load_failure)
        }
    }
}

fn load_failure(err: LoadError) -> (String, u8) {
    let code = if err.is_validation() { EXIT_VALIDATION } else { EXIT_USAGE };
    (err.to_string(), code)
}

fn compose(args: &ComposeArgs) -> u8 {
    let mode = match compose_mode(args) {
        Ok(mode) => mode,
        Err(message) => return fail(&message, EXIT_USAGE),
    };
    let instance = match load_instance(&args.matrix, args.input.as_deref()) {
        Ok(instance) => instance,
        Err((message, code)) => return fail(&message, code),
    };
    match build_compose_report(&instance, mode, args.oracle) {
        Ok(report) => {
            print!("{}", emit_report(&report, args.format.into()));
            EXIT_OK
        }
        Err(err) => fail(&err.to_string(), EXIT_VALIDATION),
    }
}

fn diagnose(args: &DiagnoseArgs) -> u8 {
    let instance = match load_instance(&args.matrix, args.input.as_deref()) {
        Ok(instance) => instance,
        Err((message, code)) => return fail(&message, code),
    };
    match classify_regime(&instance.x, &instance.a) {
        Ok(regime) => {
            print!("{}", emit_regime(&regime, instance.a.col_labels(), args.format.into()));
            EXIT_OK
        }
        Err(err) => fail(&err.to_string(), EXIT_VALIDATION),
    }
}

fn verify(args: &VerifyArgs) -> u8 {
    let config = SuiteConfig {
        trials: args.trials,
        seed: args.seed,
        max_rows: args.max_n,
        max_cols: args.max_m,
        ..SuiteConfig::default()
    };
    match run_suite(&config) {
        Ok(report) => {
            print!("{}", emit_suite(&report, args.format.into()));
            if report.passed {
                EXIT_OK
            } else {
                EXIT_SUITE_FAILED
            }
        }
        Err(err) => fail(&err.to_string(), EXIT_VALIDATION),
    }
}

fn demo(args: &DemoArgs) -> u8 {
    let reports = match demo_reports() {
        Ok(reports) => reports,
        Err(err) => return fail(&err.to_string(), EXIT_VALIDATION),
    };
    match args.format {
        FormatArg::Json => match serde_json::to_string_pretty(&reports) {
            Ok(json) => {
                println!("{json}");
                EXIT_OK
            }
            Err(err) => fail(&err.to_string(), EXIT_VALIDATION),
        },
        FormatArg::Text => {
            let rendered: Vec<String> = reports.iter().map(render_text).collect();
            print!("{}", rendered.join("\n"));
            EXIT_OK
        }
    }
}
