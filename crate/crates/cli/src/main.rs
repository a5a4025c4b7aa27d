use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use malcev_core::algebra::catalog;
use malcev_core::classify;
use malcev_core::format::AlgebraFile;
use malcev_core::verifier::{run_suite, Mode, SuiteConfig, Target, DEFAULT_GUARD_SAMPLES};

#[derive(Parser)]
#[command(
    name = "malcev",
    version,
    about = "Exact verification of Mal'tsev algebra identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in algebras.
    Catalog,
    /// Write a built-in algebra in the JSON file format.
    Dump {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run identity suites on a built-in algebra or an algebra file.
    Verify {
        /// Catalog name or path to an algebra file.
        #[arg(long)]
        algebra: String,
        /// Suite ids or groups (all, operators, lts); repeatable or comma separated.
        #[arg(long = "suite", value_delimiter = ',', default_value = "all")]
        suites: Vec<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        /// Random samples per identity.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Auto,
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INPUT: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl ToString) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Catalog => {
            print!("{}", render_catalog());
            Ok(0)
        }
        Command::Dump { algebra, out } => dump(&algebra, out.as_deref()),
        Command::Verify {
            algebra,
            suites,
            mode,
            samples,
            seed,
            format,
            out,
        } => {
            let config = SuiteConfig {
                mode: match mode {
                    ModeArg::Auto => Mode::Auto,
                    ModeArg::Exhaustive => Mode::Exhaustive,
                    ModeArg::Random => Mode::Random,
                },
                samples,
                seed,
                guard_samples: DEFAULT_GUARD_SAMPLES,
            };
            verify(&algebra, &suites, &config, format, out.as_deref())
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("malcev: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn render_catalog() -> String {
    let mut out = String::new();
    for item in catalog::all() {
        let report = classify(item.algebra());
        let mut props = report.holding();
        if !report.associative.holds && !report.anticommutative.holds {
            props.push("non-associative");
        }
        if report.anticommutative.holds && !report.jacobi.holds {
            props.push("non-jacobi");
        }
        let props = props.join(", ");
        out.push_str(&format!(
            "{:<20} dim {:<2} {:<8} {}\n",
            item.name(),
            item.algebra().dim(),
            item.kind(),
            if props.is_empty() { "-" } else { &props }
        ));
    }
    out
}

fn unknown_algebra(name: &str) -> Failure {
    fail(
        EXIT_INPUT,
        format!(
            "unknown algebra {name:?}; built-in algebras: {}",
            catalog::NAMES.join(", ")
        ),
    )
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| fail(EXIT_USAGE, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dump(name: &str, out: Option<&Path>) -> Result<u8, Failure> {
    let item = catalog::lookup(name).ok_or_else(|| unknown_algebra(name))?;
    write_output(out, &AlgebraFile::from_catalog(&item).to_json())?;
    Ok(0)
}

fn resolve(algebra: &str) -> Result<Target, Failure> {
    if let Some(item) = catalog::lookup(algebra) {
        return Ok(Target::from_catalog(item));
    }
    let path = Path::new(algebra);
    if !path.exists() {
        return Err(unknown_algebra(algebra));
    }
    AlgebraFile::read(path)
        .and_then(|f| f.load())
        .and_then(|loaded| loaded.into_target())
        .map_err(|e| fail(EXIT_INPUT, format!("{algebra}: {e}")))
}

fn verify(
    algebra: &str,
    suites: &[String],
    config: &SuiteConfig,
    format: Format,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    if config.samples == Some(0) {
        return Err(fail(EXIT_USAGE, "--samples must be positive"));
    }
    let target = resolve(algebra)?;
    let ids = target.select(suites).map_err(|e| fail(EXIT_USAGE, e))?;
    let report = run_suite(&target, &ids, config).map_err(|e| fail(EXIT_USAGE, e))?;
    let text = match format {
        Format::Text => report.render_text(),
        Format::Json => report.to_json(),
    };
    write_output(out, &text)?;
    Ok(if report.passed { 0 } else { EXIT_FAIL })
}
