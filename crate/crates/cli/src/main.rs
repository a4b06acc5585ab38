//! `infchar`: batch front end for `infchar-core`.
//!
//! Exit codes: 0 success, 2 parse or validation failure, 3 computation
//! failure (a partial report is still printed).

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use infchar_core::parameters::RawGroup;
use infchar_core::{build_parameter_spec, compute_report, BasedRootDatum, GaloisParameterSpec, RawParameterSpec};
use serde_json::Value;

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 2;
const EXIT_COMPUTE: u8 = 3;

#[derive(Parser)]
#[command(name = "infchar", version, about = "Infinitesimal characters of Galois parameters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a spec and print its full report.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Fail with exit code 3 unless ζ^C matches the character of π_alg.
        #[arg(long)]
        check_roundtrip: bool,
    },
    /// Run every spec check and print PASS or the first failure.
    Validate { file: PathBuf },
    /// Root-datum utilities. The file holds a group object, or a spec with a `group` key.
    Rootdata {
        #[arg(value_enum)]
        action: RootdataAction,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RootdataAction {
    Dualize,
    Weyl,
    Delta,
    Twisting,
}

/// An input problem: unreadable file, malformed JSON or a failed check.
struct InputError(String);

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

/// Offset of the byte at a 1-based line and column.
fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let start: usize = text.split_inclusive('\n').take(line - 1).map(str::len).sum();
    (start + column.saturating_sub(1)).min(text.len())
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|e| {
        let at = if e.is_eof() { text.len() } else { byte_offset(text, e.line(), e.column()) };
        InputError(format!("parse error at byte {at}: {e}"))
    })
}

fn load_spec(path: &Path) -> Result<GaloisParameterSpec, InputError> {
    let text = read(path)?;
    let raw: RawParameterSpec = parse(&text)?;
    build_parameter_spec(&raw)
        .map_err(|e| InputError(format!("validation error at {}: {}", pointer_or_root(&e.pointer), e.error)))
}

fn pointer_or_root(p: &str) -> &str {
    if p.is_empty() {
        "/"
    } else {
        p
    }
}

fn compute(path: &Path, format: Format, check_roundtrip: bool) -> Result<u8, InputError> {
    let spec = load_spec(path)?;
    let report = compute_report(&spec);
    let mut code = if report.error.is_some() { EXIT_COMPUTE } else { EXIT_OK };
    let roundtrip_failure = check_roundtrip && report.error.is_none() && report.roundtrip != Some(true);
    if roundtrip_failure {
        code = EXIT_COMPUTE;
    }
    match format {
        Format::Json => println!("{}", report::to_canonical_json(&report::render(&spec, &report, check_roundtrip))),
        Format::Text => print!("{}", report::render_text(&spec, &report)),
    }
    if let Some(e) = &report.error {
        eprintln!("computation error: {e}");
    } else if roundtrip_failure {
        match report.roundtrip {
            None => eprintln!("round trip unavailable: the spec is not a regular C-mode parameter"),
            Some(_) => eprintln!("round trip failed: ζ^C is not the character of π_alg"),
        }
    }
    Ok(code)
}

fn validate(path: &Path) -> u8 {
    match load_spec(path) {
        Ok(_) => {
            println!("PASS");
            EXIT_OK
        }
        Err(InputError(msg)) => {
            println!("FAIL {msg}");
            EXIT_INPUT
        }
    }
}

fn load_group(path: &Path) -> Result<BasedRootDatum, InputError> {
    let text = read(path)?;
    let mut value: Value = parse(&text)?;
    let (group, prefix) = match value.get_mut("group") {
        Some(g) => (g.take(), "/group"),
        None => (value, ""),
    };
    let raw: RawGroup = serde_json::from_value(group).map_err(|e| InputError(format!("invalid group: {e}")))?;
    raw.to_datum().map(|(d, _)| d).map_err(|e| {
        // to_datum reports pointers relative to a whole spec
        let p = e.pointer.strip_prefix("/group").unwrap_or(&e.pointer);
        InputError(format!("invalid datum at {}: {}", pointer_or_root(&format!("{prefix}{p}")), e.error))
    })
}

fn rootdata(action: RootdataAction, path: &Path) -> Result<u8, InputError> {
    let d = load_group(path)?;
    let out = match action {
        RootdataAction::Dualize => report::datum_json(&d.dualize()),
        RootdataAction::Weyl => {
            let w = d.weyl_group().map_err(|e| InputError(format!("invalid datum: {e}")))?;
            serde_json::json!({ "order": w.order() })
        }
        RootdataAction::Delta => serde_json::json!({ "delta": report::weight_json(&d.half_sum_positive_roots()) }),
        RootdataAction::Twisting => match d.find_twisting_element() {
            Some(t) => serde_json::json!({ "twisting_element": t.iter().map(i64::to_string).collect::<Vec<_>>() }),
            None => serde_json::json!({ "twisting_element": "none" }),
        },
    };
    println!("{}", report::to_canonical_json(&out));
    Ok(EXIT_OK)
}

fn run(cli: Cli) -> u8 {
    let result = match cli.command {
        Command::Compute {
            file,
            format,
            check_roundtrip,
        } => compute(&file, format, check_roundtrip),
        Command::Validate { file } => Ok(validate(&file)),
        Command::Rootdata { action, file } => rootdata(action, &file),
    };
    match result {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("{msg}");
            EXIT_INPUT
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // a panic is a bug, but the exit-code contract still holds
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(code) => ExitCode::from(code),
        Err(_) => ExitCode::from(EXIT_COMPUTE),
    }
}
