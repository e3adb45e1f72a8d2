//! Command-line entry points.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure,
//! 2 on usage or parse errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::engine::{apply_map, d_squared, verify_structure, AStructure, CheckMode};
use crate::error::{Error, Result};
use crate::example::{lemma1_report, paper_example, BUILTIN_NAME};
use crate::format::parse_structure;
use crate::linfty::verify_linfty;
use crate::report::{emit_report, Report, ReportFormat};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the number of verification workers.
pub const THREADS_VAR: &str = "AINFTY_THREADS";

#[derive(Parser, Debug)]
#[command(name = "ainfty", version, about = "Exact checks for A-infinity structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Builtin {
    #[value(name = "paper-example")]
    PaperExample,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Structure file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in structure.
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Check {
    Direct,
    Coderivation,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => ReportFormat::Text,
            Format::Machine => ReportFormat::Machine,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Stasheff identities and/or D² = 0 on all basis words.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_arity: usize,
        #[arg(long, value_enum, default_value = "both")]
        check: Check,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the primed built-in maps with their sign-free formulas.
    Lemma1 {
        #[arg(long)]
        max_arity: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the L∞ relations of the symmetrized structure.
    Linfty {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_arity: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate one structure map on one word.
    Apply {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        arity: usize,
        /// Comma separated basis names, e.g. `v1,w,v2`.
        #[arg(long)]
        word: String,
        /// Evaluate the primed map on ↓V instead.
        #[arg(long)]
        primed: bool,
    },
    /// Print D²(↓x_1 ⊗ … ⊗ ↓x_n).
    D2 {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        word: String,
    },
}

fn load(source: &Source) -> Result<AStructure> {
    match (&source.input, source.builtin) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)?;
            parse_structure(&path.display().to_string(), &text)
        }
        (None, Some(Builtin::PaperExample)) => Ok(paper_example()),
        (None, None) => Err(Error::Input(format!("give --input FILE or --builtin {BUILTIN_NAME}"))),
    }
}

fn thread_pool() -> Result<Option<rayon::ThreadPool>> {
    let Ok(value) = std::env::var(THREADS_VAR) else { return Ok(None) };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Input(format!("{THREADS_VAR} must be a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map(Some)
        .map_err(|e| Error::Input(e.to_string()))
}

fn emit(out: &mut Vec<u8>, report: &Report, format: Format) -> Result<i32> {
    out.write_all(&emit_report(report, format.into()))?;
    Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
}

fn run(command: Command, out: &mut Vec<u8>) -> Result<i32> {
    match command {
        Command::Verify { source, max_arity, check, format } => {
            let s = load(&source)?;
            let mode = match check {
                Check::Direct => CheckMode::Direct,
                Check::Coderivation => CheckMode::Coderivation,
                Check::Both => CheckMode::Both,
            };
            let report = verify_structure(&s, max_arity, mode)?;
            emit(out, &report, format)
        }
        Command::Lemma1 { max_arity, format } => emit(out, &lemma1_report(max_arity)?, format),
        Command::Linfty { source, max_arity, format } => {
            let s = load(&source)?;
            emit(out, &verify_linfty(&s, max_arity)?, format)
        }
        Command::Apply { source, arity, word, primed } => {
            let s = load(&source)?;
            let w = s.space().parse_word(&word)?;
            if w.arity() != arity {
                return Err(Error::Input(format!(
                    "--arity {arity} but the word has {} letters",
                    w.arity()
                )));
            }
            let m = if primed {
                s.primed_family(arity)?.get(arity).cloned()
            } else {
                s.unprimed_family(arity)?.get(arity).cloned()
            };
            let v = match m {
                Some(m) => apply_map(&m, &w)?,
                None => Default::default(),
            };
            writeln!(out, "{}", v.render(s.space()))?;
            Ok(EXIT_PASS)
        }
        Command::D2 { source, word } => {
            let s = load(&source)?;
            let w = s.space().parse_word(&word)?;
            let d2 = d_squared(&s, &w)?;
            writeln!(out, "{}", d2.render())?;
            Ok(if d2.is_zero() { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

/// Runs the command line `argv` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut buffer = Vec::new();
    let result = match thread_pool() {
        Ok(Some(pool)) => pool.install(|| run(cli.command, &mut buffer)),
        Ok(None) => run(cli.command, &mut buffer),
        Err(e) => Err(e),
    };
    if let Err(e) = out.write_all(&buffer) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
