//! The `fc` command line.
//!
//! Every command writes line-delimited JSON records to stdout or `--out`.
//! Exit codes: 0 pass, 1 verification failure or internal error, 2 invalid
//! input, 3 domain precondition violated.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::coxeter::{parse_word, render_word, support_profile, CoxeterType};
use crate::error::{Error, ErrorKind, Result};
use crate::fc::{catalan, class_cap_from_env, count_fc_finite, is_fc_element, is_fully_commutative, FcLayers};
use crate::normal_form::{affine_nf, finite_nf, validate_nf, Mode};
use crate::perm::{is_reduced, word_to_element, AffinePermutation};
use crate::verify::{run_suite, Suite, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "fc", version, about = "Fully commutative elements of A_n and affine A_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Write records here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Commutation-class cap; FCWORD_CAP overrides the built-in default.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reducedness, full commutativity, length and support of a word.
    Check {
        #[arg(long = "type")]
        ty: CoxeterType,
        word: String,
    },
    /// Normal form of an FC element given by a word or a window.
    Nf {
        #[arg(long = "type")]
        ty: CoxeterType,
        /// Constraint set reported in `violations`: canonical, strict or lenient.
        #[arg(long, default_value = "canonical")]
        mode: Mode,
        /// Window values, comma separated, instead of a word.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        word: Option<String>,
    },
    /// FC elements up to a length, by length then canonical word.
    Enum {
        #[arg(long = "type")]
        ty: CoxeterType,
        #[arg(long)]
        max_len: usize,
    },
    /// Number of FC elements of A_n.
    Count { n: usize },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long = "type")]
        ty: Option<CoxeterType>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Append finished units here and skip those already present.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
}

/// Serialized record sink shared by all commands.
struct Output {
    inner: Box<dyn Write>,
}

impl Output {
    fn open(path: Option<&PathBuf>) -> Result<Self> {
        let inner: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Output { inner })
    }

    fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.inner, "{s}")?;
        Ok(())
    }

    fn record(&mut self, v: &Value) -> Result<()> {
        self.line(&v.to_string())
    }
}

impl Drop for Output {
    fn drop(&mut self) {
        let _ = self.inner.flush();
    }
}

fn support_json(w: &[usize], ty: CoxeterType) -> Value {
    let map: serde_json::Map<String, Value> = support_profile(w)
        .0
        .into_iter()
        .map(|(g, c)| (render_word(&[g], ty), json!(c)))
        .collect();
    Value::Object(map)
}

fn check(ty: CoxeterType, text: &str, out: &mut Output) -> Result<bool> {
    let w = parse_word(text, ty)?;
    let reduced = is_reduced(ty, &w)?;
    let x = word_to_element(ty, &w)?;
    let mut rec = json!({
        "type": "check",
        "family": ty.family().to_string(),
        "n": ty.n(),
        "word": render_word(&w, ty),
        "reduced": reduced,
    });
    if reduced {
        rec["fc"] = json!(is_fully_commutative(ty, &w)?);
    } else {
        rec["element_fc"] = json!(is_fc_element(&x));
    }
    rec["length"] = json!(x.length());
    rec["support"] = support_json(&x.canonical_reduced_word(), ty);
    out.record(&rec)?;
    Ok(true)
}

fn parse_window(ty: CoxeterType, text: &str) -> Result<AffinePermutation> {
    let values = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::UnknownToken(t.to_string())))
        .collect::<Result<Vec<_>>>()?;
    AffinePermutation::from_window(ty, values)
}

fn nf(ty: CoxeterType, mode: Mode, window: Option<&str>, word: Option<&str>, out: &mut Output) -> Result<bool> {
    let x = match (window, word) {
        (Some(win), None) => parse_window(ty, win)?,
        (None, Some(text)) => {
            let w = parse_word(text, ty)?;
            if !is_reduced(ty, &w)? {
                return Err(Error::NotReduced);
            }
            word_to_element(ty, &w)?
        }
        _ => return Err(Error::OutOfRange("give exactly one of a word or --window".into())),
    };
    if !is_fc_element(&x) {
        return Err(Error::NotFullyCommutative);
    }
    if x.is_finite() {
        let f = finite_nf(&x)?;
        let rec = json!({"type": "finite_nf", "n": ty.n(), "runs": f.runs, "word": render_word(&f.to_word()?, ty)});
        out.record(&rec)?;
        return Ok(true);
    }
    let form = affine_nf(&x)?;
    let mut rec: Value = serde_json::from_str(&form.to_record()?)?;
    let violations = validate_nf(&form, mode);
    if !violations.is_empty() {
        rec["violations"] = json!(violations);
    }
    out.record(&rec)?;
    Ok(true)
}

fn enumerate(ty: CoxeterType, max_len: usize, cap: usize, out: &mut Output) -> Result<bool> {
    for layer in FcLayers::new(ty, max_len, cap) {
        for rec in layer? {
            out.record(&json!({
                "type": "fc_element",
                "family": ty.family().to_string(),
                "n": ty.n(),
                "length": rec.length(),
                "word": render_word(&rec.word, ty),
                "window": rec.element.window(),
            }))?;
        }
    }
    Ok(true)
}

fn count(n: usize, out: &mut Output) -> Result<bool> {
    let c = count_fc_finite(n)?;
    out.record(&json!({"type": "count", "n": n, "count": c, "catalan": catalan(n as u64 + 1)}))?;
    Ok(true)
}

/// Runs a parsed command; `Ok(false)` means a verification failure.
pub fn execute(cli: &Cli) -> Result<bool> {
    let cap = cli.global.cap.unwrap_or_else(class_cap_from_env);
    if cap == 0 {
        return Err(Error::OutOfRange("--cap must be positive".into()));
    }
    let mut out = Output::open(cli.global.out.as_ref())?;
    match &cli.command {
        Command::Check { ty, word } => check(*ty, word, &mut out),
        Command::Nf { ty, mode, window, word } => nf(*ty, *mode, window.as_deref(), word.as_deref(), &mut out),
        Command::Enum { ty, max_len } => enumerate(*ty, *max_len, usize::MAX, &mut out),
        Command::Count { n } => count(*n, &mut out),
        Command::Verify { suite, ty, n, n_max, max_len, k_max, samples, seed, checkpoint } => {
            let cfg = VerifyConfig {
                ty: *ty,
                n: *n,
                n_max: *n_max,
                max_len: *max_len,
                k_max: *k_max,
                samples: *samples,
                seed: *seed,
                cap,
                checkpoint: checkpoint.clone(),
            };
            let report = run_suite(*suite, &cfg)?;
            for line in report.records() {
                out.line(&line)?;
            }
            eprintln!("{}", report.footer());
            Ok(report.passed())
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err.kind() {
        ErrorKind::InvalidInput => 2,
        ErrorKind::Precondition => 3,
        ErrorKind::Internal => 1,
    }
}

/// Entry point of the `fc` binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            eprintln!("error (invalid input): --jobs must be positive");
            return 2;
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match execute(&cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error ({}): {e}", e.kind());
            exit_code(&e)
        }
    }
}
