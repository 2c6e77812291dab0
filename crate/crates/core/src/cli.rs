//! Command-line front end. [`run`] is a pure function of the argument list
//! so the binary stays a one-liner and tests can drive it in-process.
//!
//! Exit codes: 0 success / verified, 1 counterexample found, 2 usage
//! error, 3 budget refusal.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::classify::ClassificationReport;
use crate::complexity::{difference_profile, palindromic_complexity, subword_complexity};
use crate::error::Error;
use crate::generators::sturmian_corpus;
use crate::lab::{
    census, find_class_members, verify_claim, CensusTable, Claim, Parallelism, Predicate,
    RunOptions, VerificationReport, DEFAULT_BUDGET, SCHEMA_VERSION,
};
use crate::word::{palindromic_factors, Alphabet, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "richwords",
    version,
    about = "Palindromic and subword complexity of finite words"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format (default: json, except text for `enumerate`/`corpus` and csv for `census`).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Worker threads (default: one per core).
    #[arg(long, value_name = "K", conflicts_with = "sequential")]
    pub parallel: Option<usize>,
    /// Single-threaded evaluation.
    #[arg(long)]
    pub sequential: bool,
    /// Refuse runs visiting more than this many words.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

impl RunArgs {
    fn options(&self) -> RunOptions {
        let parallelism = match (self.sequential, self.parallel) {
            (true, _) => Parallelism::Sequential,
            (false, Some(k)) => Parallelism::Threads(k.max(1)),
            (false, None) => Parallelism::Available,
        };
        RunOptions {
            parallelism,
            budget: self.budget,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Profiles, indices and class verdicts of one word (alphabet inferred).
    Analyze {
        /// The word; pass "" for the empty word.
        word: String,
    },
    /// Exhaustively check a claim over all words up to a length.
    Verify {
        /// PROP1, PROP2, THM_FGC, THM_MAIN, PAL_BOUND, PERIOD_INEQ, BINARY_TRAP or PROFILE_EQUIV.
        claim: String,
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        max_len: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// List all words of one length satisfying a predicate such as `rich&!trapezoidal`.
    Enumerate {
        predicate: String,
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        len: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Per-length class counts.
    Census {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        max_len: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Factors of lower Christoffel words.
    Corpus {
        #[arg(long)]
        max_denominator: u32,
        #[arg(long)]
        max_factor_len: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(err: &Error) -> Self {
        let code = match err {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrapezoidRuns {
    pub r: usize,
    pub s: usize,
}

/// Everything `analyze` reports about one word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub schema_version: u32,
    pub word: Word,
    pub alphabet: Option<Alphabet>,
    pub length: usize,
    #[serde(rename = "C")]
    pub subword_complexity: Vec<usize>,
    #[serde(rename = "P")]
    pub palindromic_complexity: Vec<usize>,
    /// `None` for ε.
    #[serde(rename = "D")]
    pub differences: Option<Vec<i64>>,
    pub trapezoid_profile: Option<TrapezoidRuns>,
    #[serde(flatten)]
    pub classification: ClassificationReport,
    pub palindromic_factors: Vec<Word>,
}

impl Analysis {
    pub fn of(w: &Word) -> Self {
        let d = difference_profile(w).ok();
        let mut pals: Vec<Word> = palindromic_factors(w).into_iter().collect();
        pals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Self {
            schema_version: SCHEMA_VERSION,
            word: w.clone(),
            alphabet: Alphabet::of_word(w),
            length: w.len(),
            subword_complexity: subword_complexity(w).values,
            palindromic_complexity: palindromic_complexity(w).values,
            trapezoid_profile: d
                .as_ref()
                .and_then(|d| d.trapezoid)
                .map(|(r, s)| TrapezoidRuns { r, s }),
            differences: d.map(|d| d.values),
            classification: ClassificationReport::of(w),
            palindromic_factors: pals,
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_string(rows: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    rows(&mut wtr).expect("in-memory csv");
    String::from_utf8(wtr.into_inner().expect("in-memory csv")).expect("ascii csv")
}

fn analysis_fields(a: &Analysis) -> Vec<(&'static str, String)> {
    let c = &a.classification;
    vec![
        ("word", a.word.to_string()),
        ("length", a.length.to_string()),
        ("C", join(&a.subword_complexity)),
        ("P", join(&a.palindromic_complexity)),
        (
            "D",
            a.differences
                .as_deref()
                .map_or_else(|| "-".to_string(), join),
        ),
        (
            "trapezoid_profile",
            opt(a.trapezoid_profile.map(|t| format!("r={} s={}", t.r, t.s))),
        ),
        ("R", c.indices.r_index.to_string()),
        ("K", c.indices.k_index.to_string()),
        ("pi", opt(c.indices.min_period)),
        ("is_palindrome", c.is_palindrome.to_string()),
        ("is_rich", c.is_rich.to_string()),
        ("is_trapezoidal", c.is_trapezoidal.to_string()),
        ("is_balanced", opt(c.is_balanced)),
        ("is_finite_sturmian", c.is_finite_sturmian.to_string()),
        (
            "is_sturmian_palindrome",
            c.is_sturmian_palindrome.to_string(),
        ),
        ("condition_B", c.condition_b.to_string()),
        ("condition_B_prime", c.condition_b_prime.to_string()),
        ("palindrome_count", c.palindrome_count.to_string()),
        ("unbalance_witness", opt(c.unbalance_witness.as_ref())),
        (
            "palindromic_factors",
            a.palindromic_factors
                .iter()
                .map(|w| format!("\"{w}\""))
                .collect::<Vec<_>>()
                .join(" "),
        ),
    ]
}

fn render_analysis(a: &Analysis, format: Format) -> String {
    match format {
        Format::Json => to_json(a),
        Format::Csv => csv_string(|wtr| {
            let fields = analysis_fields(a);
            wtr.write_record(fields.iter().map(|(k, _)| *k))?;
            wtr.write_record(fields.iter().map(|(_, v)| v))
        }),
        Format::Text => analysis_fields(a)
            .iter()
            .fold(String::new(), |mut out, (k, v)| {
                let _ = writeln!(out, "{k:<22} {v}");
                out
            }),
    }
}

fn render_report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Csv => csv_string(|wtr| {
            wtr.write_record(["word", "diagnostic"])?;
            for c in &r.counterexamples {
                wtr.write_record([c.word.as_str(), &c.diagnostic])?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut out = format!(
                "{} over {{{}}} up to length {}: {} ({} words, {} counterexamples, {:.1?})\n",
                r.claim,
                r.alphabet,
                r.max_len,
                if r.verified { "verified" } else { "FAILED" },
                r.words_checked,
                r.counterexamples.len(),
                r.elapsed,
            );
            for c in &r.counterexamples {
                let _ = writeln!(out, "  {:?}: {}", c.word.as_str(), c.diagnostic);
            }
            out
        }
    }
}

#[derive(Serialize)]
struct WordList<'a> {
    schema_version: u32,
    #[serde(flatten)]
    query: serde_json::Value,
    count: usize,
    words: &'a [Word],
}

fn render_words(words: &[Word], query: serde_json::Value, format: Format) -> String {
    match format {
        Format::Json => to_json(&WordList {
            schema_version: SCHEMA_VERSION,
            query,
            count: words.len(),
            words,
        }),
        Format::Csv => csv_string(|wtr| {
            wtr.write_record(["word"])?;
            words
                .iter()
                .try_for_each(|w| wtr.write_record([w.as_str()]))
        }),
        Format::Text => words.iter().fold(String::new(), |mut out, w| {
            let _ = writeln!(out, "{w}");
            out
        }),
    }
}

fn render_census(t: &CensusTable, format: Format) -> String {
    match format {
        Format::Json => to_json(t),
        Format::Csv => csv_string(|wtr| t.rows.iter().try_for_each(|row| wtr.serialize(row))),
        Format::Text => {
            let mut out = format!(
                "{:>4} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}\n",
                "n", "total", "pal", "rich", "trap", "balanced", "st_pal", "B", "B'"
            );
            for r in &t.rows {
                let _ = writeln!(
                    out,
                    "{:>4} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}",
                    r.length,
                    r.total,
                    r.palindrome,
                    r.rich,
                    r.trapezoidal,
                    r.balanced,
                    r.sturmian_palindrome,
                    r.condition_b,
                    r.condition_b_prime
                );
            }
            out
        }
    }
}

fn execute(config: CliConfig) -> Result<Outcome, Error> {
    let format = config.format;
    match config.command {
        Command::Analyze { word } => {
            let w = Word::parse(&word)?;
            Ok(Outcome::ok(render_analysis(
                &Analysis::of(&w),
                format.unwrap_or(Format::Json),
            )))
        }
        Command::Verify {
            claim,
            alphabet,
            max_len,
            run,
        } => {
            let claim: Claim = claim.parse()?;
            let alphabet = Alphabet::new(&alphabet)?;
            let report = verify_claim(claim, &alphabet, max_len, &run.options())?;
            let mut out = Outcome::ok(render_report(&report, format.unwrap_or(Format::Json)));
            if !report.verified {
                out.code = EXIT_COUNTEREXAMPLE;
            }
            Ok(out)
        }
        Command::Enumerate {
            predicate,
            alphabet,
            len,
            run,
        } => {
            let predicate: Predicate = predicate.parse()?;
            let alphabet = Alphabet::new(&alphabet)?;
            let words = find_class_members(&predicate, &alphabet, len, &run.options())?;
            let query = serde_json::json!({
                "predicate": predicate.to_string(),
                "alphabet": alphabet.to_string(),
                "length": len,
            });
            Ok(Outcome::ok(render_words(
                &words,
                query,
                format.unwrap_or(Format::Text),
            )))
        }
        Command::Census {
            alphabet,
            max_len,
            run,
        } => {
            let alphabet = Alphabet::new(&alphabet)?;
            let table = census(&alphabet, max_len, &run.options())?;
            Ok(Outcome::ok(render_census(
                &table,
                format.unwrap_or(Format::Csv),
            )))
        }
        Command::Corpus {
            max_denominator,
            max_factor_len,
        } => {
            let words: Vec<Word> = sturmian_corpus(max_denominator, max_factor_len)
                .into_iter()
                .collect();
            let query = serde_json::json!({
                "max_denominator": max_denominator,
                "max_factor_len": max_factor_len,
            });
            Ok(Outcome::ok(render_words(
                &words,
                query,
                format.unwrap_or(Format::Text),
            )))
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(config) => execute(config).unwrap_or_else(|e| Outcome::fail(&e)),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            }
        }
    }
}

/// Entry point for the binary.
pub fn main() -> ! {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code)
}
