//! The `simcon` command line.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use simcon_core::bounds::{all_bounds, BoundFamily, CountTable, Verdict};
use simcon_core::congruence::{
    distinguishing_subword, is_minimal, minimal_representative, subwords_up_to, OracleBudget, DEFAULT_MEMBER_BUDGET,
};
use simcon_core::{
    parse_word, rich_factorization, Alphabet, CongruenceError, EnumerationConfig, EnumerationError, KeyMode, Word,
};

use crate::engine::{run_count, RunError};
use crate::json::{bounds_report, factorization, scale_str, EnumerationJson};
use crate::table::{absorb, recompute, write_results_csv, write_table_csv, CellStatus};
use crate::verify::{run_all, run_suite, SuiteConfig};

/// Default per-cell budget of `table` when `--budget-seconds` is absent.
const TABLE_CELL_SECONDS: f64 = 10.0;

#[derive(Debug, Parser)]
#[command(
    name = "simcon",
    version,
    about = "Simon's congruence: equivalence, enumeration of classes, bounds"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for enumeration.
    #[arg(long, global = true, env = "SIMCON_THREADS", default_value_t = 1)]
    threads: usize,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Wall-clock budget in seconds.
    #[arg(long, global = true)]
    budget_seconds: Option<f64>,
    /// Memory budget for the enumeration key store, in MiB.
    #[arg(long, global = true)]
    memory_mb: Option<u64>,
    /// Include wall-clock durations in JSON output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Fingerprint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    All,
    Naive,
    Kppps,
    Main,
    Prop3,
    Prop6,
    Eq5,
}

#[derive(Debug, Args)]
struct WordAlphabet {
    /// Alphabet size; defaults to the smallest alphabet covering the input.
    #[arg(short)]
    k: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the ~n classes over k letters.
    Count {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// Longest representative length before giving up (default 4nk).
        #[arg(long)]
        max_length: Option<usize>,
        /// Write the minimal representatives to FILE, one per line, lengths separated by blank lines.
        #[arg(long, value_name = "FILE")]
        emit_reps: Option<String>,
        /// In fingerprint mode, keep exact sets too and fail on a digest collision.
        #[arg(long)]
        verify_fingerprints: bool,
    },
    /// Decide x ~n y.
    Equiv {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        alphabet: WordAlphabet,
        x: String,
        y: String,
    },
    /// List the subwords of length at most n in shortlex order.
    Subwords {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        alphabet: WordAlphabet,
        word: String,
    },
    /// Shortlex-least word in the ~n class of a word (exhaustive search).
    Minimal {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        alphabet: WordAlphabet,
        word: String,
    },
    /// Richness of a word.
    Richness {
        #[command(flatten)]
        alphabet: WordAlphabet,
        word: String,
    },
    /// Rich factorization of a word.
    Factorize {
        #[command(flatten)]
        alphabet: WordAlphabet,
        word: String,
    },
    /// Evaluate the bounds on C_k(n) and check them against known values.
    Bounds {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        which: Which,
        /// Count C_k(n) first when no exact value is known.
        #[arg(long)]
        compute: bool,
    },
    /// Recompute the table of known values (CSV with a match column).
    Table {
        /// Print the embedded table without recomputing.
        #[arg(long)]
        embedded: bool,
        /// Only these cells, as K:N.
        #[arg(long = "cell", value_name = "K:N", value_parser = parse_cell)]
        cells: Vec<(usize, usize)>,
    },
    /// Run the randomized property suites.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        /// Run only this suite.
        #[arg(long)]
        suite: Option<String>,
    },
}

fn parse_cell(s: &str) -> Result<(usize, usize), String> {
    let (k, n) = s.split_once(':').ok_or("expected K:N")?;
    Ok((
        k.parse().map_err(|e| format!("{e}"))?,
        n.parse().map_err(|e| format!("{e}"))?,
    ))
}

/// Exit statuses.
#[derive(Debug)]
enum Failure {
    /// Bad input or flag: 1.
    Domain(String),
    /// A budget ran out: 2.
    Budget(String),
    /// An internal check failed: 3.
    Invariant(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Budget(_) => 2,
            Failure::Invariant(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Budget(m) | Failure::Invariant(m) => m,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(format!("i/o error: {e}"))
    }
}

impl From<CongruenceError> for Failure {
    fn from(e: CongruenceError) -> Self {
        Failure::Budget(e.to_string())
    }
}

impl From<RunError> for Failure {
    fn from(e: RunError) -> Self {
        match e {
            RunError::Engine(EnumerationError::InvalidConfig(m)) => Failure::Domain(m.to_string()),
            RunError::Engine(EnumerationError::Congruence(e)) => e.into(),
            RunError::Engine(e @ EnumerationError::FingerprintCollision { .. }) => Failure::Invariant(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "simcon: {}", f.message());
            f.code()
        }
    }
}

impl Cli {
    fn validate(&self) -> Result<(), Failure> {
        if self.threads == 0 {
            return Err(Failure::Domain("--threads must be at least 1".into()));
        }
        if let Some(s) = self.budget_seconds {
            if !(s.is_finite() && s >= 0.0) {
                return Err(Failure::Domain("--budget-seconds must be a non-negative number".into()));
            }
        }
        Ok(())
    }

    fn config(&self, k: usize, n: usize) -> EnumerationConfig {
        let mut c = EnumerationConfig::new(k, n);
        c.worker_count = self.threads;
        c.memory_budget = self.memory_mb.map(|m| m.saturating_mul(1 << 20));
        c.time_budget = self.budget_seconds.map(Duration::from_secs_f64);
        c
    }

    fn emit(&self, out: &mut dyn Write, value: &Value) -> Result<(), Failure> {
        serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
        writeln!(out)?;
        Ok(())
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    cli.validate()?;
    match &cli.command {
        Command::Count {
            k,
            n,
            mode,
            max_length,
            emit_reps,
            verify_fingerprints,
        } => {
            let mut config = cli.config(*k, *n);
            config.mode = match mode {
                Mode::Exact => KeyMode::Exact,
                Mode::Fingerprint => KeyMode::Fingerprint,
            };
            config.max_length = *max_length;
            config.verify_fingerprints = *verify_fingerprints;
            cmd_count(cli, config, emit_reps.as_deref(), out)
        }
        Command::Equiv { n, alphabet, x, y } => {
            let (a, words) = words(alphabet, &[x, y])?;
            let (x, y) = (&words[0], &words[1]);
            let wit = distinguishing_subword(x.letters(), y.letters(), *n, a)?;
            if cli.json {
                cli.emit(
                    out,
                    &json!({
                        "n": n,
                        "k": a.size(),
                        "x": x.to_string(),
                        "y": y.to_string(),
                        "equivalent": wit.is_none(),
                        "witness": wit.as_ref().map(|w| w.subword.to_string()),
                        "witness_in": wit.as_ref().map(|w| if w.in_first { "x" } else { "y" }),
                    }),
                )
            } else {
                match wit {
                    None => writeln!(out, "equivalent")?,
                    Some(w) => writeln!(out, "distinguished by: {}", show(&w.subword))?,
                }
                Ok(())
            }
        }
        Command::Subwords { n, alphabet, word } => {
            let (_, words) = words(alphabet, &[word])?;
            let set = subwords_up_to(words[0].letters(), *n, DEFAULT_MEMBER_BUDGET)?;
            if cli.json {
                let members: Vec<String> = set.members().iter().map(|w| w.to_string()).collect();
                cli.emit(
                    out,
                    &json!({ "n": n, "word": words[0].to_string(), "subwords": members }),
                )
            } else {
                let mut w = BufWriter::new(out);
                for m in set.members() {
                    writeln!(w, "{}", show(m))?;
                }
                w.flush()?;
                Ok(())
            }
        }
        Command::Minimal { n, alphabet, word } => {
            let (a, words) = words(alphabet, &[word])?;
            let x = &words[0];
            let rep = minimal_representative(x, *n, a, OracleBudget::default())?;
            let already = is_minimal(x, *n, a, OracleBudget::default())?;
            if cli.json {
                cli.emit(
                    out,
                    &json!({ "n": n, "k": a.size(), "word": x.to_string(), "minimal": rep.to_string(), "already_minimal": already }),
                )
            } else {
                writeln!(out, "{}", show(&rep))?;
                writeln!(out, "already minimal: {already}")?;
                Ok(())
            }
        }
        Command::Richness { alphabet, word } => {
            let (a, words) = words(alphabet, &[word])?;
            let m = simcon_core::richness(words[0].letters(), a);
            if cli.json {
                cli.emit(
                    out,
                    &json!({ "k": a.size(), "word": words[0].to_string(), "richness": m }),
                )
            } else {
                writeln!(out, "{m}")?;
                Ok(())
            }
        }
        Command::Factorize { alphabet, word } => {
            let (a, words) = words(alphabet, &[word])?;
            let f = rich_factorization(words[0].letters(), a);
            if cli.json {
                cli.emit(out, &factorization(&f))
            } else {
                writeln!(out, "{}", f.render())?;
                Ok(())
            }
        }
        Command::Bounds { k, n, which, compute } => cmd_bounds(cli, *k, *n, *which, *compute, out),
        Command::Table { embedded, cells } => cmd_table(cli, *embedded, cells, out),
        Command::Verify {
            samples,
            max_len,
            suite,
        } => cmd_verify(cli, *samples, *max_len, suite.as_deref(), out),
    }
}

/// Parses `texts` over the alphabet chosen by `-k` or the smallest one covering them.
fn words(alphabet: &WordAlphabet, texts: &[&String]) -> Result<(Alphabet, Vec<Word>), Failure> {
    let k = match alphabet.k {
        Some(k) => k,
        None => texts
            .iter()
            .flat_map(|t| t.chars())
            .filter(|c| c.is_ascii_lowercase())
            .map(|c| c as usize - 'a' as usize + 1)
            .max()
            .unwrap_or(1),
    };
    let a = Alphabet::new(k).map_err(|e| Failure::Domain(e.to_string()))?;
    let words = texts
        .iter()
        .map(|t| {
            let t = if t.as_str() == "ε" { "" } else { t.as_str() };
            parse_word(t, a).map_err(|e| Failure::Domain(e.to_string()))
        })
        .collect::<Result<_, _>>()?;
    Ok((a, words))
}

/// Text form of a word, with `ε` for the empty word.
fn show(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

fn cmd_count(
    cli: &Cli,
    config: EnumerationConfig,
    emit_reps: Option<&str>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let report = match emit_reps {
        None => run_count(config, |_| Ok(()))?,
        Some(path) => {
            let mut dump = BufWriter::new(File::create(path)?);
            let report = run_count(config, |g| {
                if g.word_length() > 0 {
                    writeln!(dump)?;
                }
                for w in g.iter() {
                    writeln!(dump, "{}", show(&Word::from(w)))?;
                }
                Ok(())
            })?;
            dump.flush()?;
            report
        }
    };
    if cli.json {
        let v = serde_json::to_value(EnumerationJson::new(&report, cli.timing)).map_err(io::Error::from)?;
        cli.emit(out, &v)?;
    } else if report.is_exact() {
        writeln!(out, "{}", report.total_classes)?;
    } else {
        writeln!(
            out,
            ">= {} (inexact: {})",
            report.total_classes,
            report.termination.as_str()
        )?;
    }
    if report.is_exact() {
        Ok(())
    } else {
        Err(Failure::Budget(format!(
            "stopped early ({}); {} is only a lower bound",
            report.termination.as_str(),
            report.total_classes
        )))
    }
}

fn cmd_bounds(cli: &Cli, k: usize, n: usize, which: Which, compute: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let mut table = CountTable::paper();
    if compute && table.exact(k, n).is_none() {
        let rows = recompute_cells(cli, &[(k, n)], &mut table)?;
        if rows.iter().any(|r| r.status == CellStatus::Mismatch) {
            return Err(Failure::Invariant(format!(
                "computed C_{k}({n}) disagrees with the table"
            )));
        }
    }
    let family = match which {
        Which::All => BoundFamily::All,
        Which::Naive => BoundFamily::Naive,
        Which::Kppps => BoundFamily::Kppps,
        Which::Main => BoundFamily::Main,
        Which::Prop3 => BoundFamily::Prop3,
        Which::Prop6 => BoundFamily::Prop6,
        Which::Eq5 => BoundFamily::Eq5,
    };
    let reports = all_bounds(k, n, &table, family);
    if cli.json {
        cli.emit(out, &Value::Array(reports.iter().map(bounds_report).collect()))?;
    } else {
        let fmt_bound = |v: &Option<simcon_core::bounds::BoundValue>, strict: bool, lower: bool| match v {
            None => "-".to_string(),
            Some(v) => {
                let op = match (lower, strict) {
                    (true, true) => ">",
                    (true, false) => ">=",
                    (false, true) => "<",
                    (false, false) => "<=",
                };
                let num = match v {
                    simcon_core::bounds::BoundValue::Int(i) => i.to_string(),
                    simcon_core::bounds::BoundValue::Real(x) => format!("{x:.6}"),
                };
                format!("{op} {num}")
            }
        };
        let rows: Vec<[String; 7]> = reports
            .iter()
            .map(|r| {
                [
                    r.bound_id.as_str().to_string(),
                    scale_str(r.scale).to_string(),
                    fmt_bound(&r.lower, r.lower_strict, true),
                    fmt_bound(&r.upper, r.upper_strict, false),
                    r.exact_value.as_ref().map_or("-".to_string(), |v| v.to_string()),
                    r.satisfied.map_or("unchecked", |v| v.as_str()).to_string(),
                    r.margin.map_or("-".to_string(), |m| format!("{m:.6}")),
                ]
            })
            .collect();
        let header = ["bound", "scale", "lower", "upper", "exact", "verdict", "margin"].map(String::from);
        let mut widths = [0usize; 7];
        for row in std::iter::once(&header).chain(&rows) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        for row in std::iter::once(&header).chain(&rows) {
            let line: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(out, "{}", line.join("  ").trim_end())?;
        }
    }
    if reports.iter().any(|r| r.satisfied == Some(Verdict::Violated)) {
        return Err(Failure::Invariant("a bound is violated".into()));
    }
    Ok(())
}

/// Counts the given cells with the CLI's budgets and records exact results in `table`.
fn recompute_cells(
    cli: &Cli,
    cells: &[(usize, usize)],
    table: &mut CountTable,
) -> Result<Vec<crate::table::CellResult>, Failure> {
    let mut reference = CountTable::new();
    for &(k, n) in cells {
        let entry = table.get(k, n).cloned().unwrap_or(simcon_core::bounds::CountEntry {
            value: num_bigint::BigUint::ZERO,
            provenance: simcon_core::bounds::Provenance::Computed,
            exactness: simcon_core::bounds::Exactness::LowerBound,
        });
        reference.insert(k, n, entry);
    }
    let rows = recompute(&reference, &cli.config(0, 0), |_, _| true)?;
    absorb(table, &rows);
    Ok(rows)
}

fn cmd_table(cli: &Cli, embedded: bool, cells: &[(usize, usize)], out: &mut dyn Write) -> Result<(), Failure> {
    let paper = CountTable::paper();
    if embedded {
        if cli.json {
            let rows: Vec<Value> = paper
                .entries()
                .map(|((k, n), e)| {
                    json!({
                        "k": k,
                        "n": n,
                        "value": e.value.to_string(),
                        "provenance": e.provenance.as_str(),
                        "exactness": e.exactness.as_str(),
                    })
                })
                .collect();
            return cli.emit(out, &Value::Array(rows));
        }
        write_table_csv(&paper, out).map_err(|e| Failure::Domain(e.to_string()))?;
        return Ok(());
    }
    let mut template = cli.config(0, 0);
    if template.time_budget.is_none() {
        template.time_budget = Some(Duration::from_secs_f64(TABLE_CELL_SECONDS));
    }
    let rows = recompute(&paper, &template, |k, n| cells.is_empty() || cells.contains(&(k, n)))?;
    if cli.json {
        let v: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "k": r.k,
                    "n": r.n,
                    "value": r.report.total_classes.to_string(),
                    "exact": r.report.is_exact(),
                    "reference": r.reference.value.to_string(),
                    "reference_exactness": r.reference.exactness.as_str(),
                    "match": r.status.as_str(),
                    "report": EnumerationJson::new(&r.report, cli.timing),
                })
            })
            .collect();
        cli.emit(out, &Value::Array(v))?;
    } else {
        write_results_csv(&rows, &mut *out).map_err(|e| Failure::Domain(e.to_string()))?;
    }
    if rows.iter().any(|r| r.status == CellStatus::Mismatch) {
        Err(Failure::Invariant("recomputed value disagrees with the table".into()))
    } else if rows.iter().any(|r| r.status == CellStatus::Inexact) {
        Err(Failure::Budget("some cells ran out of budget".into()))
    } else {
        Ok(())
    }
}

fn cmd_verify(
    cli: &Cli,
    samples: usize,
    max_len: usize,
    suite: Option<&str>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let cfg = SuiteConfig {
        samples,
        seed: cli.seed,
        max_len,
    };
    let results = match suite {
        None => run_all(&cfg),
        Some(name) => vec![run_suite(name, &cfg).ok_or_else(|| Failure::Domain(format!("unknown suite {name}")))?],
    };
    if cli.json {
        cli.emit(out, &serde_json::to_value(&results).map_err(io::Error::from)?)?;
    } else {
        for r in &results {
            let verdict = if r.passed() { "pass" } else { "FAIL" };
            writeln!(
                out,
                "{verdict} {}: {} samples, {} nontrivial, {} failures",
                r.name, r.samples, r.nontrivial, r.failures
            )?;
            for c in &r.counterexamples {
                writeln!(out, "  counterexample: {c}")?;
            }
        }
    }
    if results.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Invariant("property suite failed".into()))
    }
}
