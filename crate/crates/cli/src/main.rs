//! `distchrom`: classify distance sets, build and check periodic patterns,
//! and run the exact solver from the command line.
//!
//! Exit codes: 0 success, 1 well-formed negative outcome (invalid pattern,
//! search not converged), 2 input error, 3 unsupported family, 4 internal
//! consistency failure.

mod range;
mod record;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use distchrom::families::{classify, sweep, FamilyClassification, FamilyTag, SweepError};
use distchrom::patterns::{family_pattern, verify, PatternError, PatternWord};
use distchrom::solver::{
    chi2_bounds, initial_bounds, lower_bound_search, upper_bound_search, Inconclusive,
    LowerEvidence, LowerOutcome, UpperEvidence, UpperOutcome,
};
use distchrom::{square_set, DistanceSet, SearchConfig};

use record::{millis, write_csv, write_json, OutputRecord};

#[derive(Parser)]
#[command(
    name = "distchrom",
    version,
    about = "2-distance coloring of integer distance graphs"
)]
struct Cli {
    /// Leave timing fields empty, so output is byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Work on D as given instead of dividing out gcd(D).
    #[arg(long, global = true)]
    no_normalize: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the square set D² of D.
    Square { d: DistanceSet },
    /// Family, closed-form value or interval, and its source.
    Classify {
        d: DistanceSet,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print the family's explicit periodic coloring, after verifying it.
    Pattern { d: DistanceSet },
    /// Check a pattern word against D² and list every conflict.
    Verify { pattern: String, d: DistanceSet },
    /// Certified bounds on the 2-distance chromatic number.
    Search {
        d: DistanceSet,
        /// Only decide whether this many colors suffice.
        #[arg(long)]
        colors: Option<u32>,
        /// Raise the lower bound and lower the upper bound until they meet.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// One record per parameter point of a family.
    Table {
        #[arg(long)]
        family: FamilyTag,
        /// For example `m=2..3,a=4..12` (bounds inclusive).
        #[arg(long)]
        range: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Also run the exact solver on every row.
        #[arg(long)]
        confirm: bool,
        #[command(flatten)]
        limits: Limits,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Clone)]
struct Limits {
    /// Largest period tried by the periodic search [default: 4·max(D²)+4].
    #[arg(long)]
    max_period: Option<u64>,
    /// Length of the refutation window [default: 6·max(D²)].
    #[arg(long)]
    max_window: Option<usize>,
    /// Node budget per backtracking run [default: 10^8].
    #[arg(long)]
    budget: Option<u64>,
    /// Do not seed the upper bound with the family's own construction.
    #[arg(long)]
    no_family_patterns: bool,
}

impl Limits {
    fn config(&self, d: &DistanceSet) -> Result<SearchConfig, Failure> {
        let mut cfg = SearchConfig::for_set(d);
        if let Some(p) = self.max_period {
            cfg.max_period = p;
        }
        if let Some(n) = self.max_window {
            if n == 0 {
                return Err(Failure::input("--max-window must be positive"));
            }
            cfg.max_window = n;
        }
        if let Some(b) = self.budget {
            cfg.node_budget = b;
        }
        cfg.family_patterns = !self.no_family_patterns;
        Ok(cfg)
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Failure {
        Failure::new(2, message)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::new(4, format!("write failed: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Failure {
        Failure::new(4, format!("write failed: {e}"))
    }
}

struct Ctx {
    timing: bool,
    normalize: bool,
}

impl Ctx {
    fn base(&self, d: &DistanceSet) -> (DistanceSet, u64) {
        if self.normalize {
            d.normalize()
        } else {
            (d.clone(), 1)
        }
    }

    fn timing(&self, took: Duration) -> Option<f64> {
        self.timing.then(|| millis(took))
    }

    fn record(
        &self,
        d: &DistanceSet,
        base: &DistanceSet,
        g: u64,
        c: &FamilyClassification,
        took: Duration,
    ) -> OutputRecord {
        OutputRecord {
            d: d.to_string(),
            normalized: base.to_string(),
            divisor: g,
            family: c.family.tag().to_string(),
            delta: d.max_degree(),
            square: square_set(d).to_string(),
            result: c.result.to_string(),
            evidence: c.source.to_string(),
            timing_ms: self.timing(took),
            search: None,
            search_agrees: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        timing: !cli.no_timing,
        normalize: !cli.no_normalize,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(&ctx, cli.command, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(ctx: &Ctx, command: Command, out: &mut impl Write) -> Result<u8, Failure> {
    match command {
        Command::Square { d } => {
            writeln!(out, "{}", square_set(&d))?;
            Ok(0)
        }
        Command::Classify { d, format } => {
            let start = Instant::now();
            let (base, g) = ctx.base(&d);
            let c = classify(&base);
            let rec = ctx.record(&d, &base, g, &c, start.elapsed());
            match format {
                Format::Json => write_json(out, &rec)?,
                Format::Csv => write_csv(out, &[rec])?,
            }
            Ok(0)
        }
        Command::Pattern { d } => cmd_pattern(ctx, &d, out),
        Command::Verify { pattern, d } => cmd_verify(&pattern, &d, out),
        Command::Search {
            d,
            colors,
            exact,
            limits,
        } => cmd_search(ctx, &d, colors, exact, &limits, out),
        Command::Table {
            family,
            range,
            format,
            confirm,
            limits,
        } => cmd_table(ctx, family, &range, format, confirm, &limits, out),
    }
}

fn cmd_pattern(ctx: &Ctx, d: &DistanceSet, out: &mut impl Write) -> Result<u8, Failure> {
    let (base, g) = ctx.base(d);
    let w = match family_pattern(&base) {
        Ok(w) => w.stretched(g as usize),
        Err(PatternError::Unsupported(_)) => {
            return Err(Failure::new(
                3,
                format!("{{{d}}} is not in a family with a known construction"),
            ))
        }
        Err(e) => {
            return Err(Failure::new(
                4,
                format!("construction failed for {{{d}}}: {e}"),
            ))
        }
    };
    let report = verify(&w, &square_set(d));
    if !report.valid {
        return Err(Failure::new(
            4,
            format!("constructed pattern {w} fails verification for {{{d}}}"),
        ));
    }
    writeln!(out, "{w}")?;
    Ok(0)
}

fn cmd_verify(text: &str, d: &DistanceSet, out: &mut impl Write) -> Result<u8, Failure> {
    let w: PatternWord = text
        .parse()
        .map_err(|e| Failure::input(format!("bad pattern {text:?}: {e}")))?;
    let r = verify(&w, &square_set(d));
    writeln!(
        out,
        "{} period={} colors={} violations={}",
        if r.valid { "valid" } else { "invalid" },
        r.period,
        r.color_count,
        r.violations.len() + r.divisible.len()
    )?;
    for &x in &r.divisible {
        writeln!(out, "distance {x} is a multiple of the period {}", r.period)?;
    }
    for v in &r.violations {
        writeln!(
            out,
            "positions {} and {} share color {} at distance {}",
            v.index,
            v.other,
            w.colors()[v.index],
            v.distance
        )?;
    }
    Ok(if r.valid { 0 } else { 1 })
}

#[derive(Serialize)]
struct SearchRecord {
    d: String,
    normalized: String,
    divisor: u64,
    lo: u64,
    hi: u64,
    exact: bool,
    lo_evidence: LowerEvidence,
    hi_evidence: UpperEvidence,
    inconclusive: Vec<Inconclusive>,
    timing_ms: Option<f64>,
}

#[derive(Serialize)]
struct ColorsRecord {
    d: String,
    normalized: String,
    divisor: u64,
    colors: u32,
    /// `true`: a pattern exists, `false`: a window refutes, `null`: unknown.
    colorable: Option<bool>,
    pattern: Option<PatternWord>,
    /// `found`, `exhausted` (every period refuted) or `limits`.
    upper: &'static str,
    /// `proof`, `colorable` or `budget_exceeded`.
    lower: &'static str,
    window_length: usize,
    timing_ms: Option<f64>,
}

fn cmd_search(
    ctx: &Ctx,
    d: &DistanceSet,
    colors: Option<u32>,
    exact: bool,
    limits: &Limits,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let start = Instant::now();
    let (base, g) = ctx.base(d);
    let cfg = limits.config(&base)?;
    if let Some(k) = colors {
        if k == 0 {
            return Err(Failure::input("--colors must be positive"));
        }
        let (pattern, upper) = match upper_bound_search(&base, k, &cfg) {
            UpperOutcome::Found { pattern, .. } => (Some(pattern), "found"),
            UpperOutcome::NotFoundWithinLimits {
                exhausted: true, ..
            } => (None, "exhausted"),
            UpperOutcome::NotFoundWithinLimits { .. } => (None, "limits"),
        };
        let (lower, window_length) = match lower_bound_search(&base, k, &cfg) {
            LowerOutcome::Proof(p) => ("proof", p.length),
            LowerOutcome::Colorable(c) => ("colorable", c.len()),
            LowerOutcome::BudgetExceeded { length, .. } => ("budget_exceeded", length),
        };
        let colorable = match (&pattern, lower) {
            (Some(_), "proof") => {
                return Err(Failure::new(4, "pattern found for a refuted color count"))
            }
            (Some(_), _) => Some(true),
            (None, "proof") => Some(false),
            _ => None,
        };
        let rec = ColorsRecord {
            d: d.to_string(),
            normalized: base.to_string(),
            divisor: g,
            colors: k,
            colorable,
            pattern,
            upper,
            lower,
            window_length,
            timing_ms: ctx.timing(start.elapsed()),
        };
        write_json(out, &rec)?;
        return Ok(if colorable.is_some() { 0 } else { 1 });
    }

    let b = if exact {
        chi2_bounds(&base, &cfg)
    } else {
        initial_bounds(&base, &cfg)
    };
    if !b.check() {
        return Err(Failure::new(
            4,
            format!("solver evidence for {{{base}}} does not re-verify"),
        ));
    }
    let rec = SearchRecord {
        d: d.to_string(),
        normalized: base.to_string(),
        divisor: g,
        lo: b.lo,
        hi: b.hi,
        exact: b.is_exact(),
        lo_evidence: b.lo_evidence.clone(),
        hi_evidence: b.hi_evidence.clone(),
        inconclusive: b.inconclusive.clone(),
        timing_ms: ctx.timing(start.elapsed()),
    };
    write_json(out, &rec)?;
    Ok(if exact && !b.is_exact() { 1 } else { 0 })
}

fn cmd_table(
    ctx: &Ctx,
    family: FamilyTag,
    range: &str,
    format: Format,
    confirm: bool,
    limits: &Limits,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let ranges =
        range::parse_ranges(range).map_err(|e| Failure::input(format!("bad --range: {e}")))?;
    let rows = sweep(family, &ranges).map_err(|e| match e {
        SweepError::NotSweepable(_) => Failure::new(3, e.to_string()),
        _ => Failure::input(e.to_string()),
    })?;
    let mut records = Vec::with_capacity(rows.len());
    let mut disagreements = Vec::new();
    for c in &rows {
        let start = Instant::now();
        // sweep sets all contain 1, so they are already normalized
        let mut rec = ctx.record(&c.set, &c.set, 1, c, Duration::ZERO);
        if confirm {
            let b = chi2_bounds(&c.set, &limits.config(&c.set)?);
            let agrees = b.check() && c.result.contains_interval(b.lo, b.hi);
            if !agrees {
                disagreements.push(c.set.to_string());
            }
            rec.search = Some(if b.is_exact() {
                b.lo.to_string()
            } else {
                format!("[{},{}]", b.lo, b.hi)
            });
            rec.search_agrees = Some(agrees);
        }
        rec.timing_ms = ctx.timing(start.elapsed());
        records.push(rec);
    }
    match format {
        Format::Csv => write_csv(out, &records)?,
        Format::Json => {
            for r in &records {
                write_json(out, r)?;
            }
        }
    }
    if !disagreements.is_empty() {
        return Err(Failure::new(
            4,
            format!(
                "solver disagrees with the closed form for {}",
                disagreements.join("; ")
            ),
        ));
    }
    Ok(0)
}
