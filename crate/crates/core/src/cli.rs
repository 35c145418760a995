//! The `sumsetlab` command line.
//!
//! Exit codes: 0 when everything checked out, 1 when a bound, inverse
//! statement or witness family fails on an input, 2 on bad input.

use std::collections::HashSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::bounds::{bound_catalogue, check_bounds, inverse_verdict, Verdict};
use crate::error::{Error, Result};
use crate::intset::IntegerSet;
use crate::report::{
    render, CatalogueReport, CatalogueRow, ComputeReport, Format, Report, VerifyReport,
};
use crate::search::{minimize, minimize_sharded, Regime, SearchSpace, SearchStatus};
use crate::sumset::{compute_dp, compute_oracle, SumsetVariant};
use crate::witness::{generate, LemmaId};

/// Worker-count override for the rayon pool.
pub const THREADS_ENV: &str = "SUMSETLAB_THREADS";

#[derive(Debug, Parser)]
#[command(name = "sumsetlab", version, about = "Restricted signed sumsets of integer sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// json | csv | text
    #[arg(long, global = true, default_value = "text", value_parser = parse_format)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one sumset.
    Compute {
        #[arg(long, value_parser = parse_set_literal)]
        set: IntegerSet,
        /// plain | restricted | signed | rss | subsums
        #[arg(long, default_value = "rss", value_parser = parse_variant)]
        variant: SumsetVariant,
        /// Fold; ignored for subsums.
        #[arg(long, default_value_t = 0)]
        h: u32,
        /// Use direct enumeration instead of the DP.
        #[arg(long)]
        oracle: bool,
        /// Print the value list in text output.
        #[arg(long)]
        values: bool,
    },
    /// Check every applicable catalogue bound and the inverse statement.
    Verify {
        #[arg(long, value_parser = parse_set_literal)]
        set: IntegerSet,
        #[arg(long)]
        h: u32,
        /// rss | restricted
        #[arg(long, default_value = "rss", value_parser = parse_variant)]
        variant: SumsetVariant,
    },
    /// Exhaustively minimize |h^_±A| over a bounded space.
    Search {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        h: u32,
        /// Largest element N.
        #[arg(long)]
        max: i64,
        /// positive | zero
        #[arg(long, default_value = "positive", value_parser = parse_regime)]
        regime: Regime,
        /// Only gcd-1 sets (positive regime).
        #[arg(long)]
        gcd_reduce: bool,
        /// Allow h outside [3, k - 1].
        #[arg(long)]
        allow_outside: bool,
        #[arg(long)]
        shards: Option<usize>,
    },
    /// Build and check a witness family.
    Witness {
        #[arg(long, value_parser = parse_lemma)]
        lemma: LemmaId,
        #[arg(long, value_parser = parse_set_literal)]
        set: IntegerSet,
        #[arg(long)]
        h: Option<u32>,
        /// Index of the opposite-parity element (parity-split).
        #[arg(long)]
        r: Option<usize>,
    },
    /// Dump the bound catalogue, optionally evaluated at (k, h).
    Bounds {
        #[arg(long, requires = "h")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        h: Option<u32>,
    },
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_variant(s: &str) -> std::result::Result<SumsetVariant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_regime(s: &str) -> std::result::Result<Regime, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_lemma(s: &str) -> std::result::Result<LemmaId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_set_literal(s: &str) -> std::result::Result<IntegerSet, String> {
    set_literal(s).map_err(|e| e.to_string())
}

/// Parses `1, 3,5`. Duplicates are an error rather than being merged.
pub fn set_literal(s: &str) -> Result<IntegerSet> {
    let mut seen = HashSet::new();
    let mut values = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        let x: i64 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("`{tok}` is not an integer")))?;
        if !seen.insert(x) {
            return Err(Error::Parse(format!("duplicate element {x}")));
        }
        values.push(x);
    }
    IntegerSet::canonicalize(&values)
}

/// What a command produced plus whether it found a falsification.
struct Outcome {
    rendered: String,
    falsified: bool,
}

fn emit<R: Report>(r: &R, format: Format, falsified: bool) -> Result<Outcome> {
    Ok(Outcome {
        rendered: render(r, format)?,
        falsified,
    })
}

fn execute(command: Command, format: Format) -> Result<Outcome> {
    match command {
        Command::Compute {
            set,
            variant,
            h,
            oracle,
            values,
        } => {
            let result = if oracle {
                compute_oracle(&set, variant, h)?
            } else {
                compute_dp(&set, variant, h)?
            };
            let report = ComputeReport {
                result,
                variant: Some(variant),
                h,
                show_values: values,
            };
            emit(&report, format, false)
        }
        Command::Verify { set, h, variant } => {
            let result = compute_dp(&set, variant, h)?;
            let bounds = check_bounds(&set, h, variant, &result)?;
            let inverse = if variant == SumsetVariant::RestrictedSigned {
                match inverse_verdict(&set, h) {
                    Ok(v) => Some(v),
                    Err(Error::RegimeUnsupported { .. }) => None,
                    Err(e) => return Err(e),
                }
            } else {
                None
            };
            let falsified = bounds.iter().any(|b| !b.met)
                || inverse
                    .as_ref()
                    .is_some_and(|v| v.verdict == Verdict::EqualityButUnexpectedStructure);
            let report = VerifyReport {
                cardinality: result.cardinality,
                set,
                h,
                variant,
                bounds,
                inverse,
                falsified,
            };
            emit(&report, format, falsified)
        }
        Command::Search {
            k,
            h,
            max,
            regime,
            gcd_reduce,
            allow_outside,
            shards,
        } => {
            let space = SearchSpace::new(k, h, max, regime)
                .gcd_reduced(gcd_reduce)
                .allowing_outside(allow_outside);
            let report = match shards {
                Some(n) => minimize_sharded(&space, n)?,
                None => minimize(&space)?,
            };
            let counts = report.falsified && report.status != SearchStatus::OutsideStatedHypotheses;
            emit(&report, format, counts)
        }
        Command::Witness { lemma, set, h, r } => {
            let report = generate(lemma, &set, h, r)?.verify()?;
            let failed = !report.passed();
            emit(&report, format, failed)
        }
        Command::Bounds { k, h } => {
            let rows = bound_catalogue()
                .iter()
                .map(|e| CatalogueRow {
                    doc: e.to_doc(),
                    value: k.zip(h).map(|(k, h)| e.evaluate(k, h)),
                })
                .collect();
            emit(&CatalogueReport(rows), format, false)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Parse(format!("{THREADS_ENV} must be a positive integer, got `{raw}`")))?;
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = configure_threads().and_then(|_| execute(cli.command, cli.output.format));
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output.out {
        Some(path) => std::fs::write(path, &outcome.rendered),
        None => std::io::stdout().write_all(outcome.rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(u8::from(outcome.falsified))
}
