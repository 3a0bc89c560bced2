//! Command-line front end. Exit codes: 0 success, 1 some check reported a
//! discrepancy, 2 bad input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::corpus::{corpus, corpus_entry, enumerate_monoids_with_zero, MAX_ENUMERATION_ORDER};
use crate::error::{Error, Result};
use crate::ideals::DEFAULT_CAP;
use crate::kernel::Semigroup;
use crate::report::{
    analyze, render_analysis, render_sweep, render_verification, FoundDiscrepancy, OrderTally,
    SemigroupInfo, SweepReport, Target, VerdictEntry, VerificationReport, SCHEMA_VERSION,
};
use crate::verify::{registry, run_check_with, run_suite_with, Context, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "waist", version, about = "Ideal theory of finite monoids with zero")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a Cayley table file describes a monoid with zero.
    Validate { path: PathBuf },
    /// Radicals, comparability and prime segments of a semigroup.
    Analyze {
        /// Corpus name or Cayley table file.
        target: String,
        #[arg(long)]
        json: bool,
        /// Maximum number of ideals enumerated per kind.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Also run every check.
        #[arg(long)]
        checks: bool,
    },
    /// Run the checks on a semigroup or on every monoid with zero up to an order.
    Verify {
        /// Corpus name or Cayley table file.
        #[arg(required_unless_present = "enumerate", conflicts_with = "enumerate")]
        target: Option<String>,
        /// Sweep all monoids with zero of orders 2..=N.
        #[arg(long, value_name = "N")]
        enumerate: Option<usize>,
        /// Run a single check (or a group such as `Thm2.8`).
        #[arg(long, value_name = "ID")]
        check: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Count monoids with zero of order N up to isomorphism.
    Enumerate {
        n: usize,
        /// Write one JSON record per monoid to this file.
        #[arg(long, value_name = "FILE")]
        ndjson: Option<PathBuf>,
    },
    /// Built-in examples.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    List,
    /// Print an entry in Cayley text format.
    Dump { name: String },
}

/// Runs a parsed command, writing results to `out` and errors to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Validate { path } => cmd_validate(&path, out),
        Command::Analyze { target, json, cap, checks } => cmd_analyze(&target, json, cap, checks, out),
        Command::Verify { target, enumerate, check, json, cap } => match (target, enumerate) {
            (_, Some(n)) => cmd_verify_enumerated(n, check.as_deref(), json, out),
            (Some(t), None) => cmd_verify(&t, check.as_deref(), json, cap, out),
            (None, None) => Err(Error::Io("verify needs a target or --enumerate".into())),
        },
        Command::Enumerate { n, ndjson } => cmd_enumerate(n, ndjson.as_deref(), out),
        Command::Corpus { action } => cmd_corpus(action, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// Resolves a corpus name first, then a file path.
pub fn load_target(target: &str) -> Result<Target> {
    if let Ok(e) = corpus_entry(target) {
        return Ok(Target::from_corpus(&e));
    }
    let path = Path::new(target);
    if !path.exists() {
        return Err(Error::Io(format!("{target}: no corpus entry or file with this name")));
    }
    let s = read_semigroup(path)?;
    let name = path
        .file_stem()
        .map_or_else(|| target.to_string(), |n| n.to_string_lossy().into_owned());
    Ok(Target::from_semigroup(name, s))
}

fn read_semigroup(path: &Path) -> Result<Semigroup> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Semigroup::parse_cayley_text(&text)
}

fn io(e: std::io::Error) -> Error {
    Error::from(e)
}

pub fn cmd_validate(path: &Path, out: &mut dyn Write) -> Result<i32> {
    let s = read_semigroup(path)?;
    writeln!(out, "ok: order {}, one {}, zero {}", s.order(), s.one(), s.zero()).map_err(io)?;
    Ok(EXIT_OK)
}

pub fn cmd_analyze(target: &str, json: bool, cap: usize, checks: bool, out: &mut dyn Write) -> Result<i32> {
    let t = load_target(target)?;
    let report = analyze(&t, cap, checks);
    if json {
        writeln!(out, "{}", report.to_json()).map_err(io)?;
    } else {
        write!(out, "{}", render_analysis(&report)).map_err(io)?;
    }
    Ok(if report.has_discrepancy() { EXIT_DISCREPANCY } else { EXIT_OK })
}

pub fn verify_target(t: &Target, check: Option<&str>, cap: usize) -> Result<VerificationReport> {
    let ctx = Context::new(&t.semigroup, cap);
    let results = match check {
        Some(id) => vec![VerdictEntry::new(id, run_check_with(&ctx, id)?)],
        None => run_suite_with(&ctx)
            .into_iter()
            .map(|(id, v)| VerdictEntry::new(id, v))
            .collect(),
    };
    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        semigroup: t.info.clone(),
        results,
    })
}

pub fn cmd_verify(target: &str, check: Option<&str>, json: bool, cap: usize, out: &mut dyn Write) -> Result<i32> {
    let t = load_target(target)?;
    let report = verify_target(&t, check, cap)?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes")).map_err(io)?;
    } else {
        write!(out, "{}", render_verification(&report)).map_err(io)?;
    }
    Ok(if report.has_discrepancy() { EXIT_DISCREPANCY } else { EXIT_OK })
}

fn check_order(n: usize) -> Result<()> {
    if (2..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::EnumerationOrder(n))
    }
}

/// Runs the checks (or one check) on every monoid with zero of orders
/// `2..=max_order`.
pub fn sweep(max_order: usize, check: Option<&str>) -> Result<SweepReport> {
    check_order(max_order)?;
    let checks: Vec<String> = match check {
        Some(id) => {
            // validate the id before enumerating
            run_check_with(&Context::new(&crate::corpus::minimal_monoid(), DEFAULT_CAP), id)?;
            vec![id.to_string()]
        }
        None => registry().iter().map(|c| c.id.to_string()).collect(),
    };
    let mut orders = Vec::new();
    let mut discrepancies = Vec::new();
    for n in 2..=max_order {
        let mut tally = OrderTally { order: n, semigroups: 0, holds: 0, vacuous: 0, discrepancies: 0 };
        enumerate_monoids_with_zero(n, |e| {
            let s = &e.semigroup;
            let ctx = Context::new(s, DEFAULT_CAP);
            tally.semigroups += 1;
            for id in &checks {
                let v = run_check_with(&ctx, id).expect("validated id");
                match v.status {
                    Status::Holds => tally.holds += 1,
                    Status::Vacuous => tally.vacuous += 1,
                    Status::Discrepancy => {
                        tally.discrepancies += 1;
                        discrepancies.push(FoundDiscrepancy {
                            semigroup: SemigroupInfo::new(s.fingerprint(), s, None),
                            table: s.rows().map(<[usize]>::to_vec).collect(),
                            result: VerdictEntry::new(id.clone(), v),
                        });
                    }
                }
            }
        });
        orders.push(tally);
    }
    Ok(SweepReport { schema: SCHEMA_VERSION, checks, orders, discrepancies })
}

pub fn cmd_verify_enumerated(n: usize, check: Option<&str>, json: bool, out: &mut dyn Write) -> Result<i32> {
    let report = sweep(n, check)?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes")).map_err(io)?;
    } else {
        write!(out, "{}", render_sweep(&report)).map_err(io)?;
    }
    Ok(if report.has_discrepancy() { EXIT_DISCREPANCY } else { EXIT_OK })
}

pub fn cmd_enumerate(n: usize, ndjson: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    check_order(n)?;
    let mut file = ndjson
        .map(|p| fs::File::create(p).map(std::io::BufWriter::new))
        .transpose()
        .map_err(io)?;
    let mut write_error = None;
    let count = enumerate_monoids_with_zero(n, |e| {
        if let (Some(f), None) = (file.as_mut(), &write_error) {
            let line = serde_json::to_string(&e.record()).expect("record serializes");
            if let Err(err) = writeln!(f, "{line}") {
                write_error = Some(err);
            }
        }
    });
    if let Some(e) = write_error {
        return Err(io(e));
    }
    if let Some(mut f) = file {
        f.flush().map_err(io)?;
    }
    writeln!(out, "{count}").map_err(io)?;
    Ok(EXIT_OK)
}

pub fn cmd_corpus(action: CorpusAction, out: &mut dyn Write) -> Result<i32> {
    match action {
        CorpusAction::List => {
            for e in corpus() {
                writeln!(out, "{:<18} {:>2}  {}", e.name, e.semigroup.order(), e.description).map_err(io)?;
            }
        }
        CorpusAction::Dump { name } => {
            write!(out, "{}", corpus_entry(&name)?.dump()).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}
