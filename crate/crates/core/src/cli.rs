//! Command-line surface. Exit status: 0 success, 1 verification failure or
//! runtime error, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::Catalog;
use crate::enumerate::{chord_catalog, chord_records, compare_catalogs, cross_validate, enumerate_by_edge_addition};
use crate::error::{Error, Result};
use crate::graph::DegreeSequence;
use crate::graph6;
use crate::sequences::{classify_sequence, realize_family, realize_sequence, verify_theorem, FamilyClass, FamilyTag};
use crate::shard::ShardStore;
use crate::structure::{check_lemma_block_inequality, check_unigraphic_structure};
use crate::tables::{emit_table1, emit_table23};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "radpoly", version, about = "Enumerate and analyse 3-polytopes of radius one")]
struct Cli {
    /// Worker threads for generation (output is identical for any value).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate into a shard directory, resuming from what is already there.
    Enumerate(EnumerateArgs),
    /// Print count tables from a shard directory.
    Tables(TablesArgs),
    /// Name the families a degree sequence belongs to.
    Classify {
        /// Comma-separated degrees, e.g. 6,4,4,4,4,3,3
        seq: String,
    },
    /// Print graph6 realisations of a family member or a degree sequence.
    Realize(RealizeArgs),
    /// Check family classification, the block inequality, chord-graph shape and generator agreement.
    Verify(VerifyArgs),
    /// Summarise a shard directory.
    Stats {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Edges,
    Chords,
    Both,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("limit").required(true).args(["max_edges", "max_order"]))]
struct EnumerateArgs {
    #[arg(long)]
    max_edges: Option<usize>,
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Output directory (default: $RADPOLY_DIR or ./radpoly-data).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "1")]
    Sizes,
    #[value(name = "23")]
    Cells,
}

#[derive(Args, Debug)]
struct TablesArgs {
    #[arg(long, value_enum)]
    which: Which,
    /// Inclusive `A..B`: sizes for table 1, orders for tables 2-3.
    /// Defaults to everything the directory covers.
    #[arg(long, value_parser = parse_range)]
    range: Option<RangeInclusive<usize>>,
    #[arg(long)]
    dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("target").required(true).args(["family", "sequence"]))]
struct RealizeArgs {
    #[arg(long, requires = "p")]
    family: Option<String>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, requires = "family")]
    x: Option<usize>,
    #[arg(long, conflicts_with_all = ["p", "x"])]
    sequence: Option<String>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("check").required(true).args(["lemma1", "theorem", "cross_validate", "structure"]))]
struct VerifyArgs {
    /// Block inequality for every record and every apex, orders up to --p (default 12).
    #[arg(long)]
    lemma1: bool,
    /// Family classification at order --p: 1 for two vertices of degree 3, 2 for three.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2), requires = "p")]
    theorem: Option<u8>,
    /// Both generators agree for all orders up to --p.
    #[arg(long, requires = "p")]
    cross_validate: bool,
    /// Chord-graph shape of unigraphic realisations, orders up to --p (default 13).
    #[arg(long)]
    structure: bool,
    #[arg(long)]
    p: Option<usize>,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let (a, b) =
        s.split_once("..=").or_else(|| s.split_once("..")).ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

/// Errors caused by the arguments rather than by the data.
fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::FamilyParameters { .. } | Error::InvalidSequence(_) | Error::OrderTooLarge(_) | Error::WheelTooSmall(_)
    )
}

/// Runs the CLI on `args` (program name first), writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_FAILURE;
        }
    };
    match pool.install(|| dispatch(cli.command, out, err)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if is_usage(&e) {
                EXIT_USAGE
            } else {
                EXIT_FAILURE
            }
        }
    }
}

fn status(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn parse_sequence(s: &str) -> Result<DegreeSequence> {
    s.parse()
}

fn open_store(dir: Option<PathBuf>) -> Result<ShardStore> {
    ShardStore::open(dir.unwrap_or_else(ShardStore::default_dir))
}

fn dispatch(command: Command, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32> {
    match command {
        Command::Enumerate(a) => enumerate(a, out, err),
        Command::Tables(a) => {
            let store = open_store(a.dir)?;
            let catalog = store.load_catalog()?;
            let cov = catalog.coverage();
            let text = match a.which {
                Which::Sizes => {
                    let range = match a.range {
                        Some(r) => r,
                        None => {
                            6..=(6..)
                                .take_while(|&q| cov.size_complete(q))
                                .last()
                                .ok_or_else(|| Error::IncompleteCatalog("level q=6".into()))?
                        }
                    };
                    emit_table1(&catalog, range)?
                }
                Which::Cells => {
                    let range = match a.range {
                        Some(r) => r,
                        None => {
                            4..=(4..)
                                .take_while(|&p| cov.order_complete(p))
                                .last()
                                .ok_or_else(|| Error::IncompleteCatalog("order p=4".into()))?
                        }
                    };
                    emit_table23(&catalog, range)?
                }
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Classify { seq } => {
            let s = parse_sequence(&seq)?;
            let classes = classify_sequence(&s);
            if classes.is_empty() {
                writeln!(out, "{}", FamilyTag::None)?;
            }
            for c in classes {
                writeln!(out, "{c}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Realize(a) => {
            if let Some(seq) = a.sequence {
                let s = parse_sequence(&seq)?;
                let found = realize_sequence(&s)?;
                if found.is_empty() {
                    writeln!(err, "no 3-polytope of radius 1 has degree sequence {s}")?;
                }
                for r in found {
                    writeln!(out, "{}", graph6::encode(&r.graph))?;
                }
            } else {
                let tag: FamilyTag = a.family.expect("clap group").parse()?;
                let fc = FamilyClass::new(tag, a.p.expect("clap requires"), a.x)?;
                let r = realize_family(&fc)?;
                writeln!(out, "{}", graph6::encode(&r.graph))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify(a) => verify(a, out),
        Command::Stats { dir } => {
            let store = open_store(dir)?;
            let catalog = store.load_catalog()?;
            stats(&catalog, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn enumerate(a: EnumerateArgs, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32> {
    let store = open_store(a.out)?;
    let method = a.method.unwrap_or(if a.max_edges.is_some() { Method::Edges } else { Method::Chords });
    // Both limits are translated so that the requested range ends up complete.
    let q_max = a.max_edges.unwrap_or_else(|| 3 * a.max_order.unwrap_or(4) - 6);
    let p_max = a.max_order.unwrap_or_else(|| q_max / 2 + 1);
    match method {
        Method::Edges => store.extend_by_edges(q_max, err)?,
        Method::Chords => store.extend_by_chords(p_max, err)?,
        Method::Both => {
            let by_edges = enumerate_by_edge_addition(q_max)?;
            let by_chords = chord_catalog(p_max)?;
            let report = compare_catalogs(&by_edges, &by_chords, p_max.min((q_max + 6) / 3));
            for d in &report.discrepancies {
                writeln!(err, "discrepancy: {d}")?;
            }
            if !report.ok() {
                return Ok(EXIT_FAILURE);
            }
            writeln!(err, "generators agree on {} cells", report.agreeing.len())?;
            let mut merged = by_edges;
            merged.merge(by_chords);
            store.write_catalog(&merged)?;
        }
    }
    let cov = store.coverage();
    let show = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
    writeln!(
        out,
        "{}: complete through q={} and p={}",
        store.dir().display(),
        show(cov.max_size),
        show(cov.max_order)
    )?;
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, out: &mut (dyn Write + Send)) -> Result<i32> {
    if let Some(t) = a.theorem {
        let p = a.p.expect("clap requires");
        let threes = t as usize + 1;
        let catalog = Catalog::from_records(
            chord_records(p, None)?,
            crate::catalog::Coverage { max_size: None, max_order: Some(p) },
        );
        let report = verify_theorem(threes, p, &catalog)?;
        for s in report.missing() {
            writeln!(out, "missing: {s} ({:?})", report.predicted[s])?;
        }
        for s in report.unexpected() {
            writeln!(out, "unexpected: {s}")?;
        }
        writeln!(
            out,
            "theorem {t} p={p}: {} unigraphic sequences, {} predicted: {}",
            report.enumerated.len(),
            report.predicted.len(),
            if report.ok() { "ok" } else { "FAIL" }
        )?;
        return Ok(status(report.ok()));
    }
    if a.cross_validate {
        let p = a.p.expect("clap requires");
        let report = cross_validate(p)?;
        for d in &report.discrepancies {
            writeln!(out, "discrepancy: {d}")?;
        }
        let total: usize = report.agreeing.iter().map(|c| c.2).sum();
        writeln!(
            out,
            "cross-validation p<={p}: {} cells, {total} polytopes agree: {}",
            report.agreeing.len(),
            if report.ok() { "ok" } else { "FAIL" }
        )?;
        return Ok(status(report.ok()));
    }
    if a.lemma1 {
        let p_max = a.p.unwrap_or(12);
        let catalog = chord_catalog(p_max)?;
        let mut checked = 0;
        let mut violations = 0;
        for r in catalog.records() {
            if r.q == 2 * (r.p - 1) {
                continue;
            }
            checked += 1;
            if !check_lemma_block_inequality(&r.graph)? {
                violations += 1;
                writeln!(out, "violation: {} ({})", graph6::encode(&r.graph), r.seq)?;
            }
        }
        writeln!(out, "lemma 1 p<={p_max}: {checked} polytopes, {violations} violations")?;
        return Ok(status(violations == 0));
    }
    let p_max = a.p.unwrap_or(13);
    let catalog = chord_catalog(p_max)?;
    let mut violations = 0;
    for p in 5..=p_max {
        let report = check_unigraphic_structure(&catalog, p)?;
        for v in &report.violations {
            writeln!(out, "violation p={p}: {v}")?;
        }
        violations += report.violations.len();
        writeln!(out, "structure p={p}: {} unigraphic sequences checked", report.checked.len())?;
    }
    Ok(status(violations == 0))
}

fn stats(catalog: &Catalog, out: &mut (dyn Write + Send)) -> Result<()> {
    let cov = catalog.coverage();
    let show = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
    writeln!(out, "polytopes: {}", catalog.len())?;
    writeln!(out, "cells: {}", catalog.cells().count())?;
    writeln!(out, "complete sizes through: {}", show(cov.max_size))?;
    writeln!(out, "complete orders through: {}", show(cov.max_order))?;
    let groups = crate::sequences::group_by_sequence(catalog.records());
    writeln!(out, "degree sequences: {}", groups.len())?;
    writeln!(out, "unigraphic sequences: {}", groups.iter().filter(|g| g.unigraphic).count())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("radpoly").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn classify() {
        assert_eq!(run_str(&["classify", "6,4,4,4,4,3,3"]), (0, "A1 p=7\n".into(), String::new()));
        assert_eq!(run_str(&["classify", "5,3,3,3,3,3"]).1, "Pyramid p=6\n");
        assert_eq!(run_str(&["classify", "8,6,5,4,4,4,3,3,3"]).1, "None\n");
        assert_eq!(run_str(&["classify", "3,3,3"]).0, 2);
        assert_eq!(run_str(&["classify", "x"]).0, 2);
    }

    #[test]
    fn realize() {
        let (code, out, err) = run_str(&["realize", "--sequence", "9,9,9,9"]);
        assert_eq!((code, out.as_str()), (0, ""));
        assert!(err.contains("no 3-polytope"));
        assert_eq!(run_str(&["realize", "--sequence", "3,3,3,3"]).1, "C~\n");
        let (code, out, _) = run_str(&["realize", "--family", "A3", "--p", "9", "--x", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1);
        assert_eq!(run_str(&["realize", "--family", "A1", "--p", "8"]).0, 2);
        assert_eq!(run_str(&["realize", "--family", "A1"]).0, 2);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&[]).0, 2);
        assert_eq!(run_str(&["enumerate"]).0, 2);
        assert_eq!(run_str(&["enumerate", "--max-edges", "10", "--max-order", "5"]).0, 2);
        assert_eq!(run_str(&["verify", "--theorem", "3", "--p", "7"]).0, 2);
        assert_eq!(run_str(&["tables", "--which", "4"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = run_str(&["verify", "--theorem", "1", "--p", "9"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with(": ok\n"));
        assert_eq!(run_str(&["verify", "--cross-validate", "--p", "7"]).0, 0);
        assert_eq!(run_str(&["verify", "--lemma1", "--p", "8"]).0, 0);
        assert_eq!(run_str(&["verify", "--structure", "--p", "9"]).0, 0);
    }

    #[test]
    fn enumerate_and_tables() {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        let (code, out, _) = run_str(&["enumerate", "--max-edges", "18", "--out", d]);
        assert_eq!(code, 0);
        assert!(out.contains("complete through q=18"));
        let (code, out, _) = run_str(&["tables", "--which", "1", "--dir", d]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "18,16,7,5"), "{out}");
        assert_eq!(run_str(&["tables", "--which", "1", "--range", "6..19", "--dir", d]).0, 1);
        let (code, out, _) = run_str(&["tables", "--which", "23", "--range", "4..8", "--dir", d]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "18,,,,,4(4)"), "{out}");
        let (code, out, _) = run_str(&["stats", "--dir", d]);
        assert_eq!(code, 0);
        assert!(out.contains("complete sizes through: 18"));
    }

    #[test]
    fn enumerate_both_methods() {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        let (code, out, err) = run_str(&["enumerate", "--max-order", "7", "--method", "both", "--out", d]);
        assert_eq!(code, 0, "{err}");
        assert!(out.contains("complete through q=15 and p=7"), "{out}");
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("6..26").unwrap(), 6..=26);
        assert_eq!(parse_range("4..=12").unwrap(), 4..=12);
        assert!(parse_range("9..4").is_err());
        assert!(parse_range("9").is_err());
    }
}
