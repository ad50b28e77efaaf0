//! `dca`: exact checkers, transforms, and experiment drivers for
//! multimodular functions on the integer lattice.
//!
//! Exit codes are part of the contract: 0 means the property holds, the
//! operation succeeded, or the reproduction matched; 1 means a property
//! failed (a witness is printed) or a reproduction mismatched; 2 means the
//! input was unusable.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use dca_core::checks::{
    is_l_class, is_l_convex, is_lnat, is_lnat_set, is_multimodular, is_multimodular_set,
    is_quadratic_multimodular, is_submodular,
};
use dca_core::harness::closure::{closure_trial, render_table1, table1_row, ClosureOp};
use dca_core::harness::repro::{repro, ReproId};
use dca_core::io::{self, FunctionData};
use dca_core::minimize::{brute_min, local_minimize};
use dca_core::scalar::parse_scalar;
use dca_core::transforms::{conjugate_quadratic, from_lnat, lift_lnat, lift_multimodular, to_lnat};
use dca_core::{materialize, ops, IntBox, IndicatorSet, QuadraticFunction, Rat, TableFunction};
use dca_core::{Evaluate, Verdict};

#[derive(Parser)]
#[command(name = "dca", version, about, max_term_width = 100)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Write the result to a file instead of stdout
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a property of a function read from a JSON file
    Check {
        #[arg(long, value_enum)]
        property: Property,
        /// Evaluation box "lo..hi", one per coordinate or a single broadcast
        /// range (default: the input's natural box, [-2..2] for quadratics)
        #[arg(long = "box", value_name = "LO..HI", allow_hyphen_values = true)]
        boxes: Vec<String>,
        file: PathBuf,
    },
    /// Apply a change of variables and print the image function as JSON
    Transform {
        #[arg(long, value_enum)]
        map: MapName,
        /// Evaluation box "lo..hi", as for check
        #[arg(long = "box", value_name = "LO..HI", allow_hyphen_values = true)]
        boxes: Vec<String>,
        file: PathBuf,
    },
    /// Apply an operation to one or two functions and print the result as JSON
    Op {
        #[arg(value_enum)]
        name: OpName,
        /// Shift vector for `shift`, comma-separated integers
        #[arg(long, value_name = "B1,B2,...", allow_hyphen_values = true)]
        by: Option<String>,
        /// Permutation of 1..n for `permute`, comma-separated
        #[arg(long, value_name = "P1,P2,...")]
        perm: Option<String>,
        /// Integer factor for `scale-vars`, rational for `scale-values`
        #[arg(long, value_name = "Q", allow_hyphen_values = true)]
        factor: Option<String>,
        /// Coefficients for `add-linear`, comma-separated rationals
        #[arg(long, value_name = "C1,C2,...", allow_hyphen_values = true)]
        coeffs: Option<String>,
        /// Kept coordinates (1-based) for `restrict` and `project`
        #[arg(long, value_name = "I1,I2,...")]
        subset: Option<String>,
        /// Coordinate to eliminate (1-based) for `sweep-out`
        #[arg(long, value_name = "K")]
        index: Option<usize>,
        /// Evaluation box "lo..hi", as for check
        #[arg(long = "box", value_name = "LO..HI", allow_hyphen_values = true)]
        boxes: Vec<String>,
        /// One input file, or two for add, convolve, and minkowski
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Minimize by local search over the alternating sign directions
    Minimize {
        /// Start point, comma-separated (default: the box point nearest zero)
        #[arg(long, value_name = "X1,X2,...", allow_hyphen_values = true)]
        start: Option<String>,
        /// Cross-check the result against exhaustive search
        #[arg(long)]
        verify: bool,
        /// Evaluation box "lo..hi", as for check
        #[arg(long = "box", value_name = "LO..HI", allow_hyphen_values = true)]
        boxes: Vec<String>,
        file: PathBuf,
    },
    /// Run a randomized closure campaign for one operation
    Closure {
        /// Operation under test; pass an unknown name to list the choices
        #[arg(long = "op", value_name = "NAME")]
        op: String,
        #[arg(long, default_value_t = 50)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Fix the instance dimension (default: cycle through 2, 3, 4)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Re-run a scripted reproduction and report match or mismatch
    Repro {
        /// Catalog token; pass "list" to enumerate the scenarios
        id: String,
    },
    /// Run all eight closure campaigns and print the summary row
    Table1 {
        #[arg(long, default_value_t = 50)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Property {
    /// Pairwise direction inequalities on a value table
    Multimodular,
    /// Discrete midpoint convexity on a value table
    Lnat,
    /// Lattice submodularity on a value table
    Submodular,
    /// Submodularity plus a constant all-ones increment
    LConvex,
    /// Quadratic-form criterion on a symmetric matrix
    QuadMm,
    /// Nonpositive off-diagonals and diagonal dominance
    LClass,
    /// Multimodularity of a point set via its indicator
    MmSet,
    /// Midpoint convexity of a point set via its indicator
    LnatSet,
}

impl Property {
    fn name(self) -> &'static str {
        match self {
            Property::Multimodular => "multimodular",
            Property::Lnat => "lnat",
            Property::Submodular => "submodular",
            Property::LConvex => "l-convex",
            Property::QuadMm => "quad-mm",
            Property::LClass => "l-class",
            Property::MmSet => "mm-set",
            Property::LnatSet => "lnat-set",
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum MapName {
    /// Cumulative change of variables: g(p) = f(Dp)
    ToLnat,
    /// Difference change of variables: f(z) = g(D^-1 z)
    FromLnat,
    /// Lift a table to one more variable by differencing
    LiftMm,
    /// Lift a table to one more variable by a leading offset
    LiftLnat,
    /// Conjugate a quadratic form by the bidiagonal matrix
    ConjQuad,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OpName {
    Shift,
    Negate,
    Reverse,
    Permute,
    ScaleVars,
    ScaleValues,
    AddLinear,
    Add,
    Restrict,
    Project,
    Convolve,
    Minkowski,
    SweepOut,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// DCA_THREADS caps the worker pool; unset means one worker per core.
fn configure_threads() -> Result<()> {
    match std::env::var("DCA_THREADS") {
        Err(_) => Ok(()),
        Ok(v) => {
            let k: usize = v
                .parse()
                .ok()
                .filter(|&k| k > 0)
                .with_context(|| format!("DCA_THREADS must be a positive integer, got {v:?}"))?;
            rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global()
                .context("worker pool already configured")?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let json = cli.json;
    let out = cli.output.as_deref();
    match cli.command {
        Command::Check {
            property,
            boxes,
            file,
        } => run_check(property, &boxes, &file, json, out),
        Command::Transform { map, boxes, file } => run_transform(map, &boxes, &file, out),
        Command::Op {
            name,
            by,
            perm,
            factor,
            coeffs,
            subset,
            index,
            boxes,
            files,
        } => {
            let params = OpParams {
                by,
                perm,
                factor,
                coeffs,
                subset,
                index,
                boxes,
            };
            run_op(name, &params, &files, out)
        }
        Command::Minimize {
            start,
            verify,
            boxes,
            file,
        } => run_minimize(start.as_deref(), verify, &boxes, &file, json, out),
        Command::Closure {
            op,
            trials,
            seed,
            n,
        } => run_closure(&op, trials, seed, n, json, out),
        Command::Repro { id } => run_repro(&id, json, out),
        Command::Table1 { trials, seed } => run_table1(trials, seed, json, out),
    }
}

// ---------------------------------------------------------------- input

fn load(file: &Path) -> Result<FunctionData> {
    let text =
        fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    let data = io::parse_function_str(&text)
        .with_context(|| format!("cannot parse {}", file.display()))?;
    Ok(data)
}

/// Parses repeated `--box lo..hi` flags; a single range broadcasts to all
/// coordinates.
fn parse_box_args(boxes: &[String], n: usize) -> Result<Option<IntBox>> {
    if boxes.is_empty() {
        return Ok(None);
    }
    let mut ranges = Vec::with_capacity(n);
    for s in boxes {
        let (lo, hi) = s
            .split_once("..")
            .with_context(|| format!("box range {s:?} is not of the form lo..hi"))?;
        let lo: i64 = lo
            .trim()
            .parse()
            .with_context(|| format!("bad lower bound in box range {s:?}"))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .with_context(|| format!("bad upper bound in box range {s:?}"))?;
        ranges.push((lo, hi));
    }
    if ranges.len() == 1 {
        ranges = vec![ranges[0]; n];
    }
    if ranges.len() != n {
        bail!("expected 1 or {n} --box ranges, got {}", ranges.len());
    }
    let lower = ranges.iter().map(|r| r.0).collect();
    let upper = ranges.iter().map(|r| r.1).collect();
    Ok(Some(IntBox::new(lower, upper)?))
}

/// Materializes any input as a value table on its evaluation box. Tables and
/// sets default to their own boxes, separable functions to the product of
/// their pieces, and quadratics to [-2,2]^n.
fn as_table(data: &FunctionData, boxes: &[String]) -> Result<TableFunction> {
    let chosen = parse_box_args(boxes, data.dim())?;
    let table = match data {
        FunctionData::Table(f) => match chosen {
            None => f.clone(),
            Some(b) => materialize(f, &b)?,
        },
        FunctionData::Quadratic(a) => {
            let b = match chosen {
                Some(b) => b,
                None => IntBox::cube(a.dim(), -2, 2)?,
            };
            materialize(a, &b)?
        }
        FunctionData::Separable(s) => {
            let b = match chosen {
                Some(b) => b,
                None => natural_box(s)?,
            };
            materialize(s, &b)?
        }
        FunctionData::Set(s) => {
            let b = chosen.unwrap_or_else(|| s.bounding_box());
            materialize(s, &b)?
        }
    };
    Ok(table)
}

fn natural_box(s: &dca_core::SeparableFunction) -> Result<IntBox> {
    let lower = s.pieces().iter().map(|p| p.start).collect();
    let upper = s
        .pieces()
        .iter()
        .map(|p| p.start + p.values.len() as i64 - 1)
        .collect();
    Ok(IntBox::new(lower, upper)?)
}

fn require_quadratic<'a>(data: &'a FunctionData, what: &str) -> Result<&'a QuadraticFunction> {
    match data {
        FunctionData::Quadratic(a) => Ok(a),
        other => bail!("{what} needs a quadratic input, got kind {:?}", other.kind()),
    }
}

fn require_set<'a>(data: &'a FunctionData, what: &str) -> Result<&'a IndicatorSet> {
    match data {
        FunctionData::Set(s) => Ok(s),
        other => bail!("{what} needs a set input, got kind {:?}", other.kind()),
    }
}

fn parse_i64_list(s: &str, what: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .with_context(|| format!("bad entry {t:?} in {what}"))
        })
        .collect()
}

fn parse_rat_list(s: &str, what: &str) -> Result<Vec<Rat>> {
    s.split(',')
        .map(|t| {
            parse_scalar(t.trim()).map_err(|e| anyhow::anyhow!("bad entry in {what}: {e}"))
        })
        .collect()
}

/// 1-based comma list from the command line to 0-based indices.
fn parse_index_list(s: &str, what: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            let k: usize = t
                .trim()
                .parse()
                .with_context(|| format!("bad entry {t:?} in {what}"))?;
            if k == 0 {
                bail!("{what} is 1-based, got 0");
            }
            Ok(k - 1)
        })
        .collect()
}

// ---------------------------------------------------------------- output

fn deliver(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn verdict_text(name: &str, v: &Verdict) -> String {
    let mut s = format!(
        "{name}: {} ({} inequalities checked)\n",
        if v.holds { "holds" } else { "fails" },
        v.checked
    );
    if let Some(w) = &v.witness {
        s.push_str(&format!("witness: {w}\n"));
    }
    s
}

fn fmt_point(p: &[i64]) -> String {
    let inner: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn fmt_box(b: &IntBox) -> String {
    (0..b.dim())
        .map(|i| format!("[{}..{}]", b.lower()[i], b.upper()[i]))
        .collect::<Vec<_>>()
        .join(" x ")
}

// ---------------------------------------------------------------- commands

fn run_check(
    property: Property,
    boxes: &[String],
    file: &Path,
    json: bool,
    out: Option<&Path>,
) -> Result<u8> {
    let data = load(file)?;
    let name = property.name();
    let (payload, text, holds) = match property {
        Property::LConvex => {
            let t = as_table(&data, boxes)?;
            let v = is_l_convex(&t);
            let mut text = verdict_text(name, &v.verdict);
            match (&v.increment, v.translation_untestable) {
                (Some(r), _) => text.push_str(&format!("all-ones increment: {r}\n")),
                (None, true) => {
                    text.push_str("all-ones increment: untestable (no finite pair)\n")
                }
                (None, false) => {}
            }
            (io::encode_l_convex_verdict(&v), text, v.verdict.holds)
        }
        Property::QuadMm | Property::LClass => {
            let a = require_quadratic(&data, name)?;
            let v = if property == Property::QuadMm {
                is_quadratic_multimodular(a)
            } else {
                is_l_class(a)
            };
            (io::encode_verdict(&v), verdict_text(name, &v), v.holds)
        }
        Property::MmSet | Property::LnatSet => {
            let s = require_set(&data, name)?;
            let v: Verdict = if property == Property::MmSet {
                is_multimodular_set(s)
            } else {
                is_lnat_set(s)
            };
            (io::encode_verdict(&v), verdict_text(name, &v), v.holds)
        }
        Property::Multimodular | Property::Lnat | Property::Submodular => {
            let t = as_table(&data, boxes)?;
            let v = match property {
                Property::Multimodular => is_multimodular(&t),
                Property::Lnat => is_lnat(&t),
                _ => is_submodular(&t),
            };
            (io::encode_verdict(&v), verdict_text(name, &v), v.holds)
        }
    };
    let rendered = if json {
        io::to_pretty_string(&payload)
    } else {
        text
    };
    deliver(out, &rendered)?;
    Ok(if holds { 0 } else { 1 })
}

fn run_transform(map: MapName, boxes: &[String], file: &Path, out: Option<&Path>) -> Result<u8> {
    let data = load(file)?;
    let payload = match map {
        MapName::ConjQuad => {
            let a = require_quadratic(&data, "conj-quad")?;
            io::encode_quadratic(&conjugate_quadratic(a))
        }
        _ => {
            let t = as_table(&data, boxes)?;
            let image = match map {
                MapName::ToLnat => to_lnat(&t)?,
                MapName::FromLnat => from_lnat(&t)?,
                MapName::LiftMm => lift_multimodular(&t)?,
                MapName::LiftLnat => lift_lnat(&t)?,
                MapName::ConjQuad => unreachable!(),
            };
            io::encode_table(&image)
        }
    };
    deliver(out, &io::to_pretty_string(&payload))?;
    Ok(0)
}

struct OpParams {
    by: Option<String>,
    perm: Option<String>,
    factor: Option<String>,
    coeffs: Option<String>,
    subset: Option<String>,
    index: Option<usize>,
    boxes: Vec<String>,
}

fn need<'a>(field: &'a Option<String>, flag: &str, op: &str) -> Result<&'a str> {
    field
        .as_deref()
        .with_context(|| format!("op {op} needs --{flag}"))
}

fn run_op(name: OpName, params: &OpParams, files: &[PathBuf], out: Option<&Path>) -> Result<u8> {
    let two_inputs = matches!(name, OpName::Add | OpName::Convolve | OpName::Minkowski);
    let expected = if two_inputs { 2 } else { 1 };
    if files.len() != expected {
        bail!(
            "op {} takes {expected} input file{}, got {}",
            op_token(name),
            if expected == 2 { "s" } else { "" },
            files.len()
        );
    }
    let data = load(&files[0])?;
    let payload = match name {
        OpName::Minkowski => {
            let s1 = require_set(&data, "minkowski")?;
            let second = load(&files[1])?;
            let s2 = require_set(&second, "minkowski")?;
            io::encode_set(&ops::minkowski_sum(s1, s2)?)
        }
        OpName::SweepOut => {
            let a = require_quadratic(&data, "sweep-out")?;
            let k = params.index.context("op sweep-out needs --index")?;
            if k == 0 {
                bail!("--index is 1-based, got 0");
            }
            io::encode_quadratic(&ops::sweep_out(a, k - 1)?)
        }
        OpName::Add | OpName::Convolve => {
            let f1 = as_table(&data, &params.boxes)?;
            let second = load(&files[1])?;
            let f2 = as_table(&second, &params.boxes)?;
            let result = if name == OpName::Add {
                ops::add(&f1, &f2)?
            } else {
                ops::convolve(&f1, &f2)?
            };
            io::encode_table(&result)
        }
        _ => {
            let f = as_table(&data, &params.boxes)?;
            let result = match name {
                OpName::Shift => {
                    let b = parse_i64_list(need(&params.by, "by", "shift")?, "--by")?;
                    ops::shift(&f, &b)?
                }
                OpName::Negate => ops::negate_vars(&f)?,
                OpName::Reverse => ops::reverse_vars(&f)?,
                OpName::Permute => {
                    let sigma =
                        parse_index_list(need(&params.perm, "perm", "permute")?, "--perm")?;
                    ops::permute_vars(&f, &sigma)?
                }
                OpName::ScaleVars => {
                    let s: i64 = need(&params.factor, "factor", "scale-vars")?
                        .trim()
                        .parse()
                        .context("--factor must be an integer for scale-vars")?;
                    ops::scale_vars(&f, s)?
                }
                OpName::ScaleValues => {
                    let a: Rat =
                        parse_scalar(need(&params.factor, "factor", "scale-values")?.trim())
                            .map_err(|e| anyhow::anyhow!("bad --factor: {e}"))?;
                    ops::scale_values(&f, &a)?
                }
                OpName::AddLinear => {
                    let c =
                        parse_rat_list(need(&params.coeffs, "coeffs", "add-linear")?, "--coeffs")?;
                    ops::add_linear(&f, &c)?
                }
                OpName::Restrict => {
                    let kept =
                        parse_index_list(need(&params.subset, "subset", "restrict")?, "--subset")?;
                    ops::restrict(&f, &kept)?
                }
                OpName::Project => {
                    let kept =
                        parse_index_list(need(&params.subset, "subset", "project")?, "--subset")?;
                    ops::project(&f, &kept)?
                }
                _ => unreachable!(),
            };
            io::encode_table(&result)
        }
    };
    deliver(out, &io::to_pretty_string(&payload))?;
    Ok(0)
}

fn op_token(name: OpName) -> &'static str {
    match name {
        OpName::Shift => "shift",
        OpName::Negate => "negate",
        OpName::Reverse => "reverse",
        OpName::Permute => "permute",
        OpName::ScaleVars => "scale-vars",
        OpName::ScaleValues => "scale-values",
        OpName::AddLinear => "add-linear",
        OpName::Add => "add",
        OpName::Restrict => "restrict",
        OpName::Project => "project",
        OpName::Convolve => "convolve",
        OpName::Minkowski => "minkowski",
        OpName::SweepOut => "sweep-out",
    }
}

fn run_minimize(
    start: Option<&str>,
    verify: bool,
    boxes: &[String],
    file: &Path,
    json: bool,
    out: Option<&Path>,
) -> Result<u8> {
    let data = load(file)?;
    let f = as_table(&data, boxes)?;
    let start = match start {
        Some(s) => parse_i64_list(s, "--start")?,
        None => default_start(&f),
    };
    let r = local_minimize(&f, &start)?;
    let verified = if verify {
        let (_, best) = brute_min(&f);
        Some(r.value == best)
    } else {
        None
    };
    if json {
        let payload = io::encode_minimize(&r, f.domain(), verified);
        deliver(out, &io::to_pretty_string(&payload))?;
    } else {
        let mut text = format!(
            "minimum value: {}\npoint: {}\nsteps: {}\nbox: {}\n",
            r.value,
            fmt_point(&r.point),
            r.steps,
            fmt_box(f.domain())
        );
        match verified {
            Some(true) => text.push_str("verified global: yes\n"),
            Some(false) => text.push_str("verified global: NO (exhaustive search found better)\n"),
            None => {}
        }
        deliver(out, &text)?;
    }
    Ok(if verified == Some(false) { 1 } else { 0 })
}

/// Componentwise clamp of the origin into the box, falling back to the first
/// finite entry when the clamped point has no value.
fn default_start(f: &TableFunction) -> Vec<i64> {
    let b = f.domain();
    let clamped: Vec<i64> = (0..b.dim())
        .map(|i| 0.clamp(b.lower()[i], b.upper()[i]))
        .collect();
    if f.eval(&clamped).is_finite() {
        return clamped;
    }
    for p in b.points() {
        if f.eval(&p).is_finite() {
            return p;
        }
    }
    clamped
}

fn run_closure(
    op: &str,
    trials: u64,
    seed: u64,
    n: Option<usize>,
    json: bool,
    out: Option<&Path>,
) -> Result<u8> {
    let op = ClosureOp::parse(op).with_context(|| {
        let names: Vec<&str> = ClosureOp::ALL.iter().map(|o| o.name()).collect();
        format!("unknown op {op:?}; choices: {}", names.join(", "))
    })?;
    let report = closure_trial(op, trials, seed, n)?;
    if json {
        deliver(out, &io::to_pretty_string(&io::encode_closure_report(&report)))?;
    } else {
        let mut text = format!(
            "op: {} (expected {})\ntrials: {}, preserved: {}, violated: {}\n",
            report.op.name(),
            if report.expected_preserved() { "Y" } else { "N" },
            report.trials,
            report.preserved,
            report.violated
        );
        for (trial, w) in &report.sample_witnesses {
            text.push_str(&format!("sample witness (trial {trial}): {w}\n"));
        }
        if let Some(w) = &report.fixture_witness {
            text.push_str(&format!("fixture witness: {w}\n"));
        }
        text.push_str(if report.matches_expectation() {
            "result: match\n"
        } else {
            "result: MISMATCH\n"
        });
        deliver(out, &text)?;
    }
    Ok(if report.matches_expectation() { 0 } else { 1 })
}

fn run_repro(id: &str, json: bool, out: Option<&Path>) -> Result<u8> {
    if id == "list" {
        let mut text = String::new();
        for r in ReproId::ALL {
            text.push_str(&format!("{:<8} {}\n", r.token(), r.describe()));
        }
        deliver(out, &text)?;
        return Ok(0);
    }
    let id = ReproId::parse(id).with_context(|| {
        let tokens: Vec<&str> = ReproId::ALL.iter().map(|r| r.token()).collect();
        format!("unknown scenario {id:?}; choices: {}", tokens.join(", "))
    })?;
    let report = repro(id)?;
    if json {
        deliver(out, &io::to_pretty_string(&io::encode_repro(&report)))?;
    } else {
        deliver(out, &report.render())?;
    }
    Ok(if report.ok { 0 } else { 1 })
}

fn run_table1(trials: u64, seed: u64, json: bool, out: Option<&Path>) -> Result<u8> {
    let reports = table1_row(trials, seed)?;
    if json {
        deliver(out, &io::to_pretty_string(&io::encode_table1(&reports)))?;
    } else {
        deliver(out, &render_table1(&reports))?;
    }
    Ok(if reports.iter().all(|r| r.matches_expectation()) {
        0
    } else {
        1
    })
}
