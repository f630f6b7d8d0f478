//! Command-line front end: `check`, `front` and `rate` over JSON problem
//! files.
//!
//! A problem file looks like
//!
//! ```json
//! {
//!   "n": 2,
//!   "A": [[1, 2], ["1/2", 1]],
//!   "B": [[1, "1/3"], [3, 1]],
//!   "g": ["1/3", "1/3"],
//!   "h": ["1/2", "1/2"],
//!   "options": { "tolerance": 1e-9, "samples": 50, "log_base": 2.718281828459045 }
//! }
//! ```
//!
//! Entries are JSON numbers or strings holding decimals, fractions `p/q` or
//! `inf`. `null` in `h` also means unbounded. `g` defaults to zeros and `h`
//! to unbounded.
//!
//! Results are JSON on stdout; diagnostics go to stderr. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | output could not be written |
//! | 2 | unreadable or malformed input, bad arguments |
//! | 3 | invalid comparison matrices or bounds |
//! | 4 | solver failure (empty solution set, degenerate front, grid too large) |
//! | 5 | `--at-alpha` outside the front range |

use std::ffi::OsString;
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bicriteria::{FrontFunction, ParetoFront, Problem, TermSource};
use crate::error::{Error, Result};
use crate::oracle::{coverage_gap, grid_pareto, region_margin, GridSpec, DEFAULT_GRID_CAP};
use crate::ratings::{
    build_problem, solve_at, ComparisonMatrix, FrontSolution, RateOptions,
    DEFAULT_RECIPROCITY_TOLERANCE,
};
use crate::semiring::{parse_numeral, Matrix, Scalar, Tolerance, Vector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_SOLVER: i32 = 4;
pub const EXIT_OUT_OF_RANGE: i32 = 5;

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => EXIT_PARSE,
        Error::Validation(_) | Error::Dimension(_) | Error::Precondition(_) | Error::Domain(_) => {
            EXIT_INVALID
        }
        Error::StarDiverges { .. }
        | Error::EmptySolutionSet { .. }
        | Error::DegenerateFront(_)
        | Error::Resource(_) => EXIT_SOLVER,
        Error::OutOfRange(_) => EXIT_OUT_OF_RANGE,
    }
}

/// Short stable name of the error kind, printed with every failure.
pub fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::Dimension(_) => "dimension",
        Error::Domain(_) => "domain",
        Error::Precondition(_) => "precondition",
        Error::StarDiverges { .. } => "star-diverges",
        Error::EmptySolutionSet { .. } => "empty-solution-set",
        Error::DegenerateFront(_) => "degenerate-front",
        Error::OutOfRange(_) => "out-of-range",
        Error::Parse(_) => "parse",
        Error::Validation(_) => "validation",
        Error::Resource(_) => "resource",
    }
}

// ---------------------------------------------------------------- input

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileOptions {
    pub tolerance: Option<f64>,
    pub samples: Option<usize>,
    pub log_base: Option<f64>,
    pub reciprocity_tolerance: Option<f64>,
}

/// Raw problem file as written by the user.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<Value>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<Value>>,
    #[serde(default)]
    pub g: Option<Vec<Value>>,
    #[serde(default)]
    pub h: Option<Vec<Value>>,
    #[serde(default)]
    pub options: Option<FileOptions>,
}

fn parse_entry(v: &Value, at: &str) -> Result<Scalar> {
    let located = |e: Error| match e {
        Error::Parse(m) | Error::Domain(m) => Error::Parse(format!("{at}: {m}")),
        other => other,
    };
    match v {
        Value::Number(num) => {
            let f = num.as_f64().ok_or_else(|| Error::Parse(format!("{at}: {num} is not representable")))?;
            Scalar::new(f).map_err(located)
        }
        Value::String(s) => parse_numeral(s).map_err(located),
        Value::Null => Ok(Scalar::TOP),
        other => Err(Error::Parse(format!("{at}: expected a number or string, got {other}"))),
    }
}

fn parse_matrix(rows: &[Vec<Value>], n: usize, name: &str) -> Result<Matrix> {
    if rows.len() != n {
        return Err(Error::Parse(format!("{name}: expected {n} rows, found {}", rows.len())));
    }
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "{name} row {}: expected {n} entries, found {}",
                    i + 1,
                    row.len()
                )));
            }
            row.iter()
                .enumerate()
                .map(|(j, v)| parse_entry(v, &format!("{name}[{}][{}]", i + 1, j + 1)))
                .collect()
        })
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    Matrix::from_rows(parsed)
}

fn parse_vector(values: &[Value], n: usize, name: &str) -> Result<Vector> {
    if values.len() != n {
        return Err(Error::Parse(format!("{name}: expected {n} entries, found {}", values.len())));
    }
    values
        .iter()
        .enumerate()
        .map(|(j, v)| parse_entry(v, &format!("{name}[{}]", j + 1)))
        .collect()
}

/// Problem file with all numerals parsed but nothing validated.
#[derive(Debug, Clone)]
pub struct ParsedFile {
    pub a: Matrix,
    pub b: Matrix,
    pub g: Option<Vector>,
    pub h: Option<Vector>,
    pub options: FileOptions,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        ProblemFile::from_json(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn parse(&self) -> Result<ParsedFile> {
        if self.n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        Ok(ParsedFile {
            a: parse_matrix(&self.a, self.n, "A")?,
            b: parse_matrix(&self.b, self.n, "B")?,
            g: self.g.as_deref().map(|g| parse_vector(g, self.n, "g")).transpose()?,
            h: self.h.as_deref().map(|h| parse_vector(h, self.n, "h")).transpose()?,
            options: self.options.clone().unwrap_or_default(),
        })
    }
}

/// A fully validated problem ready to solve.
#[derive(Debug, Clone)]
pub struct LoadedProblem {
    pub a: ComparisonMatrix,
    pub b: ComparisonMatrix,
    pub problem: Problem,
    pub options: RateOptions,
}

impl ParsedFile {
    /// Validates both matrices, reporting the violations of both at once.
    pub fn comparison_matrices(&self) -> Result<(ComparisonMatrix, ComparisonMatrix)> {
        let tol = self.options.reciprocity_tolerance.unwrap_or(DEFAULT_RECIPROCITY_TOLERANCE);
        let a = ComparisonMatrix::new(self.a.clone(), tol);
        let b = ComparisonMatrix::new(self.b.clone(), tol);
        match (a, b) {
            (Ok(a), Ok(b)) => Ok((a, b)),
            (Err(Error::Validation(mut va)), Err(Error::Validation(vb))) => {
                for v in &mut va {
                    v.message = format!("A: {}", v.message);
                }
                va.extend(vb.into_iter().map(|mut v| {
                    v.message = format!("B: {}", v.message);
                    v
                }));
                Err(Error::Validation(va))
            }
            (Err(e), _) => Err(tag_violations(e, "A")),
            (_, Err(e)) => Err(tag_violations(e, "B")),
        }
    }

    pub fn load(&self, overrides: &Overrides) -> Result<LoadedProblem> {
        let (a, b) = self.comparison_matrices()?;
        let problem = build_problem(&a, &b, self.g.clone(), self.h.clone())?;
        let defaults = RateOptions::default();
        let samples = overrides.samples.or(self.options.samples).unwrap_or(defaults.samples.get());
        let options = RateOptions {
            tolerance: Tolerance(
                overrides.tolerance.or(self.options.tolerance).unwrap_or(defaults.tolerance.0),
            ),
            samples: NonZeroUsize::new(samples)
                .ok_or_else(|| Error::Parse("sample count must be positive".into()))?,
            log_base: overrides.log_base.or(self.options.log_base).unwrap_or(defaults.log_base),
        };
        if !(options.tolerance.0 >= 0.0 && options.tolerance.0.is_finite()) {
            return Err(Error::Parse(format!("invalid tolerance {}", options.tolerance.0)));
        }
        if !(options.log_base > 1.0 && options.log_base.is_finite()) {
            return Err(Error::Parse(format!("logarithm base {} must exceed 1", options.log_base)));
        }
        Ok(LoadedProblem { a, b, problem, options })
    }
}

fn tag_violations(e: Error, name: &str) -> Error {
    match e {
        Error::Validation(vs) => Error::Validation(
            vs.into_iter()
                .map(|mut v| {
                    v.message = format!("{name}: {}", v.message);
                    v
                })
                .collect(),
        ),
        other => other,
    }
}

/// Command-line settings that take precedence over file options.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub tolerance: Option<f64>,
    pub samples: Option<usize>,
    pub log_base: Option<f64>,
}

// ---------------------------------------------------------------- output

/// A number rendered for output: the exact `f64` (`null` for unbounded), a
/// 12-significant-digit decimal, and a fraction when a small one matches.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Number {
    pub value: Option<f64>,
    pub decimal: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fraction: Option<String>,
}

const MAX_DENOMINATOR: i64 = 10_000;

/// Best rational approximation with denominator at most [`MAX_DENOMINATOR`],
/// if it agrees with `v` to 1e-10 relative.
pub fn as_fraction(v: f64) -> Option<String> {
    if !(0.0..=1e12).contains(&v) {
        return None;
    }
    if v == 0.0 {
        return Some("0".into());
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    let mut x = v;
    for _ in 0..40 {
        let a = x.floor();
        let ai = a as i64;
        let (p2, q2) = (ai.checked_mul(p1)?.checked_add(p0)?, ai.checked_mul(q1)?.checked_add(q0)?);
        if q2 > MAX_DENOMINATOR {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        if ((p1 as f64 / q1 as f64) - v).abs() <= 1e-10 * v {
            return Some(if q1 == 1 { p1.to_string() } else { format!("{p1}/{q1}") });
        }
        let frac = x - a;
        if frac <= 0.0 {
            break;
        }
        x = 1.0 / frac;
    }
    None
}

/// `v` with 12 significant digits, trailing zeros removed.
pub fn decimal12(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let magnitude = v.abs().log10().floor() as i32;
    if !(-6..=15).contains(&magnitude) {
        return format!("{v:.11e}");
    }
    let digits = (11 - magnitude).max(0) as usize;
    let s = format!("{v:.digits$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

impl From<Scalar> for Number {
    fn from(s: Scalar) -> Self {
        if s.is_top() {
            return Number { value: None, decimal: "inf".into(), fraction: None };
        }
        let v = if s.is_zero() { 0.0 } else { s.value() };
        Number { value: Some(v), decimal: decimal12(v), fraction: as_fraction(v) }
    }
}

fn numbers(v: &Vector) -> Vec<Number> {
    v.iter().map(|&s| s.into()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointRecord {
    pub alpha: Number,
    pub beta: Number,
}

impl From<(Scalar, Scalar)> for PointRecord {
    fn from((alpha, beta): (Scalar, Scalar)) -> Self {
        PointRecord { alpha: alpha.into(), beta: beta.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub row: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexPair {
    #[serde(rename = "A")]
    pub a: Number,
    #[serde(rename = "B")]
    pub b: Number,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub valid: bool,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub consistency_index: Option<IndexPair>,
    /// One-based locations.
    pub violations: Vec<ViolationRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds_error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coefficient: Number,
    pub exponent: String,
    pub k: usize,
    pub m: usize,
    pub source: String,
}

fn term_records(f: &FrontFunction) -> Vec<TermRecord> {
    f.terms()
        .iter()
        .map(|t| TermRecord {
            coefficient: t.coefficient.into(),
            exponent: t.exponent.to_string(),
            k: t.k,
            m: t.m,
            source: match t.source {
                TermSource::Trace => "trace",
                TermSource::Boundary => "boundary",
            }
            .into(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalarsRecord {
    pub lambda: Number,
    pub mu: Number,
    pub gamma: Number,
    pub delta: Number,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrontRecord {
    /// `"point"` or `"segment"`.
    pub kind: String,
    pub alpha_range: [Number; 2],
    pub endpoints: Vec<PointRecord>,
    pub scalars: ScalarsRecord,
    /// Terms of the least second objective as a function of the first.
    pub beta_bound_terms: Vec<TermRecord>,
    /// Terms of the least first objective as a function of the second.
    pub alpha_bound_terms: Vec<TermRecord>,
    pub samples: Vec<PointRecord>,
}

impl FrontRecord {
    pub fn new(front: &ParetoFront, samples: NonZeroUsize) -> Self {
        let sc = front.scalars();
        let (lo, hi) = front.alpha_range();
        FrontRecord {
            kind: if front.is_point() { "point" } else { "segment" }.into(),
            alpha_range: [lo.into(), hi.into()],
            endpoints: front.endpoints().into_iter().map(Into::into).collect(),
            scalars: ScalarsRecord {
                lambda: sc.lambda.into(),
                mu: sc.mu.into(),
                gamma: sc.gamma.into(),
                delta: sc.delta.into(),
            },
            beta_bound_terms: term_records(&front.functions().beta_bound),
            alpha_bound_terms: term_records(&front.functions().alpha_bound),
            samples: front.sample(samples).into_iter().map(Into::into).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyRecord {
    /// Generator matrix `S` of the family `x = S u`.
    pub star: Vec<Vec<Number>>,
    pub lower: Vec<Number>,
    pub upper: Vec<Number>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentativeRecord {
    /// Optimal vector satisfying the bounds.
    pub solution: Vec<Number>,
    /// The same vector normalized to a largest component of one.
    pub rating: Vec<Number>,
    pub log_cheb_error_a: f64,
    pub log_cheb_error_b: f64,
    pub max_relative_error_a: f64,
    pub max_relative_error_b: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub alpha: Number,
    pub beta: Number,
    pub family: FamilyRecord,
    pub representatives: Vec<RepresentativeRecord>,
}

impl From<&FrontSolution> for SolutionRecord {
    fn from(sol: &FrontSolution) -> Self {
        let star = sol.family.star();
        SolutionRecord {
            alpha: sol.alpha.into(),
            beta: sol.beta.into(),
            family: FamilyRecord {
                star: (0..star.rows())
                    .map(|i| star.row(i).iter().map(|&s| s.into()).collect())
                    .collect(),
                lower: numbers(sol.family.lower()),
                upper: numbers(sol.family.upper()),
            },
            representatives: sol
                .representatives
                .iter()
                .map(|r| RepresentativeRecord {
                    solution: numbers(&r.solution),
                    rating: numbers(&r.rating),
                    log_cheb_error_a: r.diagnostics.log_cheb_error_a,
                    log_cheb_error_b: r.diagnostics.log_cheb_error_b,
                    max_relative_error_a: r.diagnostics.max_relative_error_a,
                    max_relative_error_b: r.diagnostics.max_relative_error_b,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub resolution: usize,
    pub grid_points: usize,
    pub nondominated: usize,
    /// Allowed log-domain discrepancy, one grid step.
    pub tolerance: f64,
    /// Largest log distance by which a grid point falls outside the
    /// analytic feasible region.
    pub max_region_violation: f64,
    /// Largest log distance from a reported front point to the nearest
    /// grid point that reaches it.
    pub max_coverage_gap: f64,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateRecord {
    pub kind: String,
    pub alpha_range: [Number; 2],
    /// Always `"max"`: each rating's largest component is one.
    pub normalization: String,
    pub solutions: Vec<SolutionRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerifyRecord>,
}

// ---------------------------------------------------------------- commands

/// Validation report. Fails only if the file cannot be parsed; an invalid
/// problem yields a record with `valid = false`.
pub fn cmd_check(file: &ProblemFile) -> Result<CheckRecord> {
    let parsed = file.parse()?;
    let mut record = CheckRecord {
        valid: true,
        n: file.n,
        consistency_index: None,
        violations: Vec::new(),
        bounds_error: None,
    };
    match parsed.comparison_matrices() {
        Ok((a, b)) => {
            record.consistency_index = Some(IndexPair {
                a: a.matrix().spectral_radius()?.into(),
                b: b.matrix().spectral_radius()?.into(),
            });
            if let Err(e) = build_problem(&a, &b, parsed.g.clone(), parsed.h.clone()) {
                record.valid = false;
                record.bounds_error = Some(e.to_string());
            }
        }
        Err(Error::Validation(vs)) => {
            record.valid = false;
            record.violations = vs
                .into_iter()
                .map(|v| ViolationRecord { row: v.row + 1, col: v.col + 1, message: v.message })
                .collect();
        }
        Err(e) => return Err(e),
    }
    Ok(record)
}

pub fn cmd_front(loaded: &LoadedProblem) -> Result<(ParetoFront, FrontRecord)> {
    let front = ParetoFront::compute(&loaded.problem, loaded.options.tolerance)?;
    let record = FrontRecord::new(&front, loaded.options.samples);
    Ok((front, record))
}

/// Which front points `rate` solves at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Selection {
    /// The single point, or both ends of a segment.
    Endpoints,
    /// `samples` points over the segment.
    All,
    At(Scalar),
}

pub fn cmd_rate(
    loaded: &LoadedProblem,
    selection: Selection,
    verify: Option<usize>,
) -> Result<RateRecord> {
    let opts = &loaded.options;
    let front = ParetoFront::compute(&loaded.problem, opts.tolerance)?;
    let points = match selection {
        Selection::Endpoints => front.endpoints(),
        Selection::All => front.sample(opts.samples),
        Selection::At(alpha) => vec![front.point_at(alpha, opts.tolerance)?],
    };
    let solutions = points
        .iter()
        .map(|&(alpha, beta)| solve_at(&loaded.a, &loaded.b, &loaded.problem, alpha, beta, opts))
        .collect::<Result<Vec<_>>>()?;
    let verification = match verify {
        Some(resolution) => Some(verify_against_grid(&loaded.problem, &front, &points, resolution)?),
        None => None,
    };
    let (lo, hi) = front.alpha_range();
    Ok(RateRecord {
        kind: if front.is_point() { "point" } else { "segment" }.into(),
        alpha_range: [lo.into(), hi.into()],
        normalization: "max".into(),
        solutions: solutions.iter().map(Into::into).collect(),
        verification,
    })
}

/// Grid resolution giving roughly two million points, at most 400 per axis.
pub fn default_resolution(spec_axes: usize) -> usize {
    if spec_axes == 0 {
        return 2;
    }
    let r = (2.0e6f64).powf(1.0 / spec_axes as f64).floor() as usize;
    r.clamp(2, 400)
}

/// Checks the analytic front against the grid oracle.
pub fn verify_against_grid(
    problem: &Problem,
    front: &ParetoFront,
    points: &[(Scalar, Scalar)],
    resolution: usize,
) -> Result<VerifyRecord> {
    let max_log_entry = problem
        .a()
        .entries()
        .iter()
        .chain(problem.b().entries())
        .filter(|s| !s.is_zero())
        .map(|s| s.log().abs())
        .fold(0.0, f64::max);
    let span = (problem.n().max(2) - 1) as f64 * max_log_entry + 1.0;
    let probe = GridSpec::for_problem(problem, 2, span)?;
    let free = probe.ranges.iter().filter(|(lo, hi)| lo != hi).count();
    let resolution = if resolution == 0 { default_resolution(free) } else { resolution };
    let spec = GridSpec::for_problem(problem, resolution, span)?;
    let grid = grid_pareto(problem, &spec, DEFAULT_GRID_CAP)?;
    let step = spec
        .ranges
        .iter()
        .map(|(lo, hi)| (hi - lo) / (resolution - 1) as f64)
        .fold(0.0, f64::max);
    let tolerance = step + 1e-9;
    let mut violation: f64 = 0.0;
    for p in &grid {
        violation = violation.max(-region_margin(front, p.alpha, p.beta)?);
    }
    let gap = points
        .iter()
        .map(|&(a, b)| coverage_gap(&grid, a, b))
        .fold(0.0, f64::max);
    Ok(VerifyRecord {
        resolution,
        grid_points: spec.size().unwrap_or(usize::MAX),
        nondominated: grid.len(),
        tolerance,
        max_region_violation: violation + 0.0,
        max_coverage_gap: gap,
        agrees: violation <= 1e-9 && gap <= tolerance,
    })
}

/// Writes front samples as CSV with an `alpha,beta` header.
pub fn write_samples_csv(path: &Path, samples: &[(Scalar, Scalar)]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["alpha", "beta"])?;
    for (a, b) in samples {
        w.write_record([a.value().to_string(), b.value().to_string()])?;
    }
    w.flush()
}

// ---------------------------------------------------------------- argv

#[derive(Debug, Parser)]
#[command(
    name = "tropical-rating",
    version,
    about = "Pareto-optimal ratings from two pairwise comparison matrices under box constraints"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the comparison matrices and report consistency indices.
    Check(InputArgs),
    /// Compute the Pareto front of the two approximation errors.
    Front(FrontArgs),
    /// Compute Pareto-optimal rating vectors.
    Rate(RateArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Problem file (JSON).
    #[arg(value_name = "FILE", required_unless_present = "input", conflicts_with = "input")]
    pub path: Option<PathBuf>,
    #[arg(long, short, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Log-domain comparison tolerance.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Logarithm base for reported errors.
    #[arg(long)]
    pub log_base: Option<f64>,
}

impl InputArgs {
    fn file(&self) -> &Path {
        self.path.as_deref().or(self.input.as_deref()).expect("clap enforces an input")
    }
}

#[derive(Debug, Args)]
pub struct FrontArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Number of front samples.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Write front samples as CSV to this file.
    #[arg(long, short, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Solve at this value of the first objective (decimal or fraction).
    #[arg(long, value_name = "ALPHA", conflicts_with = "all")]
    pub at_alpha: Option<String>,
    /// Solve at every sampled front point.
    #[arg(long)]
    pub all: bool,
    /// Number of front samples used by --all.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Cross-check the front against a brute-force grid search.
    #[arg(long)]
    pub verify: bool,
    /// Grid points per axis for --verify (default: automatic).
    #[arg(long, value_name = "N", requires = "verify")]
    pub grid_resolution: Option<usize>,
}

fn overrides(input: &InputArgs, samples: Option<usize>) -> Overrides {
    Overrides { tolerance: input.tolerance, samples, log_base: input.log_base }
}

fn load(input: &InputArgs, samples: Option<usize>) -> Result<LoadedProblem> {
    ProblemFile::read(input.file())?.parse()?.load(&overrides(input, samples))
}

fn emit<T: Serialize>(out: &mut dyn Write, record: &T) -> i32 {
    match serde_json::to_writer_pretty(&mut *out, record).map_err(std::io::Error::from).and_then(|_| writeln!(out)) {
        Ok(()) => EXIT_OK,
        Err(_) => EXIT_IO,
    }
}

fn fail(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error [{}]: {e}", error_kind(e));
    exit_code(e)
}

/// Runs the command line `args` (including the program name) and returns
/// the process exit code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_PARSE
                }
            };
        }
    };
    match cli.command {
        Command::Check(input) => {
            let record = match ProblemFile::read(input.file()).and_then(|f| cmd_check(&f)) {
                Ok(r) => r,
                Err(e) => return fail(err, &e),
            };
            let code = emit(out, &record);
            if code != EXIT_OK {
                return code;
            }
            if record.valid {
                EXIT_OK
            } else {
                for v in &record.violations {
                    let _ = writeln!(err, "violation at ({}, {}): {}", v.row, v.col, v.message);
                }
                if let Some(b) = &record.bounds_error {
                    let _ = writeln!(err, "invalid bounds: {b}");
                }
                EXIT_INVALID
            }
        }
        Command::Front(args) => {
            let result = load(&args.input, args.samples).and_then(|l| cmd_front(&l).map(|r| (l, r)));
            let (loaded, (front, record)) = match result {
                Ok(r) => r,
                Err(e) => return fail(err, &e),
            };
            if let Some(path) = &args.output {
                if let Err(e) = write_samples_csv(path, &front.sample(loaded.options.samples)) {
                    let _ = writeln!(err, "error [io]: cannot write {}: {e}", path.display());
                    return EXIT_IO;
                }
            }
            emit(out, &record)
        }
        Command::Rate(args) => {
            let selection = match &args.at_alpha {
                Some(text) => match parse_numeral(text) {
                    Ok(a) if !a.is_zero() && a.is_finite() => Selection::At(a),
                    Ok(a) => return fail(err, &Error::OutOfRange(format!("alpha = {a} is not a positive finite value"))),
                    Err(e) => return fail(err, &e),
                },
                None if args.all => Selection::All,
                None => Selection::Endpoints,
            };
            let verify = args.verify.then_some(args.grid_resolution.unwrap_or(0));
            match load(&args.input, args.samples).and_then(|l| cmd_rate(&l, selection, verify)) {
                Ok(record) => {
                    if let Some(v) = &record.verification {
                        if !v.agrees {
                            let _ = writeln!(
                                err,
                                "warning: grid oracle disagrees (region violation {:.3e}, coverage gap {:.3e}, tolerance {:.3e})",
                                v.max_region_violation, v.max_coverage_gap, v.tolerance
                            );
                        }
                    }
                    emit(out, &record)
                }
                Err(e) => fail(err, &e),
            }
        }
    }
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_from(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
