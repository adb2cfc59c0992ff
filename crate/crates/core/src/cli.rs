//! Command-line front end: `count`, `slice`, `unslice`, `verify` and `bench`.
//!
//! Every command produces a [`RunReport`], printed either as canonical JSON
//! (sorted keys, coefficients as decimal strings) or as plain text.
//!
//! Exit codes: `0` success, `1` a verification or agreement failure, `2`
//! invalid input or flags.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::commutation::{commutation_check_exact, lhs_closed_form, lhs_truncated};
use crate::fock::{gamma_chain_matrix_element, operator_matrix, transfer_partition_function, Prune};
use crate::partition::{enumerate_partitions, Partition};
use crate::plane::{count_plane_partitions, enumerate_plane_partitions, PlanePartition, SliceSequence};
use crate::qseries::{finite_grid_product, macmahon_product, QSeries};
use crate::rational::Rational;
use crate::tableaux::count_skew_ssyt_weighted;

pub const DEFAULT_BRUTEFORCE_CEILING: u64 = 14;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Domain(#[from] crate::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// Output of one command. Field order is alphabetical so that the emitted
/// JSON is already in canonical key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    /// Wall-clock milliseconds per method or phase.
    pub timings: BTreeMap<String, f64>,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: BTreeMap::new(),
            timings: BTreeMap::new(),
        }
    }

    fn param(&mut self, key: &str, value: impl Serialize) {
        self.parameters.insert(key.to_string(), json!(value));
    }

    fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.to_string(), json!(value));
    }

    /// Every verdict string anywhere in `results`.
    fn verdicts(&self) -> Vec<Verdict> {
        fn walk(v: &Value, out: &mut Vec<Verdict>) {
            match v {
                Value::String(s) => {
                    if let Ok(verdict) = serde_json::from_value(Value::String(s.clone())) {
                        out.push(verdict);
                    }
                }
                Value::Array(items) => items.iter().for_each(|i| walk(i, out)),
                Value::Object(map) => map.values().for_each(|i| walk(i, out)),
                _ => {}
            }
        }
        let mut out = Vec::new();
        for v in self.results.values() {
            walk(v, &mut out);
        }
        out
    }

    pub fn passed(&self) -> bool {
        !self.verdicts().contains(&Verdict::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        let flat = |v: &Value| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "param {k}: {}", flat(v));
        }
        for (k, v) in &self.results {
            match v {
                Value::Object(map) => {
                    for (sub, inner) in map {
                        let _ = writeln!(out, "{k}.{sub}: {}", flat(inner));
                    }
                }
                _ => {
                    let _ = writeln!(out, "{k}: {}", flat(v));
                }
            }
        }
        for (k, ms) in &self.timings {
            let _ = writeln!(out, "time {k}: {ms:.3} ms");
        }
        out
    }
}

/// Milliseconds, rounded to whole microseconds.
fn millis(start: Instant) -> f64 {
    start.elapsed().as_micros() as f64 / 1e3
}

fn timed<T>(timings: &mut BTreeMap<String, f64>, key: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.insert(key.to_string(), millis(start));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Product,
    Transfer,
    Bruteforce,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Product, Method::Transfer, Method::Bruteforce];

    fn name(self) -> &'static str {
        match self {
            Method::Product => "product",
            Method::Transfer => "transfer",
            Method::Bruteforce => "bruteforce",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PruneArg {
    Plain,
    Sharp,
}

impl From<PruneArg> for Prune {
    fn from(p: PruneArg) -> Self {
        match p {
            PruneArg::Plain => Prune::Plain,
            PruneArg::Sharp => Prune::Sharp,
        }
    }
}

fn bruteforce_series(order: usize) -> QSeries {
    QSeries::from_coeffs((0..order as u64).map(count_plane_partitions), order)
}

fn compute(method: Method, order: usize, prune: Prune) -> QSeries {
    match method {
        Method::Product => macmahon_product(order),
        Method::Transfer => transfer_partition_function(order, None, prune),
        Method::Bruteforce => bruteforce_series(order),
    }
}

#[derive(Debug, Clone)]
pub struct CountOptions {
    pub terms: usize,
    pub methods: Vec<Method>,
    pub bruteforce_ceiling: u64,
    pub prune: Prune,
}

impl CountOptions {
    pub fn new(terms: usize) -> Self {
        CountOptions {
            terms,
            methods: Method::ALL.to_vec(),
            bruteforce_ceiling: DEFAULT_BRUTEFORCE_CEILING,
            prune: Prune::Plain,
        }
    }
}

/// Coefficients of `q^0 .. q^(terms-1)` by each selected method.
pub fn cmd_count(opts: &CountOptions) -> Result<RunReport, CliError> {
    if opts.terms == 0 {
        return Err(CliError::Invalid("--terms must be at least 1".into()));
    }
    let mut methods = opts.methods.clone();
    methods.sort();
    methods.dedup();
    if methods.is_empty() {
        return Err(CliError::Invalid("no methods selected".into()));
    }
    let max_volume = opts.terms as u64 - 1;
    if methods.contains(&Method::Bruteforce) && max_volume > opts.bruteforce_ceiling {
        return Err(CliError::Invalid(format!(
            "bruteforce refused: volume {max_volume} exceeds ceiling {}",
            opts.bruteforce_ceiling
        )));
    }

    let mut report = RunReport::new("count");
    report.param("terms", opts.terms);
    report.param("methods", methods.iter().map(|m| m.name()).collect::<Vec<_>>());
    report.param("prune", prune_name(opts.prune));

    let mut coefficients = BTreeMap::new();
    let mut series = Vec::new();
    for &m in &methods {
        let s = timed(&mut report.timings, m.name(), || compute(m, opts.terms, opts.prune));
        coefficients.insert(m.name(), s.to_decimal_strings());
        series.push(s);
    }
    report.result("coefficients", coefficients);
    let agreement = if series.len() < 2 {
        Verdict::Skipped
    } else {
        Verdict::from_bool(series.windows(2).all(|w| w[0].coeffs() == w[1].coeffs()))
    };
    report.result("agreement", agreement);
    Ok(report)
}

fn prune_name(p: Prune) -> &'static str {
    match p {
        Prune::Plain => "plain",
        Prune::Sharp => "sharp",
    }
}

fn slices_json(seq: &SliceSequence) -> Value {
    let items: Vec<Value> = seq.iter().map(|(t, s)| json!({ "t": t, "parts": s.parts() })).collect();
    Value::Array(items)
}

/// Diagonal slices of a plane partition given as text rows or JSON.
pub fn cmd_slice(input: &str, roundtrip: bool) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("slice");
    report.param("roundtrip", roundtrip);
    let pi = PlanePartition::parse(input)?;
    let seq = timed(&mut report.timings, "slice", || pi.slice());
    report.result("volume", pi.volume());
    report.result("slices", slices_json(&seq));
    if roundtrip {
        let back = seq.unslice()?;
        report.result("roundtrip", Verdict::from_bool(back == pi));
    }
    Ok(report)
}

/// Reassembles a plane partition from its slices.
pub fn cmd_unslice(input: &str, roundtrip: bool) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("unslice");
    report.param("roundtrip", roundtrip);
    let seq = SliceSequence::parse(input)?;
    let pi = timed(&mut report.timings, "unslice", || seq.unslice())?;
    report.result("volume", pi.volume());
    report.result("matrix", pi.to_matrix());
    if roundtrip {
        report.result("roundtrip", Verdict::from_bool(pi.slice() == seq));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Slicing,
    Commutation,
    Product,
    Schur,
    Adjoint,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Slicing => "slicing",
            Suite::Commutation => "commutation",
            Suite::Product => "product",
            Suite::Schur => "schur",
            Suite::Adjoint => "adjoint",
        }
    }

    /// `(default, ceiling)` of the suite's size parameter.
    pub fn size_limits(self) -> (u64, u64) {
        match self {
            Suite::Slicing => (8, 12),
            Suite::Commutation => (4, 6),
            Suite::Product => (15, 40),
            Suite::Schur => (3, 4),
            Suite::Adjoint => (6, 8),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub suite: Suite,
    /// Volume (slicing), partition size (commutation, adjoint), box side
    /// (schur) or truncation order (product).
    pub size: Option<u64>,
    /// Evaluation points for the commutation suite.
    pub points: Vec<(Rational, Rational)>,
}

impl VerifyOptions {
    pub fn new(suite: Suite) -> Self {
        VerifyOptions { suite, size: None, points: default_points() }
    }
}

pub fn default_points() -> Vec<(Rational, Rational)> {
    let r = |n: i64, d: i64| Rational::new(n, d).expect("nonzero denominator");
    vec![(r(1, 2), r(1, 3)), (r(2, 3), r(1, 4)), (r(-1, 2), r(1, 3))]
}

/// Tracks one named property: how many cases ran and the first failure.
struct Property {
    cases: u64,
    counterexample: Option<String>,
}

impl Property {
    fn new() -> Self {
        Property { cases: 0, counterexample: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn record(self, name: &str, report: &mut RunReport) {
        let mut entry = json!({
            "cases": self.cases,
            "verdict": Verdict::from_bool(self.counterexample.is_none()),
        });
        if let Some(c) = self.counterexample {
            entry["counterexample"] = json!(c);
        }
        report
            .results
            .entry("properties".into())
            .or_insert_with(|| json!({}))
            .as_object_mut()
            .expect("properties is an object")
            .insert(name.to_string(), entry);
    }
}

pub fn cmd_verify(opts: &VerifyOptions) -> Result<RunReport, CliError> {
    let (default, ceiling) = opts.suite.size_limits();
    let size = opts.size.unwrap_or(default);
    if size > ceiling {
        return Err(CliError::Invalid(format!(
            "size {size} exceeds the {} suite ceiling {ceiling}",
            opts.suite.name()
        )));
    }
    let mut report = RunReport::new("verify");
    report.param("suite", opts.suite.name());
    report.param("size", size);
    let start = Instant::now();
    match opts.suite {
        Suite::Slicing => verify_slicing(size, &mut report),
        Suite::Commutation => verify_commutation(size, &opts.points, &mut report)?,
        Suite::Product => {
            if size == 0 {
                return Err(CliError::Invalid("order must be at least 1".into()));
            }
            verify_product(size as usize, &mut report)
        }
        Suite::Schur => verify_schur(size, &mut report)?,
        Suite::Adjoint => verify_adjoint(size, &mut report),
    }
    report.timings.insert(opts.suite.name().into(), millis(start));
    Ok(report)
}

fn verify_slicing(max_volume: u64, report: &mut RunReport) {
    let mut round_trip = Property::new();
    let mut interlacing = Property::new();
    let mut volume = Property::new();
    for v in 0..=max_volume {
        for pi in enumerate_plane_partitions(v) {
            let seq = pi.slice();
            interlacing.check(seq.check_interlacing().is_ok(), || format!("{pi} -> {seq}"));
            volume.check(seq.total_size() == pi.volume(), || format!("{pi} -> {seq}"));
            let back = seq.unslice();
            round_trip.check(back.as_ref() == Ok(&pi), || format!("{pi} -> {seq} -> {back:?}"));
        }
    }
    report.result("census", round_trip.cases);
    round_trip.record("round_trip", report);
    interlacing.record("single_peak_interlacing", report);
    volume.record("slice_sizes_sum_to_volume", report);
}

/// Largest `size(nu)` summed term by term when checking the closed form.
pub const COMMUTATION_TRUNCATION: u64 = 60;

fn verify_commutation(
    max_size: u64,
    points: &[(Rational, Rational)],
    report: &mut RunReport,
) -> Result<(), CliError> {
    report.param(
        "points",
        points.iter().map(|(x, y)| format!("{x},{y}")).collect::<Vec<_>>(),
    );
    let all = enumerate_partitions(max_size);
    let mut relation = Property::new();
    let mut closed_form = Property::new();
    for (x, y) in points {
        for mu in &all {
            for mu1 in &all {
                let rep = commutation_check_exact(mu, mu1, x, y)?;
                relation.check(rep.holds, || format!("mu={mu} mu1={mu1} x={x} y={y}: {rep}"));
                let closed = lhs_closed_form(mu, mu1, x, y)?;
                let (partial, bound) = lhs_truncated(mu, mu1, x, y, COMMUTATION_TRUNCATION)?;
                let gap = (&closed - &partial).abs();
                closed_form.check(gap <= bound, || {
                    format!("mu={mu} mu1={mu1} x={x} y={y}: closed {closed}, partial {partial}, bound {bound}")
                });
            }
        }
    }
    relation.record("relation", report);
    closed_form.record("closed_form_vs_truncated_sum", report);
    Ok(())
}

fn verify_product(order: usize, report: &mut RunReport) {
    let mut timings = BTreeMap::new();
    let product = timed(&mut timings, "product", || macmahon_product(order));
    let grid = timed(&mut timings, "grid", || finite_grid_product(order, order));
    let transfer = timed(&mut timings, "transfer", || transfer_partition_function(order, None, Prune::Plain));
    report.timings.extend(timings);

    let mut agree = Property::new();
    agree.check(transfer == product, || format!("transfer {transfer} vs product {product}"));
    agree.check(grid == product, || format!("grid {grid} vs product {product}"));
    agree.record("transfer_grid_product_agree", report);

    let mut stable = Property::new();
    for steps in order..=order + 3 {
        let z = transfer_partition_function(order, Some(steps), Prune::Plain);
        stable.check(z == transfer, || format!("steps {steps}: {z}"));
        let g = finite_grid_product(steps, order);
        stable.check(g == grid, || format!("grid side {steps}: {g}"));
    }
    stable.record("truncation_independent_of_steps", report);

    let mut sharp = Property::new();
    let z = transfer_partition_function(order, None, Prune::Sharp);
    sharp.check(z == transfer, || format!("sharp {z} vs plain {transfer}"));
    sharp.record("sharp_prune_matches_plain", report);

    report.result("coefficients", product.to_decimal_strings());
}

/// Partitions with at most `rows` parts, each at most `side`.
fn inside_box(side: u64, rows: usize) -> Vec<Partition> {
    let bound = Partition::from_sorted(vec![side; rows]);
    enumerate_partitions(side * rows as u64)
        .into_iter()
        .filter(|p| p.is_contained_in(&bound))
        .collect()
}

fn weight_sequences(max_len: usize, max_entry: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for seq in &frontier {
            for e in 0..=max_entry {
                let mut s: Vec<u64> = seq.clone();
                s.push(e);
                next.push(s);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Truncation order for the schur suite.
pub const SCHUR_ORDER: usize = 32;

fn verify_schur(side: u64, report: &mut RunReport) -> Result<(), CliError> {
    let shapes = inside_box(side, 3);
    let weights = weight_sequences(3, 3);
    let mut prop = Property::new();
    for lambda in &shapes {
        for mu in shapes.iter().filter(|m| m.is_contained_in(lambda)) {
            for c in &weights {
                let chain = gamma_chain_matrix_element(lambda, mu, c, SCHUR_ORDER);
                let tableaux = count_skew_ssyt_weighted(lambda, mu, c.len(), c, SCHUR_ORDER)?;
                prop.check(chain == tableaux, || {
                    format!("lambda={lambda} mu={mu} c={c:?}: chain {chain} vs tableaux {tableaux}")
                });
            }
        }
    }
    prop.record("chain_matches_tableaux", report);
    Ok(())
}

fn verify_adjoint(max_size: u64, report: &mut RunReport) {
    let mut prop = Property::new();
    for k in 0..=max_size {
        let basis = enumerate_partitions(k);
        let plus = operator_matrix(&basis, false);
        let minus = operator_matrix(&basis, true);
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                prop.check(minus[i][j] == plus[j][i], || {
                    format!("K={k}: <{}|Γ-|{}> != <{}|Γ+|{}>", basis[i], basis[j], basis[j], basis[i])
                });
            }
        }
    }
    prop.record("gamma_minus_is_transpose_of_gamma_plus", report);
}

/// Times the three methods at one order; brute force is skipped above the ceiling.
pub fn cmd_bench(order: usize, bruteforce_ceiling: u64, prune: Prune) -> Result<RunReport, CliError> {
    if order == 0 {
        return Err(CliError::Invalid("--order must be at least 1".into()));
    }
    let mut report = RunReport::new("bench");
    report.param("order", order);
    report.param("bruteforce_ceiling", bruteforce_ceiling);
    report.param("prune", prune_name(prune));

    let mut coefficients = BTreeMap::new();
    let mut status = BTreeMap::new();
    let reference = timed(&mut report.timings, "product", || compute(Method::Product, order, prune));
    coefficients.insert("product", reference.to_decimal_strings());
    status.insert("product", Verdict::Pass);
    for m in [Method::Transfer, Method::Bruteforce] {
        if m == Method::Bruteforce && order as u64 - 1 > bruteforce_ceiling {
            status.insert(m.name(), Verdict::Skipped);
            continue;
        }
        let s = timed(&mut report.timings, m.name(), || compute(m, order, prune));
        status.insert(m.name(), Verdict::from_bool(s == reference));
        coefficients.insert(m.name(), s.to_decimal_strings());
    }
    report.result("coefficients", coefficients);
    report.result("status", status);
    Ok(report)
}

#[derive(Debug, Parser)]
#[command(name = "macmahon", version, about = "Plane-partition generating functions, computed three ways")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of the generating function by one or more methods.
    Count {
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "product,transfer,bruteforce")]
        methods: Vec<Method>,
        /// Largest volume the brute-force census may be asked for.
        #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_CEILING)]
        max_size: u64,
        #[arg(long, value_enum, default_value = "plain")]
        prune: PruneArg,
    },
    /// Diagonal slices of a plane partition (text rows or JSON; `-` for stdin).
    Slice {
        #[arg(long)]
        input: String,
        #[arg(long)]
        roundtrip: bool,
    },
    /// Plane partition from a slice sequence (one slice per line, `-` for ∅, or JSON).
    Unslice {
        #[arg(long)]
        input: String,
        #[arg(long)]
        roundtrip: bool,
    },
    /// Runs one property suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Size parameter of the suite; see `Suite::size_limits`.
        #[arg(long)]
        max_size: Option<u64>,
        /// Truncation order; alias of --max-size for the product suite.
        #[arg(long)]
        order: Option<u64>,
        /// Commutation evaluation points as `x,y`, e.g. `1/2,1/3`. Repeatable.
        #[arg(long = "point")]
        points: Vec<String>,
    },
    /// Times the three methods at one truncation order.
    Bench {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_CEILING)]
        max_size: u64,
        #[arg(long, value_enum, default_value = "plain")]
        prune: PruneArg,
    },
}

fn read_input(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn parse_point(s: &str) -> Result<(Rational, Rational), CliError> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| CliError::Invalid(format!("point {s:?} is not of the form x,y")))?;
    Ok((x.parse()?, y.parse()?))
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<RunReport, CliError> {
    match &cli.command {
        Command::Count { terms, methods, max_size, prune } => cmd_count(&CountOptions {
            terms: *terms,
            methods: methods.clone(),
            bruteforce_ceiling: *max_size,
            prune: (*prune).into(),
        }),
        Command::Slice { input, roundtrip } => cmd_slice(&read_input(input)?, *roundtrip),
        Command::Unslice { input, roundtrip } => cmd_unslice(&read_input(input)?, *roundtrip),
        Command::Verify { suite, max_size, order, points } => {
            let size = match (suite, order) {
                (Suite::Product, Some(o)) => Some(*o),
                (_, Some(_)) => return Err(CliError::Invalid("--order only applies to the product suite".into())),
                _ => *max_size,
            };
            let points = if points.is_empty() {
                default_points()
            } else {
                points.iter().map(|p| parse_point(p)).collect::<Result<_, _>>()?
            };
            cmd_verify(&VerifyOptions { suite: *suite, size, points })
        }
        Command::Bench { order, max_size, prune } => cmd_bench(*order, *max_size, (*prune).into()),
    }
}

/// Entry point shared by the binary: parses arguments, runs, prints, and
/// returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let mut rendered = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    if !rendered.ends_with('\n') {
        rendered.push('\n');
    }
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{rendered}"),
    }
    report.exit_code()
}
