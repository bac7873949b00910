//! Batch verification: read graph6 records, compute `γ` and `γ_e` exactly,
//! run the enabled constructions with their checks, and stream one report
//! record per input graph.
//!
//! JSONL reports start with a header holding the schema tag and the full
//! configuration, then one record per input line in input order, then a
//! summary. CSV reports hold the records only.

pub mod corpus;

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::clawfree::{dominating_transversal, ExchangeError};
use crate::cubic::{build_cubic_scheme, cubic_certificate, cubic_dominating_set, CubicOptions};
use crate::dyadic::Dyadic;
use crate::exact::{check_inequality_e1, matching_pairs, ExactSolver, Matching, DEFAULT_CAP};
use crate::graph::graph6::to_graph6_string;
use crate::graph::{parse_graph6, random_regular, write_graph6, Edge, GenerateError, Graph};
use crate::selection::{
    derandomize_conditional, expectation_report, monte_carlo, transversal_bound, uniform_scheme,
};

pub const SCHEMA: &str = "domcheck-report/1";

/// Standard errors a Monte Carlo mean may stray from the exact value before
/// it is flagged.
pub const MC_TOLERANCE_SE: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Methods {
    /// Sampled random transversals.
    pub t1: bool,
    /// Conditional-expectation derandomization of the uniform scheme.
    pub t1d: bool,
    /// The coupled-pair and triple construction on cubic graphs.
    pub t2: bool,
    /// Local exchange on cubic claw-free graphs.
    pub t3: bool,
}

impl Methods {
    pub fn all() -> Methods {
        Methods {
            t1: true,
            t1d: true,
            t2: true,
            t3: true,
        }
    }

    pub fn none() -> Methods {
        Methods {
            t1: false,
            t1d: false,
            t2: false,
            t3: false,
        }
    }
}

impl Default for Methods {
    fn default() -> Self {
        Methods::all()
    }
}

impl FromStr for Methods {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Methods, ConfigError> {
        let mut m = Methods::none();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "t1" => m.t1 = true,
                "t1d" => m.t1d = true,
                "t2" => m.t2 = true,
                "t3" => m.t3 = true,
                other => return Err(ConfigError::UnknownMethod(other.to_string())),
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Jsonl,
    Csv,
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Format, ConfigError> {
        match s {
            "jsonl" => Ok(Format::Jsonl),
            "csv" => Ok(Format::Csv),
            other => Err(ConfigError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown method {0:?} (expected t1, t1d, t2, t3)")]
    UnknownMethod(String),
    #[error("unknown format {0:?} (expected jsonl or csv)")]
    UnknownFormat(String),
    #[error("solver cap must lie in 1..=64, got {0}")]
    InvalidCap(usize),
    #[error("jobs must be positive")]
    NoJobs,
    #[error("sampling needs at least one trial")]
    NoTrials,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    /// Path, or `-` for standard input. Recorded for the header only.
    pub input: String,
    pub cap: usize,
    pub seed: u64,
    pub trials: u64,
    pub methods: Methods,
    pub jobs: usize,
    pub format: Format,
    pub fail_fast: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            input: "-".to_string(),
            cap: DEFAULT_CAP,
            seed: 0,
            trials: 10_000,
            methods: Methods::all(),
            jobs: 1,
            format: Format::Jsonl,
            fail_fast: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.cap == 0 || self.cap > 64 {
            return Err(ConfigError::InvalidCap(self.cap));
        }
        if self.jobs == 0 {
            return Err(ConfigError::NoJobs);
        }
        if self.methods.t1 && self.trials == 0 {
            return Err(ConfigError::NoTrials);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct E1Report {
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampledReport {
    /// Exact `E|B|` for the uniform scheme over the minimum maximal matching.
    pub expected_b: Dyadic,
    /// `(n − 2γ_e)/2^Δ`, regular graphs only.
    pub bound_rhs: Option<Dyadic>,
    /// `γ_e + E|B| ≤ factor(Δ)·γ_e`, regular graphs only.
    pub chain_holds: Option<bool>,
    pub mc_mean: f64,
    pub mc_std_err: f64,
    pub mc_within: bool,
    /// Smallest `|D ∪ B|` over the samples.
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerandomizedReport {
    pub size: usize,
    /// `⌊γ_e + E|B|⌋`.
    pub limit: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubicReport {
    pub size: usize,
    pub expected_b: Vec<Dyadic>,
    pub p: Vec<usize>,
    pub t: Vec<usize>,
    pub failed: Vec<String>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExchangeReport {
    pub size: usize,
    pub dominates: bool,
    pub moves: usize,
    pub equals_gamma_e: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct MethodResults {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t1: Option<SampledReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t1d: Option<DerandomizedReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t2: Option<CubicReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t3: Option<ExchangeReport>,
}

/// Dominating-set sizes per method, where the method ran.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct Sizes {
    pub t1_sampled: Option<usize>,
    pub t1_derand: Option<usize>,
    pub t2: Option<usize>,
    pub t3: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witnesses {
    pub dominating_set: Vec<usize>,
    pub matching: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureRecord {
    /// 1-based input line number.
    pub graph_id: usize,
    pub graph6: String,
    pub n: usize,
    pub delta: Option<usize>,
    pub connected: bool,
    pub claw_free: bool,
    pub gamma: usize,
    pub gamma_e: usize,
    /// `γ/γ_e` in lowest terms.
    pub ratio: Option<String>,
    pub ratio_decimal: Option<String>,
    /// `γ ≤ γ_e`, for regular graphs with at least one edge.
    pub conjecture_holds: Option<bool>,
    pub line_graph_check: Option<bool>,
    pub e1: Option<E1Report>,
    pub witnesses: Witnesses,
    pub sizes: Sizes,
    pub methods: MethodResults,
    /// Certificate or cross-check failures, by name.
    pub flags: Vec<String>,
}

impl ConjectureRecord {
    pub fn is_counterexample(&self) -> bool {
        self.conjecture_holds == Some(false)
    }

    /// Failures that count as certificate violations. Monte Carlo drift is
    /// reported as a flag but is statistical, so it is not one of them.
    pub fn violations(&self) -> Vec<&str> {
        self.flags
            .iter()
            .map(String::as_str)
            .filter(|f| *f != "t1:monte_carlo")
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecordError {
    pub graph_id: usize,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Record(Box<ConjectureRecord>),
    Error(RecordError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub errors: usize,
    pub regular: usize,
    pub min_ratio: Option<String>,
    pub max_ratio: Option<String>,
    pub counterexamples: Vec<usize>,
    pub certificate_violations: Vec<usize>,
    pub monte_carlo_flags: Vec<usize>,
    pub stopped_early: bool,
    pub exit_code: i32,
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Pool(String),
}

fn ratio_strings(gamma: usize, gamma_e: usize) -> (Option<String>, Option<String>) {
    if gamma_e == 0 {
        return (None, None);
    }
    let r = Ratio::new(gamma as u64, gamma_e as u64);
    (
        Some(format!("{}/{}", r.numer(), r.denom())),
        Some(format!("{:.6}", gamma as f64 / gamma_e as f64)),
    )
}

/// Runs every check on one graph.
pub fn check_graph(
    config: &RunConfig,
    graph_id: usize,
    g: &Graph,
) -> Result<ConjectureRecord, String> {
    let solver = ExactSolver::new(config.cap).map_err(|e| e.to_string())?;
    let gamma = solver.domination_number(g).map_err(|e| e.to_string())?;
    let (gamma_e, matching) = if g.edge_count() == 0 {
        (0, Matching::empty(g))
    } else {
        let r = solver
            .edge_domination_number(g)
            .map_err(|e| e.to_string())?;
        (r.value, r.witness)
    };
    let delta = g.is_regular();
    let regular_with_edges = delta.filter(|&d| d > 0);
    let (ratio, ratio_decimal) = ratio_strings(gamma.value, gamma_e);
    let mut flags = Vec::new();

    let line_graph_check = (g.edge_count() > 0)
        .then(|| solver.cross_check_line_graph(g).map(|c| c.holds()))
        .transpose()
        .map_err(|e| e.to_string())?;
    if line_graph_check == Some(false) {
        flags.push("line_graph".to_string());
    }
    let e1 = regular_with_edges.map(|_| {
        let c = check_inequality_e1(g, &matching).expect("regular graph, maximal matching");
        E1Report {
            lhs: c.lhs,
            rhs: c.rhs,
            slack: c.slack(),
        }
    });

    let mut methods = MethodResults::default();
    let seed = config.seed.wrapping_add(graph_id as u64);
    if config.methods.t1 || config.methods.t1d {
        let scheme = uniform_scheme(g, &matching).expect("minimum maximal matching");
        let report = expectation_report(g, &scheme).expect("scheme over g");
        if config.methods.t1 {
            let mc = monte_carlo(g, &scheme, config.trials, seed);
            let within = mc.within(report.total.to_f64(), MC_TOLERANCE_SE);
            let chain_holds = regular_with_edges.map(|d| {
                let lhs = (&Dyadic::from_int(gamma_e) + &report.total).to_ratio();
                let factor = transversal_bound(d as u32);
                lhs <= factor * num_rational::BigRational::from_integer(gamma_e.into())
            });
            let bound_holds = report
                .bound_rhs
                .as_ref()
                .is_none_or(|rhs| report.total <= *rhs);
            if !within {
                flags.push("t1:monte_carlo".to_string());
            }
            if chain_holds == Some(false) || !bound_holds {
                flags.push("t1:chain".to_string());
            }
            methods.t1 = Some(SampledReport {
                expected_b: report.total.clone(),
                bound_rhs: report.bound_rhs.clone(),
                chain_holds,
                mc_mean: mc.mean,
                mc_std_err: mc.std_err,
                mc_within: within,
                size: mc.best_size,
            });
        }
        if config.methods.t1d {
            let d = derandomize_conditional(g, &scheme)
                .expect("scheme over g")
                .dominating_set();
            let limit = (&Dyadic::from_int(gamma_e) + &report.total).floor();
            let holds = g.dominates(&d) && num_bigint::BigInt::from(d.len()) <= limit;
            if !holds {
                flags.push("t1d:bound".to_string());
            }
            methods.t1d = Some(DerandomizedReport {
                size: d.len(),
                limit: limit.to_string(),
                holds,
            });
        }
    }

    let cubic = g.is_cubic();
    if config.methods.t2 && cubic {
        methods.t2 = Some(run_cubic(g, &matching, &mut flags));
    }
    let claw_free = g.is_claw_free();
    if config.methods.t3 && cubic && claw_free {
        let report = match dominating_transversal(g, &matching) {
            Ok(ex) => ExchangeReport {
                size: ex.d.len(),
                dominates: g.dominates(&ex.d),
                moves: ex.state.moves.len(),
                equals_gamma_e: ex.d.len() == gamma_e,
                error: None,
            },
            Err(e) => ExchangeReport {
                size: 0,
                dominates: false,
                moves: 0,
                equals_gamma_e: false,
                error: Some(match &e {
                    ExchangeError::NoImprovingMove { state } => {
                        format!(
                            "{e}; D = {:?}, B = {:?}",
                            state.d.to_vec(),
                            state.b.to_vec()
                        )
                    }
                    _ => e.to_string(),
                }),
            },
        };
        if !(report.dominates && report.equals_gamma_e) {
            flags.push("t3:exchange".to_string());
        }
        methods.t3 = Some(report);
    }

    Ok(ConjectureRecord {
        graph_id,
        graph6: to_graph6_string(g),
        n: g.n(),
        delta,
        connected: g.is_connected(),
        claw_free,
        gamma: gamma.value,
        gamma_e,
        ratio,
        ratio_decimal,
        conjecture_holds: regular_with_edges.map(|_| gamma.value <= gamma_e),
        line_graph_check,
        e1,
        witnesses: Witnesses {
            dominating_set: gamma.witness.to_vec(),
            matching: matching_pairs(&matching),
        },
        sizes: Sizes {
            t1_sampled: methods.t1.as_ref().map(|t| t.size),
            t1_derand: methods.t1d.as_ref().map(|t| t.size),
            t2: methods.t2.as_ref().map(|t| t.size),
            t3: methods
                .t3
                .as_ref()
                .filter(|t| t.error.is_none())
                .map(|t| t.size),
        },
        methods,
        flags,
    })
}

/// Certificates per component, and the size of the derived dominating set.
fn run_cubic(g: &Graph, m: &Matching, flags: &mut Vec<String>) -> CubicReport {
    let options = CubicOptions::default();
    let mut report = CubicReport {
        size: 0,
        expected_b: Vec::new(),
        p: Vec::new(),
        t: Vec::new(),
        failed: Vec::new(),
        holds: true,
    };
    for comp in g.components() {
        let (sub, labels) = g.induced_subgraph(&comp);
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in labels.iter().enumerate() {
            local[v] = i;
        }
        let edges = m
            .edges()
            .iter()
            .filter(|e| local[e.u] != usize::MAX)
            .map(|e| Edge::new(local[e.u], local[e.v]));
        let sub_m = Matching::new(&sub, edges).expect("restriction of a matching");
        match build_cubic_scheme(&sub, &sub_m, options) {
            Ok(built) => {
                let cert = match cubic_certificate(&sub, &built) {
                    Ok(c) => c,
                    Err(v) => {
                        report.failed.extend(v.failed.iter().map(|s| s.to_string()));
                        *v.certificate
                    }
                };
                report.expected_b.push(cert.expected_b.clone());
                report.p.push(cert.counts.p);
                report.t.push(cert.t);
            }
            Err(e) => report.failed.push(e.to_string()),
        }
    }
    match cubic_dominating_set(g, m, options) {
        Ok(d) => report.size = d.len(),
        Err(e) => report.failed.push(e.to_string()),
    }
    report.holds = report.failed.is_empty();
    flags.extend(report.failed.iter().map(|f| format!("t2:{f}")));
    report
}

#[derive(Serialize)]
struct Header<'a> {
    #[serde(rename = "type")]
    kind: &'static str,
    schema: &'static str,
    config: &'a RunConfig,
}

#[derive(Serialize)]
struct Tagged<'a, T> {
    #[serde(rename = "type")]
    kind: &'static str,
    #[serde(flatten)]
    body: &'a T,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    graph_id: usize,
    graph6: &'a str,
    n: usize,
    delta: Option<usize>,
    connected: bool,
    claw_free: bool,
    gamma: usize,
    gamma_e: usize,
    ratio: Option<&'a str>,
    conjecture_holds: Option<bool>,
    t1_sampled: Option<usize>,
    t1_derand: Option<usize>,
    t2: Option<usize>,
    t3: Option<usize>,
    flags: String,
    error: Option<&'a str>,
}

impl<'a> CsvRow<'a> {
    fn of(outcome: &'a Outcome) -> CsvRow<'a> {
        match outcome {
            Outcome::Record(r) => CsvRow {
                graph_id: r.graph_id,
                graph6: &r.graph6,
                n: r.n,
                delta: r.delta,
                connected: r.connected,
                claw_free: r.claw_free,
                gamma: r.gamma,
                gamma_e: r.gamma_e,
                ratio: r.ratio.as_deref(),
                conjecture_holds: r.conjecture_holds,
                t1_sampled: r.sizes.t1_sampled,
                t1_derand: r.sizes.t1_derand,
                t2: r.sizes.t2,
                t3: r.sizes.t3,
                flags: r.flags.join(";"),
                error: None,
            },
            Outcome::Error(e) => CsvRow {
                graph_id: e.graph_id,
                graph6: "",
                n: 0,
                delta: None,
                connected: false,
                claw_free: false,
                gamma: 0,
                gamma_e: 0,
                ratio: None,
                conjecture_holds: None,
                t1_sampled: None,
                t1_derand: None,
                t2: None,
                t3: None,
                flags: String::new(),
                error: Some(&e.error),
            },
        }
    }
}

#[derive(Default)]
struct Accumulator {
    records: usize,
    errors: usize,
    regular: usize,
    min_ratio: Option<Ratio<u64>>,
    max_ratio: Option<Ratio<u64>>,
    counterexamples: Vec<usize>,
    certificate_violations: Vec<usize>,
    monte_carlo_flags: Vec<usize>,
}

impl Accumulator {
    fn add(&mut self, outcome: &Outcome) {
        let r = match outcome {
            Outcome::Record(r) => r,
            Outcome::Error(_) => {
                self.errors += 1;
                return;
            }
        };
        self.records += 1;
        if r.conjecture_holds.is_some() {
            self.regular += 1;
            let q = Ratio::new(r.gamma as u64, r.gamma_e as u64);
            self.min_ratio = Some(self.min_ratio.map_or(q, |m| m.min(q)));
            self.max_ratio = Some(self.max_ratio.map_or(q, |m| m.max(q)));
        }
        if r.is_counterexample() {
            self.counterexamples.push(r.graph_id);
        }
        if !r.violations().is_empty() {
            self.certificate_violations.push(r.graph_id);
        }
        if r.flags.iter().any(|f| f == "t1:monte_carlo") {
            self.monte_carlo_flags.push(r.graph_id);
        }
    }

    fn finish(self, stopped_early: bool) -> Summary {
        let exit_code = if !self.counterexamples.is_empty() {
            2
        } else if !self.certificate_violations.is_empty() {
            3
        } else {
            0
        };
        let show = |r: Option<Ratio<u64>>| r.map(|q| format!("{}/{}", q.numer(), q.denom()));
        Summary {
            records: self.records,
            errors: self.errors,
            regular: self.regular,
            min_ratio: show(self.min_ratio),
            max_ratio: show(self.max_ratio),
            counterexamples: self.counterexamples,
            certificate_violations: self.certificate_violations,
            monte_carlo_flags: self.monte_carlo_flags,
            stopped_early,
            exit_code,
        }
    }
}

const CHUNK: usize = 64;

fn process_line(config: &RunConfig, graph_id: usize, line: &str) -> Outcome {
    let result = parse_graph6(line.as_bytes())
        .map_err(|e| format!("graph6: {e}"))
        .and_then(|g| check_graph(config, graph_id, &g));
    match result {
        Ok(r) => Outcome::Record(Box::new(r)),
        Err(error) => Outcome::Error(RecordError { graph_id, error }),
    }
}

enum Sink<W: Write> {
    Jsonl(W),
    Csv(Box<csv::Writer<W>>),
}

impl<W: Write> Sink<W> {
    fn outcome(&mut self, o: &Outcome) -> Result<(), HarnessError> {
        match self {
            Sink::Jsonl(w) => {
                let kind = if matches!(o, Outcome::Record(_)) {
                    "record"
                } else {
                    "error"
                };
                serde_json::to_writer(&mut *w, &Tagged { kind, body: o })?;
                w.write_all(b"\n")?;
            }
            Sink::Csv(w) => w.serialize(CsvRow::of(o))?,
        }
        Ok(())
    }
}

/// Checks every graph6 record from `input`. Blank lines are skipped but
/// still count toward line numbers. Records are processed in parallel on
/// `config.jobs` threads and written in input order.
pub fn run_check<R: BufRead, W: Write>(
    config: &RunConfig,
    input: R,
    output: W,
) -> Result<Summary, HarnessError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    let mut sink = match config.format {
        Format::Jsonl => {
            let mut w = output;
            serde_json::to_writer(
                &mut w,
                &Header {
                    kind: "header",
                    schema: SCHEMA,
                    config,
                },
            )?;
            w.write_all(b"\n")?;
            Sink::Jsonl(w)
        }
        Format::Csv => Sink::Csv(Box::new(csv::Writer::from_writer(output))),
    };
    let mut acc = Accumulator::default();
    let mut lines = input.lines().enumerate();
    let mut stopped_early = false;
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for (i, line) in lines.by_ref() {
            let line = line?;
            let trimmed = line.trim_end_matches(['\r', '\n']);
            if trimmed.trim().is_empty() {
                continue;
            }
            chunk.push((i + 1, trimmed.to_string()));
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<Outcome> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(id, line)| process_line(config, *id, line))
                .collect()
        });
        for o in &outcomes {
            sink.outcome(o)?;
            acc.add(o);
            let bad = matches!(o, Outcome::Record(r) if r.is_counterexample() || !r.violations().is_empty());
            if config.fail_fast && bad {
                stopped_early = true;
                break;
            }
        }
        if stopped_early {
            break;
        }
    }
    let summary = acc.finish(stopped_early);
    match sink {
        Sink::Jsonl(mut w) => {
            serde_json::to_writer(
                &mut w,
                &Tagged {
                    kind: "summary",
                    body: &summary,
                },
            )?;
            w.write_all(b"\n")?;
            w.flush()?;
        }
        Sink::Csv(mut w) => w.flush()?,
    }
    Ok(summary)
}

/// Writes `count` graph6 records, the `i`-th from `random_regular(n, delta,
/// seed + i)`.
pub fn run_gen<W: Write>(
    n: usize,
    delta: usize,
    count: usize,
    seed: u64,
    mut out: W,
) -> Result<(), GenError> {
    for i in 0..count {
        let g = random_regular(n, delta, seed.wrapping_add(i as u64))?;
        out.write_all(&write_graph6(&g))?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Debug, Error)]
pub enum GenError {
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} records ({} regular), {} errors, {} counterexamples, {} certificate violations, ratio range {}..{}, exit {}",
            self.records,
            self.regular,
            self.errors,
            self.counterexamples.len(),
            self.certificate_violations.len(),
            self.min_ratio.as_deref().unwrap_or("-"),
            self.max_ratio.as_deref().unwrap_or("-"),
            self.exit_code
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn run(lines: &str, config: &RunConfig) -> (Summary, String) {
        let mut out = Vec::new();
        let s = run_check(config, lines.as_bytes(), &mut out).unwrap();
        (s, String::from_utf8(out).unwrap())
    }

    fn quick() -> RunConfig {
        RunConfig {
            trials: 500,
            ..RunConfig::default()
        }
    }

    #[test]
    fn fixture_records() {
        let c = quick();
        let fig1 = check_graph(&c, 1, &double_star()).unwrap();
        assert_eq!(
            (fig1.gamma, fig1.gamma_e, fig1.delta, fig1.conjecture_holds),
            (2, 1, None, None)
        );
        let p = check_graph(&c, 2, &prism()).unwrap();
        assert_eq!((p.gamma, p.gamma_e), (2, 2));
        assert_eq!(p.ratio.as_deref(), Some("1/1"));
        assert_eq!(p.conjecture_holds, Some(true));
        assert!(p.flags.is_empty(), "{:?}", p.flags);
        assert_eq!(p.methods.t3.as_ref().unwrap().size, 2);
        let k4 = check_graph(&c, 3, &complete(4)).unwrap();
        assert_eq!(k4.ratio.as_deref(), Some("1/2"));
        assert_eq!(k4.conjecture_holds, Some(true));
        let empty = check_graph(&c, 4, &Graph::empty(3)).unwrap();
        assert_eq!(
            (empty.gamma_e, empty.ratio.clone(), empty.conjecture_holds),
            (0, None, None)
        );
    }

    #[test]
    fn stream_layout_and_exit_code() {
        let input = format!(
            "{}\n\n{}\nnot-graph6\n",
            to_graph6_string(&prism()),
            to_graph6_string(&double_star())
        );
        let (s, text) = run(&input, &quick());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].contains("\"schema\":\"domcheck-report/1\""));
        assert!(lines[1].contains("\"graph_id\":1"));
        assert!(lines[2].contains("\"graph_id\":3"));
        assert!(lines[3].contains("\"type\":\"error\""));
        assert!(lines[4].contains("\"type\":\"summary\""));
        assert_eq!((s.records, s.errors, s.regular, s.exit_code), (2, 1, 1, 0));
        assert_eq!(s.max_ratio.as_deref(), Some("1/1"));
    }

    #[test]
    fn deterministic_and_job_independent() {
        let input: String = corpus::random_cubic(12, 5)
            .iter()
            .map(|g| to_graph6_string(g) + "\n")
            .collect();
        let (_, a) = run(&input, &quick());
        let (_, b) = run(&input, &RunConfig { jobs: 4, ..quick() });
        assert_eq!(
            a.lines().skip(1).collect::<Vec<_>>(),
            b.lines().skip(1).collect::<Vec<_>>()
        );
        let (_, c) = run(&input, &quick());
        assert_eq!(a, c);
    }

    #[test]
    fn csv_output() {
        let input = to_graph6_string(&prism()) + "\n";
        let (_, text) = run(
            &input,
            &RunConfig {
                format: Format::Csv,
                ..quick()
            },
        );
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("graph_id,graph6,n,delta"));
        let row = lines.next().unwrap();
        assert!(
            row.starts_with("1,E{Sw,6,3,true,true,2,2,1/1,true"),
            "{row}"
        );
    }

    #[test]
    fn config_parsing() {
        assert_eq!(
            "t1,t3".parse::<Methods>().unwrap(),
            Methods {
                t1: true,
                t3: true,
                ..Methods::none()
            }
        );
        assert!("t4".parse::<Methods>().is_err());
        assert!("xml".parse::<Format>().is_err());
        assert_eq!(
            RunConfig {
                cap: 65,
                ..RunConfig::default()
            }
            .validate(),
            Err(ConfigError::InvalidCap(65))
        );
        assert_eq!(
            RunConfig {
                jobs: 0,
                ..RunConfig::default()
            }
            .validate(),
            Err(ConfigError::NoJobs)
        );
    }

    #[test]
    fn cap_errors_are_per_record() {
        let input = to_graph6_string(&petersen()) + "\n" + &to_graph6_string(&prism()) + "\n";
        let (s, _) = run(&input, &RunConfig { cap: 10, ..quick() });
        assert_eq!((s.records, s.errors), (1, 1));
    }

    #[test]
    fn generation() {
        let mut a = Vec::new();
        run_gen(4, 3, 1, 0, &mut a).unwrap();
        assert_eq!(a, b"C~\n");
        let mut b = Vec::new();
        let mut c = Vec::new();
        run_gen(10, 3, 100, 7, &mut b).unwrap();
        run_gen(10, 3, 100, 7, &mut c).unwrap();
        assert_eq!(b, c);
        let text = String::from_utf8(b).unwrap();
        assert_eq!(text.lines().count(), 100);
        assert!(text
            .lines()
            .all(|l| parse_graph6(l.as_bytes()).unwrap().is_cubic()));
        assert!(matches!(
            run_gen(7, 3, 1, 0, Vec::new()),
            Err(GenError::Generate(_))
        ));
    }
}
