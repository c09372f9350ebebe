//! Batch verification runs and their JSON reports.
//!
//! A run pulls graphs from one source, filters them by class membership,
//! checks the selected properties, runs the selected colorer and cross-checks
//! its bound against the exact chromatic number. Graphs are processed in
//! chunks on the [`crate::par`] pool; records are written in source order by
//! a single writer as each chunk completes.
//!
//! Report layout (schema version 1), one JSON object:
//! `schema_version`, `config` (with caps resolved), `records` (one per line),
//! `violations`, `aggregates`, and `wall_time_ms` last, so two runs of the
//! same config differ only in that final field.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::classes::{class_by_id, ClassArgs};
use crate::color::{color_with, ColorOptions, ColoringCertificate, TheoremId};
use crate::decompose::decompose_auto;
use crate::detect::{is_member, ClassSpec, Violation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::harness::enumerate::enumerate_small;
use crate::harness::sample::{sample_one, SamplerSpec, DEFAULT_REJECTION_BUDGET};
use crate::oracle::{chromatic_number, clique_number, OracleCaps};
use crate::par;
use crate::properties::{check_property, hypothesis, CValue, PropertyId, PropertyParams, PropertyReport, Status};

pub const SCHEMA_VERSION: u32 = 1;
/// Environment variable overriding the default χ oracle cap.
pub const ENV_CHI_CAP: &str = "POLLYANNA_CHI_CAP";
/// Environment variable overriding the default `χ^(n)` oracle cap.
pub const ENV_CHI_N_CAP: &str = "POLLYANNA_CHIN_CAP";

const CHUNK: usize = 512;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Source {
    /// Every graph on `1..=n_max` vertices up to isomorphism.
    Enumerate { n_max: usize },
    /// A graph6 file, one graph per line.
    Graph6File { path: PathBuf },
    /// Inline graph6 strings.
    Graph6 { lines: Vec<String> },
    /// Rejection sampling inside the run's class.
    Sample {
        n_min: usize,
        n_max: usize,
        edge_prob: f64,
        count: usize,
        #[serde(default = "default_budget")]
        rejection_budget: usize,
    },
}

fn default_budget() -> usize {
    DEFAULT_REJECTION_BUDGET
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordScope {
    /// Class members plus any graph that errored.
    #[default]
    Members,
    All,
    /// Only graphs with a violation or error.
    Violations,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub source: Source,
    /// Membership filter; defaults to the theorem's class, else every graph.
    #[serde(default)]
    pub class: Option<String>,
    #[serde(default)]
    pub args: ClassArgs,
    /// Additional filter `ω >= min_omega`.
    #[serde(default)]
    pub min_omega: Option<usize>,
    #[serde(default)]
    pub theorem: Option<TheoremId>,
    #[serde(default)]
    pub properties: Vec<PropertyId>,
    /// Oracle caps; unset means the environment or built-in defaults.
    #[serde(default)]
    pub caps: Option<OracleCaps>,
    #[serde(default)]
    pub c: CValue,
    #[serde(default)]
    pub seed: u64,
    /// 0 = global pool, 1 = sequential.
    #[serde(default)]
    pub threads: usize,
    #[serde(default = "yes")]
    pub cross_check: bool,
    #[serde(default)]
    pub records: RecordScope,
}

impl RunConfig {
    pub fn new(source: Source) -> Self {
        Self {
            source,
            class: None,
            args: ClassArgs::default(),
            min_omega: None,
            theorem: None,
            properties: Vec::new(),
            caps: None,
            c: CValue::Oracle,
            seed: 0,
            threads: 0,
            cross_check: true,
            records: RecordScope::Members,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    fn class_id(&self) -> String {
        self.class
            .clone()
            .or_else(|| self.theorem.map(|t| t.class_id().to_string()))
            .unwrap_or_else(|| "all".into())
    }
}

/// Caps from `POLLYANNA_CHI_CAP` / `POLLYANNA_CHIN_CAP`, else the defaults.
pub fn caps_from_env() -> Result<OracleCaps> {
    let mut caps = OracleCaps::default();
    for (var, slot) in [(ENV_CHI_CAP, &mut caps.chi), (ENV_CHI_N_CAP, &mut caps.chi_n)] {
        if let Ok(v) = std::env::var(var) {
            let parsed: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("{var} = '{v}' is not a positive integer")))?;
            if parsed == 0 {
                return Err(Error::Config(format!("{var} must be positive")));
            }
            *slot = parsed;
        }
    }
    Ok(caps)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ChiValue {
    Exact(usize),
    Capped(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateSummary {
    pub theorem: TheoremId,
    pub palette_used: usize,
    pub max_color: usize,
    pub bound_value: u128,
    pub omega: usize,
    pub c_value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_budget_met: Option<bool>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub coloring: Vec<usize>,
}

impl From<&ColoringCertificate> for CertificateSummary {
    fn from(c: &ColoringCertificate) -> Self {
        Self {
            theorem: c.theorem,
            palette_used: c.palette_used,
            max_color: c.max_color,
            bound_value: c.bound_value,
            omega: c.omega,
            c_value: c.c_value,
            strict_budget_met: c.strict_budget_met,
            ok: c.ok,
            findings: c.findings.clone(),
            notes: c.notes.clone(),
            coloring: c.coloring.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub omega: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<ChiValue>,
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub membership_violation: Option<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub properties: Vec<PropertyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// A mathematical violation with enough data to re-check it on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationEntry {
    pub index: usize,
    pub graph6: String,
    /// `property`, `theorem` or `cross_check`.
    pub kind: &'static str,
    pub subject: String,
    pub detail: String,
    pub witness: serde_json::Value,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PropertyCounts {
    pub checked: usize,
    pub holds: usize,
    pub fails: usize,
    pub undecided: usize,
    /// Graphs outside the property's hypothesis class.
    pub skipped: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TheoremCounts {
    pub colored: usize,
    pub ok: usize,
    pub with_findings: usize,
    /// Largest `max_color / bound_value` seen, in percent.
    pub worst_ratio_percent: u128,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Aggregates {
    pub graphs_scanned: usize,
    pub members: usize,
    pub violations: usize,
    pub undecided: usize,
    pub errors: usize,
    pub findings: usize,
    pub properties: BTreeMap<PropertyId, PropertyCounts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremCounts>,
}

impl Aggregates {
    fn merge(&mut self, o: &Outcome) {
        self.graphs_scanned += 1;
        self.members += o.record.member as usize;
        self.violations += o.violations.len();
        self.undecided += o.undecided;
        self.errors += o.record.error.is_some() as usize;
        for (p, c) in &o.props {
            let e = self.properties.entry(*p).or_default();
            e.checked += c.checked;
            e.holds += c.holds;
            e.fails += c.fails;
            e.undecided += c.undecided;
            e.skipped += c.skipped;
        }
        if let Some(cert) = &o.record.certificate {
            let t = self.theorem.get_or_insert_with(TheoremCounts::default);
            t.colored += 1;
            t.ok += cert.ok as usize;
            t.with_findings += !cert.findings.is_empty() as usize;
            self.findings += cert.findings.len();
            if let Some(ratio) = (cert.max_color as u128 * 100).checked_div(cert.bound_value) {
                t.worst_ratio_percent = t.worst_ratio_percent.max(ratio);
            }
        }
    }
}

/// In-memory form of a finished run.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub config: RunConfig,
    pub records: Vec<Record>,
    pub violations: Vec<ViolationEntry>,
    pub aggregates: Aggregates,
    pub wall_time_ms: u128,
}

struct Outcome {
    record: Record,
    violations: Vec<ViolationEntry>,
    undecided: usize,
    props: Vec<(PropertyId, PropertyCounts)>,
}

enum Task {
    Graph(Graph),
    Line(String),
    Sample(usize),
}

struct Plan {
    cfg: RunConfig,
    class: ClassSpec,
    caps: OracleCaps,
    sampler: Option<SamplerSpec>,
}

fn tasks(cfg: &RunConfig) -> Result<(Vec<Task>, Option<SamplerSpec>)> {
    Ok(match &cfg.source {
        Source::Enumerate { n_max } => (enumerate_small(*n_max, cfg.threads)?.into_iter().map(Task::Graph).collect(), None),
        Source::Graph6File { path } => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            (lines(&text), None)
        }
        Source::Graph6 { lines: l } => (l.iter().filter(|s| !s.trim().is_empty()).map(|s| Task::Line(s.trim().to_string())).collect(), None),
        Source::Sample {
            n_min,
            n_max,
            edge_prob,
            count,
            rejection_budget,
        } => {
            let spec = SamplerSpec {
                n_min: *n_min,
                n_max: *n_max,
                edge_prob: *edge_prob,
                count: *count,
                rejection_budget: *rejection_budget,
            };
            if *count == 0 || !(0.0..=1.0).contains(edge_prob) || n_min > n_max || *rejection_budget == 0 {
                return Err(Error::Config(format!("invalid sampler settings {spec:?}")));
            }
            ((0..*count).map(Task::Sample).collect(), Some(spec))
        }
    })
}

fn lines(text: &str) -> Vec<Task> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| Task::Line(l.to_string()))
        .collect()
}

fn error_outcome(index: usize, graph6: String, msg: String) -> Outcome {
    Outcome {
        record: Record {
            index,
            graph6,
            n: 0,
            omega: 0,
            chi: None,
            member: false,
            membership_violation: None,
            properties: Vec::new(),
            certificate: None,
            error: Some(msg),
        },
        violations: Vec::new(),
        undecided: 0,
        props: Vec::new(),
    }
}

fn process(plan: &Plan, index: usize, task: &Task) -> Outcome {
    let g = match task {
        Task::Graph(g) => g.clone(),
        Task::Line(l) => match parse_graph6(l) {
            Ok(g) => g,
            Err(e) => return error_outcome(index, l.clone(), e.to_string()),
        },
        Task::Sample(i) => match sample_one(&plan.class, plan.sampler.as_ref().expect("sampler set"), plan.cfg.seed, *i) {
            Ok(g) => g,
            Err(e) => return error_outcome(index, String::new(), e.to_string()),
        },
    };
    match evaluate(plan, index, &g) {
        Ok(o) => o,
        Err(e) => error_outcome(index, write_graph6(&g), e.to_string()),
    }
}

fn evaluate(plan: &Plan, index: usize, g: &Graph) -> Result<Outcome> {
    let cfg = &plan.cfg;
    let graph6 = write_graph6(g);
    let omega = clique_number(g);
    let membership = is_member(g, &plan.class);
    let member = membership.member && cfg.min_omega.is_none_or(|m| omega >= m);
    let mut out = Outcome {
        record: Record {
            index,
            graph6: graph6.clone(),
            n: g.n(),
            omega,
            chi: None,
            member,
            membership_violation: membership.violation,
            properties: Vec::new(),
            certificate: None,
            error: None,
        },
        violations: Vec::new(),
        undecided: 0,
        props: Vec::new(),
    };
    if !member {
        return Ok(out);
    }

    let chi = if cfg.cross_check {
        match chromatic_number(g, plan.caps.chi) {
            Ok((x, _)) => Some(x),
            Err(Error::OracleCapExceeded { .. }) => {
                out.undecided += 1;
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    out.record.chi = cfg.cross_check.then(|| chi.map_or(ChiValue::Capped("capped"), ChiValue::Exact));

    if !cfg.properties.is_empty() {
        let pp = PropertyParams {
            s: cfg.args.s,
            t: cfg.args.t,
            k: cfg.args.k,
            c: cfg.c,
            star: cfg.args.star,
        };
        let dec = decompose_auto(g, cfg.args.t)?;
        for &p in &cfg.properties {
            let mut counts = PropertyCounts::default();
            if !is_member(g, &hypothesis(p, &pp)?).member {
                counts.skipped = 1;
                out.props.push((p, counts));
                continue;
            }
            let r = check_property(g, &dec, p, &pp, &plan.caps)?;
            counts.checked = 1;
            match r.status {
                Status::Holds => counts.holds = 1,
                Status::Fails => counts.fails = 1,
                Status::Undecided => {
                    counts.undecided = 1;
                    out.undecided += 1;
                }
            }
            if r.is_violation() {
                out.violations.push(ViolationEntry {
                    index,
                    graph6: graph6.clone(),
                    kind: "property",
                    subject: p.to_string(),
                    detail: format!("measured {} is not {} {}", show(r.measured), r.relation, show(r.bound)),
                    witness: serde_json::to_value(&r.witness).unwrap_or_default(),
                });
            }
            out.props.push((p, counts));
            out.record.properties.push(r);
        }
    }

    if let Some(th) = cfg.theorem {
        let opts = ColorOptions { caps: plan.caps, c: cfg.c };
        match color_with(g, th, &cfg.args, &opts) {
            Ok(cert) => {
                if !cert.ok {
                    out.violations.push(ViolationEntry {
                        index,
                        graph6: graph6.clone(),
                        kind: "theorem",
                        subject: th.to_string(),
                        detail: format!(
                            "proper = {}, trace complete = {}, max color {} vs bound {}",
                            cert.proper, cert.trace_complete, cert.max_color, cert.bound_value
                        ),
                        witness: serde_json::json!({ "coloring": cert.coloring, "findings": cert.findings }),
                    });
                }
                if let Some(x) = chi.filter(|&x| x as u128 > cert.bound_value) {
                    out.violations.push(ViolationEntry {
                        index,
                        graph6: graph6.clone(),
                        kind: "cross_check",
                        subject: th.to_string(),
                        detail: format!("exact chi {x} exceeds bound {}", cert.bound_value),
                        witness: serde_json::json!({ "chi": x, "bound": cert.bound_value }),
                    });
                }
                out.record.certificate = Some(CertificateSummary::from(&cert));
            }
            Err(e @ (Error::LiftFailure { .. } | Error::StructuralGap(_))) => {
                out.violations.push(ViolationEntry {
                    index,
                    graph6: graph6.clone(),
                    kind: "theorem",
                    subject: th.to_string(),
                    detail: e.to_string(),
                    witness: serde_json::json!({ "error": e.to_string() }),
                });
                out.record.error = Some(e.to_string());
            }
            Err(Error::OracleCapExceeded { .. }) => out.undecided += 1,
            Err(e) => out.record.error = Some(e.to_string()),
        }
    }
    Ok(out)
}

fn show(v: Option<u128>) -> String {
    v.map_or_else(|| "?".into(), |x| x.to_string())
}

fn keep(scope: RecordScope, o: &Outcome) -> bool {
    match scope {
        RecordScope::All => true,
        RecordScope::Members => o.record.member || o.record.error.is_some(),
        RecordScope::Violations => !o.violations.is_empty() || o.record.error.is_some(),
    }
}

fn prepare(cfg: &RunConfig) -> Result<(Plan, Vec<Task>)> {
    let caps = match cfg.caps {
        Some(c) => c,
        None => caps_from_env()?,
    };
    if caps.chi == 0 || caps.chi_n == 0 {
        return Err(Error::Config("oracle caps must be positive".into()));
    }
    let class = class_by_id(&cfg.class_id(), &cfg.args)?;
    let (tasks, sampler) = tasks(cfg)?;
    let mut echo = cfg.clone();
    echo.caps = Some(caps);
    echo.class = Some(cfg.class_id());
    Ok((
        Plan {
            cfg: echo,
            class,
            caps,
            sampler,
        },
        tasks,
    ))
}

/// Runs `cfg`, streaming the report to `out`; returns the aggregates.
pub fn verify_run_to<W: Write>(cfg: &RunConfig, out: &mut W) -> Result<Aggregates> {
    let start = Instant::now();
    let (plan, tasks) = prepare(cfg)?;
    write!(
        out,
        "{{\"schema_version\":{SCHEMA_VERSION},\"config\":{},\"records\":[",
        serde_json::to_string(&plan.cfg).map_err(|e| Error::Io(e.to_string()))?
    )?;
    let mut agg = Aggregates::default();
    let mut violations = Vec::new();
    let mut first = true;
    let indexed: Vec<(usize, Task)> = tasks.into_iter().enumerate().collect();
    for chunk in indexed.chunks(CHUNK) {
        let outcomes = par::map(chunk, plan.cfg.threads, |(i, t)| process(&plan, *i, t));
        for o in outcomes {
            agg.merge(&o);
            if keep(plan.cfg.records, &o) {
                let sep = if first { "\n" } else { ",\n" };
                first = false;
                write!(out, "{sep}{}", serde_json::to_string(&o.record).map_err(|e| Error::Io(e.to_string()))?)?;
            }
            violations.extend(o.violations);
        }
    }
    write!(
        out,
        "\n],\"violations\":{},\"aggregates\":{},\"wall_time_ms\":{}}}\n",
        serde_json::to_string(&violations).map_err(|e| Error::Io(e.to_string()))?,
        serde_json::to_string(&agg).map_err(|e| Error::Io(e.to_string()))?,
        start.elapsed().as_millis()
    )?;
    Ok(agg)
}

/// Runs `cfg` and keeps the whole report in memory.
pub fn verify_run(cfg: &RunConfig) -> Result<RunReport> {
    let start = Instant::now();
    let (plan, tasks) = prepare(cfg)?;
    let mut agg = Aggregates::default();
    let mut records = Vec::new();
    let mut violations = Vec::new();
    let indexed: Vec<(usize, Task)> = tasks.into_iter().enumerate().collect();
    for chunk in indexed.chunks(CHUNK) {
        for o in par::map(chunk, plan.cfg.threads, |(i, t)| process(&plan, *i, t)) {
            agg.merge(&o);
            if keep(plan.cfg.records, &o) {
                records.push(o.record);
            }
            violations.extend(o.violations);
        }
    }
    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        config: plan.cfg,
        records,
        violations,
        aggregates: agg,
        wall_time_ms: start.elapsed().as_millis(),
    })
}
