//! `pollyanna`: command-line front end for the structural coloring toolkit.
//!
//! Exit codes: 0 clean, 1 operational error (bad flags, unreadable input,
//! internal errors), 2 a mathematical violation was found.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use pollyanna_core::classes::{class_by_id, ClassArgs, YChoice, CLASS_IDS};
use pollyanna_core::color::{color_with, ColorOptions, TheoremId};
use pollyanna_core::decompose::{decompose, decompose_auto};
use pollyanna_core::detect::{find_induced, is_member};
use pollyanna_core::graph6::{parse_graph6_lines, write_graph6};
use pollyanna_core::harness::run::{caps_from_env, verify_run_to, RecordScope, RunConfig, Source};
use pollyanna_core::oracle::{chi_n_witness, chromatic_number, lex_min_max_clique, ramsey_upper};
use pollyanna_core::patterns::{PatternId, PatternInstance, PatternParams, StarConvention};
use pollyanna_core::properties::{check_property, hypothesis, CValue, PropertyId, PropertyParams};
use pollyanna_core::{Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "pollyanna", version, about = "Forbidden-subgraph coloring checks on small graphs")]
struct Cli {
    /// Worker threads for batch runs (0 = all cores, 1 = sequential).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List or build the named pattern graphs.
    Patterns {
        #[command(subcommand)]
        action: PatternsCmd,
    },
    /// Search each input graph for an induced copy of a pattern.
    Detect {
        pattern: String,
        #[command(flatten)]
        params: Params,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check class membership.
    Member {
        #[arg(long)]
        class: String,
        #[command(flatten)]
        params: Params,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Maximum-clique decomposition at threshold t.
    Decompose {
        #[arg(long)]
        t: usize,
        /// `auto` (lexicographically smallest maximum clique) or a vertex list such as `0,1,2`.
        #[arg(long, default_value = "auto")]
        clique: String,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exact chromatic number.
    Chi {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exact clique number with a maximum clique.
    Omega {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Largest chromatic number over induced subgraphs with clique number at most n.
    Chin {
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Binomial upper bound on the Ramsey number R(s, t).
    Ramsey { s: u64, t: u64 },
    /// Check one structural property on each input graph.
    Property {
        /// P1..P8, P-property (or PP), D1.
        which: String,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        c: CArg,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run a constructive colorer and print its certificate.
    Color {
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        c: CArg,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Full batch run from a JSON config.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Report destination (default stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all graphs up to nmax vertices and verify one theorem.
    Sweep {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        min_omega: Option<usize>,
        /// Comma-separated properties to check as well.
        #[arg(long, value_delimiter = ',')]
        properties: Vec<String>,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        c: CArg,
        #[arg(long, value_enum, default_value_t = Scope::Members)]
        records: Scope,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PatternsCmd {
    List,
    Emit {
        name: String,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Star {
    Vertices,
    Leaves,
}

#[derive(Clone, Copy, ValueEnum)]
enum Y {
    F1,
    F2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scope {
    Members,
    All,
    Violations,
}

#[derive(Args, Clone, Copy)]
struct Params {
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Length parameter for paths, cycles and fans.
    #[arg(long)]
    l: Option<usize>,
    #[arg(long, value_enum)]
    star: Option<Star>,
    #[arg(long, value_enum)]
    y: Option<Y>,
}

#[derive(Args, Clone, Copy)]
struct CArg {
    /// Literal value of the constant C (default: realized by the exact oracle).
    #[arg(long)]
    c: Option<usize>,
}

impl CArg {
    fn value(self) -> CValue {
        self.c.map_or(CValue::Oracle, CValue::Literal)
    }
}

impl Params {
    fn star(self) -> StarConvention {
        match self.star {
            Some(Star::Leaves) => StarConvention::Leaves,
            _ => StarConvention::Vertices,
        }
    }

    fn class_args(self) -> ClassArgs {
        let d = ClassArgs::default();
        ClassArgs {
            s: self.s.unwrap_or(d.s),
            t: self.t.unwrap_or(d.t),
            k: self.k.unwrap_or(d.k),
            y: match self.y {
                Some(Y::F2) => YChoice::F2,
                _ => YChoice::F1,
            },
            star: self.star(),
        }
    }

    fn pattern(self) -> PatternParams {
        PatternParams {
            s: self.s,
            t: self.t,
            k: self.k,
            l: self.l,
            star: self.star(),
        }
    }

    fn property(self, c: CValue) -> PropertyParams {
        let a = self.class_args();
        PropertyParams {
            s: a.s,
            t: a.t,
            k: a.k,
            c,
            star: a.star,
        }
    }
}

/// Outcome of a command that completed without an operational error.
enum Verdict {
    Clean,
    Violation,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Verdict::Clean) => ExitCode::SUCCESS,
        Ok(Verdict::Violation) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn read_graphs(path: &PathBuf) -> Result<Vec<Graph>> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(parse_graph6_lines(&text)?)
}

fn emit(value: serde_json::Value) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, &value)?;
    writeln!(out)?;
    Ok(())
}

fn parse_clique(spec: &str) -> Result<VertexSet> {
    let mut set = VertexSet::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().with_context(|| format!("bad vertex '{part}' in --clique"))?;
        set.insert(v);
    }
    Ok(set)
}

fn options(c: CValue) -> Result<ColorOptions> {
    Ok(ColorOptions { caps: caps_from_env()?, c })
}

fn write_report(cfg: &RunConfig, out: &Option<PathBuf>) -> Result<Verdict> {
    let agg = match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
            let agg = verify_run_to(cfg, &mut w)?;
            w.flush()?;
            agg
        }
        None => {
            let mut w = BufWriter::new(io::stdout().lock());
            let agg = verify_run_to(cfg, &mut w)?;
            w.flush()?;
            agg
        }
    };
    eprintln!(
        "scanned {} graphs, {} members, {} violations, {} undecided, {} errors, {} findings",
        agg.graphs_scanned, agg.members, agg.violations, agg.undecided, agg.errors, agg.findings
    );
    Ok(if agg.violations > 0 { Verdict::Violation } else { Verdict::Clean })
}

fn run(cli: Cli) -> Result<Verdict> {
    let mut verdict = Verdict::Clean;
    match cli.cmd {
        Cmd::Patterns { action: PatternsCmd::List } => {
            for id in PatternId::ALL {
                println!("{}\t{}", id, id.parameters().join(","));
            }
        }
        Cmd::Patterns {
            action: PatternsCmd::Emit { name, params, format },
        } => {
            let p = PatternInstance::build(name.parse()?, &params.pattern())?;
            match format {
                Format::Graph6 => println!("{}", write_graph6(&p.graph)),
                Format::Dot => print!("{}", p.graph.to_dot()),
            }
        }
        Cmd::Detect { pattern, params, input } => {
            let p = PatternInstance::build(pattern.parse()?, &params.pattern())?;
            for g in read_graphs(&input)? {
                let e = find_induced(&g, &p.graph);
                emit(json!({ "graph6": write_graph6(&g), "pattern": p.label(), "found": e.is_some(), "embedding": e }))?;
            }
        }
        Cmd::Member { class, params, input } => {
            if !CLASS_IDS.contains(&class.as_str()) && class.parse::<PropertyId>().is_err() {
                bail!("unknown class '{class}' (known: {})", CLASS_IDS.join(", "));
            }
            let spec = class_by_id(&class, &params.class_args())?;
            for g in read_graphs(&input)? {
                let r = is_member(&g, &spec);
                emit(json!({ "graph6": write_graph6(&g), "class": spec.name, "forbidden": spec.labels(), "report": r }))?;
            }
        }
        Cmd::Decompose { t, clique, input } => {
            for g in read_graphs(&input)? {
                let dec = if clique == "auto" {
                    decompose_auto(&g, t)?
                } else {
                    decompose(&g, &parse_clique(&clique)?, t)?
                };
                emit(json!({ "graph6": write_graph6(&g), "decomposition": dec }))?;
            }
        }
        Cmd::Chi { input } => {
            let cap = caps_from_env()?.chi;
            for g in read_graphs(&input)? {
                let v = match chromatic_number(&g, cap) {
                    Ok((x, col)) => json!({ "graph6": write_graph6(&g), "chi": x, "coloring": col }),
                    Err(Error::OracleCapExceeded { .. }) => json!({ "graph6": write_graph6(&g), "chi": "capped" }),
                    Err(e) => return Err(e.into()),
                };
                emit(v)?;
            }
        }
        Cmd::Omega { input } => {
            for g in read_graphs(&input)? {
                let k = lex_min_max_clique(&g);
                emit(json!({ "graph6": write_graph6(&g), "omega": k.len(), "clique": k.to_vec() }))?;
            }
        }
        Cmd::Chin { n, input } => {
            let cap = caps_from_env()?.chi_n;
            for g in read_graphs(&input)? {
                let v = match chi_n_witness(&g, n, cap) {
                    Ok((x, w)) => json!({ "graph6": write_graph6(&g), "n": n, "chi_n": x, "witness": w.to_vec() }),
                    Err(Error::OracleCapExceeded { .. }) => json!({ "graph6": write_graph6(&g), "n": n, "chi_n": "capped" }),
                    Err(e) => return Err(e.into()),
                };
                emit(v)?;
            }
        }
        Cmd::Ramsey { s, t } => println!("{}", ramsey_upper(s, t)?),
        Cmd::Property { which, params, c, input } => {
            let which: PropertyId = which.parse()?;
            let pp = params.property(c.value());
            let hyp = hypothesis(which, &pp)?;
            let caps = caps_from_env()?;
            for g in read_graphs(&input)? {
                let dec = decompose_auto(&g, pp.t)?;
                let r = check_property(&g, &dec, which, &pp, &caps)?;
                if r.is_violation() {
                    verdict = Verdict::Violation;
                }
                emit(json!({ "graph6": write_graph6(&g), "hypothesis_class": hyp.labels(), "report": r }))?;
            }
        }
        Cmd::Color { theorem, params, c, input } => {
            let th: TheoremId = theorem.parse()?;
            let opts = options(c.value())?;
            for g in read_graphs(&input)? {
                match color_with(&g, th, &params.class_args(), &opts) {
                    Ok(cert) => {
                        if !cert.ok {
                            verdict = Verdict::Violation;
                        }
                        emit(json!({ "graph6": write_graph6(&g), "certificate": cert }))?;
                    }
                    Err(e @ (Error::LiftFailure { .. } | Error::StructuralGap(_))) => {
                        verdict = Verdict::Violation;
                        emit(json!({ "graph6": write_graph6(&g), "violation": e.to_string() }))?;
                    }
                    Err(e) => return Err(e).with_context(|| format!("coloring {}", write_graph6(&g))),
                }
            }
        }
        Cmd::Verify { config, out } => {
            let text = std::fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
            let mut cfg = RunConfig::from_json(&text)?;
            if cli.threads != 0 {
                cfg.threads = cli.threads;
            }
            verdict = write_report(&cfg, &out)?;
        }
        Cmd::Sweep {
            theorem,
            nmax,
            min_omega,
            properties,
            params,
            c,
            records,
            out,
        } => {
            let mut cfg = RunConfig::new(Source::Enumerate { n_max: nmax });
            cfg.theorem = Some(theorem.parse()?);
            cfg.args = params.class_args();
            cfg.min_omega = min_omega;
            cfg.properties = properties.iter().map(|p| p.parse()).collect::<Result<_, _>>()?;
            cfg.c = c.value();
            cfg.threads = cli.threads;
            cfg.records = match records {
                Scope::Members => RecordScope::Members,
                Scope::All => RecordScope::All,
                Scope::Violations => RecordScope::Violations,
            };
            verdict = write_report(&cfg, &out)?;
        }
    }
    Ok(verdict)
}
