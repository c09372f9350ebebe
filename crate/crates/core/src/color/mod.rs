//! Constructive colorers that follow the decomposition proofs and emit
//! certificates checkable against each theorem's palette bound.
//!
//! Colors are 1-based. A colorer lays colors out in contiguous blocks, one
//! per decomposition part, and records every block and every vertex's part
//! in the certificate trace. Subgraphs whose clique number is small enough
//! are handed to a base colorer standing in for the P-property constant `C`;
//! the certificate reports `C` as the largest palette that colorer needed.

pub mod bounds;
mod fans;
mod lift;
mod parts;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::classes::{class_by_id, ClassArgs};
use crate::detect::{is_member, ClassSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{color_subset_exact, is_proper, palette_size, OracleCaps};
use crate::properties::CValue;

pub use fans::verify_thm5b;
pub use lift::{color_thm2, color_thm5a};
pub use parts::{color_thm1, color_thm3, color_thm4};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum TheoremId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5a,
    Thm5b,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::Thm1,
        TheoremId::Thm2,
        TheoremId::Thm3,
        TheoremId::Thm4,
        TheoremId::Thm5a,
        TheoremId::Thm5b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Thm1 => "THM1",
            TheoremId::Thm2 => "THM2",
            TheoremId::Thm3 => "THM3",
            TheoremId::Thm4 => "THM4",
            TheoremId::Thm5a => "THM5A",
            TheoremId::Thm5b => "THM5B",
        }
    }

    /// Id of the hypothesis class in [`crate::classes`].
    pub fn class_id(self) -> &'static str {
        match self {
            TheoremId::Thm1 => "thm1",
            TheoremId::Thm2 => "thm2",
            TheoremId::Thm3 => "thm3",
            TheoremId::Thm4 => "thm4",
            TheoremId::Thm5a => "thm5a",
            TheoremId::Thm5b => "thm5b",
        }
    }

    pub fn class(self, args: &ClassArgs) -> Result<ClassSpec> {
        class_by_id(self.class_id(), args)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Config(format!("unknown theorem '{s}'")))
    }
}

/// Base colorer and oracle limits shared by every colorer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ColorOptions {
    #[serde(default)]
    pub caps: OracleCaps,
    /// A literal `C` makes any base call needing more colors an error.
    #[serde(default)]
    pub c: CValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub vertex: usize,
    pub set: String,
    pub depth: usize,
    pub block_offset: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRecord {
    pub label: String,
    pub depth: usize,
    pub offset: u128,
    /// Colors the block actually used.
    pub width: usize,
    /// Largest width the construction allows for this block, if it states one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claimed: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub theorem: TheoremId,
    /// Color of each vertex, indexed by vertex.
    pub coloring: Vec<usize>,
    /// Distinct colors used.
    pub palette_used: usize,
    /// Largest color used; the coloring maps into `1..=max_color`.
    pub max_color: usize,
    pub bound_value: u128,
    pub omega: usize,
    pub c_value: usize,
    /// A second, tighter budget the proof also states, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_budget: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_budget_met: Option<bool>,
    pub proper: bool,
    pub trace_complete: bool,
    pub within_bound: bool,
    /// Proper, trace-complete and within the bound.
    pub ok: bool,
    pub trace: Vec<TraceStep>,
    pub blocks: Vec<BlockRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Places where the graph contradicts a step of the construction.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<String>,
}

impl ColoringCertificate {
    /// Recomputes the derived fields from the coloring, trace and bound.
    pub fn recheck(&self, g: &Graph) -> Result<bool> {
        let proper = is_proper(g, &self.coloring)?;
        Ok(proper
            && trace_complete(g.n(), &self.trace)
            && self.coloring.iter().copied().max().unwrap_or(0) as u128 <= self.bound_value)
    }
}

fn trace_complete(n: usize, trace: &[TraceStep]) -> bool {
    let mut seen = vec![0usize; n];
    for step in trace {
        if step.vertex >= n {
            return false;
        }
        seen[step.vertex] += 1;
    }
    seen.iter().all(|&c| c == 1)
}

/// Running state of one colorer invocation.
pub(crate) struct Ctx {
    pub opts: ColorOptions,
    /// Largest palette any base call needed.
    pub c_used: usize,
}

impl Ctx {
    pub fn new(opts: ColorOptions) -> Self {
        Self { opts, c_used: 0 }
    }

    /// Colors `G[set]` with the base colorer; counts towards `C`.
    pub fn base(&mut self, g: &Graph, set: &VertexSet) -> Result<(usize, Vec<usize>)> {
        let (k, col) = color_subset_exact(g, set, self.opts.caps.chi)?;
        if let CValue::Literal(c) = self.opts.c {
            if k > c {
                return Err(Error::LiteralCExceeded { c, used: k });
            }
        }
        self.c_used = self.c_used.max(k);
        Ok((k, col))
    }

    /// Colors `G[set]` exactly for a step whose size is bounded structurally.
    pub fn exact(&self, g: &Graph, set: &VertexSet) -> Result<(usize, Vec<usize>)> {
        color_subset_exact(g, set, self.opts.caps.chi)
    }

    pub fn c_value(&self) -> usize {
        match self.opts.c {
            CValue::Literal(c) => c,
            CValue::Oracle => self.c_used,
        }
    }
}

/// A coloring of one (sub)graph under construction, in that graph's labels.
#[derive(Debug, Clone, Default)]
pub(crate) struct Paint {
    pub colors: Vec<usize>,
    pub trace: Vec<TraceStep>,
    pub blocks: Vec<BlockRecord>,
    pub notes: Vec<String>,
    pub findings: Vec<String>,
}

impl Paint {
    pub fn new(n: usize) -> Self {
        Self {
            colors: vec![0; n],
            ..Default::default()
        }
    }

    pub fn colored(&self) -> VertexSet {
        (0..self.colors.len()).filter(|&v| self.colors[v] != 0).collect()
    }

    /// Copies a local coloring of `set` shifted by `offset`; returns the
    /// number of colors it used.
    pub fn place(
        &mut self,
        set: &VertexSet,
        local: &[usize],
        label: &str,
        depth: usize,
        offset: usize,
        claimed: Option<u128>,
    ) -> usize {
        let width = set.iter().map(|v| local[v]).max().unwrap_or(0);
        for v in set.iter() {
            self.colors[v] = offset + local[v];
            self.trace.push(TraceStep {
                vertex: v,
                set: label.to_string(),
                depth,
                block_offset: offset as u128,
            });
        }
        if !set.is_empty() {
            if let Some(c) = claimed.filter(|&c| width as u128 > c) {
                self.findings.push(format!(
                    "block {label} at depth {depth} needed {width} colors, construction allows {c}"
                ));
            }
            self.blocks.push(BlockRecord {
                label: label.to_string(),
                depth,
                offset: offset as u128,
                width,
                claimed,
            });
        }
        width
    }

    /// Takes over the coloring of a subgraph whose vertex `i` is `map[i]` here.
    pub fn absorb(&mut self, sub: Paint, map: &[usize]) {
        for (i, &v) in map.iter().enumerate() {
            self.colors[v] = sub.colors[i];
        }
        self.trace.extend(sub.trace.into_iter().map(|mut s| {
            s.vertex = map[s.vertex];
            s
        }));
        self.blocks.extend(sub.blocks);
        self.notes.extend(sub.notes);
        self.findings.extend(sub.findings);
    }
}

/// Colors each component of `G[set]` with `f`, reusing the palette from 1.
/// `set` must have no edges into the already colored part of `paint`.
pub(crate) fn color_components<F>(g: &Graph, set: &VertexSet, paint: &mut Paint, mut f: F) -> Result<()>
where
    F: FnMut(&Graph, &[usize]) -> Result<Paint>,
{
    if set.is_empty() {
        return Ok(());
    }
    let touching = g.neighborhood(set).intersection(&paint.colored());
    if let Some(x) = touching.first() {
        return Err(Error::StructuralGap(format!(
            "residual vertices {:?} are adjacent to colored vertex {x}",
            set.intersection(&g.neighbors(x)).to_vec()
        )));
    }
    for comp in g.components_within(set) {
        let (h, map) = g.induced_subgraph(&comp)?;
        let sub = f(&h, &map)?;
        paint.absorb(sub, &map);
    }
    Ok(())
}

pub(crate) fn require_member(g: &Graph, spec: &ClassSpec) -> Result<()> {
    let r = is_member(g, spec);
    match r.violation {
        None => Ok(()),
        Some(v) => Err(Error::Precondition(format!(
            "graph is not in class {}: {}",
            spec.name,
            serde_json::to_string(&v).unwrap_or_default()
        ))),
    }
}

pub(crate) struct Finish {
    pub theorem: TheoremId,
    pub omega: usize,
    pub c_value: usize,
    pub bound_value: u128,
    pub strict_budget: Option<u128>,
}

pub(crate) fn certificate(g: &Graph, paint: Paint, f: Finish) -> Result<ColoringCertificate> {
    let proper = is_proper(g, &paint.colors)?;
    let max_color = paint.colors.iter().copied().max().unwrap_or(0);
    let trace_ok = trace_complete(g.n(), &paint.trace);
    let within = max_color as u128 <= f.bound_value;
    Ok(ColoringCertificate {
        theorem: f.theorem,
        palette_used: palette_size(&paint.colors),
        max_color,
        bound_value: f.bound_value,
        omega: f.omega,
        c_value: f.c_value,
        strict_budget: f.strict_budget,
        strict_budget_met: f.strict_budget.map(|b| max_color as u128 <= b),
        proper,
        trace_complete: trace_ok,
        within_bound: within,
        ok: proper && trace_ok && within,
        coloring: paint.colors,
        trace: paint.trace,
        blocks: paint.blocks,
        notes: paint.notes,
        findings: paint.findings,
    })
}

/// Dispatches to the colorer for `theorem`.
pub fn color_with(
    g: &Graph,
    theorem: TheoremId,
    args: &ClassArgs,
    opts: &ColorOptions,
) -> Result<ColoringCertificate> {
    match theorem {
        TheoremId::Thm1 => color_thm1(g, args.t, opts),
        TheoremId::Thm2 => color_thm2(g, args, opts),
        TheoremId::Thm3 => color_thm3(g, args.s, args.t, opts),
        TheoremId::Thm4 => color_thm4(g, opts),
        TheoremId::Thm5a => color_thm5a(g, args.k, opts),
        TheoremId::Thm5b => verify_thm5b(g, opts),
    }
}
