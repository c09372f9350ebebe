//! Constructors for the named graphs used as forbidden induced subgraphs.
//!
//! Layouts are fixed so witnesses are readable: cliques come first and occupy
//! the lowest indices, attachments follow.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn clique_edges(range: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in range.clone() {
        for j in (i + 1)..range.end {
            out.push((i, j));
        }
    }
    out
}

fn require(pattern: &'static str, ok: bool, constraint: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            pattern,
            constraint: constraint.to_string(),
        })
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, &clique_edges(0..n))
}

/// `P_l`: the path on `l` vertices.
pub fn path(l: usize) -> Result<Graph> {
    require("path", l >= 1, "l >= 1")?;
    let edges: Vec<_> = (1..l).map(|i| (i - 1, i)).collect();
    Graph::from_edges(l, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    require("cycle", n >= 3, "n >= 3")?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// `K_4` minus the edge `2-3`; vertices 0 and 1 have degree 3.
pub fn diamond() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// `K_t` on `0..t` with `k` pendant vertices hung off vertex 0.
pub fn pineapple(t: usize, k: usize) -> Result<Graph> {
    require("pineapple", t >= 1 && k >= 1, "t >= 1 and k >= 1")?;
    let mut edges = clique_edges(0..t);
    edges.extend((t..t + k).map(|p| (0, p)));
    Graph::from_edges(t + k, &edges)
}

/// `K_s` on `0..s`, `K_t` on `s..s+t`, and a center `s+t` adjacent to both.
pub fn bowtie(s: usize, t: usize) -> Result<Graph> {
    require("bowtie", s >= 1 && t >= 1, "s >= 1 and t >= 1")?;
    let center = s + t;
    let mut edges = clique_edges(0..s);
    edges.extend(clique_edges(s..s + t));
    edges.extend((0..s + t).map(|v| (v, center)));
    Graph::from_edges(s + t + 1, &edges)
}

/// `K_t` on `0..t` joined at vertex 0 to the end `t` of the path `t - t+1`.
pub fn lollipop_path(t: usize) -> Result<Graph> {
    require("lollipop_path", t >= 1, "t >= 1")?;
    let mut edges = clique_edges(0..t);
    edges.push((0, t));
    edges.push((t, t + 1));
    Graph::from_edges(t + 2, &edges)
}

/// `K_s` on `0..s` and `K_t` on `s..s+t` with the single edge `0 - s`.
pub fn dumbbell(s: usize, t: usize) -> Result<Graph> {
    require("dumbbell", s >= 1 && t >= 1, "s >= 1 and t >= 1")?;
    let mut edges = clique_edges(0..s);
    edges.extend(clique_edges(s..s + t));
    edges.push((0, s));
    Graph::from_edges(s + t, &edges)
}

/// How the `k` in a `(k,t)`-lollipop counts the star.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StarConvention {
    /// The star has `k` vertices: a center and `k - 1` leaves.
    #[default]
    Vertices,
    /// The star has `k` leaves plus its center.
    Leaves,
}

/// `K_t` on `0..t`, star center `t` complete to the clique, leaves after it.
pub fn lollipop_star(k: usize, t: usize) -> Result<Graph> {
    lollipop_star_with(k, t, StarConvention::Vertices)
}

pub fn lollipop_star_with(k: usize, t: usize, convention: StarConvention) -> Result<Graph> {
    require("lollipop_star", t >= 2 && k >= 1, "t >= 2 and k >= 1")?;
    let leaves = match convention {
        StarConvention::Vertices => k - 1,
        StarConvention::Leaves => k,
    };
    let center = t;
    let mut edges = clique_edges(0..t);
    edges.extend((0..t).map(|v| (v, center)));
    edges.extend((t + 1..t + 1 + leaves).map(|leaf| (center, leaf)));
    Graph::from_edges(t + 1 + leaves, &edges)
}

/// `F(3,l)`: center 0 complete to `l` disjoint triangles `{1,2,3}, {4,5,6}, …`.
pub fn fan_triangles(l: usize) -> Result<Graph> {
    require("fan_triangles", l >= 1, "l >= 1")?;
    let mut edges = Vec::new();
    for i in 0..l {
        let base = 1 + 3 * i;
        edges.extend(clique_edges(base..base + 3));
        edges.extend((base..base + 3).map(|v| (0, v)));
    }
    Graph::from_edges(3 * l + 1, &edges)
}

/// Path `0-1-2-3` whose end 3 is complete to a `K_t` on `4..4+t`.
pub fn hammer_plus(t: usize) -> Result<Graph> {
    require("hammer_plus", t >= 1, "t >= 1")?;
    let mut edges = vec![(0, 1), (1, 2), (2, 3)];
    edges.extend(clique_edges(4..4 + t));
    edges.extend((4..4 + t).map(|v| (3, v)));
    Graph::from_edges(t + 4, &edges)
}

fn clique_with_independent_apexes(name: &'static str, t: usize, apexes: usize) -> Result<Graph> {
    require(name, t >= 1, "t >= 1")?;
    let mut edges = clique_edges(0..t);
    for a in t..t + apexes {
        edges.extend((0..t).map(|v| (v, a)));
    }
    Graph::from_edges(t + apexes, &edges)
}

/// `K_t` plus two nonadjacent vertices complete to it.
pub fn f1(t: usize) -> Result<Graph> {
    clique_with_independent_apexes("f1", t, 2)
}

/// `K_t` plus three pairwise nonadjacent vertices complete to it.
pub fn f2(t: usize) -> Result<Graph> {
    clique_with_independent_apexes("f2", t, 3)
}

/// `P_4` on `0..4` plus vertex 4 adjacent to all of it.
pub fn gem() -> Graph {
    Graph::from_edges(
        5,
        &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
    )
    .unwrap()
}

/// `P_4` on `0..4` plus vertex 4 adjacent to 0, 1, 2 (missing the end 3).
pub fn kite() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4)]).unwrap()
}

/// `K_4` on `0..4` with a pendant vertex 4 at vertex 0.
pub fn flag() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]).unwrap()
}

/// Every constructor by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternId {
    Diamond,
    Path,
    Cycle,
    Complete,
    Petersen,
    Pineapple,
    Bowtie,
    LollipopPath,
    Dumbbell,
    LollipopStar,
    FanTriangles,
    HammerPlus,
    F1,
    F2,
    Gem,
    Kite,
    Flag,
}

impl PatternId {
    pub const ALL: [PatternId; 17] = [
        PatternId::Diamond,
        PatternId::Path,
        PatternId::Cycle,
        PatternId::Complete,
        PatternId::Petersen,
        PatternId::Pineapple,
        PatternId::Bowtie,
        PatternId::LollipopPath,
        PatternId::Dumbbell,
        PatternId::LollipopStar,
        PatternId::FanTriangles,
        PatternId::HammerPlus,
        PatternId::F1,
        PatternId::F2,
        PatternId::Gem,
        PatternId::Kite,
        PatternId::Flag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternId::Diamond => "diamond",
            PatternId::Path => "path",
            PatternId::Cycle => "cycle",
            PatternId::Complete => "complete",
            PatternId::Petersen => "petersen",
            PatternId::Pineapple => "pineapple",
            PatternId::Bowtie => "bowtie",
            PatternId::LollipopPath => "lollipop_path",
            PatternId::Dumbbell => "dumbbell",
            PatternId::LollipopStar => "lollipop_star",
            PatternId::FanTriangles => "fan_triangles",
            PatternId::HammerPlus => "hammer_plus",
            PatternId::F1 => "f1",
            PatternId::F2 => "f2",
            PatternId::Gem => "gem",
            PatternId::Kite => "kite",
            PatternId::Flag => "flag",
        }
    }

    /// Parameter names the constructor reads, in argument order.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            PatternId::Path | PatternId::Cycle | PatternId::FanTriangles => &["l"],
            PatternId::Complete
            | PatternId::LollipopPath
            | PatternId::HammerPlus
            | PatternId::F1
            | PatternId::F2 => &["t"],
            PatternId::Pineapple => &["t", "k"],
            PatternId::Bowtie | PatternId::Dumbbell => &["s", "t"],
            PatternId::LollipopStar => &["k", "t"],
            PatternId::Diamond
            | PatternId::Petersen
            | PatternId::Gem
            | PatternId::Kite
            | PatternId::Flag => &[],
        }
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        PatternId::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| Error::Config(format!("unknown pattern '{s}'")))
    }
}

/// Constructor parameters; unused fields are ignored.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(default)]
    pub star: StarConvention,
}

impl PatternParams {
    fn get(&self, pattern: PatternId, name: &str) -> Result<usize> {
        let v = match name {
            "s" => self.s,
            "t" => self.t,
            "k" => self.k,
            _ => self.l,
        };
        v.ok_or_else(|| Error::InvalidParameter {
            pattern: pattern.name(),
            constraint: format!("missing parameter {name}"),
        })
    }
}

/// A named pattern together with the parameters it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternInstance {
    pub id: PatternId,
    pub params: BTreeMap<&'static str, usize>,
    pub graph: Graph,
}

impl PatternInstance {
    pub fn build(id: PatternId, params: &PatternParams) -> Result<Self> {
        let mut used = BTreeMap::new();
        for &name in id.parameters() {
            used.insert(name, params.get(id, name)?);
        }
        let p = |name: &str| used[name];
        let graph = match id {
            PatternId::Diamond => diamond(),
            PatternId::Path => path(p("l"))?,
            PatternId::Cycle => cycle(p("l"))?,
            PatternId::Complete => complete(p("t"))?,
            PatternId::Petersen => petersen(),
            PatternId::Pineapple => pineapple(p("t"), p("k"))?,
            PatternId::Bowtie => bowtie(p("s"), p("t"))?,
            PatternId::LollipopPath => lollipop_path(p("t"))?,
            PatternId::Dumbbell => dumbbell(p("s"), p("t"))?,
            PatternId::LollipopStar => lollipop_star_with(p("k"), p("t"), params.star)?,
            PatternId::FanTriangles => fan_triangles(p("l"))?,
            PatternId::HammerPlus => hammer_plus(p("t"))?,
            PatternId::F1 => f1(p("t"))?,
            PatternId::F2 => f2(p("t"))?,
            PatternId::Gem => gem(),
            PatternId::Kite => kite(),
            PatternId::Flag => flag(),
        };
        Ok(Self {
            id,
            params: used,
            graph,
        })
    }

    pub fn fixed(id: PatternId, graph: Graph) -> Self {
        Self {
            id,
            params: BTreeMap::new(),
            graph,
        }
    }

    /// Display label such as `bowtie(s=2,t=2)`.
    pub fn label(&self) -> String {
        if self.params.is_empty() {
            return self.id.name().to_string();
        }
        let args: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("{}({})", self.id, args.join(","))
    }
}
