//! Checkers for the structural properties of a [`CliqueDecomposition`].
//!
//! Each checker reports whether the graph satisfies the property's class
//! hypothesis (never assumed) and, independently, whether the property's
//! inequality holds, together with both sides of the comparison. Exact
//! chromatic numbers above the oracle cap make a report undecided.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::decompose::CliqueDecomposition;
use crate::detect::{is_member, ClassParams, ClassSpec, Conditions, Violation};
use crate::edge_partition::{edge_clique_partition, fan_structure};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{binomial, chi_n, chi_n_witness, chromatic_number_within, clique_number_within, ramsey_upper, OracleCaps};
use crate::patterns::{self, PatternId, PatternInstance, PatternParams, StarConvention};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PropertyId {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    #[serde(rename = "P-property")]
    PProperty,
    D1,
}

impl PropertyId {
    pub const ALL: [PropertyId; 10] = [
        PropertyId::P1,
        PropertyId::P2,
        PropertyId::P3,
        PropertyId::P4,
        PropertyId::P5,
        PropertyId::P6,
        PropertyId::P7,
        PropertyId::P8,
        PropertyId::PProperty,
        PropertyId::D1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::P1 => "P1",
            PropertyId::P2 => "P2",
            PropertyId::P3 => "P3",
            PropertyId::P4 => "P4",
            PropertyId::P5 => "P5",
            PropertyId::P6 => "P6",
            PropertyId::P7 => "P7",
            PropertyId::P8 => "P8",
            PropertyId::PProperty => "P-property",
            PropertyId::D1 => "D1",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_uppercase();
        PropertyId::ALL
            .into_iter()
            .find(|p| p.name().to_ascii_uppercase() == key || (key == "PP" && *p == PropertyId::PProperty))
            .ok_or_else(|| Error::Config(format!("unknown property '{s}'")))
    }
}

/// Where the constant `C` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CValue {
    /// A declared constant.
    Literal(usize),
    /// `χ^(t)(G)`, the smallest `C` for which `G` has the P-property.
    #[default]
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyParams {
    pub s: usize,
    pub t: usize,
    pub k: usize,
    #[serde(default)]
    pub c: CValue,
    #[serde(default)]
    pub star: StarConvention,
}

impl Default for PropertyParams {
    fn default() -> Self {
        Self {
            s: 2,
            t: 2,
            k: 2,
            c: CValue::Oracle,
            star: StarConvention::Vertices,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    Undecided,
}

/// A configuration refuting a property or sub-claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A vertex that should not exist (e.g. a member of `S`).
    Vertex { vertex: usize },
    /// Two nonadjacent vertices in a family that should be a clique.
    NonAdjacentPair { family: VertexSet, a: usize, b: usize },
    /// A vertex with too many neighbors in a set.
    Neighbors { vertex: usize, neighbors: VertexSet },
    /// A vertex set whose chromatic number, clique number or size exceeds the bound.
    Set { name: String, vertices: VertexSet },
    /// `far` lies at distance at least 2 from `from` on paths avoiding the blocked sets.
    Distance { from: usize, far: usize },
    /// An edge between two blades away from their common vertex.
    CrossEdge { vertex: usize, edge: (usize, usize) },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubClaim {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: PropertyId,
    pub status: Status,
    pub holds: bool,
    pub hypothesis: Vec<String>,
    pub hypothesis_met: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_violation: Option<Violation>,
    pub s: usize,
    pub t: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    /// Measured side of the comparison.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured: Option<u128>,
    /// Bound side of the comparison.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u128>,
    pub relation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subclaims: Vec<SubClaim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PropertyReport {
    /// Hypothesis satisfied and the property fails.
    pub fn is_violation(&self) -> bool {
        self.hypothesis_met && self.status == Status::Fails
    }
}

fn inst(id: PatternId, s: Option<usize>, t: Option<usize>, k: Option<usize>, star: StarConvention) -> Result<PatternInstance> {
    PatternInstance::build(
        id,
        &PatternParams {
            s,
            t,
            k,
            l: None,
            star,
        },
    )
}

/// The class a property is stated for, including `ω >= 2t - 1`.
pub fn hypothesis(which: PropertyId, p: &PropertyParams) -> Result<ClassSpec> {
    let (s, t, k) = (Some(p.s), Some(p.t), Some(p.k));
    let star = p.star;
    let diamond = PatternInstance::fixed(PatternId::Diamond, patterns::diamond());
    let p5 = PatternInstance::build(
        PatternId::Path,
        &PatternParams {
            l: Some(5),
            ..Default::default()
        },
    )?;
    let forbidden = match which {
        PropertyId::P1 => vec![inst(PatternId::F1, None, t, None, star)?],
        PropertyId::P2 => vec![inst(PatternId::F2, None, t, None, star)?],
        PropertyId::P3 => vec![inst(PatternId::LollipopStar, None, t, k, star)?],
        PropertyId::P4 => vec![inst(PatternId::HammerPlus, None, t, None, star)?, diamond],
        PropertyId::P5 => vec![inst(PatternId::Bowtie, s, t, None, star)?],
        PropertyId::P6 => vec![p5, inst(PatternId::Bowtie, s, t, None, star)?],
        PropertyId::P7 => vec![p5, inst(PatternId::Dumbbell, Some(p.s + 1), Some(p.t + 1), None, star)?],
        PropertyId::P8 => vec![diamond],
        PropertyId::PProperty => vec![],
        PropertyId::D1 => vec![diamond],
    };
    let conditions = match which {
        PropertyId::PProperty => Conditions::default(),
        PropertyId::D1 => Conditions {
            every_edge_in_two_triangles: true,
            min_omega: None,
        },
        _ => Conditions {
            every_edge_in_two_triangles: false,
            min_omega: Some(2 * p.t - 1),
        },
    };
    Ok(ClassSpec::new(format!("{which}-hypothesis"), forbidden)
        .with_conditions(conditions)
        .with_params(ClassParams { s, t, k }))
}

/// Outcome of one measured comparison.
struct Measure {
    status: Status,
    measured: Option<u128>,
    bound: Option<u128>,
    relation: &'static str,
    witness: Option<Witness>,
    subclaims: Vec<SubClaim>,
    c: Option<usize>,
    note: Option<String>,
}

impl Measure {
    fn compare(measured: u128, bound: u128, relation: &'static str, witness: impl FnOnce() -> Option<Witness>) -> Self {
        let ok = match relation {
            "<" => measured < bound,
            "==" => measured == bound,
            _ => measured <= bound,
        };
        Self {
            status: if ok { Status::Holds } else { Status::Fails },
            measured: Some(measured),
            bound: Some(bound),
            relation,
            witness: if ok { None } else { witness() },
            subclaims: Vec::new(),
            c: None,
            note: None,
        }
    }

    fn undecided(note: String) -> Self {
        Self {
            status: Status::Undecided,
            measured: None,
            bound: None,
            relation: "<=",
            witness: None,
            subclaims: Vec::new(),
            c: None,
            note: Some(note),
        }
    }
}

/// Exact chromatic number, or `None` above the cap.
fn chi(g: &Graph, set: &VertexSet, caps: &OracleCaps) -> Result<Option<usize>> {
    match chromatic_number_within(g, set, caps.chi) {
        Ok(k) => Ok(Some(k)),
        Err(Error::OracleCapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn resolve_c(g: &Graph, p: &PropertyParams, caps: &OracleCaps) -> Result<Option<usize>> {
    match p.c {
        CValue::Literal(c) => Ok(Some(c)),
        CValue::Oracle => match chi_n(g, p.t, caps.chi_n) {
            Ok(c) => Ok(Some(c)),
            Err(Error::OracleCapExceeded { .. }) => Ok(None),
            Err(e) => Err(e),
        },
    }
}

fn b(x: usize) -> u128 {
    x as u128
}

/// For each `v0` in `sources`, looks for a vertex outside `blocked` at
/// distance at least 2 from `v0` along paths that avoid `blocked` (other than
/// `v0` itself).
fn distance_claim(g: &Graph, sources: &VertexSet, blocked: &VertexSet, name: &str) -> Result<SubClaim> {
    for v0 in sources.iter() {
        let mut keep = g.vertices().difference(blocked);
        keep.insert(v0);
        let (h, map) = g.induced_subgraph(&keep)?;
        let local = map.iter().position(|&v| v == v0).expect("v0 is kept");
        let layers = h.distance_layers(&VertexSet::singleton(local))?;
        if let Some(far) = layers.at_least(2).first() {
            return Ok(SubClaim {
                name: name.to_string(),
                holds: false,
                witness: Some(Witness::Distance { from: v0, far: map[far] }),
            });
        }
    }
    Ok(SubClaim {
        name: name.to_string(),
        holds: true,
        witness: None,
    })
}

fn clique_below(g: &Graph, set: &VertexSet, t: usize, name: &str) -> SubClaim {
    let holds = clique_number_within(g, set) < t;
    SubClaim {
        name: name.to_string(),
        holds,
        witness: (!holds).then(|| Witness::Set {
            name: name.to_string(),
            vertices: *set,
        }),
    }
}

fn chi_at_most(
    g: &Graph,
    set: &VertexSet,
    bound: u128,
    name: &str,
    caps: &OracleCaps,
) -> Result<Measure> {
    Ok(match chi(g, set, caps)? {
        Some(x) => Measure::compare(b(x), bound, "<=", || {
            Some(Witness::Set {
                name: name.to_string(),
                vertices: *set,
            })
        }),
        None => Measure::undecided(format!("{name} has {} vertices, above the chi cap {}", set.len(), caps.chi)),
    })
}

/// Runs one property checker on `g` with decomposition `dec`.
pub fn check_property(
    g: &Graph,
    dec: &CliqueDecomposition,
    which: PropertyId,
    params: &PropertyParams,
    caps: &OracleCaps,
) -> Result<PropertyReport> {
    let spec = hypothesis(which, params)?;
    let membership = is_member(g, &spec);
    let omega = dec.omega();
    let t = params.t;
    if dec.threshold != t {
        return Err(Error::Config(format!(
            "decomposition threshold {} differs from property t = {t}",
            dec.threshold
        )));
    }

    let m = match which {
        PropertyId::P1 => Measure::compare(b(dec.s.len()), 0, "<=", || {
            dec.s.first().map(|vertex| Witness::Vertex { vertex })
        }),
        PropertyId::P2 => {
            let mut witness = None;
            let mut largest = 0;
            for (family, members) in &dec.a_m {
                largest = largest.max(members.len());
                if witness.is_none() {
                    for a in members.iter() {
                        if let Some(bv) = members.difference(&g.neighbors(a)).iter().find(|&x| x > a) {
                            witness = Some(Witness::NonAdjacentPair { family: *family, a, b: bv });
                            break;
                        }
                    }
                }
            }
            let mut size_bound = 0u128;
            for i in 1..t {
                size_bound += b(omega) * binomial(omega as u64, i as u64)?;
            }
            let mut m = Measure::compare(b(largest), b(omega), "<=", || {
                dec.a_m.values().find(|a| a.len() > omega).map(|a| Witness::Set {
                    name: "A_M".into(),
                    vertices: *a,
                })
            });
            if witness.is_some() {
                m.status = Status::Fails;
                m.witness = witness;
            }
            m.subclaims.push(SubClaim {
                name: format!("|S| = {} <= {size_bound}", dec.s.len()),
                holds: b(dec.s.len()) <= size_bound,
                witness: None,
            });
            m.note = Some("holds means every A_M induces a clique".into());
            m
        }
        PropertyId::P3 => {
            let r = ramsey_upper((omega.max(2) - 1) as u64, params.k as u64)?;
            let (worst, at) = dec
                .t
                .iter()
                .map(|v0| (g.neighbors(v0).intersection(&dec.t_prime).len(), v0))
                .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)))
                .unwrap_or((0, usize::MAX));
            let mut m = Measure::compare(b(worst), r, "<", || {
                Some(Witness::Neighbors {
                    vertex: at,
                    neighbors: g.neighbors(at).intersection(&dec.t_prime),
                })
            });
            m.note = Some("R(omega-1, k) taken as its binomial upper bound".into());
            m
        }
        PropertyId::P4 => {
            let mut m = chi_at_most(g, &dec.t_prime, b(omega), "T'", caps)?;
            let core = dec.k.union(&dec.s).union(&dec.t);
            m.subclaims.push(distance_claim(g, &dec.t, &core, "N>=2(v0) \\ (K ∪ T) empty for v0 in T, on paths outside K ∪ S ∪ T")?);
            let big = g
                .components_within(&dec.t_prime)
                .into_iter()
                .find(|c| c.len() > omega);
            m.subclaims.push(SubClaim {
                name: "components of T' have at most omega vertices".into(),
                holds: big.is_none(),
                witness: big.map(|vertices| Witness::Set {
                    name: "T' component".into(),
                    vertices,
                }),
            });
            m
        }
        PropertyId::P5 => {
            let groups = binomial((omega.max(1) - 1) as u64, t as u64)? * b(omega);
            let (bound, c) = if t == 2 {
                (groups, None)
            } else {
                match resolve_c(g, params, caps)? {
                    Some(c) => (groups * b(c), Some(c)),
                    None => {
                        let mut m = Measure::undecided("C oracle above cap".into());
                        m.relation = "<=";
                        return Ok(finish(which, params, &spec, membership, m));
                    }
                }
            };
            let mut m = chi_at_most(g, &dec.t, bound, "T", caps)?;
            m.c = c;
            let bad = dec
                .a_nv
                .iter()
                .find(|(_, members)| clique_number_within(g, members) >= t);
            m.subclaims.push(SubClaim {
                name: "omega(A'_{N,v}) < t".into(),
                holds: bad.is_none(),
                witness: bad.map(|(_, members)| Witness::Set {
                    name: "A'_{N,v}".into(),
                    vertices: *members,
                }),
            });
            m
        }
        PropertyId::P6 | PropertyId::P7 => {
            let (set, name, sources, special) = if which == PropertyId::P6 {
                // vertices with a neighbor in S, including those also next to T
                let s_side = dec.s_prime.union(&dec.s_t_overlap);
                (s_side, "S'", dec.s, t == 2)
            } else {
                (dec.t_prime, "T'", dec.t, t == 2 && params.s == 2)
            };
            let (bound, c) = if special {
                (1, None)
            } else {
                match resolve_c(g, params, caps)? {
                    Some(c) => (b(c), Some(c)),
                    None => {
                        return Ok(finish(which, params, &spec, membership, Measure::undecided("C oracle above cap".into())));
                    }
                }
            };
            let mut m = chi_at_most(g, &set, bound, name, caps)?;
            m.c = c;
            let x = if which == PropertyId::P6 { "S" } else { "T" };
            let claim = format!("N>=2(v0) \\ (K ∪ {x}) empty for v0 in {x}, on paths outside K ∪ S ∪ T");
            let core = dec.k.union(&dec.s).union(&dec.t);
            m.subclaims.push(distance_claim(g, &sources, &core, &claim)?);
            m.subclaims.push(clique_below(g, &set, t, &format!("omega({name}) < t")));
            m
        }
        PropertyId::P8 => {
            let bound = b(omega * omega) * binomial((omega.max(1) - 1) as u64, t as u64)?;
            let mut m = chi_at_most(g, &dec.t, bound, "T", caps)?;
            let big = dec.a_nv.values().find_map(|members| {
                g.components_within(members)
                    .into_iter()
                    .find(|c| c.len() > omega)
            });
            m.subclaims.push(SubClaim {
                name: "components of each A'_{N,v} have at most omega vertices".into(),
                holds: big.is_none(),
                witness: big.map(|vertices| Witness::Set {
                    name: "A'_{N,v} component".into(),
                    vertices,
                }),
            });
            m
        }
        PropertyId::PProperty => match (resolve_c(g, params, caps)?, chi_n_checked(g, t, caps)?) {
            (Some(c), Some((x, set))) => {
                let mut m = Measure::compare(b(x), b(c), "<=", || {
                    Some(Witness::Set {
                        name: format!("induced subgraph with omega <= {t}"),
                        vertices: set,
                    })
                });
                m.c = Some(c);
                m.note = Some(format!("measured = chi^({t})(G)"));
                m
            }
            _ => Measure::undecided(format!("chi_n cap {} exceeded", caps.chi_n)),
        },
        PropertyId::D1 => match edge_clique_partition(g) {
            Ok(part) => {
                let bad = (0..g.n())
                    .map(|v| fan_structure(g, &part, v))
                    .find(|f| !f.anticomplete());
                let mut m = Measure::compare(bad.is_some() as u128, 0, "<=", || None);
                if let Some(f) = bad {
                    m.witness = Some(Witness::CrossEdge {
                        vertex: f.vertex,
                        edge: f.cross_edge.unwrap(),
                    });
                }
                m.note = Some("measured = 1 if some pair of blades is joined by an edge".into());
                m
            }
            Err(e) => Measure::undecided(format!("no edge-clique partition: {e}")),
        },
    };
    Ok(finish(which, params, &spec, membership, m))
}

fn chi_n_checked(g: &Graph, t: usize, caps: &OracleCaps) -> Result<Option<(usize, VertexSet)>> {
    match chi_n_witness(g, t, caps.chi_n) {
        Ok(x) => Ok(Some(x)),
        Err(Error::OracleCapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn finish(
    which: PropertyId,
    params: &PropertyParams,
    spec: &ClassSpec,
    membership: crate::detect::MembershipReport,
    m: Measure,
) -> PropertyReport {
    PropertyReport {
        property: which,
        status: m.status,
        holds: m.status == Status::Holds,
        hypothesis: spec
            .labels()
            .into_iter()
            .chain(spec.conditions.min_omega.map(|w| format!("omega >= {w}")))
            .chain(spec.conditions.every_edge_in_two_triangles.then(|| "every edge in >= 2 triangles".to_string()))
            .collect(),
        hypothesis_met: membership.member,
        hypothesis_violation: membership.violation,
        s: params.s,
        t: params.t,
        k: params.k,
        c: m.c,
        measured: m.measured,
        bound: m.bound,
        relation: m.relation,
        witness: m.witness,
        subclaims: m.subclaims,
        note: m.note,
    }
}
