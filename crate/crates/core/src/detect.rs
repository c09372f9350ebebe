//! Induced-subgraph detection and hereditary class membership.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::oracle::clique_number;
use crate::patterns::{PatternId, PatternInstance};

/// Injective map from pattern vertices (by index) to host vertices that
/// preserves both adjacency and non-adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    pub fn is_induced_in(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.0;
        if m.len() != pattern.n() || m.iter().any(|&h| h >= host.n()) {
            return false;
        }
        let distinct: VertexSet = m.iter().copied().collect();
        if distinct.len() != m.len() {
            return false;
        }
        (0..m.len()).all(|p| {
            (0..m.len())
                .filter(|&q| q != p)
                .all(|q| pattern.has_edge(p, q) == host.has_edge(m[p], m[q]))
        })
    }
}

/// Pattern vertices in search order: start from a highest-degree vertex, then
/// repeatedly take the vertex with most already-placed neighbors.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(pattern.n());
    let mut placed = VertexSet::new();
    for _ in 0..pattern.n() {
        let next = (0..pattern.n())
            .filter(|v| !placed.contains(*v))
            .max_by_key(|&v| {
                (
                    pattern.neighbors(v).intersection(&placed).len(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    order
}

/// `twin[p]`: the pattern vertices `q` with `N(p) \ {q} = N(q) \ {p}`.
/// Any permutation of a twin class is an automorphism, so the search only
/// keeps embeddings whose images increase along each class.
fn twin_classes(pattern: &Graph) -> Vec<VertexSet> {
    (0..pattern.n())
        .map(|p| {
            (0..pattern.n())
                .filter(|&q| {
                    let mut a = pattern.neighbors(p);
                    let mut b = pattern.neighbors(q);
                    a.remove(q);
                    b.remove(p);
                    q != p && a == b
                })
                .collect()
        })
        .collect()
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    twins: Vec<VertexSet>,
    placed: VertexSet,
    image: Vec<usize>,
    used: VertexSet,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.host.vertices().difference(&self.used);
        for &q in &self.order[..depth] {
            let hq = self.host.neighbors(self.image[q]);
            cand = if self.pattern.has_edge(p, q) {
                cand.intersection(&hq)
            } else {
                cand.difference(&hq)
            };
        }
        let need = self.pattern.degree(p);
        let (mut lo, mut hi) = (0, usize::MAX);
        for q in self.twins[p].intersection(&self.placed).iter() {
            if q < p {
                lo = lo.max(self.image[q] + 1);
            } else {
                hi = hi.min(self.image[q]);
            }
        }
        self.placed.insert(p);
        for h in cand.iter().filter(|&h| h >= lo && h < hi) {
            if self.host.degree(h) < need {
                continue;
            }
            self.image[p] = h;
            self.used.insert(h);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(h);
        }
        self.placed.remove(p);
        false
    }
}

/// An induced copy of `pattern` in `host`, if one exists. The result is
/// deterministic; within each twin class of the pattern the images increase.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let mut m = Matcher {
        host,
        pattern,
        order: search_order(pattern),
        twins: twin_classes(pattern),
        placed: VertexSet::new(),
        image: vec![0; pattern.n()],
        used: VertexSet::new(),
    };
    m.extend(0).then_some(Embedding(m.image))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && find_induced(a, b).is_some()
}

/// Diamond detection through common neighborhoods: `G` is diamond-free iff
/// `N(u) ∩ N(v)` is a clique for every edge `uv`. The witness follows the
/// layout of [`crate::patterns::diamond`].
pub fn diamond_free_fast(g: &Graph) -> Result<(), Embedding> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(&g.neighbors(v));
        for a in common.iter() {
            if let Some(b) = common.difference(&g.neighbors(a)).iter().find(|&b| b > a) {
                return Err(Embedding(vec![u, v, a, b]));
            }
        }
    }
    Ok(())
}

/// First edge lying in fewer than two triangles, if any.
pub fn edge_in_few_triangles(g: &Graph) -> Option<(usize, usize)> {
    g.edges()
        .find(|&(u, v)| g.neighbors(u).intersection(&g.neighbors(v)).len() < 2)
}

pub fn every_edge_two_triangles(g: &Graph) -> bool {
    edge_in_few_triangles(g).is_none()
}

/// Side conditions a class may impose beyond forbidden patterns.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    #[serde(default)]
    pub every_edge_in_two_triangles: bool,
    #[serde(default)]
    pub min_omega: Option<usize>,
}

/// Parameters a class description was instantiated with.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassParams {
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub k: Option<usize>,
}

/// A hereditary class given by forbidden induced subgraphs, optionally
/// narrowed by [`Conditions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    pub name: String,
    pub forbidden: Vec<PatternInstance>,
    pub conditions: Conditions,
    pub params: ClassParams,
}

impl ClassSpec {
    pub fn new(name: impl Into<String>, forbidden: Vec<PatternInstance>) -> Self {
        Self {
            name: name.into(),
            forbidden,
            conditions: Conditions::default(),
            params: ClassParams::default(),
        }
    }

    pub fn with_conditions(mut self, conditions: Conditions) -> Self {
        self.conditions = conditions;
        self
    }

    pub fn with_params(mut self, params: ClassParams) -> Self {
        self.params = params;
        self
    }

    pub fn labels(&self) -> Vec<String> {
        self.forbidden.iter().map(PatternInstance::label).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Pattern { pattern: String, embedding: Embedding },
    EdgeInFewTriangles { edge: (usize, usize) },
    OmegaTooSmall { omega: usize, min: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

/// Checks the patterns in listed order, then the side conditions.
pub fn is_member(host: &Graph, spec: &ClassSpec) -> MembershipReport {
    let violation = first_violation(host, spec);
    MembershipReport {
        member: violation.is_none(),
        violation,
    }
}

fn first_violation(host: &Graph, spec: &ClassSpec) -> Option<Violation> {
    for p in &spec.forbidden {
        let hit = if p.id == PatternId::Diamond {
            diamond_free_fast(host).err()
        } else {
            find_induced(host, &p.graph)
        };
        if let Some(embedding) = hit {
            return Some(Violation::Pattern {
                pattern: p.label(),
                embedding,
            });
        }
    }
    if spec.conditions.every_edge_in_two_triangles {
        if let Some(edge) = edge_in_few_triangles(host) {
            return Some(Violation::EdgeInFewTriangles { edge });
        }
    }
    if let Some(min) = spec.conditions.min_omega {
        let omega = clique_number(host);
        if omega < min {
            return Some(Violation::OmegaTooSmall { omega, min });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{self, bowtie, complete, cycle, diamond, f1, fan_triangles, gem, path, petersen};

    fn class(forbidden: Vec<Graph>) -> ClassSpec {
        ClassSpec::new(
            "test",
            forbidden
                .into_iter()
                .map(|g| PatternInstance::fixed(PatternId::Complete, g))
                .collect(),
        )
    }

    #[test]
    fn find_induced_examples() {
        assert_eq!(find_induced(&complete(4).unwrap(), &diamond()), None);
        let e = find_induced(&gem(), &path(4).unwrap()).unwrap();
        assert!(e.is_induced_in(&gem(), &path(4).unwrap()));
        assert_eq!(find_induced(&cycle(5).unwrap(), &path(5).unwrap()), None);
        assert_eq!(find_induced(&path(3).unwrap(), &path(5).unwrap()), None);
    }

    #[test]
    fn find_induced_is_deterministic() {
        let p = petersen();
        let a = find_induced(&p, &path(4).unwrap());
        assert_eq!(a, find_induced(&p, &path(4).unwrap()));
        assert!(a.unwrap().is_induced_in(&p, &path(4).unwrap()));
    }

    #[test]
    fn isomorphism() {
        assert!(is_isomorphic(&f1(2).unwrap(), &diamond()));
        assert!(!is_isomorphic(&path(4).unwrap(), &patterns::cycle(4).unwrap()));
        let relabelled = gem().relabel(&[4, 2, 0, 1, 3]);
        assert!(is_isomorphic(&gem(), &relabelled));
    }

    #[test]
    fn membership_examples() {
        let r = is_member(&diamond(), &class(vec![diamond()]));
        assert!(!r.member);
        match r.violation {
            Some(Violation::Pattern { embedding, .. }) => {
                assert!(embedding.is_induced_in(&diamond(), &diamond()))
            }
            other => panic!("unexpected {other:?}"),
        }
        let c5 = cycle(5).unwrap();
        assert!(is_member(&c5, &class(vec![diamond(), bowtie(2, 2).unwrap()])).member);
        let b = bowtie(2, 2).unwrap();
        assert!(!is_member(&b, &class(vec![b.clone()])).member);
        assert!(is_member(&b, &ClassSpec::new("all", vec![])).member);
    }

    #[test]
    fn diamond_fast_path() {
        assert!(diamond_free_fast(&complete(4).unwrap()).is_ok());
        let w = diamond_free_fast(&f1(3).unwrap()).unwrap_err();
        assert!(w.is_induced_in(&f1(3).unwrap(), &diamond()));
        let p = petersen();
        assert!(diamond_free_fast(&p).is_ok());
        assert!(find_induced(&p, &diamond()).is_none());
    }

    #[test]
    fn two_triangles() {
        assert!(every_edge_two_triangles(&complete(4).unwrap()));
        assert!(!every_edge_two_triangles(&complete(3).unwrap()));
        // brute-force triangle count per edge: F(3,2) is two K4s glued at
        // the center, so every edge lies in exactly two triangles
        let g = fan_triangles(2).unwrap();
        let counts: Vec<usize> = g
            .edges()
            .map(|(u, v)| (0..g.n()).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count())
            .collect();
        assert!(counts.iter().all(|&c| c == 2));
        assert!(every_edge_two_triangles(&g));
        let mut pendant = fan_triangles(2).unwrap().disjoint_union(&complete(1).unwrap()).unwrap();
        pendant = pendant.with_edges(&[(0, 7)]).unwrap();
        assert!(!every_edge_two_triangles(&pendant));
    }

    #[test]
    fn conditions_are_checked() {
        let spec = ClassSpec::new("c", vec![]).with_conditions(Conditions {
            every_edge_in_two_triangles: true,
            min_omega: Some(4),
        });
        assert_eq!(
            is_member(&complete(3).unwrap(), &spec).violation,
            Some(Violation::EdgeInFewTriangles { edge: (0, 1) })
        );
        let spec = ClassSpec::new("c", vec![]).with_conditions(Conditions {
            every_edge_in_two_triangles: false,
            min_omega: Some(4),
        });
        assert_eq!(
            is_member(&complete(3).unwrap(), &spec).violation,
            Some(Violation::OmegaTooSmall { omega: 3, min: 4 })
        );
    }
}
