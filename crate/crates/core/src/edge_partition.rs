//! Edge-clique partition of diamond-free graphs in which every edge lies in
//! at least two triangles.
//!
//! For an edge `uv`, `K(uv) = {u, v} ∪ (N(u) ∩ N(v))`. Diamond-freeness makes
//! each `K(uv)` a maximal clique, and two maximal cliques can share at most
//! one vertex, so the `K(uv)` partition the edge set.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::detect::{diamond_free_fast, edge_in_few_triangles};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCliquePartition {
    pub cliques: Vec<VertexSet>,
    /// Index into `cliques` for each edge `(u, v)` with `u < v`.
    #[serde(skip)]
    pub edge_clique: BTreeMap<(usize, usize), usize>,
}

/// `K(uv)` for the edge `uv`.
pub fn edge_clique(g: &Graph, u: usize, v: usize) -> VertexSet {
    let mut k = g.neighbors(u).intersection(&g.neighbors(v));
    k.insert(u);
    k.insert(v);
    k
}

pub fn edge_clique_partition(g: &Graph) -> Result<EdgeCliquePartition> {
    if let Err(w) = diamond_free_fast(g) {
        return Err(Error::Precondition(format!(
            "graph contains a diamond at {:?}",
            w.0
        )));
    }
    if let Some((u, v)) = edge_in_few_triangles(g) {
        let count = g.neighbors(u).intersection(&g.neighbors(v)).len();
        return Err(Error::Precondition(format!(
            "edge ({u}, {v}) lies in {count} triangle(s), fewer than 2"
        )));
    }
    let mut cliques = Vec::new();
    let mut edge_clique_map = BTreeMap::new();
    for (u, v) in g.edges() {
        if edge_clique_map.contains_key(&(u, v)) {
            continue;
        }
        let k = edge_clique(g, u, v);
        if !g.is_clique(&k) {
            return Err(Error::StructuralGap(format!(
                "K({u}{v}) = {:?} is not a clique",
                k.to_vec()
            )));
        }
        let idx = cliques.len();
        for a in k.iter() {
            for b in k.iter().filter(|&b| b > a) {
                if let Some(prev) = edge_clique_map.insert((a, b), idx) {
                    return Err(Error::StructuralGap(format!(
                        "edge ({a}, {b}) lies in cliques {prev} and {idx}"
                    )));
                }
            }
        }
        cliques.push(k);
    }
    Ok(EdgeCliquePartition {
        cliques,
        edge_clique: edge_clique_map,
    })
}

impl EdgeCliquePartition {
    /// Re-checks the partition against `g`: every edge covered once, every
    /// clique maximal with at least 4 vertices, pairwise intersections of at
    /// most one vertex.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        for (u, v) in g.edges() {
            let owners = self
                .cliques
                .iter()
                .filter(|c| c.contains(u) && c.contains(v))
                .count();
            if owners != 1 {
                return Err(format!("edge ({u}, {v}) lies in {owners} cliques"));
            }
        }
        for (i, c) in self.cliques.iter().enumerate() {
            if !g.is_clique(c) {
                return Err(format!("clique {i} is not complete"));
            }
            if c.len() < 4 {
                return Err(format!("clique {i} has {} vertices", c.len()));
            }
            let extendable = g
                .vertices()
                .difference(c)
                .iter()
                .find(|&w| c.is_subset(&g.neighbors(w)));
            if let Some(w) = extendable {
                return Err(format!("clique {i} extends by vertex {w}"));
            }
            for (j, d) in self.cliques.iter().enumerate().skip(i + 1) {
                if c.intersection(d).len() > 1 {
                    return Err(format!("cliques {i} and {j} share an edge"));
                }
            }
        }
        Ok(())
    }

    pub fn cliques_at(&self, v: usize) -> Vec<usize> {
        (0..self.cliques.len())
            .filter(|&i| self.cliques[i].contains(v))
            .collect()
    }
}

/// The blades at a vertex and the first edge joining two of them away from
/// the vertex, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanStructure {
    pub vertex: usize,
    pub blades: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_edge: Option<(usize, usize)>,
}

impl FanStructure {
    pub fn anticomplete(&self) -> bool {
        self.cross_edge.is_none()
    }
}

pub fn fan_structure(g: &Graph, part: &EdgeCliquePartition, v: usize) -> FanStructure {
    let blades = part.cliques_at(v);
    let mut cross_edge = None;
    'outer: for (i, &a) in blades.iter().enumerate() {
        let mut left = part.cliques[a];
        left.remove(v);
        for &b in &blades[i + 1..] {
            let mut right = part.cliques[b];
            right.remove(v);
            for x in left.iter() {
                if let Some(y) = g.neighbors(x).intersection(&right).first() {
                    cross_edge = Some((x.min(y), x.max(y)));
                    break 'outer;
                }
            }
        }
    }
    FanStructure {
        vertex: v,
        blades,
        cross_edge,
    }
}

/// `f` copies of `K_c` sharing vertex 0; blade `i` is `{0} ∪ {1 + i(c-1), …}`.
pub fn fan_of_cliques(c: usize, f: usize) -> Result<Graph> {
    if c < 2 || f < 1 {
        return Err(Error::InvalidParameter {
            pattern: "fan_of_cliques",
            constraint: "c >= 2 and f >= 1".into(),
        });
    }
    let n = 1 + f * (c - 1);
    let mut edges = Vec::new();
    for blade in 0..f {
        let members: Vec<usize> = std::iter::once(0)
            .chain((0..c - 1).map(|j| 1 + blade * (c - 1) + j))
            .collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges)
}
