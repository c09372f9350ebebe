//! Simple undirected graphs over dense vertex indices.

use std::fmt::Write as _;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `0..n`.
///
/// `adj[v]` is the open neighborhood of `v`. Rows are kept symmetric and
/// irreflexive, and no bit at a position `>= n` is ever set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// BFS layers around a vertex set: `layers[i]` holds the vertices at distance
/// exactly `i`, `unreachable` everything else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceLayers {
    pub layers: Vec<VertexSet>,
    pub unreachable: VertexSet,
}

impl DistanceLayers {
    /// Vertices at distance at least `i` (finite distances only).
    pub fn at_least(&self, i: usize) -> VertexSet {
        self.layers
            .iter()
            .skip(i)
            .fold(VertexSet::new(), |acc, l| acc.union(l))
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Self {
            n,
            adj: vec![VertexSet::new(); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, symmetrising and dropping loops.
    pub(crate) fn from_rows(n: usize, rows: Vec<VertexSet>) -> Self {
        debug_assert_eq!(rows.len(), n);
        let mut adj = vec![VertexSet::new(); n];
        let all = VertexSet::full(n);
        for (u, row) in rows.iter().enumerate() {
            for v in row.intersection(&all).iter() {
                if u != v {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Self { n, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Checks symmetry, irreflexivity and the out-of-range bits.
    pub fn is_well_formed(&self) -> bool {
        let all = self.vertices();
        (0..self.n).all(|u| {
            !self.adj[u].contains(u)
                && self.adj[u].is_subset(&all)
                && self.adj[u].iter().all(|v| self.adj[v].contains(u))
        })
    }

    fn check_set(&self, vs: &VertexSet) -> Result<()> {
        match vs.last() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// The subgraph induced on `vs`; `map[i]` is the host vertex behind new vertex `i`.
    pub fn induced_subgraph(&self, vs: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(vs)?;
        let map = vs.to_vec();
        let mut adj = vec![VertexSet::new(); map.len()];
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate() {
                if self.adj[u].contains(v) {
                    adj[i].insert(j);
                }
            }
        }
        Ok((
            Graph {
                n: map.len(),
                adj,
            },
            map,
        ))
    }

    /// `N(X)`: vertices outside `x` with a neighbor in `x`.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        x.iter()
            .fold(VertexSet::new(), |acc, v| acc.union(&self.adj[v]))
            .difference(x)
    }

    pub fn distance_layers(&self, x: &VertexSet) -> Result<DistanceLayers> {
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_set(x)?;
        let mut seen = *x;
        let mut layers = vec![*x];
        loop {
            let next = self.neighborhood(layers.last().unwrap()).difference(&seen);
            if next.is_empty() {
                break;
            }
            seen = seen.union(&next);
            layers.push(next);
        }
        Ok(DistanceLayers {
            layers,
            unreachable: self.vertices().difference(&seen),
        })
    }

    fn check_disjoint(&self, x: &VertexSet, y: &VertexSet) -> Result<()> {
        self.check_set(x)?;
        self.check_set(y)?;
        let both = x.intersection(y);
        if both.is_empty() {
            Ok(())
        } else {
            Err(Error::OverlappingSets(both.to_vec()))
        }
    }

    pub fn is_complete_between(&self, x: &VertexSet, y: &VertexSet) -> Result<bool> {
        self.check_disjoint(x, y)?;
        Ok(x.iter().all(|u| y.is_subset(&self.adj[u])))
    }

    pub fn is_anticomplete_between(&self, x: &VertexSet, y: &VertexSet) -> Result<bool> {
        self.check_disjoint(x, y)?;
        Ok(x.iter().all(|u| y.is_disjoint(&self.adj[u])))
    }

    pub fn is_clique(&self, vs: &VertexSet) -> bool {
        vs.iter().all(|u| vs.difference(&VertexSet::singleton(u)).is_subset(&self.adj[u]))
    }

    pub fn is_independent(&self, vs: &VertexSet) -> bool {
        vs.iter().all(|u| vs.is_disjoint(&self.adj[u]))
    }

    /// Connected components of `G[vs]`, ordered by smallest vertex.
    pub fn components_within(&self, vs: &VertexSet) -> Vec<VertexSet> {
        let mut left = *vs;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let grown = frontier
                    .iter()
                    .fold(VertexSet::new(), |acc, v| acc.union(&self.adj[v]))
                    .intersection(&left)
                    .difference(&comp);
                comp = comp.union(&grown);
                frontier = grown;
            }
            left = left.difference(&comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.extend(other.edges().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, &edges)
    }

    /// Copy of the graph with extra edges added.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.extend_from_slice(extra);
        Graph::from_edges(self.n, &edges)
    }

    /// Graph on the same vertices with a permuted labelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::new(); self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { n: self.n, adj }
    }

    /// Graphviz rendering, for debugging only.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
