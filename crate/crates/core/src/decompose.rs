//! Maximum-clique decomposition.
//!
//! Fix a maximum clique `K` and a threshold `t >= 2`. Every vertex of `N(K)`
//! misses at least one vertex of `K`; those missing fewer than `t` form `S`
//! (grouped by the exact missing set `M` into `A_M`), the rest form `T`
//! (covered by the families `A'_{N,v}`: adjacent to `v`, anticomplete to the
//! `t`-set `N`). The second neighborhood splits into `S'` and `T'`, and
//! whatever is left is the residual.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{clique_number, lex_min_max_clique};

/// Key of an `A'_{N,v}` family: the `t`-set `N ⊆ K` and `v ∈ K \ N`.
pub type NvKey = (VertexSet, usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueDecomposition {
    pub k: VertexSet,
    pub threshold: usize,
    #[serde(serialize_with = "ser_a_m")]
    pub a_m: BTreeMap<VertexSet, VertexSet>,
    #[serde(serialize_with = "ser_a_nv")]
    pub a_nv: BTreeMap<NvKey, VertexSet>,
    pub s: VertexSet,
    pub t: VertexSet,
    pub s_prime: VertexSet,
    pub t_prime: VertexSet,
    pub residual: VertexSet,
    /// Vertices with neighbors in both `S` and `T`; they are placed in `T'`.
    pub s_t_overlap: VertexSet,
    /// Canonical `(N, v)` of each `T` vertex: `N` is the `t` smallest
    /// non-neighbors in `K`, `v` the smallest neighbor in `K`.
    #[serde(serialize_with = "ser_canonical")]
    pub canonical: BTreeMap<usize, NvKey>,
}

fn ser_a_m<S: Serializer>(m: &BTreeMap<VertexSet, VertexSet>, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        m: &'a VertexSet,
        members: &'a VertexSet,
    }
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for (k, v) in m {
        seq.serialize_element(&Entry { m: k, members: v })?;
    }
    seq.end()
}

fn ser_a_nv<S: Serializer>(m: &BTreeMap<NvKey, VertexSet>, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        n: &'a VertexSet,
        v: usize,
        members: &'a VertexSet,
    }
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for ((n, v), members) in m {
        seq.serialize_element(&Entry { n, v: *v, members })?;
    }
    seq.end()
}

fn ser_canonical<S: Serializer>(m: &BTreeMap<usize, NvKey>, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        vertex: usize,
        n: &'a VertexSet,
        v: usize,
    }
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for (vertex, (n, v)) in m {
        seq.serialize_element(&Entry { vertex: *vertex, n, v: *v })?;
    }
    seq.end()
}

/// All `size`-subsets of `items` in lexicographic order.
pub(crate) fn subsets_of_size(items: &[usize], size: usize) -> Vec<VertexSet> {
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if cur.len() == size {
            out.push(cur.iter().copied().collect());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, size, 0, &mut Vec::new(), &mut out);
    out
}

pub fn decompose(g: &Graph, k: &VertexSet, t: usize) -> Result<CliqueDecomposition> {
    if t < 2 {
        return Err(Error::ThresholdTooSmall(t));
    }
    if let Some(v) = k.last().filter(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if !g.is_clique(k) {
        return Err(Error::NotAClique(k.to_vec()));
    }
    let omega = clique_number(g);
    if k.len() != omega {
        return Err(Error::NotMaximum { size: k.len(), omega });
    }

    let mut a_m: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    let mut a_nv: BTreeMap<NvKey, VertexSet> = BTreeMap::new();
    let mut canonical = BTreeMap::new();
    let mut s = VertexSet::new();
    let mut t_set = VertexSet::new();

    for u in g.neighborhood(k).iter() {
        let missing = k.difference(&g.neighbors(u));
        let hits = k.intersection(&g.neighbors(u));
        if missing.len() < t {
            s.insert(u);
            a_m.entry(missing).or_default().insert(u);
        } else {
            t_set.insert(u);
            let missing_list = missing.to_vec();
            for n_set in subsets_of_size(&missing_list, t) {
                for v in hits.iter() {
                    a_nv.entry((n_set, v)).or_default().insert(u);
                }
            }
            let n_canon: VertexSet = missing_list[..t].iter().copied().collect();
            canonical.insert(u, (n_canon, hits.first().expect("u is in N(K)")));
        }
    }

    let core = k.union(&s).union(&t_set);
    let outside = g.vertices().difference(&core);
    let near_s = g.neighborhood(&s).intersection(&outside);
    let near_t = g.neighborhood(&t_set).intersection(&outside);
    let s_t_overlap = near_s.intersection(&near_t);
    let s_prime = near_s.difference(&near_t);
    let t_prime = near_t;
    let residual = outside.difference(&s_prime).difference(&t_prime);

    Ok(CliqueDecomposition {
        k: *k,
        threshold: t,
        a_m,
        a_nv,
        s,
        t: t_set,
        s_prime,
        t_prime,
        residual,
        s_t_overlap,
        canonical,
    })
}

/// Decomposes around the lexicographically smallest maximum clique.
pub fn decompose_auto(g: &Graph, t: usize) -> Result<CliqueDecomposition> {
    decompose(g, &lex_min_max_clique(g), t)
}

impl CliqueDecomposition {
    pub fn omega(&self) -> usize {
        self.k.len()
    }

    /// `T` split by canonical `(N, v)`, in key order.
    pub fn canonical_groups(&self) -> BTreeMap<NvKey, VertexSet> {
        let mut out: BTreeMap<NvKey, VertexSet> = BTreeMap::new();
        for (&u, key) in &self.canonical {
            out.entry(*key).or_default().insert(u);
        }
        out
    }

    /// The six parts in palette order.
    pub fn parts(&self) -> [(&'static str, VertexSet); 6] {
        [
            ("K", self.k),
            ("S", self.s),
            ("T", self.t),
            ("S'", self.s_prime),
            ("T'", self.t_prime),
            ("residual", self.residual),
        ]
    }

    /// Checks the partition and family invariants against `g`; returns the
    /// first broken one.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let parts = self.parts();
        let mut union = VertexSet::new();
        for (name, p) in &parts {
            if !union.is_disjoint(p) {
                return Err(format!("{name} overlaps an earlier part"));
            }
            union = union.union(p);
        }
        if union != g.vertices() {
            return Err("parts do not cover V(G)".into());
        }
        for (m, members) in &self.a_m {
            let rest = self.k.difference(m);
            for u in members.iter() {
                if !rest.is_subset(&g.neighbors(u)) || !m.is_disjoint(&g.neighbors(u)) {
                    return Err(format!("vertex {u} misfiled in A_{m:?}"));
                }
            }
        }
        for ((n, v), members) in &self.a_nv {
            for u in members.iter() {
                if !g.has_edge(u, *v) || !n.is_disjoint(&g.neighbors(u)) {
                    return Err(format!("vertex {u} misfiled in A'_({n:?},{v})"));
                }
            }
        }
        let s_union = self.a_m.values().fold(VertexSet::new(), |a, b| a.union(b));
        let t_union = self.a_nv.values().fold(VertexSet::new(), |a, b| a.union(b));
        if s_union != self.s || t_union != self.t {
            return Err("S or T differs from the union of its families".into());
        }
        if self.s.union(&self.t) != g.neighborhood(&self.k) {
            return Err("S ∪ T differs from N(K)".into());
        }
        Ok(())
    }
}
