//! Isomorphism-free enumeration of small graphs.
//!
//! The canonical form of a graph is the lexicographically smallest adjacency
//! bit string over all vertex orderings, reading the upper triangle column by
//! column (`(0,1), (0,2), (1,2), (0,3), …`). Orderings are built one position
//! at a time; placing position `j` fixes the bits of column `j`, so any prefix
//! already larger than the best complete string is cut off.
//!
//! Graphs on `n` vertices are generated by adding a vertex with every possible
//! neighborhood to each canonical graph on `n - 1` vertices.

use std::collections::BTreeSet;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;

/// Largest `n` the internal enumerator accepts.
pub const MAX_ENUMERATION_N: usize = 8;

/// Largest `n` whose canonical code fits in a `u64`.
const MAX_CODE_N: usize = 11;

fn bit_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

struct Canon<'a> {
    g: &'a Graph,
    total_bits: usize,
    perm: Vec<usize>,
    best: u64,
}

impl Canon<'_> {
    fn search(&mut self, pos: usize, used: VertexSet, code: u64) {
        let n = self.g.n();
        if pos == n {
            self.best = self.best.min(code);
            return;
        }
        for v in self.g.vertices().difference(&used).iter() {
            let mut next = code;
            for i in 0..pos {
                if self.g.has_edge(self.perm[i], v) {
                    next |= 1u64 << (self.total_bits - 1 - bit_index(i, pos));
                }
            }
            // bits beyond this column are still zero in `next`, so comparing
            // the column-aligned prefixes is enough
            let fixed = (pos + 1) * pos / 2;
            let shift = self.total_bits - fixed;
            if fixed > 0 && (next >> shift) > (self.best >> shift) {
                continue;
            }
            self.perm[pos] = v;
            let mut u = used;
            u.insert(v);
            self.search(pos + 1, u, next);
        }
    }
}

/// Canonical code of `g`; `n` must be at most 11.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CODE_N, "canonical codes need n <= {MAX_CODE_N}");
    if n < 2 {
        return 0;
    }
    let mut c = Canon {
        g,
        total_bits: n * (n - 1) / 2,
        perm: vec![0; n],
        best: u64::MAX,
    };
    c.search(0, VertexSet::new(), 0);
    c.best
}

/// Rebuilds the graph on `n` vertices whose canonical code is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - bit_index(i, j)) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("codes describe simple graphs")
}

pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.n(), canonical_code(g))
}

fn extend_level(prev: &[Graph], n: usize, threads: usize) -> Vec<Graph> {
    let per_parent: Vec<Vec<u64>> = par::map(prev, threads, |h| {
        (0u32..(1u32 << (n - 1)))
            .map(|mask| {
                let mut edges: Vec<(usize, usize)> = h.edges().collect();
                edges.extend((0..n - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, n - 1)));
                canonical_code(&Graph::from_edges(n, &edges).unwrap())
            })
            .collect()
    });
    let codes: BTreeSet<u64> = per_parent.into_iter().flatten().collect();
    codes.into_iter().map(|c| graph_from_code(n, c)).collect()
}

/// One canonical representative per isomorphism class on exactly `n`
/// vertices, ordered by canonical code.
pub fn enumerate_exact(n: usize, threads: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let mut level = vec![Graph::empty(0)?];
    for m in 1..=n {
        level = extend_level(&level, m, threads);
    }
    Ok(level)
}

/// Representatives for every `n` in `1..=n_max`, smallest graphs first.
pub fn enumerate_small(n_max: usize, threads: usize) -> Result<Vec<Graph>> {
    if n_max > MAX_ENUMERATION_N {
        return Err(Error::EnumerationTooLarge {
            n: n_max,
            max: MAX_ENUMERATION_N,
        });
    }
    let mut out = Vec::new();
    let mut level = vec![Graph::empty(0)?];
    for m in 1..=n_max {
        level = extend_level(&level, m, threads);
        out.extend(level.iter().cloned());
    }
    Ok(out)
}
