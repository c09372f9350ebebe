//! Exact ground-truth oracles: clique number, chromatic number, `χ^(n)`,
//! and the binomial Ramsey upper bound.
//!
//! Colorings are `Vec<usize>` indexed by vertex with colors starting at 1;
//! a 0 entry means "uncolored".

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for [`chromatic_number`].
pub const DEFAULT_CHI_CAP: usize = 16;
/// Default vertex cap for [`chi_n`], which enumerates all induced subgraphs.
pub const DEFAULT_CHI_N_CAP: usize = 12;

/// Caps for the exponential oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct OracleCaps {
    pub chi: usize,
    pub chi_n: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            chi: DEFAULT_CHI_CAP,
            chi_n: DEFAULT_CHI_N_CAP,
        }
    }
}

// ---------------------------------------------------------------- cliques

/// Vertices of `p` sorted into greedy color classes, with the class number
/// of each vertex; the classes bound the clique number of any suffix.
fn color_sort(g: &Graph, p: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncolored = *p;
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored;
        while let Some(v) = avail.first() {
            avail = avail.difference(&g.neighbors(v));
            avail.remove(v);
            uncolored.remove(v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

fn expand(
    g: &Graph,
    current: &mut Vec<usize>,
    mut p: VertexSet,
    best: &mut Vec<usize>,
    target: usize,
) {
    let (order, bounds) = color_sort(g, &p);
    for i in (0..order.len()).rev() {
        if current.len() + bounds[i] <= best.len() || best.len() >= target {
            return;
        }
        let v = order[i];
        current.push(v);
        let next = p.intersection(&g.neighbors(v));
        if next.is_empty() {
            if current.len() > best.len() {
                best.clone_from(current);
            }
        } else {
            expand(g, current, next, best, target);
        }
        current.pop();
        p.remove(v);
    }
}

/// A maximum clique of `G[within]` (branch and bound with coloring bounds).
pub fn max_clique_within(g: &Graph, within: &VertexSet) -> VertexSet {
    largest_clique_up_to(g, within, usize::MAX)
}

/// Stops early once a clique of size `target` is found.
fn largest_clique_up_to(g: &Graph, within: &VertexSet, target: usize) -> VertexSet {
    let mut best = Vec::new();
    if !within.is_empty() {
        expand(g, &mut Vec::new(), *within, &mut best, target);
    }
    best.into_iter().collect()
}

pub fn max_clique(g: &Graph) -> VertexSet {
    max_clique_within(g, &g.vertices())
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

pub fn clique_number_within(g: &Graph, within: &VertexSet) -> usize {
    max_clique_within(g, within).len()
}

/// The maximum clique whose sorted vertex list is lexicographically smallest.
pub fn lex_min_max_clique(g: &Graph) -> VertexSet {
    let omega = clique_number(g);
    let mut chosen = VertexSet::new();
    let mut cand = g.vertices();
    while chosen.len() < omega {
        let need = omega - chosen.len() - 1;
        let v = cand
            .iter()
            .find(|&v| {
                let rest = cand.intersection(&g.neighbors(v));
                largest_clique_up_to(g, &rest, need).len() >= need
            })
            .expect("a maximum clique extends every feasible prefix");
        chosen.insert(v);
        cand = cand.intersection(&g.neighbors(v));
    }
    chosen
}

// ---------------------------------------------------------------- coloring

pub fn is_proper(g: &Graph, coloring: &[usize]) -> Result<bool> {
    let covered = coloring.iter().filter(|&&c| c != 0).count();
    if coloring.len() != g.n() || covered != g.n() {
        return Err(Error::PartialColoring { covered, n: g.n() });
    }
    Ok(g.edges().all(|(u, v)| coloring[u] != coloring[v]))
}

/// Number of distinct colors.
pub fn palette_size(coloring: &[usize]) -> usize {
    let mut seen: Vec<usize> = coloring.iter().copied().filter(|&c| c != 0).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Greedy DSATUR coloring; an upper bound for the exact search.
pub fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![0usize; n];
    for _ in 0..n {
        let v = pick_dsatur(g, &color);
        let used = neighbor_colors(g, &color, v);
        color[v] = (1..).find(|c| !used.contains(c)).unwrap();
    }
    color
}

fn neighbor_colors(g: &Graph, color: &[usize], v: usize) -> Vec<usize> {
    let mut used: Vec<usize> = g
        .neighbors(v)
        .iter()
        .map(|u| color[u])
        .filter(|&c| c != 0)
        .collect();
    used.sort_unstable();
    used.dedup();
    used
}

/// Uncolored vertex with the most distinct neighbor colors, then the most
/// uncolored neighbors, then the smallest index.
fn pick_dsatur(g: &Graph, color: &[usize]) -> usize {
    let uncolored: VertexSet = (0..g.n()).filter(|&v| color[v] == 0).collect();
    uncolored
        .iter()
        .max_by_key(|&v| {
            let sat = neighbor_colors(g, color, v).len();
            let deg = g.neighbors(v).intersection(&uncolored).len();
            (sat, deg, std::cmp::Reverse(v))
        })
        .expect("called with an uncolored vertex")
}

fn try_color(g: &Graph, k: usize, color: &mut [usize], left: usize, max_used: usize) -> bool {
    if left == 0 {
        return true;
    }
    let v = pick_dsatur(g, color);
    let mut forbidden = 0u128;
    for u in g.neighbors(v).iter() {
        if color[u] != 0 {
            forbidden |= 1 << color[u];
        }
    }
    for c in 1..=k.min(max_used + 1) {
        if forbidden & (1 << c) != 0 {
            continue;
        }
        color[v] = c;
        if try_color(g, k, color, left - 1, max_used.max(c)) {
            return true;
        }
    }
    color[v] = 0;
    false
}

/// A proper `k`-coloring if one exists.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut color = vec![0usize; g.n()];
    if g.n() == 0 {
        return Some(color);
    }
    if k == 0 {
        return None;
    }
    try_color(g, k, &mut color, g.n(), 0).then_some(color)
}

/// Exact chromatic number with an optimal coloring.
///
/// Searches `k = ω, ω+1, …` with DSATUR-ordered backtracking; new colors are
/// only opened one at a time, which removes color-permutation symmetry.
pub fn chromatic_number(g: &Graph, cap: usize) -> Result<(usize, Vec<usize>)> {
    if g.n() > cap.min(120) {
        return Err(Error::OracleCapExceeded {
            what: "chromatic number",
            n: g.n(),
            cap,
        });
    }
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let greedy = dsatur_greedy(g);
    let upper = palette_size(&greedy);
    for k in clique_number(g)..upper {
        if let Some(c) = k_coloring(g, k) {
            return Ok((k, c));
        }
    }
    Ok((upper, greedy))
}

/// Optimally colors `G[set]`; entries outside `set` stay 0.
pub fn color_subset_exact(g: &Graph, set: &VertexSet, cap: usize) -> Result<(usize, Vec<usize>)> {
    let (h, map) = g.induced_subgraph(set)?;
    let (k, local) = chromatic_number(&h, cap)?;
    let mut out = vec![0; g.n()];
    for (i, &v) in map.iter().enumerate() {
        out[v] = local[i];
    }
    Ok((k, out))
}

pub fn chromatic_number_within(g: &Graph, set: &VertexSet, cap: usize) -> Result<usize> {
    color_subset_exact(g, set, cap).map(|(k, _)| k)
}

/// `χ^(n)(G)`: the largest chromatic number over induced subgraphs with clique
/// number at most `n`. Subsets are visited from the largest down; once the
/// best value reaches the subset size nothing smaller can beat it.
pub fn chi_n(g: &Graph, n: usize, cap: usize) -> Result<usize> {
    chi_n_witness(g, n, cap).map(|(x, _)| x)
}

/// [`chi_n`] together with a vertex set attaining it.
pub fn chi_n_witness(g: &Graph, n: usize, cap: usize) -> Result<(usize, VertexSet)> {
    if g.n() > cap.min(24) {
        return Err(Error::OracleCapExceeded {
            what: "chi_n",
            n: g.n(),
            cap,
        });
    }
    let v = g.n();
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); v + 1];
    for mask in 1u32..(1u32 << v) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    let mut best = (0, VertexSet::new());
    for size in (1..=v).rev() {
        if size <= best.0 {
            break;
        }
        for &mask in by_size[size].iter().rev() {
            let set: VertexSet = (0..v).filter(|&i| mask >> i & 1 == 1).collect();
            if clique_number_within(g, &set) > n {
                continue;
            }
            let x = chromatic_number_within(g, &set, usize::MAX)?;
            if x > best.0 {
                best = (x, set);
            }
            if best.0 == size {
                break;
            }
        }
    }
    Ok(best)
}

// ---------------------------------------------------------------- binomials

pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial"))?
            / (i + 1) as u128;
    }
    Ok(acc)
}

/// `C(s+t-2, t-1)`, the Erdős–Szekeres upper bound on `R(s,t)`.
pub fn ramsey_upper(s: u64, t: u64) -> Result<u128> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidParameter {
            pattern: "ramsey_upper",
            constraint: format!("s >= 1 and t >= 1 (got s = {s}, t = {t})"),
        });
    }
    binomial(s + t - 2, t - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{bowtie, complete, cycle, diamond, petersen};

    /// Tries all `k^n` assignments.
    fn brute_k_colorable(g: &Graph, k: usize) -> bool {
        let n = g.n() as u32;
        if n == 0 {
            return true;
        }
        (0..(k as u64).pow(n)).any(|mut code| {
            let mut col = vec![0; n as usize];
            for c in col.iter_mut() {
                *c = code % k as u64;
                code /= k as u64;
            }
            g.edges().all(|(u, v)| col[u] != col[v])
        })
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&complete(5).unwrap()), 5);
        let b = bowtie(3, 4).unwrap();
        let k = max_clique(&b);
        assert_eq!(k.len(), 5);
        assert!(b.is_clique(&k));
        assert_eq!(clique_number(&cycle(5).unwrap()), 2);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
        assert!(max_clique(&Graph::empty(0).unwrap()).is_empty());
    }

    #[test]
    fn lex_min_clique() {
        // triangles {1,2,3} and {0,4,5}: the second starts lower
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(lex_min_max_clique(&g).to_vec(), vec![0, 4, 5]);
        let g = Graph::from_edges(5, &[(0, 3), (1, 2), (2, 4), (1, 4), (3, 4)]).unwrap();
        assert_eq!(lex_min_max_clique(&g).to_vec(), vec![1, 2, 4]);
    }

    #[test]
    fn chromatic_examples() {
        let (k, c) = chromatic_number(&cycle(5).unwrap(), 16).unwrap();
        assert_eq!(k, 3);
        assert!(is_proper(&cycle(5).unwrap(), &c).unwrap());
        for n in 1..=7 {
            assert_eq!(chromatic_number(&complete(n).unwrap(), 16).unwrap().0, n);
        }
        let p = petersen();
        assert!(!brute_k_colorable(&p, 2));
        let (k, c) = chromatic_number(&p, 16).unwrap();
        assert_eq!(k, 3);
        assert!(is_proper(&p, &c).unwrap());
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap(), 16).unwrap().0, 0);
    }

    #[test]
    fn chromatic_cap() {
        let g = cycle(17).unwrap();
        assert!(matches!(
            chromatic_number(&g, 16),
            Err(Error::OracleCapExceeded { n: 17, cap: 16, .. })
        ));
    }

    #[test]
    fn chi_n_examples() {
        assert_eq!(chi_n(&complete(5).unwrap(), 2, 12).unwrap(), 2);
        assert_eq!(chi_n(&cycle(5).unwrap(), 2, 12).unwrap(), 3);
        // oracle: every subset of the diamond, filtered by omega <= 2
        let d = diamond();
        let mut best = 0;
        for mask in 1u32..16 {
            let set: VertexSet = (0..4).filter(|&i| mask >> i & 1 == 1).collect();
            if clique_number_within(&d, &set) <= 2 {
                let (h, _) = d.induced_subgraph(&set).unwrap();
                let k = (1..=4).find(|&k| brute_k_colorable(&h, k)).unwrap();
                best = best.max(k);
            }
        }
        assert_eq!(best, 2);
        assert_eq!(chi_n(&d, 2, 12).unwrap(), best);
        assert!(chi_n(&cycle(13).unwrap(), 2, 12).is_err());
    }

    #[test]
    fn ramsey_examples() {
        assert_eq!(ramsey_upper(3, 3).unwrap(), 6);
        for s in 1..=12 {
            assert_eq!(ramsey_upper(s, 2).unwrap(), s as u128);
            assert_eq!(ramsey_upper(2, s).unwrap(), s as u128);
        }
        assert!(ramsey_upper(0, 3).is_err());
        assert_eq!(binomial(4, 2).unwrap(), 6);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(60, 30).unwrap(), 118264581564861424);
    }

    #[test]
    fn proper_check() {
        let k2 = complete(2).unwrap();
        assert!(is_proper(&k2, &[1, 2]).unwrap());
        assert!(!is_proper(&k2, &[1, 1]).unwrap());
        assert!(matches!(is_proper(&k2, &[1, 0]), Err(Error::PartialColoring { .. })));
        assert!(is_proper(&k2, &[1]).is_err());
    }
}
