//! Brute-force reference implementations shared by the integration tests.
//! They work on plain adjacency matrices and never touch the crate's own
//! search code.

#![allow(dead_code)]

use pollyanna_core::Graph;
use proptest::prelude::*;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Graph) -> Matrix {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// Random graph on `1..=max_n` vertices with a random edge density.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Smallest `k` such that some assignment in `{0..k}^n` is proper.
pub fn chi_brute(m: &Matrix) -> usize {
    let n = m.len();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut col = vec![0usize; n];
        loop {
            let proper = (0..n).all(|u| (u + 1..n).all(|v| !m[u][v] || col[u] != col[v]));
            if proper {
                return k;
            }
            let mut i = 0;
            while i < n && col[i] == k - 1 {
                col[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            col[i] += 1;
        }
    }
    n
}

/// Size of the largest clique, by checking every vertex subset.
pub fn omega_brute(m: &Matrix) -> usize {
    let n = m.len();
    (0u32..1 << n)
        .filter(|&mask| {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            vs.iter().all(|&u| vs.iter().all(|&v| u == v || m[u][v]))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Whether some injective map of pattern vertices preserves both edges and non-edges.
pub fn induced_brute(host: &Matrix, pat: &Matrix) -> bool {
    fn go(host: &Matrix, pat: &Matrix, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == pat.len() {
            return true;
        }
        for h in 0..host.len() {
            if used[h] || !(0..i).all(|j| host[map[j]][h] == pat[j][i]) {
                continue;
            }
            used[h] = true;
            map.push(h);
            if go(host, pat, map, used) {
                return true;
            }
            map.pop();
            used[h] = false;
        }
        false
    }
    pat.len() <= host.len() && go(host, pat, &mut Vec::new(), &mut vec![false; host.len()])
}

/// Graph distance by BFS from a set; `usize::MAX` when unreachable.
pub fn bfs_from(m: &Matrix, sources: &[usize]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; m.len()];
    let mut queue = std::collections::VecDeque::new();
    for &s in sources {
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        for v in 0..m.len() {
            if m[u][v] && dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn choose(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
