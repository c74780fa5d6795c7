//! Brute-force oracles shared by the integration tests. Written straight
//! from the definitions over an adjacency matrix, independent of the solvers.

#![allow(dead_code)]

use egr::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn is_clique(adj: &[Vec<bool>], vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| adj[u][v]))
}

pub fn naive_omega(g: &Graph) -> usize {
    let adj = matrix(g);
    let n = g.order();
    (0u32..1 << n)
        .filter(|&m| is_clique(&adj, &members(m, n)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Minimum number of independent sets covering the vertex set (subset DP).
pub fn naive_chi(g: &Graph) -> usize {
    let adj = matrix(g);
    let n = g.order();
    let full = (1u32 << n) - 1;
    let independent: Vec<bool> = (0u32..=full)
        .map(|m| {
            let vs = members(m, n);
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !adj[u][v]))
        })
        .collect();
    let mut best = vec![usize::MAX; full as usize + 1];
    best[0] = 0;
    for m in 1..=full {
        let mut sub = m;
        while sub > 0 {
            if independent[sub as usize] && best[(m & !sub) as usize] != usize::MAX {
                best[m as usize] = best[m as usize].min(best[(m & !sub) as usize] + 1);
            }
            sub = (sub - 1) & m;
        }
    }
    best[full as usize]
}

pub fn naive_twin_free_omega(g: &Graph) -> usize {
    let adj = matrix(g);
    let n = g.order();
    let closed = |u: usize| -> Vec<bool> { (0..n).map(|v| v == u || adj[u][v]).collect() };
    let twins: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| u != v && closed(u) == closed(v)).collect())
        .collect();
    (0u32..1 << n)
        .filter(|&m| {
            let vs = members(m, n);
            is_clique(&adj, &vs)
                && vs
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !twins[u][v]))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// `true` for Class 1. Plain backtracking over edges in index order; only
/// color symmetry is broken.
pub fn naive_is_class1(g: &Graph) -> bool {
    let n = g.order();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| g.has_edge(u, v))
        .collect();
    let delta = (0..n)
        .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).count())
        .max()
        .unwrap_or(0);
    if edges.is_empty() {
        return true;
    }
    // more edges than Δ matchings of size floor(n/2) can hold
    if edges.len() > delta * (n / 2) {
        return false;
    }
    let mut used = vec![vec![false; delta]; n];
    fn go(
        i: usize,
        top: usize,
        edges: &[(usize, usize)],
        used: &mut [Vec<bool>],
        delta: usize,
    ) -> bool {
        if i == edges.len() {
            return true;
        }
        let (u, v) = edges[i];
        for c in 0..(top + 1).min(delta) {
            if used[u][c] || used[v][c] {
                continue;
            }
            used[u][c] = true;
            used[v][c] = true;
            if go(i + 1, top.max(c + 1), edges, used, delta) {
                return true;
            }
            used[u][c] = false;
            used[v][c] = false;
        }
        false
    }
    go(0, 0, &edges, &mut used, delta)
}

/// Deterministic random graphs with at most `max_n` vertices.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p: f64 = [0.2, 0.35, 0.5, 0.7][rng.gen_range(0..4)];
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
        .collect()
}
