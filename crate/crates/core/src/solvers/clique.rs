use std::cmp::Reverse;

use crate::bitset::BitSet;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    /// Vertices of a maximum clique, ascending.
    pub witness: Vec<usize>,
    pub nodes: u64,
}

/// Exact maximum clique by branch and bound with greedy-coloring bounds.
///
/// Vertices are renumbered by descending degree (ties by id) so that bitset
/// iteration order is the branching order; the search is sequential and
/// therefore reproducible.
pub fn clique_number(g: &Graph) -> CliqueResult {
    let n = g.order();
    if n == 0 {
        return CliqueResult {
            size: 0,
            witness: Vec::new(),
            nodes: 0,
        };
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let mut rank = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| BitSet::from_iter_with_len(n, g.neighbors(v).iter().map(|u| rank[u])))
        .collect();

    let mut search = Search {
        adj: &adj,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
    };
    search.expand(BitSet::full(n));

    let mut witness: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    CliqueResult {
        size: witness.len(),
        witness,
        nodes: search.nodes,
    }
}

struct Search<'a> {
    adj: &'a [BitSet],
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: BitSet) {
        self.nodes += 1;
        let sorted = self.color_sort(&candidates);
        for &(v, color) in sorted.iter().rev() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = candidates.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.remove(v);
        }
    }

    /// Greedy sequential coloring of the candidates; returns them grouped by
    /// ascending color number (1-based), which bounds any clique among the
    /// prefix ending at each vertex.
    fn color_sort(&self, candidates: &BitSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(candidates.count());
        let mut uncolored = candidates.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                out.push((v, color));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(clique_number(&Graph::new(0)).size, 0);
        assert_eq!(clique_number(&Graph::new(3)).size, 1);
        assert_eq!(clique_number(&Graph::cycle(5)).size, 2);
        let k5 = clique_number(&Graph::complete(5));
        assert_eq!(k5.size, 5);
        assert_eq!(k5.witness, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn finds_hidden_clique() {
        let mut g = Graph::cycle(9);
        for &(u, v) in &[(2, 5), (2, 7), (5, 7), (2, 6), (5, 6), (6, 7)] {
            g.add_edge(u, v);
        }
        let r = clique_number(&g);
        assert_eq!(r.size, 4);
        assert_eq!(r.witness, vec![2, 5, 6, 7]);
    }
}
