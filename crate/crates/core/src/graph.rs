//! Simple undirected graphs on vertices `0..n` with dense bit-matrix adjacency.

use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            adj: (0..n).map(|_| BitSet::new(n)).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Adds `u -- v`; self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> BitSet {
        let mut n = self.adj[v].clone();
        n.insert(v);
        n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count()).sum::<usize>() / 2
    }

    /// Induced subgraph on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Plain edge list: `n m` header then one `u v` line per edge (0-based).
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.order(), edges.len());
        for (u, v) in edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut tokens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(|l| l.split_whitespace());
        let mut next_num = |what: &str| -> Result<usize> {
            let t = tokens.next().ok_or_else(|| {
                Error::InvalidParameter(format!("edge list ended while reading {what}"))
            })?;
            t.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad {what}: {t:?}")))
        };
        let n = next_num("vertex count")?;
        let m = next_num("edge count")?;
        let mut g = Graph::new(n);
        for _ in 0..m {
            let u = next_num("edge endpoint")?;
            let v = next_num("edge endpoint")?;
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidParameter(format!(
                    "invalid edge {u} {v} for {n} vertices"
                )));
            }
            g.add_edge(u, v);
        }
        if tokens.next().is_some() {
            return Err(Error::InvalidParameter(
                "trailing tokens after the declared edges".into(),
            ));
        }
        Ok(g)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// BFS 2-coloring, `None` if an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = BitSet::new(n);
        seen.insert(0);
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter() {
                if seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen.count() == n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4), (0, 4)]);
        let text = g.to_edge_list();
        assert_eq!(text, "5 4\n0 1\n0 4\n1 2\n3 4\n");
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(Graph::parse_edge_list("3 1\n0 3\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("2 1\n1 1\n").is_err());
        assert_eq!(Graph::parse_edge_list("0 0\n").unwrap().order(), 0);
    }

    #[test]
    fn bipartiteness() {
        assert!(Graph::cycle(6).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
        assert!(Graph::new(0).is_bipartite());
    }

    #[test]
    fn degrees_and_counts() {
        let g = Graph::complete(4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.max_degree(), 3);
        assert!(g.is_connected());
        assert!(!Graph::new(2).is_connected());
    }
}
