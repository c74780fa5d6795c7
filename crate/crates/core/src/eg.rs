//! The essential annihilating-ideal graph: vertices are the nonzero ideals
//! with nonzero annihilator, and `I -- J` iff `Ann(IJ)` is essential.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::lattice::IdealLattice;
use crate::ring::FiniteRing;

#[derive(Debug, Clone)]
pub struct EgGraph {
    pub graph: Graph,
    /// Lattice id of each vertex, in canonical ideal order.
    pub vertices: Vec<usize>,
}

/// Nonzero ideals with nonzero annihilator, in canonical order.
pub fn annihilating_vertices(lattice: &IdealLattice) -> Vec<usize> {
    (0..lattice.len())
        .filter(|&k| k != lattice.zero_id && lattice.annihilator[k] != lattice.zero_id)
        .collect()
}

/// `Ann(IJ)` essential, with essentiality decided through the socle.
pub fn edge_predicate(ring: &FiniteRing, lattice: &IdealLattice, i: usize, j: usize) -> bool {
    let product = lattice.product_id(ring, i, j);
    lattice.is_essential(lattice.annihilator[product])
}

pub fn build_eg(ring: &FiniteRing, lattice: &IdealLattice) -> EgGraph {
    let vertices = annihilating_vertices(lattice);
    let mut graph = Graph::new(vertices.len());
    for (a, &i) in vertices.iter().enumerate() {
        for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
            if edge_predicate(ring, lattice, i, j) {
                graph.add_edge(a, b);
            }
        }
    }
    EgGraph { graph, vertices }
}

impl EgGraph {
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn vertex_of(&self, ideal_id: usize) -> Option<usize> {
        self.vertices.iter().position(|&v| v == ideal_id)
    }

    pub fn labels(&self, ring: &FiniteRing, lattice: &IdealLattice) -> Vec<String> {
        self.vertices
            .iter()
            .map(|&id| lattice.label(ring, id))
            .collect()
    }

    /// DOT rendering with one labelled node per vertex.
    pub fn to_dot(&self, labels: &[String], name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"{}\" {{", escape(name));
        for (v, label) in labels.iter().enumerate() {
            let _ = writeln!(s, "  {v} [label=\"{}\"];", escape(label));
        }
        for (u, v) in self.graph.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Partition of the vertices by closed neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    /// Classes ordered by smallest member; members ascending.
    pub classes: Vec<Vec<usize>>,
    /// Class index of each vertex.
    pub class_of: Vec<usize>,
}

pub fn true_twin_partition(g: &Graph) -> TwinPartition {
    let mut by_nbhd: HashMap<BitSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let next = classes.len();
        let c = *by_nbhd.entry(g.closed_neighborhood(v)).or_insert(next);
        if c == next {
            classes.push(Vec::new());
        }
        classes[c].push(v);
        class_of.push(c);
    }
    TwinPartition { classes, class_of }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shape {
    Empty,
    Complete(usize),
    /// `K_{1,n}` with `n >= 2`.
    Star(usize),
    /// `K_{m,n}` with `2 <= m <= n`.
    CompleteBipartite(usize, usize),
    Other,
}

/// Structural match with precedence Empty > Complete > Star > CompleteBipartite.
pub fn detect_shape(g: &Graph) -> Shape {
    let n = g.order();
    if n == 0 {
        return Shape::Empty;
    }
    let m = g.edge_count();
    if m == n * (n - 1) / 2 {
        return Shape::Complete(n);
    }
    if let Some((a, b)) = complete_bipartite_parts(g) {
        let (small, large) = if a <= b { (a, b) } else { (b, a) };
        return if small == 1 {
            Shape::Star(large)
        } else {
            Shape::CompleteBipartite(small, large)
        };
    }
    Shape::Other
}

/// Part sizes when `g` is complete bipartite with both parts nonempty.
pub fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    if g.order() < 2 || !g.is_connected() {
        return None;
    }
    let side = g.two_coloring()?;
    let a = side.iter().filter(|&&s| s == 0).count();
    let b = g.order() - a;
    (a > 0 && b > 0 && g.edge_count() == a * b).then_some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, parse_ring_spec};

    fn eg(s: &str) -> (FiniteRing, IdealLattice, EgGraph) {
        let r = build_ring(&parse_ring_spec(s).unwrap()).unwrap();
        let l = IdealLattice::enumerate(&r).unwrap();
        let g = build_eg(&r, &l);
        (r, l, g)
    }

    #[test]
    fn z8_is_k2() {
        let (r, l, g) = eg("Z/8");
        assert_eq!(g.labels(&r, &l), vec!["(4)", "(2)"]);
        assert_eq!(detect_shape(&g.graph), Shape::Complete(2));
    }

    #[test]
    fn field_graph_is_empty() {
        let (_, _, g) = eg("GF(7)");
        assert_eq!(g.order(), 0);
        assert_eq!(detect_shape(&g.graph), Shape::Empty);
    }

    #[test]
    fn z12_edges() {
        let (r, l, g) = eg("Z/12");
        let labels = g.labels(&r, &l);
        assert_eq!(labels, vec!["(6)", "(4)", "(3)", "(2)"]);
        let mut named: Vec<(String, String)> = g
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| (labels[u].clone(), labels[v].clone()))
            .collect();
        named.sort();
        let mut expected: Vec<(String, String)> = [
            ("(6)", "(2)"),
            ("(6)", "(3)"),
            ("(6)", "(4)"),
            ("(4)", "(3)"),
            ("(3)", "(2)"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        expected.sort();
        assert_eq!(named, expected);
        assert_eq!(detect_shape(&g.graph), Shape::Other);
    }

    #[test]
    fn z6_is_k11() {
        let (_, _, g) = eg("Z/6");
        assert_eq!(detect_shape(&g.graph), Shape::Complete(2));
    }

    #[test]
    fn twins() {
        let (_, _, g) = eg("Z/2 x Z/2");
        assert_eq!(true_twin_partition(&g.graph).classes, vec![vec![0, 1]]);
        let (_, _, g) = eg("Z/30");
        let p = true_twin_partition(&g.graph);
        assert_eq!(p.classes.len(), g.order());
        let single = Graph::new(1);
        assert_eq!(true_twin_partition(&single).classes, vec![vec![0]]);
    }

    #[test]
    fn shapes_on_synthetic_graphs() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(detect_shape(&star), Shape::Star(3));
        assert_eq!(
            detect_shape(&Graph::cycle(4)),
            Shape::CompleteBipartite(2, 2)
        );
        assert_eq!(detect_shape(&Graph::cycle(5)), Shape::Other);
        assert_eq!(detect_shape(&Graph::new(1)), Shape::Complete(1));
        assert_eq!(detect_shape(&Graph::new(3)), Shape::Other);
    }

    #[test]
    fn dot_output() {
        let (r, l, g) = eg("Z/8");
        let dot = g.to_dot(&g.labels(&r, &l), "Z/8");
        assert_eq!(
            dot,
            "graph \"Z/8\" {\n  0 [label=\"(4)\"];\n  1 [label=\"(2)\"];\n  0 -- 1;\n}\n"
        );
    }
}
