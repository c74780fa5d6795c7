//! Witness checkers, written directly from the definitions.

use crate::graph::Graph;

pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| {
        u < g.order()
            && vertices[i + 1..]
                .iter()
                .all(|&v| u != v && g.has_edge(u, v))
    })
}

pub fn is_twin_free_clique(g: &Graph, vertices: &[usize]) -> bool {
    is_clique(g, vertices)
        && vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| g.closed_neighborhood(u) != g.closed_neighborhood(v))
        })
}

pub fn is_proper_coloring(g: &Graph, coloring: &[usize], colors: usize) -> bool {
    coloring.len() == g.order()
        && coloring.iter().all(|&c| c < colors)
        && g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
}

/// `coloring[e]` is the color of the `e`-th edge of [`Graph::edges`].
pub fn is_proper_edge_coloring(g: &Graph, coloring: &[usize], colors: usize) -> bool {
    let edges = g.edges();
    if coloring.len() != edges.len() || coloring.iter().any(|&c| c >= colors) {
        return false;
    }
    let mut seen = vec![vec![false; colors]; g.order()];
    for (&(u, v), &c) in edges.iter().zip(coloring) {
        if seen[u][c] || seen[v][c] {
            return false;
        }
        seen[u][c] = true;
        seen[v][c] = true;
    }
    true
}
