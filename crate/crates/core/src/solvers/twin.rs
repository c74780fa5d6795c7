use crate::eg::true_twin_partition;
use crate::graph::Graph;

use super::clique::{clique_number, CliqueResult};

/// Exact twin-free clique number.
///
/// A twin-free clique holds at most one vertex per true-twin class, and any
/// member can be swapped for its class representative without breaking
/// adjacency, so the answer is the clique number of the graph induced on one
/// representative (the smallest id) per class.
pub fn twin_free_clique_number(g: &Graph) -> CliqueResult {
    let partition = true_twin_partition(g);
    let reps: Vec<usize> = partition.classes.iter().map(|c| c[0]).collect();
    let quotient = g.induced(&reps);
    let inner = clique_number(&quotient);
    let mut witness: Vec<usize> = inner.witness.iter().map(|&i| reps[i]).collect();
    witness.sort_unstable();
    CliqueResult {
        size: witness.len(),
        witness,
        nodes: inner.nodes,
    }
}

/// Largest vertex count the direct cross-check accepts.
pub const BRUTE_FORCE_TWIN_LIMIT: usize = 20;

/// Direct search over vertex sets that are cliques without true twins.
/// Returns `None` above [`BRUTE_FORCE_TWIN_LIMIT`] vertices.
pub fn twin_free_clique_brute_force(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n > BRUTE_FORCE_TWIN_LIMIT {
        return None;
    }
    let closed: Vec<_> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let mut best = 0;
    let mut chosen = Vec::new();
    extend(g, &closed, 0, &mut chosen, &mut best);
    Some(best)
}

fn extend(
    g: &Graph,
    closed: &[crate::bitset::BitSet],
    start: usize,
    chosen: &mut Vec<usize>,
    best: &mut usize,
) {
    *best = (*best).max(chosen.len());
    for v in start..g.order() {
        let fits = chosen
            .iter()
            .all(|&u| g.has_edge(u, v) && closed[u] != closed[v]);
        if fits {
            chosen.push(v);
            extend(g, closed, v + 1, chosen, best);
            chosen.pop();
        }
    }
}
