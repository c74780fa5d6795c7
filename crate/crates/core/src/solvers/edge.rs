//! Edge-chromatic classification (Class 1: `χ' = Δ`, Class 2: `χ' = Δ + 1`).

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
/// Budget used when searching for an explicit coloring after a theorem has
/// already settled Class 1.
const WITNESS_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeClass {
    Class1,
    Class2,
    Undetermined,
}

/// Which step of the cascade produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeDecision {
    NoEdges,
    UniversalVertex,
    Class1Criterion,
    Overfull,
    Search,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassResult {
    pub class: EdgeClass,
    pub chi_prime: Option<usize>,
    pub delta: usize,
    /// Color per edge of [`Graph::edges`], present for Class 1 when found.
    pub witness: Option<Vec<usize>>,
    pub decision: EdgeDecision,
    pub overfull: bool,
    pub class1_criterion_fired: bool,
    pub universal_vertex_path_fired: bool,
    pub nodes: u64,
}

/// `|E| > floor(|V|/2) * Δ`.
pub fn is_overfull(g: &Graph) -> bool {
    g.edge_count() > (g.order() / 2) * g.max_degree()
}

/// Sufficient condition for Class 1: every maximum-degree vertex `u` has a
/// neighbour `v` with `Δ - deg(v) + 2` exceeding the number of
/// maximum-degree vertices.
pub fn class1_sufficient(g: &Graph) -> bool {
    let delta = g.max_degree();
    if delta == 0 {
        return false;
    }
    let degrees = g.degrees();
    let major: Vec<usize> = (0..g.order()).filter(|&v| degrees[v] == delta).collect();
    major.iter().all(|&u| {
        g.neighbors(u)
            .iter()
            .any(|v| delta + 2 - degrees[v] > major.len())
    })
}

pub fn has_universal_vertex(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && (0..n).any(|v| g.degree(v) == n - 1)
}

/// Decision cascade: universal vertex (Class 2 iff overfull), the Class 1
/// degree criterion, overfullness, then exhaustive `Δ`-edge-coloring search
/// within `node_budget`.
pub fn edge_chromatic_class(g: &Graph, node_budget: u64) -> EdgeClassResult {
    let delta = g.max_degree();
    let overfull = is_overfull(g);
    let criterion = class1_sufficient(g);
    let universal = has_universal_vertex(g);
    let mut out = EdgeClassResult {
        class: EdgeClass::Undetermined,
        chi_prime: None,
        delta,
        witness: None,
        decision: EdgeDecision::BudgetExhausted,
        overfull,
        class1_criterion_fired: false,
        universal_vertex_path_fired: false,
        nodes: 0,
    };
    if g.edge_count() == 0 {
        out.class = EdgeClass::Class1;
        out.chi_prime = Some(0);
        out.witness = Some(Vec::new());
        out.decision = EdgeDecision::NoEdges;
        return out;
    }
    let settled = if universal {
        out.universal_vertex_path_fired = true;
        out.decision = EdgeDecision::UniversalVertex;
        Some(!overfull)
    } else if criterion {
        out.class1_criterion_fired = true;
        out.decision = EdgeDecision::Class1Criterion;
        Some(true)
    } else if overfull {
        out.decision = EdgeDecision::Overfull;
        Some(false)
    } else {
        None
    };
    match settled {
        Some(true) => {
            out.class = EdgeClass::Class1;
            out.chi_prime = Some(delta);
            let search = edge_coloring_search(g, delta, node_budget.min(WITNESS_BUDGET));
            out.nodes = search.nodes;
            out.witness = search.coloring;
        }
        Some(false) => {
            out.class = EdgeClass::Class2;
            out.chi_prime = Some(delta + 1);
        }
        None => {
            let search = edge_coloring_search(g, delta, node_budget);
            out.nodes = search.nodes;
            match (search.coloring, search.exhausted) {
                (Some(c), _) => {
                    out.class = EdgeClass::Class1;
                    out.chi_prime = Some(delta);
                    out.witness = Some(c);
                    out.decision = EdgeDecision::Search;
                }
                (None, true) => {
                    out.class = EdgeClass::Class2;
                    out.chi_prime = Some(delta + 1);
                    out.decision = EdgeDecision::Search;
                }
                (None, false) => {
                    out.decision = EdgeDecision::BudgetExhausted;
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct EdgeSearch {
    pub coloring: Option<Vec<usize>>,
    /// True when the search space was fully explored.
    pub exhausted: bool,
    pub nodes: u64,
}

/// Backtracking `k`-edge-coloring. Edges are colored most-constrained first
/// (descending `deg(u) + deg(v)`, ties by endpoints) with per-vertex color
/// sets and a forward check that every uncolored neighbouring edge keeps a
/// free color.
pub fn edge_coloring_search(g: &Graph, k: usize, budget: u64) -> EdgeSearch {
    let edges = g.edges();
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = edges[e];
        (Reverse(degrees[u] + degrees[v]), u, v)
    });
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }
    let mut s = EdgeState {
        edges: &edges,
        incident: &incident,
        order: &order,
        k,
        used: (0..g.order()).map(|_| BitSet::new(k.max(1))).collect(),
        color: vec![usize::MAX; edges.len()],
        nodes: 0,
        budget,
        aborted: false,
    };
    let found = s.run(0, None);
    EdgeSearch {
        coloring: found.then(|| s.color.clone()),
        exhausted: !found && !s.aborted,
        nodes: s.nodes,
    }
}

struct EdgeState<'a> {
    edges: &'a [(usize, usize)],
    incident: &'a [Vec<usize>],
    order: &'a [usize],
    k: usize,
    used: Vec<BitSet>,
    color: Vec<usize>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl EdgeState<'_> {
    fn run(&mut self, pos: usize, max_used: Option<usize>) -> bool {
        if pos == self.order.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return false;
        }
        let e = self.order[pos];
        let (u, v) = self.edges[e];
        let limit = max_used.map_or(1, |m| m + 2).min(self.k);
        for c in 0..limit {
            if self.used[u].contains(c) || self.used[v].contains(c) {
                continue;
            }
            self.used[u].insert(c);
            self.used[v].insert(c);
            self.color[e] = c;
            if self.neighbours_feasible(u, v) {
                let next_max = Some(max_used.map_or(c, |m| m.max(c)));
                if self.run(pos + 1, next_max) {
                    return true;
                }
            }
            self.color[e] = usize::MAX;
            self.used[u].remove(c);
            self.used[v].remove(c);
            if self.aborted {
                return false;
            }
        }
        false
    }

    fn neighbours_feasible(&self, u: usize, v: usize) -> bool {
        for &x in &[u, v] {
            for &f in &self.incident[x] {
                if self.color[f] != usize::MAX {
                    continue;
                }
                let (a, b) = self.edges[f];
                let taken = self.used[a].union(&self.used[b]).count();
                if taken >= self.k {
                    return false;
                }
            }
        }
        true
    }
}
