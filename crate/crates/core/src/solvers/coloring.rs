use crate::graph::Graph;

use super::clique::clique_number;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringResult {
    pub colors: usize,
    /// Color of each vertex, `0..colors`.
    pub coloring: Vec<usize>,
    pub nodes: u64,
}

/// Exact chromatic number.
///
/// The clique number gives the lower bound and saturation-greedy the upper
/// bound; every `k` in between is decided by exact backtracking. No
/// relation between the two bounds is assumed.
pub fn chromatic_number(g: &Graph) -> ColoringResult {
    let n = g.order();
    if n == 0 {
        return ColoringResult {
            colors: 0,
            coloring: Vec::new(),
            nodes: 0,
        };
    }
    let lower = clique_number(g).size;
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().map_or(0, |c| c + 1);
    let mut nodes = 0;
    for k in lower..upper {
        let (found, used) = k_coloring(g, k, u64::MAX);
        nodes += used;
        if let Some(coloring) = found {
            return ColoringResult {
                colors: k,
                coloring,
                nodes,
            };
        }
    }
    ColoringResult {
        colors: upper,
        coloring: greedy,
        nodes,
    }
}

/// Saturation-degree greedy coloring (ties: larger degree, then smaller id).
pub fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut state = State::new(g, n.max(1));
    for _ in 0..n {
        let v = state.pick();
        let c = (0..n).find(|&c| state.allowed(v, c)).unwrap_or(0);
        state.assign(v, c);
    }
    state.color.into_iter().map(|c| c.unwrap_or(0)).collect()
}

/// Exact `k`-coloring by DSATUR-ordered backtracking. Returns the coloring
/// (if any) and the number of search nodes spent; gives up with `None`
/// after `budget` nodes.
pub fn k_coloring(g: &Graph, k: usize, budget: u64) -> (Option<Vec<usize>>, u64) {
    let n = g.order();
    if n == 0 {
        return (Some(Vec::new()), 0);
    }
    if k == 0 {
        return (None, 0);
    }
    let mut state = State::new(g, k);
    let mut nodes = 0;
    let ok = backtrack(&mut state, k, 0, &mut nodes, budget);
    let coloring = ok.then(|| state.color.iter().map(|c| c.unwrap()).collect());
    (coloring, nodes)
}

fn backtrack(s: &mut State, k: usize, colored: usize, nodes: &mut u64, budget: u64) -> bool {
    if colored == s.n {
        return true;
    }
    *nodes += 1;
    if *nodes > budget {
        return false;
    }
    let v = s.pick();
    // colors above the highest used one are interchangeable
    let limit = (s.max_used.map_or(0, |m| m + 1) + 1).min(k);
    for c in 0..limit {
        if !s.allowed(v, c) {
            continue;
        }
        let prev_max = s.max_used;
        s.assign(v, c);
        if backtrack(s, k, colored + 1, nodes, budget) {
            return true;
        }
        s.unassign(v, c);
        s.max_used = prev_max;
    }
    false
}

struct State<'a> {
    g: &'a Graph,
    n: usize,
    color: Vec<Option<usize>>,
    /// Neighbour color multiplicities, `n x k`.
    seen: Vec<u32>,
    saturation: Vec<usize>,
    k: usize,
    max_used: Option<usize>,
}

impl<'a> State<'a> {
    fn new(g: &'a Graph, k: usize) -> State<'a> {
        let n = g.order();
        State {
            g,
            n,
            color: vec![None; n],
            seen: vec![0; n * k],
            saturation: vec![0; n],
            k,
            max_used: None,
        }
    }

    fn allowed(&self, v: usize, c: usize) -> bool {
        c >= self.k || self.seen[v * self.k + c] == 0
    }

    fn pick(&self) -> usize {
        (0..self.n)
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains")
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        self.max_used = Some(self.max_used.map_or(c, |m| m.max(c)));
        if c >= self.k {
            return;
        }
        for u in self.g.neighbors(v).iter() {
            let slot = &mut self.seen[u * self.k + c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        for u in self.g.neighbors(v).iter() {
            let slot = &mut self.seen[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }
}
