//! Exact graph invariants with certificates.

pub mod clique;
pub mod coloring;
pub mod edge;
pub mod twin;
pub mod validate;

use serde::{Deserialize, Serialize};

pub use clique::{clique_number, CliqueResult};
pub use coloring::{chromatic_number, ColoringResult};
pub use edge::{
    class1_sufficient, edge_chromatic_class, is_overfull, EdgeClass, EdgeClassResult, EdgeDecision,
    DEFAULT_NODE_BUDGET,
};
pub use twin::{twin_free_clique_brute_force, twin_free_clique_number};

use crate::graph::Graph;

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    pub node_budget: u64,
    /// Re-run the direct twin-free search (small graphs) and panic on disagreement.
    pub cross_check: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            cross_check: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub clique_nodes: u64,
    pub chromatic_nodes: u64,
    pub twin_free_nodes: u64,
    pub edge_nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub omega: usize,
    pub omega_witness: Vec<usize>,
    pub chi: usize,
    pub chi_coloring: Vec<usize>,
    pub twin_free_omega: usize,
    pub twin_free_witness: Vec<usize>,
    pub delta: usize,
    pub edge_class: EdgeClass,
    pub chi_prime: Option<usize>,
    pub edge_coloring: Option<Vec<usize>>,
    pub edge_decision: EdgeDecision,
    pub overfull: bool,
    pub class1_criterion_fired: bool,
    pub universal_vertex_path_fired: bool,
    pub search_stats: SearchStats,
}

pub fn compute_invariants(g: &Graph, opts: &SolverOptions) -> InvariantReport {
    let clique = clique_number(g);
    let coloring = chromatic_number(g);
    let twin_free = twin_free_clique_number(g);
    if opts.cross_check {
        if let Some(brute) = twin_free_clique_brute_force(g) {
            assert_eq!(
                brute, twin_free.size,
                "twin-free clique number disagrees with the direct search"
            );
        }
    }
    let edge = edge_chromatic_class(g, opts.node_budget);
    InvariantReport {
        omega: clique.size,
        omega_witness: clique.witness,
        chi: coloring.colors,
        chi_coloring: coloring.coloring,
        twin_free_omega: twin_free.size,
        twin_free_witness: twin_free.witness,
        delta: edge.delta,
        edge_class: edge.class,
        chi_prime: edge.chi_prime,
        edge_coloring: edge.witness,
        edge_decision: edge.decision,
        overfull: edge.overfull,
        class1_criterion_fired: edge.class1_criterion_fired,
        universal_vertex_path_fired: edge.universal_vertex_path_fired,
        search_stats: SearchStats {
            clique_nodes: clique.nodes,
            chromatic_nodes: coloring.nodes,
            twin_free_nodes: twin_free.nodes,
            edge_nodes: edge.nodes,
        },
    }
}

impl InvariantReport {
    /// Re-checks every witness and the report's internal consistency.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        if self.omega_witness.len() != self.omega || !validate::is_clique(g, &self.omega_witness) {
            return Err("clique witness is invalid".into());
        }
        if !validate::is_proper_coloring(g, &self.chi_coloring, self.chi) {
            return Err("vertex coloring witness is invalid".into());
        }
        if self.twin_free_witness.len() != self.twin_free_omega
            || !validate::is_twin_free_clique(g, &self.twin_free_witness)
        {
            return Err("twin-free clique witness is invalid".into());
        }
        if self.omega > self.chi || self.twin_free_omega > self.omega {
            return Err("omega <= chi or twin-free omega <= omega violated".into());
        }
        if self.delta != g.max_degree() {
            return Err("maximum degree mismatch".into());
        }
        match (self.edge_class, self.chi_prime) {
            (EdgeClass::Class1, Some(c)) if c == self.delta => {}
            (EdgeClass::Class2, Some(c)) if c == self.delta + 1 => {}
            (EdgeClass::Undetermined, None) => {}
            _ => return Err("edge class and chromatic index disagree".into()),
        }
        if let Some(coloring) = &self.edge_coloring {
            if self.edge_class != EdgeClass::Class1
                || !validate::is_proper_edge_coloring(g, coloring, self.delta)
            {
                return Err("edge coloring witness is invalid".into());
            }
        }
        Ok(())
    }
}
