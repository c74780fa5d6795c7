//! Finite commutative rings, their essential annihilating-ideal graphs, and
//! exact graph invariants of those graphs.
//!
//! The pipeline is: parse a [`RingSpec`], build a [`FiniteRing`], enumerate
//! its [`IdealLattice`], build the [`EgGraph`], then run the solvers or the
//! structural checks in [`harness`].

pub mod bitset;
pub mod eg;
pub mod error;
pub mod graph;
pub mod harness;
pub mod lattice;
pub mod report;
pub mod ring;
pub mod solvers;

pub use eg::{build_eg, detect_shape, true_twin_partition, EgGraph, Shape, TwinPartition};
pub use error::{Error, Result};
pub use graph::Graph;
pub use lattice::{Ideal, IdealLattice};
pub use ring::{build_ring, parse_ring_spec, FiniteRing, RingSpec};

/// A ring together with its ideal lattice and graph.
#[derive(Debug, Clone)]
pub struct Structure {
    pub ring: FiniteRing,
    pub lattice: IdealLattice,
    pub eg: EgGraph,
}

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub order_cap: usize,
    pub lattice_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: ring::DEFAULT_ORDER_CAP,
            lattice_cap: lattice::DEFAULT_LATTICE_CAP,
        }
    }
}

impl Structure {
    pub fn from_spec(spec: &RingSpec, limits: Limits) -> Result<Structure> {
        let ring = ring::build_ring_with_cap(spec, limits.order_cap)?;
        let lattice = IdealLattice::enumerate_with_cap(&ring, limits.lattice_cap)?;
        let eg = build_eg(&ring, &lattice);
        Ok(Structure { ring, lattice, eg })
    }

    pub fn parse(text: &str) -> Result<Structure> {
        Self::from_spec(&parse_ring_spec(text)?, Limits::default())
    }

    pub fn graph(&self) -> &Graph {
        &self.eg.graph
    }

    pub fn label(&self, ideal_id: usize) -> String {
        self.lattice.label(&self.ring, ideal_id)
    }

    pub fn vertex_labels(&self) -> Vec<String> {
        self.eg.labels(&self.ring, &self.lattice)
    }

    /// Vertices lying inside the nilradical (the nonzero nilpotent ideals).
    pub fn nilpotent_vertices(&self) -> Vec<usize> {
        (0..self.eg.order())
            .filter(|&v| {
                self.lattice
                    .contains(self.lattice.nilradical, self.eg.vertices[v])
            })
            .collect()
    }
}
