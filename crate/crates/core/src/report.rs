//! Serialized reports: the `schema: 1` JSON documents emitted by the CLI.

use serde::{Deserialize, Serialize};

use crate::harness::VerificationResult;
use crate::solvers::InvariantReport;
use crate::Structure;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSummary {
    pub order: usize,
    pub reduced: bool,
    pub min_primes: usize,
    pub max_ideals: usize,
    pub annihilating_ideals: usize,
    pub nil_generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
}

/// Milliseconds per phase. Only present when requested, so that default
/// output stays byte-identical across runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub build_ms: u64,
    pub solve_ms: u64,
    pub verify_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub tool_version: String,
    pub ring_spec: String,
    pub ring_summary: RingSummary,
    pub graph_summary: GraphSummary,
    pub vertex_labels: Vec<String>,
    pub invariants: InvariantReport,
    pub verifications: Vec<VerificationResult>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<Timing>,
}

pub fn ring_summary(s: &Structure) -> RingSummary {
    let lat = &s.lattice;
    RingSummary {
        order: s.ring.order(),
        reduced: lat.is_reduced(),
        min_primes: lat.min_primes.len(),
        max_ideals: lat.maximal_ideals.len(),
        annihilating_ideals: s.eg.order(),
        nil_generators: lat
            .short_generators(&s.ring, lat.nilradical)
            .into_iter()
            .map(|g| s.ring.label(g))
            .collect(),
    }
}

pub fn graph_summary(s: &Structure) -> GraphSummary {
    let g = s.graph();
    GraphSummary {
        vertices: g.order(),
        edges: g.edge_count(),
        max_degree: g.max_degree(),
    }
}

impl ReportDocument {
    pub fn new(
        ring_spec: String,
        s: &Structure,
        invariants: InvariantReport,
        verifications: Vec<VerificationResult>,
    ) -> ReportDocument {
        ReportDocument {
            schema: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.into(),
            ring_spec,
            ring_summary: ring_summary(s),
            graph_summary: graph_summary(s),
            vertex_labels: s.vertex_labels(),
            invariants,
            verifications,
            timing: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<ReportDocument> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub schema: u32,
    pub ring_spec: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

pub fn graph_document(ring_spec: String, s: &Structure) -> GraphDocument {
    GraphDocument {
        schema: SCHEMA_VERSION,
        ring_spec,
        vertices: s.vertex_labels(),
        edges: s.graph().edges(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub id: usize,
    pub generators: Vec<String>,
    pub size: usize,
    pub annihilator: usize,
    pub essential: bool,
    pub nilpotent: bool,
    pub vertex: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDocument {
    pub schema: u32,
    pub ring_spec: String,
    pub ideals: Vec<IdealEntry>,
    pub minimal: Vec<usize>,
    pub maximal: Vec<usize>,
    pub socle: usize,
    pub nilradical: usize,
}

pub fn lattice_document(ring_spec: String, s: &Structure) -> LatticeDocument {
    let lat = &s.lattice;
    let ideals = (0..lat.len())
        .map(|k| IdealEntry {
            id: k,
            generators: if k == lat.zero_id {
                vec!["0".into()]
            } else {
                lat.short_generators(&s.ring, k)
                    .into_iter()
                    .map(|g| s.ring.label(g))
                    .collect()
            },
            size: lat.ideal(k).size(),
            annihilator: lat.annihilator[k],
            essential: lat.is_essential(k),
            nilpotent: lat.nilpotent[k],
            vertex: s.eg.vertex_of(k),
        })
        .collect();
    LatticeDocument {
        schema: SCHEMA_VERSION,
        ring_spec,
        ideals,
        minimal: lat.minimal_ideals.clone(),
        maximal: lat.maximal_ideals.clone(),
        socle: lat.socle,
        nilradical: lat.nilradical,
    }
}
