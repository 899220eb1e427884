//! Co-maximal subgroup hypergraphs of dihedral groups: subgroup arithmetic,
//! hypergraph construction, structural invariants and embeddability.

pub mod arith;
pub mod embedding;
pub mod error;
pub mod export;
pub mod graph;
pub mod hypergraph;
pub mod lattice;
pub mod oracle;
pub mod report;
pub mod structure;

pub use embedding::{classify_surface, planarity, PlanarityVerdict, SurfaceClass, SurfaceReport, TripleCertificate};
pub use error::{Error, Result};
pub use hypergraph::{
    build_comaximal_graph, build_hypergraph, incidence_graph, CoMaximalGraph, Hypergraph, IncidenceGraph,
};
pub use lattice::{
    enumerate_subgroups, intersect, is_comaximal, product_size, subgroup_order, GroupParam, Subgroup, SubgroupOrderPair,
};
pub use report::{analyze, AnalysisReport};
pub use structure::{analyze_structure, predict, Extended, Predictions, StructureReport};
