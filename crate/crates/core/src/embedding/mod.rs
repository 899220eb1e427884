//! Embeddability of the incidence graph: certified planarity, genus bounds,
//! obstruction certificates and surface classification.

mod certificate;
mod genus;
mod lr;
mod planarity;
mod rotation;
mod surface;

pub use certificate::{find_triple_certificate, max_triple_multiplicity, TripleCertificate};
pub use genus::{euler_genus_lower_bounds, kmn_genus, GenusPair};
pub use planarity::{
    extract_kuratowski, is_planar, planarity, planarity_of_graph, verify_kuratowski, Kuratowski, KuratowskiKind,
    PlanarityVerdict,
};
pub use rotation::{rotation_genus, trace_faces, RotationSystem};
pub use surface::{classify_surface, predicted_surface, Basis, SurfaceClass, SurfaceReport};
