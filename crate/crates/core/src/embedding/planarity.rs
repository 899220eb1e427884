//! Certified planarity: a planar embedding or a Kuratowski subdivision, each
//! re-verified independently of the test that produced it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::lr::lr_planarity;
use super::rotation::{rotation_genus, RotationSystem};
use crate::graph::SimpleGraph;
use crate::hypergraph::IncidenceGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KuratowskiKind {
    #[serde(rename = "k5_subdivision")]
    K5,
    #[serde(rename = "k33_subdivision")]
    K33,
}

impl KuratowskiKind {
    pub fn name(self) -> &'static str {
        match self {
            KuratowskiKind::K5 => "K5",
            KuratowskiKind::K33 => "K3,3",
        }
    }
}

/// A subdivision of `K_5` or `K_{3,3}`: branch vertices and the paths joining
/// them. For `K_{3,3}` the first three branch vertices form one side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Kuratowski {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "VerdictRepr", from = "VerdictRepr")]
pub enum PlanarityVerdict {
    Embedding { rotation: RotationSystem },
    Obstruction(Kuratowski),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum VerdictRepr {
    #[serde(rename = "embedding")]
    Embedding { rotation: RotationSystem },
    #[serde(rename = "k5_subdivision")]
    K5 { branch_vertices: Vec<usize>, paths: Vec<Vec<usize>> },
    #[serde(rename = "k33_subdivision")]
    K33 { branch_vertices: Vec<usize>, paths: Vec<Vec<usize>> },
}

impl From<PlanarityVerdict> for VerdictRepr {
    fn from(v: PlanarityVerdict) -> Self {
        match v {
            PlanarityVerdict::Embedding { rotation } => VerdictRepr::Embedding { rotation },
            PlanarityVerdict::Obstruction(k) => match k.kind {
                KuratowskiKind::K5 => VerdictRepr::K5 { branch_vertices: k.branch_vertices, paths: k.paths },
                KuratowskiKind::K33 => VerdictRepr::K33 { branch_vertices: k.branch_vertices, paths: k.paths },
            },
        }
    }
}

impl From<VerdictRepr> for PlanarityVerdict {
    fn from(v: VerdictRepr) -> Self {
        let obstruction =
            |kind, branch_vertices, paths| PlanarityVerdict::Obstruction(Kuratowski { kind, branch_vertices, paths });
        match v {
            VerdictRepr::Embedding { rotation } => PlanarityVerdict::Embedding { rotation },
            VerdictRepr::K5 { branch_vertices, paths } => obstruction(KuratowskiKind::K5, branch_vertices, paths),
            VerdictRepr::K33 { branch_vertices, paths } => obstruction(KuratowskiKind::K33, branch_vertices, paths),
        }
    }
}

impl PlanarityVerdict {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityVerdict::Embedding { .. })
    }

    pub fn obstruction(&self) -> Option<&Kuratowski> {
        match self {
            PlanarityVerdict::Obstruction(k) => Some(k),
            PlanarityVerdict::Embedding { .. } => None,
        }
    }

    /// Short human-readable description.
    pub fn summary(&self) -> String {
        match self {
            PlanarityVerdict::Embedding { .. } => "planar embedding".to_string(),
            PlanarityVerdict::Obstruction(k) => {
                format!("{} subdivision on branch vertices {:?}", k.kind.name(), k.branch_vertices)
            }
        }
    }

    /// Re-checks the verdict against `g`: an embedding must trace to genus 0,
    /// an obstruction must be a valid Kuratowski subdivision inside `g`.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        match self {
            PlanarityVerdict::Embedding { rotation } => rotation_genus(g, rotation) == Ok(0),
            PlanarityVerdict::Obstruction(k) => verify_kuratowski(g, k),
        }
    }
}

pub fn is_planar(g: &SimpleGraph) -> bool {
    lr_planarity(g).is_some()
}

/// Planarity verdict for an arbitrary simple graph.
pub fn planarity_of_graph(g: &SimpleGraph) -> PlanarityVerdict {
    let verdict = match lr_planarity(g) {
        Some(cycles) => PlanarityVerdict::Embedding { rotation: RotationSystem::new(cycles) },
        None => PlanarityVerdict::Obstruction(extract_kuratowski(g)),
    };
    assert!(verdict.verify(g), "planarity verdict failed verification: {}", verdict.summary());
    verdict
}

/// Planarity verdict for an incidence graph (hyperedge `e` is node `V + e`).
pub fn planarity(g: &IncidenceGraph) -> PlanarityVerdict {
    planarity_of_graph(&g.to_graph())
}

/// Shrinks a non-planar graph to an edge-minimal non-planar subgraph, which is
/// a Kuratowski subdivision, and reads off its branch vertices and paths.
pub fn extract_kuratowski(g: &SimpleGraph) -> Kuratowski {
    assert!(!is_planar(g), "graph is planar");
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.node_count();
    let mut i = 0;
    let mut chunk = (edges.len() / 4).max(1);
    while i < edges.len() {
        let end = (i + chunk).min(edges.len());
        let trial = SimpleGraph::from_edges(n, edges[..i].iter().chain(&edges[end..]).copied());
        if !is_planar(&trial) {
            edges.drain(i..end);
        } else if chunk > 1 {
            chunk /= 2;
        } else {
            i += 1;
            chunk = 2;
        }
    }
    let h = SimpleGraph::from_edges(n, edges);
    subdivision_structure(&h).expect("edge-minimal non-planar graph is a Kuratowski subdivision")
}

fn subdivision_structure(h: &SimpleGraph) -> Option<Kuratowski> {
    let branch: Vec<usize> = (0..h.node_count()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = match (branch.len(), branch.iter().map(|&v| h.degree(v)).max()) {
        (5, Some(4)) => KuratowskiKind::K5,
        (6, Some(3)) => KuratowskiKind::K33,
        _ => return None,
    };
    let is_branch = |v: usize| h.degree(v) >= 3;
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in h.neighbors(b) {
            let mut path = vec![b, first];
            while !is_branch(*path.last().unwrap()) {
                let cur = *path.last().unwrap();
                let prev = path[path.len() - 2];
                let next = h.neighbors(cur).iter().copied().find(|&x| x != prev)?;
                path.push(next);
            }
            if b < *path.last().unwrap() {
                paths.push(path);
            }
        }
    }
    paths.sort();
    let branch_vertices = match kind {
        KuratowskiKind::K5 => branch,
        KuratowskiKind::K33 => {
            let first = branch[0];
            let mut side: Vec<usize> = branch
                .iter()
                .copied()
                .filter(|&v| v == first || !paths.iter().any(|p| endpoints(p) == (first.min(v), first.max(v))))
                .collect();
            let other: Vec<usize> = branch.iter().copied().filter(|v| !side.contains(v)).collect();
            side.extend(other);
            side
        }
    };
    Some(Kuratowski { kind, branch_vertices, paths })
}

fn endpoints(path: &[usize]) -> (usize, usize) {
    let (a, b) = (path[0], *path.last().unwrap());
    (a.min(b), a.max(b))
}

/// Checks that `k` describes a subdivision of `K_5` or `K_{3,3}` inside `g`:
/// paths follow edges of `g`, join the required branch pairs exactly once, and
/// are internally disjoint and avoid the branch vertices.
pub fn verify_kuratowski(g: &SimpleGraph, k: &Kuratowski) -> bool {
    let b = &k.branch_vertices;
    let distinct: BTreeSet<usize> = b.iter().copied().collect();
    if b.iter().any(|&v| v >= g.node_count()) || distinct.len() != b.len() {
        return false;
    }
    let required: BTreeSet<(usize, usize)> = match k.kind {
        KuratowskiKind::K5 if b.len() == 5 => {
            (0..5).flat_map(|i| (i + 1..5).map(move |j| (b[i].min(b[j]), b[i].max(b[j])))).collect()
        }
        KuratowskiKind::K33 if b.len() == 6 => {
            (0..3).flat_map(|i| (3..6).map(move |j| (b[i].min(b[j]), b[i].max(b[j])))).collect()
        }
        _ => return false,
    };
    if k.paths.len() != required.len() {
        return false;
    }
    let mut joined = BTreeSet::new();
    let mut interior = BTreeSet::new();
    for p in &k.paths {
        if p.len() < 2 || p.iter().any(|&v| v >= g.node_count()) {
            return false;
        }
        if !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        if !joined.insert(endpoints(p)) {
            return false;
        }
        for &v in &p[1..p.len() - 1] {
            if distinct.contains(&v) || !interior.insert(v) {
                return false;
            }
        }
    }
    joined == required
}
