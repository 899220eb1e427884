//! Rotation systems, face tracing and the genus they determine.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Cyclic neighbour order around every node. Serialises as a JSON map from
/// node to neighbour cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<String, Vec<usize>>", into = "BTreeMap<usize, Vec<usize>>")]
pub struct RotationSystem {
    cycles: Vec<Vec<usize>>,
}

impl TryFrom<BTreeMap<String, Vec<usize>>> for RotationSystem {
    type Error = Error;

    fn try_from(map: BTreeMap<String, Vec<usize>>) -> Result<Self> {
        let mut entries = Vec::with_capacity(map.len());
        for (k, v) in map {
            let node: usize =
                k.parse().map_err(|_| Error::MalformedRotation(format!("node key {k:?} is not an index")))?;
            entries.push((node, v));
        }
        let len = entries.iter().map(|&(k, _)| k + 1).max().unwrap_or(0);
        let mut cycles = vec![Vec::new(); len];
        for (k, v) in entries {
            cycles[k] = v;
        }
        Ok(RotationSystem { cycles })
    }
}

impl From<RotationSystem> for BTreeMap<usize, Vec<usize>> {
    fn from(r: RotationSystem) -> Self {
        r.cycles.into_iter().enumerate().collect()
    }
}

impl RotationSystem {
    pub fn new(cycles: Vec<Vec<usize>>) -> Self {
        RotationSystem { cycles }
    }

    /// Neighbours in sorted order around every node.
    pub fn sorted(g: &SimpleGraph) -> Self {
        RotationSystem::new((0..g.node_count()).map(|v| g.neighbors(v).to_vec()).collect())
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle(&self, v: usize) -> &[usize] {
        self.cycles.get(v).map_or(&[], Vec::as_slice)
    }

    pub fn cycle_mut(&mut self, v: usize) -> &mut Vec<usize> {
        &mut self.cycles[v]
    }

    /// Checks that every node lists its full neighbour set exactly once.
    pub fn validate(&self, g: &SimpleGraph) -> Result<()> {
        if self.cycles.len() > g.node_count() {
            return Err(Error::MalformedRotation(format!(
                "rotation mentions node {} but the graph has {} nodes",
                self.cycles.len() - 1,
                g.node_count()
            )));
        }
        for v in 0..g.node_count() {
            let mut listed = self.cycle(v).to_vec();
            listed.sort_unstable();
            if listed.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedRotation(format!("node {v} lists a neighbour twice")));
            }
            if listed != g.neighbors(v) {
                return Err(Error::MalformedRotation(format!(
                    "node {v} lists {:?}, expected the neighbours {:?}",
                    self.cycle(v),
                    g.neighbors(v)
                )));
            }
        }
        Ok(())
    }
}

/// Faces of the embedding, each as its cyclic sequence of darts `(u, v)`.
/// The dart following `(u, v)` is `(v, w)` where `w` follows `u` in the
/// rotation at `v`.
pub fn trace_faces(g: &SimpleGraph, rotation: &RotationSystem) -> Result<Vec<Vec<(usize, usize)>>> {
    rotation.validate(g)?;
    let mut position: HashMap<(usize, usize), usize> = HashMap::new();
    for v in 0..g.node_count() {
        for (k, &u) in rotation.cycle(v).iter().enumerate() {
            position.insert((v, u), k);
        }
    }
    let mut seen = HashSet::new();
    let mut faces = Vec::new();
    for (a, b) in g.edges() {
        for start in [(a, b), (b, a)] {
            if seen.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut dart = start;
            loop {
                seen.insert(dart);
                face.push(dart);
                let (u, v) = dart;
                let around = rotation.cycle(v);
                let w = around[(position[&(v, u)] + 1) % around.len()];
                dart = (v, w);
                if dart == start {
                    break;
                }
            }
            faces.push(face);
        }
    }
    Ok(faces)
}

/// Orientable genus of the surface the rotation system embeds `g` in, summed
/// over connected components. Edgeless components contribute nothing.
pub fn rotation_genus(g: &SimpleGraph, rotation: &RotationSystem) -> Result<u64> {
    let faces = trace_faces(g, rotation)?;
    let (count, label) = g.components();
    let mut vertices = vec![0i64; count];
    let mut edges = vec![0i64; count];
    let mut face_count = vec![0i64; count];
    for v in 0..g.node_count() {
        vertices[label[v]] += 1;
    }
    for (u, _) in g.edges() {
        edges[label[u]] += 1;
    }
    for f in &faces {
        face_count[label[f[0].0]] += 1;
    }
    let mut genus = 0;
    for c in 0..count {
        if edges[c] == 0 {
            continue;
        }
        let twice = 2 - vertices[c] + edges[c] - face_count[c];
        debug_assert!(twice >= 0 && twice % 2 == 0);
        genus += (twice / 2) as u64;
    }
    Ok(genus)
}
