//! Vertex triples lying in many common hyperedges: each gives a `K_{3,k}`
//! subgraph of the incidence graph.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleCertificate {
    pub vertices: [usize; 3],
    pub common_hyperedges: Vec<usize>,
}

impl TripleCertificate {
    /// The `k` of the `K_{3,k}` this triple exhibits.
    pub fn k(&self) -> usize {
        self.common_hyperedges.len()
    }

    /// Distinct vertices, distinct in-range hyperedges, each containing all
    /// three vertices.
    pub fn verify<V>(&self, h: &Hypergraph<V>) -> bool {
        let [a, b, c] = self.vertices;
        if a == b || b == c || a == c || self.vertices.iter().any(|&v| v >= h.vertex_count()) {
            return false;
        }
        let mut seen = self.common_hyperedges.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.common_hyperedges.len()
            && self.common_hyperedges.iter().all(|&e| {
                e < h.edge_count() && self.vertices.iter().all(|v| h.hyperedges()[e].binary_search(v).is_ok())
            })
    }
}

fn membership_sets<V>(h: &Hypergraph<V>) -> Vec<FixedBitSet> {
    let m = h.edge_count();
    h.memberships()
        .into_iter()
        .map(|list| {
            let mut b = FixedBitSet::with_capacity(m);
            b.extend(list);
            b
        })
        .collect()
}

/// First vertex triple `i < j < l` (lexicographic) contained in at least `k`
/// common hyperedges, listing all of them.
pub fn find_triple_certificate<V>(h: &Hypergraph<V>, k: usize) -> Result<Option<TripleCertificate>> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("triple certificates need k >= 3, got {k}")));
    }
    let sets = membership_sets(h);
    let nv = h.vertex_count();
    for i in 0..nv {
        if sets[i].count_ones(..) < k {
            continue;
        }
        for j in i + 1..nv {
            let ij = &sets[i] & &sets[j];
            if ij.count_ones(..) < k {
                continue;
            }
            for (l, set) in sets.iter().enumerate().skip(j + 1) {
                if ij.intersection_count(set) >= k {
                    let common: Vec<usize> = ij.intersection(set).collect();
                    return Ok(Some(TripleCertificate { vertices: [i, j, l], common_hyperedges: common }));
                }
            }
        }
    }
    Ok(None)
}

/// Largest number of hyperedges shared by any vertex triple.
pub fn max_triple_multiplicity<V>(h: &Hypergraph<V>) -> usize {
    let sets = membership_sets(h);
    let nv = h.vertex_count();
    let mut best = 0;
    for i in 0..nv {
        for j in i + 1..nv {
            let ij = &sets[i] & &sets[j];
            if ij.count_ones(..) <= best {
                continue;
            }
            for set in &sets[j + 1..] {
                best = best.max(ij.intersection_count(set));
            }
        }
    }
    best
}
