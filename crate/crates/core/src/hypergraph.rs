//! The co-maximal graph of `D_n`, its maximal cliques, the co-maximal
//! hypergraph they form, and the bipartite incidence graph.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::lattice::{self, GroupParam, Subgroup};

/// Co-maximality graph on the vertex set of `D_n`: `H ~ K` iff `HK = D_n`.
#[derive(Clone, Debug)]
pub struct CoMaximalGraph {
    n: GroupParam,
    vertices: Vec<Subgroup>,
    adjacency: Vec<FixedBitSet>,
}

impl CoMaximalGraph {
    pub fn n(&self) -> GroupParam {
        self.n
    }

    pub fn vertices(&self) -> &[Subgroup] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[u].ones()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].count_ones(..)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn to_simple_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.len(), self.edges())
    }
}

pub fn build_comaximal_graph(n: GroupParam) -> CoMaximalGraph {
    let vertices = lattice::vertex_set(n);
    let k = vertices.len();
    let mut adjacency = vec![FixedBitSet::with_capacity(k); k];
    for a in 0..k {
        for b in a + 1..k {
            if lattice::is_comaximal(vertices[a], vertices[b], n).expect("vertex_set yields valid, distinct subgroups")
            {
                adjacency[a].insert(b);
                adjacency[b].insert(a);
            }
        }
    }
    let g = CoMaximalGraph { n, vertices, adjacency };
    assert!((0..g.len()).all(|u| g.degree(u) > 0), "vertex_set admitted a subgroup without a co-maximal partner");
    g
}

/// All inclusion-maximal cliques of `g` with at least two members, each sorted,
/// in lexicographic order.
///
/// Bron–Kerbosch with Tomita pivoting; the outer loop runs over a degeneracy
/// ordering so every recursive call sees at most `degeneracy` candidates.
pub fn maximal_cliques(g: &CoMaximalGraph) -> Vec<Vec<usize>> {
    maximal_cliques_of(&g.adjacency)
}

pub(crate) fn maximal_cliques_of(adjacency: &[FixedBitSet]) -> Vec<Vec<usize>> {
    let k = adjacency.len();
    let order = degeneracy_order(adjacency);
    let mut position = vec![0; k];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let mut out = Vec::new();
    let mut clique = Vec::new();
    for &v in &order {
        let mut candidates = FixedBitSet::with_capacity(k);
        let mut excluded = FixedBitSet::with_capacity(k);
        for w in adjacency[v].ones() {
            if position[w] > position[v] {
                candidates.insert(w);
            } else {
                excluded.insert(w);
            }
        }
        clique.push(v);
        expand(adjacency, &mut clique, candidates, excluded, &mut out);
        clique.pop();
    }
    out.retain(|c| c.len() >= 2);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(
    adjacency: &[FixedBitSet],
    clique: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_clear() {
        if excluded.is_clear() {
            out.push(clique.clone());
        }
        return;
    }
    // Pivot maximising |candidates ∩ N(pivot)|.
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| (candidates.intersection_count(&adjacency[u]), std::cmp::Reverse(u)))
        .expect("candidates is non-empty");
    let mut branch = candidates.clone();
    branch.difference_with(&adjacency[pivot]);
    for v in branch.ones() {
        let mut next_candidates = candidates.clone();
        next_candidates.intersect_with(&adjacency[v]);
        let mut next_excluded = excluded.clone();
        next_excluded.intersect_with(&adjacency[v]);
        clique.push(v);
        expand(adjacency, clique, next_candidates, next_excluded, out);
        clique.pop();
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// Repeatedly remove a minimum-degree vertex (smallest index on ties).
fn degeneracy_order(adjacency: &[FixedBitSet]) -> Vec<usize> {
    let k = adjacency.len();
    let mut degree: Vec<usize> = adjacency.iter().map(|a| a.count_ones(..)).collect();
    let mut removed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let v = (0..k).filter(|&v| !removed[v]).min_by_key(|&v| (degree[v], v)).unwrap();
        removed[v] = true;
        order.push(v);
        for w in adjacency[v].ones() {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    order
}

/// A hypergraph whose hyperedges are sorted, distinct, pairwise incomparable
/// index sets of size at least two covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypergraph<V = Subgroup> {
    vertices: Vec<V>,
    hyperedges: Vec<Vec<usize>>,
}

impl<V> Hypergraph<V> {
    /// Validates the structural invariants. Hyperedges are sorted internally
    /// and listed in lexicographic order.
    pub fn new(vertices: Vec<V>, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        let len = vertices.len();
        let mut edges = Vec::with_capacity(hyperedges.len());
        for mut e in hyperedges {
            e.sort_unstable();
            e.dedup();
            if e.len() < 2 {
                return Err(Error::InvalidHypergraph(format!("hyperedge {e:?} has fewer than two vertices")));
            }
            if let Some(&bad) = e.iter().find(|&&v| v >= len) {
                return Err(Error::InvalidVertex { index: bad, len });
            }
            edges.push(e);
        }
        edges.sort();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph("repeated hyperedge".into()));
        }
        for (a, e) in edges.iter().enumerate() {
            for (b, f) in edges.iter().enumerate() {
                if a != b && is_subset(e, f) {
                    return Err(Error::InvalidHypergraph(format!("hyperedge {e:?} is contained in {f:?}")));
                }
            }
        }
        let mut covered = vec![false; len];
        for &v in edges.iter().flatten() {
            covered[v] = true;
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::InvalidHypergraph(format!("vertex {v} lies in no hyperedge")));
        }
        Ok(Hypergraph { vertices, hyperedges: edges })
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertices.len() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { index: v, len: self.vertices.len() })
        }
    }

    /// For each vertex, the sorted indices of hyperedges containing it.
    pub fn memberships(&self) -> Vec<Vec<usize>> {
        let mut m = vec![Vec::new(); self.vertices.len()];
        for (idx, e) in self.hyperedges.iter().enumerate() {
            for &v in e {
                m[v].push(idx);
            }
        }
        m
    }

    /// The 2-section: vertices adjacent iff some hyperedge contains both.
    pub fn two_section(&self) -> SimpleGraph {
        SimpleGraph::from_edges(
            self.vertices.len(),
            self.hyperedges
                .iter()
                .flat_map(|e| e.iter().enumerate().flat_map(move |(a, &u)| e[a + 1..].iter().map(move |&v| (u, v)))),
        )
    }
}

impl Hypergraph<usize> {
    /// Hypergraph on unlabeled vertices `0..vertex_count`.
    pub fn unlabeled(vertex_count: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        Hypergraph::new((0..vertex_count).collect(), hyperedges)
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.len() <= big.len() && small.iter().all(|v| big.binary_search(v).is_ok())
}

/// The co-maximal hypergraph of `D_n`: hyperedges are the maximal cliques of
/// the co-maximal graph.
pub fn build_hypergraph(n: GroupParam) -> Hypergraph {
    let g = build_comaximal_graph(n);
    let edges = maximal_cliques(&g);
    Hypergraph::new(g.vertices, edges).expect("maximal cliques form a valid hypergraph")
}

/// Bipartite incidence graph: vertex side `0..vertex_count`, hyperedge side
/// `0..edge_count`, an edge `(v, e)` whenever `v ∈ e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceGraph {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl IncidenceGraph {
    pub fn node_count(&self) -> usize {
        self.vertex_count + self.edge_count
    }

    /// Node id of hyperedge `e` in [`IncidenceGraph::to_graph`].
    pub fn hyperedge_node(&self, e: usize) -> usize {
        self.vertex_count + e
    }

    /// Flattened simple graph: vertex `v` is node `v`, hyperedge `e` is node
    /// `vertex_count + e`.
    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.node_count(), self.edges.iter().map(|&(v, e)| (v, self.vertex_count + e)))
    }
}

pub fn incidence_graph<V>(h: &Hypergraph<V>) -> IncidenceGraph {
    let mut edges: Vec<(usize, usize)> =
        h.hyperedges.iter().enumerate().flat_map(|(e, members)| members.iter().map(move |&v| (v, e))).collect();
    edges.sort_unstable();
    IncidenceGraph { vertex_count: h.vertex_count(), edge_count: h.edge_count(), edges }
}
