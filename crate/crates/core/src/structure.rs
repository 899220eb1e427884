//! Hypergraph invariants (distance, diameter, girth, chromatic number, star,
//! Helly, hypertree, uniformity) and their closed-form predictions for the
//! co-maximal hypergraph of `D_n`.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;
use crate::error::Result;
use crate::hypergraph::{incidence_graph, Hypergraph};
use crate::lattice::{GroupParam, Subgroup};

/// A non-negative integer or infinity. Serialises as a number or `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extended {
    Finite(u64),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<u64> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinite => None,
        }
    }
}

impl From<Option<usize>> for Extended {
    fn from(v: Option<usize>) -> Self {
        v.map_or(Extended::Infinite, |x| Extended::Finite(x as u64))
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => write!(f, "∞"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_u64(*v),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Extended {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Extended::Finite(v)),
            Raw::Str(s) if s == "inf" => Ok(Extended::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("expected a number or \"inf\", got {s:?}"))),
        }
    }
}

/// Minimum number of hyperedges on a path from `u` to `v`.
///
/// Shortest alternating paths never reuse a hyperedge, so this is the BFS
/// distance in the 2-section.
pub fn distance<V>(h: &Hypergraph<V>, u: usize, v: usize) -> Result<Extended> {
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    Ok(h.two_section().bfs(u)[v].into())
}

pub fn diameter<V>(h: &Hypergraph<V>) -> Extended {
    let g = h.two_section();
    let mut best = 0;
    for s in 0..g.node_count() {
        for d in g.bfs(s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Extended::Infinite,
            }
        }
    }
    Extended::Finite(best as u64)
}

/// Length of a shortest Berge cycle: half the girth of the incidence graph.
pub fn girth<V>(h: &Hypergraph<V>) -> Extended {
    // The incidence graph is simple and bipartite, so its girth is at least 4.
    incidence_graph(h).to_graph().girth_with_floor(4).map(|g| g / 2).into()
}

/// Girth is 2 exactly when two hyperedges share at least two vertices.
pub fn has_two_cycle<V>(h: &Hypergraph<V>) -> bool {
    let edges = h.hyperedges();
    edges
        .iter()
        .enumerate()
        .any(|(a, e)| edges[a + 1..].iter().any(|f| e.iter().filter(|v| f.binary_search(v).is_ok()).count() >= 2))
}

/// Minimum number of colours and a witness colouring (colour per vertex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: usize,
    pub assignment: Vec<usize>,
}

/// No hyperedge is monochromatic under `assignment`.
pub fn is_proper_coloring<V>(h: &Hypergraph<V>, assignment: &[usize]) -> bool {
    assignment.len() == h.vertex_count()
        && h.hyperedges().iter().all(|e| e.iter().any(|&v| assignment[v] != assignment[e[0]]))
}

/// Exact chromatic number, trying `k = 1, 2, …` with a backtracking search.
pub fn chromatic_number<V>(h: &Hypergraph<V>) -> Coloring {
    let search = ColoringSearch::new(h);
    for k in 1..=h.vertex_count().max(1) {
        if let Some(assignment) = search.solve(k) {
            debug_assert!(is_proper_coloring(h, &assignment));
            return Coloring { colors: k, assignment };
        }
    }
    unreachable!("every vertex in its own colour is proper")
}

/// Backtracking over vertices in decreasing hyperedge-membership order, with
/// colour-symmetry breaking and propagation: when all but one vertex of a
/// hyperedge share colour `c`, the last one cannot take `c`.
struct ColoringSearch<'a> {
    edges: &'a [Vec<usize>],
    memberships: Vec<Vec<usize>>,
    rank: Vec<usize>,
}

#[derive(Clone)]
struct ColoringState {
    color: Vec<Option<usize>>,
    domain: Vec<u64>,
    // per hyperedge: uncoloured count and per-colour counts (flattened, k columns)
    uncolored: Vec<usize>,
    counts: Vec<usize>,
    used: usize,
}

impl<'a> ColoringSearch<'a> {
    fn new<V>(h: &'a Hypergraph<V>) -> Self {
        let memberships = h.memberships();
        let mut order: Vec<usize> = (0..h.vertex_count()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(memberships[v].len()), v));
        let mut rank = vec![0; order.len()];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        ColoringSearch { edges: h.hyperedges(), memberships, rank }
    }

    fn solve(&self, k: usize) -> Option<Vec<usize>> {
        assert!(k <= 64, "colour domains are 64-bit masks");
        let nv = self.memberships.len();
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let state = ColoringState {
            color: vec![None; nv],
            domain: vec![full; nv],
            uncolored: self.edges.iter().map(Vec::len).collect(),
            counts: vec![0; self.edges.len() * k],
            used: 0,
        };
        self.search(state, k).map(|s| s.color.into_iter().map(|c| c.unwrap()).collect())
    }

    fn search(&self, state: ColoringState, k: usize) -> Option<ColoringState> {
        // Most constrained uncoloured vertex, then the static order.
        let next = (0..state.color.len())
            .filter(|&v| state.color[v].is_none())
            .min_by_key(|&v| (state.domain[v].count_ones(), self.rank[v]));
        let Some(v) = next else {
            return Some(state);
        };
        // Colours beyond the first unused one are interchangeable.
        let limit = (state.used + 1).min(k);
        for c in 0..limit {
            if state.domain[v] & (1 << c) == 0 {
                continue;
            }
            let mut child = state.clone();
            if self.assign(&mut child, v, c, k) {
                if let Some(done) = self.search(child, k) {
                    return Some(done);
                }
            }
        }
        None
    }

    fn assign(&self, s: &mut ColoringState, v: usize, c: usize, k: usize) -> bool {
        let mut queue = vec![(v, c)];
        while let Some((v, c)) = queue.pop() {
            match s.color[v] {
                Some(existing) if existing == c => continue,
                Some(_) => return false,
                None => {}
            }
            if s.domain[v] & (1 << c) == 0 {
                return false;
            }
            s.color[v] = Some(c);
            s.used = s.used.max(c + 1);
            for &e in &self.memberships[v] {
                s.uncolored[e] -= 1;
                s.counts[e * k + c] += 1;
                let size = self.edges[e].len();
                if s.counts[e * k + c] == size {
                    return false;
                }
                if s.counts[e * k + c] == size - 1 && s.uncolored[e] == 1 {
                    let last = self.edges[e]
                        .iter()
                        .copied()
                        .find(|&w| s.color[w].is_none())
                        .expect("one vertex is uncoloured");
                    s.domain[last] &= !(1 << c);
                    match s.domain[last].count_ones() {
                        0 => return false,
                        1 => queue.push((last, s.domain[last].trailing_zeros() as usize)),
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

/// A vertex lying in every hyperedge, if any (smallest index).
pub fn is_star<V>(h: &Hypergraph<V>) -> Option<usize> {
    let m = h.memberships();
    (0..h.vertex_count()).find(|&v| m[v].len() == h.edge_count() && h.edge_count() > 0)
}

fn vertex_bitsets<V>(h: &Hypergraph<V>) -> Vec<FixedBitSet> {
    h.hyperedges()
        .iter()
        .map(|e| {
            let mut b = FixedBitSet::with_capacity(h.vertex_count());
            for &v in e {
                b.insert(v);
            }
            b
        })
        .collect()
}

/// Helly property via the triple criterion: for every three vertices, the
/// hyperedges containing at least two of them share a vertex.
///
/// Only triples that are pairwise co-contained can fail (otherwise every
/// relevant hyperedge contains a common member of the triple), so the check
/// runs over triangles of the 2-section, using for each co-contained pair the
/// intersection of all hyperedges containing it.
pub fn is_helly<V>(h: &Hypergraph<V>) -> bool {
    let nv = h.vertex_count();
    let sets = vertex_bitsets(h);
    let mut pair_meet: Vec<Option<FixedBitSet>> = vec![None; nv * nv];
    for (e, members) in h.hyperedges().iter().enumerate() {
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                let slot = &mut pair_meet[u * nv + v];
                match slot {
                    Some(b) => b.intersect_with(&sets[e]),
                    None => *slot = Some(sets[e].clone()),
                }
            }
        }
    }
    let meet = |u: usize, v: usize| pair_meet[u.min(v) * nv + u.max(v)].as_ref();
    for x in 0..nv {
        for y in x + 1..nv {
            let Some(xy) = meet(x, y) else { continue };
            for z in y + 1..nv {
                let (Some(xz), Some(yz)) = (meet(x, z), meet(y, z)) else {
                    continue;
                };
                let mut common = xy.clone();
                common.intersect_with(xz);
                common.intersect_with(yz);
                if common.is_clear() {
                    return false;
                }
            }
        }
    }
    true
}

/// Helly property by enumerating every subfamily. Exponential; `None` when
/// there are more than `max_edges` hyperedges.
pub fn is_helly_exhaustive<V>(h: &Hypergraph<V>, max_edges: usize) -> Option<bool> {
    let m = h.edge_count();
    if m > max_edges || m >= 32 {
        return None;
    }
    let sets = vertex_bitsets(h);
    let intersects: Vec<Vec<bool>> = (0..m).map(|a| (0..m).map(|b| !sets[a].is_disjoint(&sets[b])).collect()).collect();
    for mask in 1u32..(1 << m) {
        let members: Vec<usize> = (0..m).filter(|&e| mask & (1 << e) != 0).collect();
        let pairwise = members.iter().all(|&a| members.iter().all(|&b| intersects[a][b]));
        if !pairwise {
            continue;
        }
        let mut common = sets[members[0]].clone();
        for &e in &members[1..] {
            common.intersect_with(&sets[e]);
        }
        if common.is_clear() {
            return Some(false);
        }
    }
    Some(true)
}

/// Outcome of hypertree recognition. For star hypergraphs a host tree (every
/// vertex joined to the centre) is attached as a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypertreeVerdict {
    pub is_hypertree: bool,
    pub host_tree: Option<Vec<(usize, usize)>>,
}

/// A hypergraph is a hypertree iff it is Helly and the intersection graph of
/// its hyperedges is chordal.
pub fn is_hypertree<V>(h: &Hypergraph<V>) -> HypertreeVerdict {
    let is_tree = is_helly(h) && is_chordal(&line_graph(h));
    let host_tree = if is_tree {
        is_star(h).map(|c| (0..h.vertex_count()).filter(|&v| v != c).map(|v| (c.min(v), c.max(v))).collect())
    } else {
        None
    };
    HypertreeVerdict { is_hypertree: is_tree, host_tree }
}

/// Whether `tree` is a spanning tree on the vertices in which every hyperedge
/// induces a connected subgraph.
pub fn is_host_tree<V>(h: &Hypergraph<V>, tree: &[(usize, usize)]) -> bool {
    let nv = h.vertex_count();
    if tree.len() + 1 != nv || tree.iter().any(|&(u, v)| u >= nv || v >= nv) {
        return false;
    }
    let g = crate::graph::SimpleGraph::from_edges(nv, tree.iter().copied());
    if g.edge_count() != tree.len() || g.components().0 != 1 {
        return false;
    }
    h.hyperedges().iter().all(|e| {
        let index: std::collections::HashMap<usize, usize> = e.iter().enumerate().map(|(a, &v)| (v, a)).collect();
        let sub = crate::graph::SimpleGraph::from_edges(
            e.len(),
            tree.iter().filter_map(|(u, v)| Some((*index.get(u)?, *index.get(v)?))),
        );
        sub.components().0 == 1
    })
}

/// Intersection graph of the hyperedges as adjacency bitsets.
fn line_graph<V>(h: &Hypergraph<V>) -> Vec<FixedBitSet> {
    let m = h.edge_count();
    let mut adj = vec![FixedBitSet::with_capacity(m); m];
    for list in h.memberships() {
        for (a, &e) in list.iter().enumerate() {
            for &f in &list[a + 1..] {
                adj[e].insert(f);
                adj[f].insert(e);
            }
        }
    }
    adj
}

/// Chordality via maximum cardinality search and a perfect-elimination check.
pub(crate) fn is_chordal(adj: &[FixedBitSet]) -> bool {
    let k = adj.len();
    // MCS visit order; its reverse is a perfect elimination ordering iff chordal.
    let mut weight = vec![0usize; k];
    let mut visited = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let v = (0..k).filter(|&v| !visited[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        visited[v] = true;
        order.push(v);
        for w in adj[v].ones() {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order.reverse();
    let mut position = vec![0; k];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    for &v in &order {
        let later: Vec<usize> = adj[v].ones().filter(|&w| position[w] > position[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !adj[parent].contains(w)) {
            return false;
        }
    }
    true
}

/// `Some(k)` when every hyperedge has exactly `k` vertices.
pub fn uniform_k<V>(h: &Hypergraph<V>) -> Option<usize> {
    let first = h.hyperedges().first()?.len();
    h.hyperedges().iter().all(|e| e.len() == first).then_some(first)
}

/// Colour rotation subgroups 0 and dihedral subgroups 1.
pub fn type_coloring(h: &Hypergraph<Subgroup>) -> Vec<usize> {
    h.vertices().iter().map(|s| usize::from(s.is_dihedral())).collect()
}

/// Invariants of the co-maximal hypergraph of `D_n` as functions of `n` alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predictions {
    pub diameter: Extended,
    pub girth: Extended,
    pub chromatic: usize,
    pub star: bool,
    pub hypertree: bool,
    pub uniform: Option<usize>,
}

pub fn predict(n: GroupParam) -> Predictions {
    let n = n.get();
    let prime_power = arith::is_prime_power(n);
    Predictions {
        diameter: Extended::Finite(if n == 2 {
            1
        } else if prime_power {
            2
        } else {
            3
        }),
        girth: if n == 2 || arith::is_odd_prime_power(n) { Extended::Infinite } else { Extended::Finite(2) },
        chromatic: 2,
        star: prime_power,
        hypertree: prime_power,
        uniform: if arith::is_power_of_two(n) {
            Some(3)
        } else if arith::is_odd_prime_power(n) {
            Some(2)
        } else {
            None
        },
    }
}

/// Computed invariants for one `n`, with predictions and their agreement.
/// The Helly flag is reported but has no prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub n: u64,
    pub diameter: Extended,
    pub girth: Extended,
    pub chromatic: usize,
    pub star: bool,
    pub star_center: Option<usize>,
    pub helly: bool,
    pub hypertree: bool,
    pub uniform: Option<usize>,
    pub predictions: Predictions,
    pub agreement: bool,
}

/// Names of the individually checkable invariants.
pub const CHECKS: [&str; 6] = ["diameter", "girth", "chromatic", "star", "hypertree", "uniform"];

impl StructureReport {
    /// Per-invariant agreement with the prediction, in [`CHECKS`] order.
    pub fn agreements(&self) -> [(&'static str, bool); 6] {
        let p = &self.predictions;
        [
            ("diameter", self.diameter == p.diameter),
            ("girth", self.girth == p.girth),
            ("chromatic", self.chromatic == p.chromatic),
            ("star", self.star == p.star),
            ("hypertree", self.hypertree == p.hypertree),
            ("uniform", self.uniform == p.uniform),
        ]
    }
}

pub fn analyze_structure(n: GroupParam, h: &Hypergraph) -> StructureReport {
    let star_center = is_star(h);
    let mut report = StructureReport {
        n: n.get(),
        diameter: diameter(h),
        girth: girth(h),
        chromatic: chromatic_number(h).colors,
        star: star_center.is_some(),
        star_center,
        helly: is_helly(h),
        hypertree: is_hypertree(h).is_hypertree,
        uniform: uniform_k(h),
        predictions: predict(n),
        agreement: false,
    };
    report.agreement = report.agreements().iter().all(|(_, ok)| *ok);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::build_hypergraph;

    fn gp(n: u64) -> GroupParam {
        GroupParam::new(n).unwrap()
    }

    fn co(n: u64) -> Hypergraph {
        build_hypergraph(gp(n))
    }

    fn index_of(h: &Hypergraph, s: &str) -> usize {
        let s: Subgroup = s.parse().unwrap();
        h.vertices().iter().position(|&v| v == s).unwrap()
    }

    #[test]
    fn distances() {
        let h4 = co(4);
        assert_eq!(distance(&h4, index_of(&h4, "D(4,0)"), index_of(&h4, "R(1)")), Ok(Extended::Finite(1)));
        let h6 = co(6);
        assert_eq!(distance(&h6, index_of(&h6, "R(2)"), index_of(&h6, "R(3)")), Ok(Extended::Finite(3)));
        assert_eq!(distance(&h6, 3, 3), Ok(Extended::Finite(0)));
        assert!(distance(&h6, 0, 99).is_err());
    }

    #[test]
    fn disconnected_diameter_is_infinite() {
        let h = Hypergraph::unlabeled(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(diameter(&h), Extended::Infinite);
        assert_eq!(distance(&h, 0, 3), Ok(Extended::Infinite));
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&co(2)), Extended::Finite(1));
        assert_eq!(diameter(&co(9)), Extended::Finite(2));
        assert_eq!(diameter(&co(12)), Extended::Finite(3));
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&co(8)), Extended::Finite(2));
        assert_eq!(girth(&co(27)), Extended::Infinite);
        assert_eq!(girth(&co(6)), Extended::Finite(2));
        // Three hyperedges forming a Berge triangle.
        let tri = Hypergraph::unlabeled(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(girth(&tri), Extended::Finite(3));
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&co(4)).colors, 2);
        assert_eq!(chromatic_number(&co(30)).colors, 2);
        let single = Hypergraph::unlabeled(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(chromatic_number(&single).colors, 2);
        // K4 as a 2-uniform hypergraph needs four colours.
        let k4 = Hypergraph::unlabeled(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| vec![u, v])).collect()).unwrap();
        let c = chromatic_number(&k4);
        assert_eq!(c.colors, 4);
        assert!(is_proper_coloring(&k4, &c.assignment));
        // Fano plane: chromatic number 3.
        let fano = Hypergraph::unlabeled(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap();
        assert_eq!(chromatic_number(&fano).colors, 3);
    }

    #[test]
    fn chromatic_agrees_with_brute_force() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..150 {
            let nv = 3 + (next() % 5) as usize;
            let mut edges: Vec<Vec<usize>> = Vec::new();
            for _ in 0..(2 + next() % 6) {
                let mut e: Vec<usize> = (0..nv).filter(|_| next() % 2 == 0).collect();
                if e.len() < 2 {
                    e = vec![0, 1];
                }
                edges.push(e);
            }
            edges.sort();
            edges.dedup();
            let antichain: Vec<Vec<usize>> = edges
                .iter()
                .filter(|e| !edges.iter().any(|f| f != *e && e.iter().all(|v| f.contains(v))))
                .cloned()
                .collect();
            let mut covered: Vec<usize> = antichain.iter().flatten().copied().collect();
            covered.sort();
            covered.dedup();
            let relabel = |v: usize| covered.binary_search(&v).unwrap();
            let h = Hypergraph::unlabeled(
                covered.len(),
                antichain.iter().map(|e| e.iter().map(|&v| relabel(v)).collect()).collect(),
            )
            .unwrap();
            let brute = (1..=h.vertex_count())
                .find(|&k| {
                    let total = k.pow(h.vertex_count() as u32);
                    (0..total).any(|code| {
                        let a: Vec<usize> = (0..h.vertex_count()).map(|v| code / k.pow(v as u32) % k).collect();
                        is_proper_coloring(&h, &a)
                    })
                })
                .unwrap();
            assert_eq!(chromatic_number(&h).colors, brute, "{:?}", h.hyperedges());
        }
    }

    #[test]
    fn stars() {
        let h4 = co(4);
        assert_eq!(is_star(&h4), Some(index_of(&h4, "R(1)")));
        let h9 = co(9);
        assert_eq!(is_star(&h9), Some(index_of(&h9, "R(1)")));
        assert_eq!(is_star(&co(6)), None);
    }

    #[test]
    fn helly() {
        assert!(!is_helly(&co(6)));
        assert!(is_helly(&co(4)));
        assert_eq!(is_helly_exhaustive(&co(4), 16), Some(true));
        // Odd n with two prime factors: Helly, but not a hypertree.
        assert!(is_helly(&co(15)));
        assert!(!is_hypertree(&co(15)).is_hypertree);
        // Triangle of 2-edges is the smallest non-Helly hypergraph.
        let tri = Hypergraph::unlabeled(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(!is_helly(&tri));
        assert_eq!(is_helly_exhaustive(&tri, 16), Some(false));
        assert_eq!(is_helly_exhaustive(&co(12), 16), None);
    }

    #[test]
    fn hypertrees() {
        let v8 = is_hypertree(&co(8));
        assert!(v8.is_hypertree);
        let tree = v8.host_tree.unwrap();
        assert!(is_host_tree(&co(8), &tree));
        assert!(!is_hypertree(&co(6)).is_hypertree);
        assert!(is_hypertree(&co(3)).is_hypertree);
        // Helly and intersection graph a 4-cycle: not a hypertree.
        let c4 = Hypergraph::unlabeled(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        assert!(is_helly(&c4));
        assert!(!is_hypertree(&c4).is_hypertree);
        // A path is a hypertree without a star centre.
        let path = Hypergraph::unlabeled(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let v = is_hypertree(&path);
        assert!(v.is_hypertree && v.host_tree.is_none());
        assert!(is_host_tree(&path, &[(0, 1), (1, 2), (2, 3)]));
        assert!(!is_host_tree(&path, &[(0, 2), (1, 2), (2, 3)]));
    }

    #[test]
    fn chordality() {
        let adj = |k: usize, edges: &[(usize, usize)]| {
            let mut a = vec![FixedBitSet::with_capacity(k); k];
            for &(u, v) in edges {
                a[u].insert(v);
                a[v].insert(u);
            }
            a
        };
        assert!(is_chordal(&adj(4, &[(0, 1), (1, 2), (2, 3), (0, 2)])));
        assert!(!is_chordal(&adj(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])));
        assert!(!is_chordal(&adj(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])));
        assert!(is_chordal(&adj(3, &[])));
    }

    #[test]
    fn uniformity() {
        assert_eq!(uniform_k(&co(8)), Some(3));
        assert_eq!(uniform_k(&co(5)), Some(2));
        assert_eq!(uniform_k(&co(12)), None);
    }

    #[test]
    fn prediction_examples() {
        let p2 = predict(gp(2));
        assert_eq!((p2.diameter, p2.girth), (Extended::Finite(1), Extended::Infinite));
        let p49 = predict(gp(49));
        assert_eq!((p49.diameter, p49.girth, p49.star), (Extended::Finite(2), Extended::Infinite, true));
        let p10 = predict(gp(10));
        assert_eq!(
            (p10.diameter, p10.girth, p10.star, p10.uniform),
            (Extended::Finite(3), Extended::Finite(2), false, None)
        );
    }

    #[test]
    fn reports_agree_on_small_range() {
        for n in 2..=24 {
            let r = analyze_structure(gp(n), &co(n));
            assert!(r.agreement, "n = {n}: {r:?}");
        }
    }

    #[test]
    fn extended_json() {
        assert_eq!(serde_json::to_string(&Extended::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Extended::Finite(3)).unwrap(), "3");
        assert_eq!(serde_json::from_str::<Extended>("\"inf\"").unwrap(), Extended::Infinite);
        assert_eq!(serde_json::from_str::<Extended>("2").unwrap(), Extended::Finite(2));
        assert!(serde_json::from_str::<Extended>("\"many\"").is_err());
        assert_eq!(Extended::Infinite.to_string(), "∞");
    }
}
