//! Brute-force, element-level model of `D_n`.
//!
//! Nothing here uses the closed-form lattice arithmetic: subgroups are explicit
//! element sets, products are computed element by element, and the hypergraph
//! is rebuilt by naive clique growth. It exists to cross-check `lattice` and
//! `hypergraph`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph;
use crate::lattice::{self, GroupParam, Subgroup};

pub const DEFAULT_ORACLE_CAP: u64 = 64;

/// `a^rot` when `flip` is false, `a^rot b` otherwise. Ordered rotations first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub rot: u64,
    pub flip: bool,
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.flip, self.rot).cmp(&(other.flip, other.rot))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Element {
    pub const IDENTITY: Element = Element { rot: 0, flip: false };

    pub fn new(rot: u64, flip: bool, n: GroupParam) -> Self {
        Element { rot: rot % n.get(), flip }
    }

    fn index(self, n: u64) -> usize {
        (self.rot + if self.flip { n } else { 0 }) as usize
    }

    fn from_index(idx: usize, n: u64) -> Self {
        let idx = idx as u64;
        Element { rot: idx % n, flip: idx >= n }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.flip {
            write!(f, "a^{}·b", self.rot)
        } else {
            write!(f, "a^{}", self.rot)
        }
    }
}

pub fn multiply(x: Element, y: Element, n: GroupParam) -> Element {
    let m = n.get();
    if x.flip {
        Element { rot: (x.rot + m - y.rot) % m, flip: !y.flip }
    } else {
        Element { rot: (x.rot + y.rot) % m, flip: y.flip }
    }
}

/// Sorted, duplicate-free set of group elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(Vec<Element>);

impl ElementSet {
    pub fn new(elements: impl IntoIterator<Item = Element>) -> Self {
        let mut v: Vec<Element> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.0.binary_search(x).is_ok()
    }

    pub fn elements(&self) -> &[Element] {
        &self.0
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.iter().filter(|x| other.contains(x)).copied().collect())
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Subgroup generated by `generators`.
pub fn closure(generators: &ElementSet, n: GroupParam) -> ElementSet {
    let m = n.get();
    let mut seen = vec![false; (2 * m) as usize];
    seen[Element::IDENTITY.index(m)] = true;
    let mut frontier = vec![Element::IDENTITY];
    while let Some(x) = frontier.pop() {
        for &g in generators.elements() {
            let y = multiply(x, g, n);
            let slot = &mut seen[y.index(m)];
            if !*slot {
                *slot = true;
                frontier.push(y);
            }
        }
    }
    from_mask(&seen, m)
}

// Index order coincides with the element order, so the result is already sorted.
fn from_mask(mask: &[bool], m: u64) -> ElementSet {
    ElementSet(mask.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| Element::from_index(k, m)).collect())
}

pub fn elements_of(h: Subgroup, n: GroupParam) -> Result<ElementSet> {
    h.validate(n)?;
    let m = n.get();
    let rotations = |r: u64| (0..m / r).map(move |k| Element { rot: k * r, flip: false });
    Ok(match h {
        Subgroup::Rotation { r } => ElementSet::new(rotations(r)),
        Subgroup::Dihedral { r, i } => {
            ElementSet::new(rotations(r).chain((0..m / r).map(|k| Element { rot: (k * r + i) % m, flip: true })))
        }
    })
}

/// `{xy : x ∈ a, y ∈ b}`.
pub fn set_product(a: &ElementSet, b: &ElementSet, n: GroupParam) -> ElementSet {
    let m = n.get();
    let mut seen = vec![false; (2 * m) as usize];
    for &x in a.elements() {
        for &y in b.elements() {
            seen[multiply(x, y, n).index(m)] = true;
        }
    }
    from_mask(&seen, m)
}

fn product_count(a: &ElementSet, b: &ElementSet, n: GroupParam) -> usize {
    let m = n.get();
    let mut seen = vec![false; (2 * m) as usize];
    let mut count = 0;
    for &x in a.elements() {
        for &y in b.elements() {
            let slot = &mut seen[multiply(x, y, n).index(m)];
            if !*slot {
                *slot = true;
                count += 1;
            }
        }
    }
    count
}

pub fn whole_group(n: GroupParam) -> ElementSet {
    let m = n.get();
    ElementSet((0..2 * m as usize).map(|k| Element::from_index(k, m)).collect())
}

/// Every subgroup of `D_n` (trivial and whole group included), as closures of
/// all one- and two-element generating sets.
pub fn oracle_enumerate_subgroups(n: GroupParam) -> Vec<ElementSet> {
    let all = whole_group(n);
    let elems = all.elements();
    let mut found = BTreeSet::new();
    for (a, &x) in elems.iter().enumerate() {
        found.insert(closure(&ElementSet::new([x]), n));
        for &y in &elems[a + 1..] {
            found.insert(closure(&ElementSet::new([x, y]), n));
        }
    }
    found.into_iter().collect()
}

pub fn check_cap(n: u64, cap: u64) -> Result<()> {
    if n > cap {
        Err(Error::OracleCap { n, cap })
    } else {
        Ok(())
    }
}

/// Hyperedges of the co-maximal hypergraph computed purely from element sets:
/// oracle subgroups, set-product adjacency, and maximal cliques grown naively.
/// Returned as sorted lists of element sets.
pub fn oracle_hyperedges(n: GroupParam) -> Vec<Vec<ElementSet>> {
    let order = n.group_order() as usize;
    let subgroups: Vec<ElementSet> =
        oracle_enumerate_subgroups(n).into_iter().filter(|s| s.len() > 1 && s.len() < order).collect();
    let k = subgroups.len();
    let mut adj = vec![vec![false; k]; k];
    for a in 0..k {
        for b in a + 1..k {
            let c = product_count(&subgroups[a], &subgroups[b], n) == order;
            adj[a][b] = c;
            adj[b][a] = c;
        }
    }
    let vertices: Vec<usize> = (0..k).filter(|&a| adj[a].iter().any(|&x| x)).collect();
    naive_maximal_cliques(&vertices, &adj)
        .into_iter()
        .map(|c| {
            let mut sets: Vec<ElementSet> = c.into_iter().map(|v| subgroups[v].clone()).collect();
            sets.sort();
            sets
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Grow every clique by increasing index and keep those no outside vertex extends.
fn naive_maximal_cliques(vertices: &[usize], adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vertices.iter().map(|&v| vec![v]).collect();
    while let Some(clique) = stack.pop() {
        let last = *clique.last().unwrap();
        for &w in vertices.iter().filter(|&&w| w > last) {
            if clique.iter().all(|&u| adj[u][w]) {
                let mut bigger = clique.clone();
                bigger.push(w);
                stack.push(bigger);
            }
        }
        let maximal = vertices.iter().all(|&w| clique.contains(&w) || !clique.iter().all(|&u| adj[u][w]));
        if maximal && clique.len() >= 2 {
            out.push(clique);
        }
    }
    out
}

/// Outcome of comparing the closed-form machinery against the oracle for one `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct OracleComparison {
    pub n: u64,
    pub subgroups_checked: usize,
    pub pairs_checked: usize,
    pub comaximal_pairs: usize,
    pub hyperedges: usize,
    pub mismatches: Vec<String>,
}

impl OracleComparison {
    pub fn is_consistent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Exhaustively compare subgroup listing, orders, intersections, products,
/// co-maximality and hyperedges for `D_n` against the element-level oracle.
pub fn compare_with_oracle(n: GroupParam, cap: u64) -> Result<OracleComparison> {
    check_cap(n.get(), cap)?;
    let mut report = OracleComparison { n: n.get(), ..Default::default() };
    let mut miss = |m: String| report_push(&mut report.mismatches, m);

    let subs = lattice::enumerate_subgroups(n);
    let elems: Vec<ElementSet> = subs.iter().map(|&h| elements_of(h, n)).collect::<Result<_>>()?;

    // Listing: a bijection with the oracle's proper nontrivial subgroups.
    let order = n.group_order() as usize;
    let oracle_subs: BTreeSet<ElementSet> =
        oracle_enumerate_subgroups(n).into_iter().filter(|s| s.len() > 1 && s.len() < order).collect();
    let listed: BTreeSet<ElementSet> = elems.iter().cloned().collect();
    if listed.len() != elems.len() {
        miss("enumerate_subgroups lists some subgroup twice".into());
    }
    if listed != oracle_subs {
        miss(format!("subgroup listing differs: {} listed vs {} by closure", listed.len(), oracle_subs.len()));
    }
    let by_elements: BTreeMap<ElementSet, Subgroup> = elems.iter().cloned().zip(subs.iter().copied()).collect();

    for (h, e) in subs.iter().zip(&elems) {
        if e.len() as u64 != lattice::subgroup_order(*h, n)? {
            miss(format!("|{h}| = {} but subgroup_order says otherwise", e.len()));
        }
        if closure(e, n) != *e {
            miss(format!("elements of {h} are not closed"));
        }
    }
    report.subgroups_checked = subs.len();

    let m = n.get();
    for a in 0..subs.len() {
        for b in a + 1..subs.len() {
            let (h, k) = (subs[a], subs[b]);
            let meet = elems[a].intersection(&elems[b]);
            let expected_meet = lattice::intersect(h, k, n)?;
            if elements_of(expected_meet, n)? != meet {
                miss(format!("{h} ∩ {k}: formula gives {expected_meet}, oracle {meet}"));
            }
            let prod = product_count(&elems[a], &elems[b], n);
            if prod as u64 != lattice::product_size(h, k, n)? {
                miss(format!("|{h}·{k}| = {prod} but product_size disagrees"));
            }
            if prod * meet.len() != elems[a].len() * elems[b].len() {
                miss(format!("coset identity fails for {h}, {k}"));
            }
            let oracle_comax = prod as u64 == 2 * m;
            if oracle_comax != lattice::is_comaximal(h, k, n)? {
                miss(format!("co-maximality of {h}, {k} disagrees (oracle {oracle_comax})"));
            }
            report.comaximal_pairs += oracle_comax as usize;
            report.pairs_checked += 1;
        }
    }

    let built = hypergraph::build_hypergraph(n);
    let formula_edges: BTreeSet<Vec<Subgroup>> =
        built.hyperedges().iter().map(|e| e.iter().map(|&v| built.vertices()[v]).collect()).collect();
    let oracle_edges: BTreeSet<Vec<Subgroup>> = oracle_hyperedges(n)
        .into_iter()
        .map(|e| {
            let mut v: Vec<Subgroup> =
                e.iter().map(|s| by_elements.get(s).copied()).collect::<Option<_>>().unwrap_or_default();
            v.sort();
            v
        })
        .collect();
    if formula_edges != oracle_edges {
        miss(format!("hyperedge sets differ: {} built vs {} by oracle", formula_edges.len(), oracle_edges.len()));
    }
    report.hyperedges = formula_edges.len();
    Ok(report)
}

fn report_push(v: &mut Vec<String>, m: String) {
    // Cap the diagnostics; a systematic bug would otherwise flood the report.
    if v.len() < 32 {
        v.push(m);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(n: u64) -> GroupParam {
        GroupParam::new(n).unwrap()
    }

    fn el(rot: u64, flip: bool) -> Element {
        Element { rot, flip }
    }

    #[test]
    fn multiplication_table_examples() {
        assert_eq!(multiply(el(1, true), el(1, true), gp(4)), el(0, false));
        assert_eq!(multiply(el(1, false), el(1, false), gp(4)), el(2, false));
        assert_eq!(multiply(el(0, true), el(1, false), gp(4)), el(3, true));
    }

    #[test]
    fn group_axioms_hold() {
        for n in 2..=9 {
            let n = gp(n);
            let g = whole_group(n);
            for &x in g.elements() {
                assert_eq!(multiply(x, Element::IDENTITY, n), x);
                assert_eq!(multiply(Element::IDENTITY, x, n), x);
                for &y in g.elements() {
                    for &z in g.elements() {
                        assert_eq!(multiply(multiply(x, y, n), z, n), multiply(x, multiply(y, z, n), n));
                    }
                }
            }
        }
    }

    #[test]
    fn closures() {
        let n = gp(4);
        assert_eq!(
            closure(&ElementSet::new([el(2, false), el(0, true)]), n),
            ElementSet::new([el(0, false), el(2, false), el(0, true), el(2, true)])
        );
        assert_eq!(closure(&ElementSet::new([el(1, false)]), n), ElementSet::new((0..4).map(|r| el(r, false))));
        assert_eq!(closure(&ElementSet::new([el(0, true)]), n), ElementSet::new([el(0, false), el(0, true)]));
    }

    #[test]
    fn element_sets_of_subgroups() {
        let n = gp(4);
        assert_eq!(
            elements_of(Subgroup::dihedral(2, 1), n).unwrap(),
            closure(&ElementSet::new([el(2, false), el(1, true)]), n)
        );
        assert_eq!(
            elements_of(Subgroup::dihedral(2, 1), n).unwrap(),
            ElementSet::new([el(0, false), el(2, false), el(1, true), el(3, true)])
        );
        assert_eq!(elements_of(Subgroup::rotation(2), n).unwrap(), ElementSet::new([el(0, false), el(2, false)]));
        assert_eq!(elements_of(Subgroup::dihedral(4, 2), n).unwrap(), ElementSet::new([el(0, false), el(2, true)]));
    }

    #[test]
    fn products() {
        let n = gp(4);
        let a = elements_of(Subgroup::rotation(1), n).unwrap();
        let b = elements_of(Subgroup::dihedral(4, 0), n).unwrap();
        assert_eq!(set_product(&a, &b, n), whole_group(n));
        let ident = ElementSet::new([Element::IDENTITY]);
        assert_eq!(set_product(&b, &ident, n), b);
        let n6 = gp(6);
        let p = set_product(
            &elements_of(Subgroup::rotation(2), n6).unwrap(),
            &elements_of(Subgroup::rotation(3), n6).unwrap(),
            n6,
        );
        assert_eq!(p, ElementSet::new((0..6).map(|r| el(r, false))));
    }

    #[test]
    fn oracle_subgroup_counts() {
        assert_eq!(oracle_enumerate_subgroups(gp(4)).len(), 10);
        assert_eq!(oracle_enumerate_subgroups(gp(2)).len(), 5);
        assert_eq!(oracle_enumerate_subgroups(gp(3)).len(), 6);
        // Proper nontrivial subgroups of D_6.
        let n = gp(6);
        let proper = oracle_enumerate_subgroups(n).into_iter().filter(|s| s.len() > 1 && s.len() < 12).count();
        assert_eq!(proper, 14);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(check_cap(64, DEFAULT_ORACLE_CAP).is_ok());
        assert_eq!(check_cap(65, 64), Err(Error::OracleCap { n: 65, cap: 64 }));
        assert!(compare_with_oracle(gp(10), 8).is_err());
    }

    #[test]
    fn naive_cliques_on_small_graphs() {
        // Path 0-1-2 has two maximal cliques; the triangle has one.
        let path = vec![vec![false, true, false], vec![true, false, true], vec![false, true, false]];
        let mut c = naive_maximal_cliques(&[0, 1, 2], &path);
        c.sort();
        assert_eq!(c, vec![vec![0, 1], vec![1, 2]]);
        let tri = vec![vec![false, true, true], vec![true, false, true], vec![true, true, false]];
        assert_eq!(naive_maximal_cliques(&[0, 1, 2], &tri), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn agrees_for_small_n() {
        for n in 2..=12 {
            let r = compare_with_oracle(gp(n), DEFAULT_ORACLE_CAP).unwrap();
            assert!(r.is_consistent(), "n = {n}: {:?}", r.mismatches);
        }
        assert_eq!(compare_with_oracle(gp(4), 64).unwrap().comaximal_pairs, 11);
    }
}
