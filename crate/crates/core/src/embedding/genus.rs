//! Genus formulas and Euler-characteristic lower bounds.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Orientable and non-orientable genus values or bounds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusPair {
    pub orientable: u64,
    pub nonorientable: u64,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// Genus of `K_{m,n}`: `⌈(m−2)(n−2)/4⌉` orientable, `⌈(m−2)(n−2)/2⌉`
/// non-orientable.
pub fn kmn_genus(m: u64, n: u64) -> Result<GenusPair> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidArgument(format!("K_{{{m},{n}}} genus needs both sides at least 2")));
    }
    let p = ((m - 2) * (n - 2)) as i64;
    Ok(GenusPair { orientable: ceil_div(p, 4) as u64, nonorientable: ceil_div(p, 2) as u64 })
}

/// Lower bounds from Euler's formula, summed over components. In a
/// triangle-free graph every face has length at least 4, giving
/// `⌈(E − 2V + 4)/4⌉` and `⌈(E − 2V + 4)/2⌉`; graphs with triangles fall
/// back to face length 3.
pub fn euler_genus_lower_bounds(g: &SimpleGraph) -> GenusPair {
    let face = if g.girth_with_floor(3) == Some(3) { 3 } else { 4 };
    let (count, label) = g.components();
    let mut vertices = vec![0i64; count];
    let mut edges = vec![0i64; count];
    for v in 0..g.node_count() {
        vertices[label[v]] += 1;
    }
    for (u, _) in g.edges() {
        edges[label[u]] += 1;
    }
    let mut total = GenusPair::default();
    for c in 0..count {
        let (v, e) = (vertices[c], edges[c]);
        // Euler characteristic 2 − 2g (or 2 − g̃) with F ≤ 2E/face.
        let excess = (face - 2) * e - face * v + 2 * face;
        if excess <= 0 {
            continue;
        }
        total.orientable += ceil_div(excess, 2 * face) as u64;
        total.nonorientable += ceil_div(excess, face) as u64;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_formulas() {
        assert_eq!(kmn_genus(3, 3), Ok(GenusPair { orientable: 1, nonorientable: 1 }));
        assert_eq!(kmn_genus(3, 7), Ok(GenusPair { orientable: 2, nonorientable: 3 }));
        assert_eq!(kmn_genus(3, 5), Ok(GenusPair { orientable: 1, nonorientable: 2 }));
        assert_eq!(kmn_genus(2, 9), Ok(GenusPair::default()));
        assert!(kmn_genus(1, 4).is_err());
        assert!(kmn_genus(4, 0).is_err());
    }

    #[test]
    fn euler_bounds() {
        let k37 = SimpleGraph::complete_bipartite(3, 7);
        assert_eq!(euler_genus_lower_bounds(&k37), GenusPair { orientable: 2, nonorientable: 3 });
        let k33 = SimpleGraph::complete_bipartite(3, 3);
        assert_eq!(euler_genus_lower_bounds(&k33), GenusPair { orientable: 1, nonorientable: 1 });
        let path = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(euler_genus_lower_bounds(&path), GenusPair::default());
        // K7 needs a handle; triangles use face length 3.
        assert_eq!(euler_genus_lower_bounds(&SimpleGraph::complete(7)).orientable, 1);
        assert_eq!(euler_genus_lower_bounds(&SimpleGraph::complete(5)).orientable, 1);
    }

    #[test]
    fn euler_bound_never_exceeds_formula() {
        for m in 3..=8 {
            for n in 3..=8 {
                let b = euler_genus_lower_bounds(&SimpleGraph::complete_bipartite(m, n));
                let g = kmn_genus(m as u64, n as u64).unwrap();
                assert!(b.orientable <= g.orientable && b.nonorientable <= g.nonorientable, "K_{m},{n}");
            }
        }
    }

    #[test]
    fn components_add() {
        let mut edges: Vec<(usize, usize)> = SimpleGraph::complete_bipartite(3, 7).edges().collect();
        edges.extend(SimpleGraph::complete_bipartite(3, 7).edges().map(|(u, v)| (u + 10, v + 10)));
        let g = SimpleGraph::from_edges(20, edges);
        assert_eq!(euler_genus_lower_bounds(&g), GenusPair { orientable: 4, nonorientable: 6 });
    }
}
