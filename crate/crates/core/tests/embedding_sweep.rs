use comax_core::arith::is_prime_power;
use comax_core::embedding::{
    classify_surface, euler_genus_lower_bounds, find_triple_certificate, planarity, rotation_genus, Basis,
    KuratowskiKind, PlanarityVerdict, SurfaceClass,
};
use comax_core::hypergraph::{build_hypergraph, incidence_graph};
use comax_core::lattice::GroupParam;

fn gp(n: u64) -> GroupParam {
    GroupParam::new(n).unwrap()
}

#[test]
fn planar_exactly_for_prime_powers() {
    for n in 2..=40 {
        let h = build_hypergraph(gp(n));
        let inc = incidence_graph(&h);
        let g = inc.to_graph();
        let verdict = planarity(&inc);
        assert_eq!(verdict.is_planar(), is_prime_power(n), "n = {n}");
        assert!(verdict.verify(&g), "n = {n}");
        if let PlanarityVerdict::Embedding { rotation } = &verdict {
            assert_eq!(rotation_genus(&g, rotation), Ok(0), "n = {n}");
        }
        if find_triple_certificate(&h, 3).unwrap().is_some() {
            assert!(!verdict.is_planar(), "n = {n}");
        }
    }
}

#[test]
fn k33_obstructions() {
    for n in [12, 15] {
        let inc = incidence_graph(&build_hypergraph(gp(n)));
        let verdict = planarity(&inc);
        assert_eq!(verdict.obstruction().map(|k| k.kind), Some(KuratowskiKind::K33), "n = {n}");
    }
}

#[test]
fn surface_classes_up_to_40() {
    for n in 2..=40 {
        let r = classify_surface(gp(n));
        assert!(r.consistent, "n = {n}");
        let expected = if is_prime_power(n) {
            SurfaceClass::Planar
        } else if n == 6 {
            SurfaceClass::ToroidalAndProjective
        } else {
            SurfaceClass::HigherGenus
        };
        assert_eq!(r.class, expected, "n = {n}");
        let has_evidence = r.k37.is_some() || r.euler_bounds.orientable >= 2;
        if r.class == SurfaceClass::HigherGenus {
            assert_eq!(r.basis == Basis::Both, has_evidence, "n = {n}");
        }
        if let Some(c) = &r.k37 {
            assert!(c.verify(&build_hypergraph(gp(n))) && c.k() >= 7, "n = {n}");
        }
    }
}

#[test]
fn certificate_examples() {
    let h12 = build_hypergraph(gp(12));
    let c = find_triple_certificate(&h12, 3).unwrap().unwrap();
    assert!(c.verify(&h12));
    let h14 = build_hypergraph(gp(14));
    assert!(find_triple_certificate(&h14, 7).unwrap().unwrap().verify(&h14));
    assert_eq!(find_triple_certificate(&build_hypergraph(gp(8)), 3).unwrap(), None);
}

#[test]
fn euler_bounds_of_incidence_graphs() {
    let expected = [(12, 2), (20, 5), (24, 12), (28, 8), (30, 38), (36, 16), (40, 23), (6, 0), (15, 0)];
    for (n, bound) in expected {
        let g = incidence_graph(&build_hypergraph(gp(n))).to_graph();
        assert_eq!(euler_genus_lower_bounds(&g).orientable, bound, "n = {n}");
    }
}
