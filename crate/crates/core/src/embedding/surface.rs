//! Surface classification of the co-maximal hypergraph of `D_n`: planar,
//! toroidal and projective-planar, or neither.

use serde::{Deserialize, Serialize};

use super::certificate::{find_triple_certificate, TripleCertificate};
use super::genus::{euler_genus_lower_bounds, kmn_genus, GenusPair};
use super::planarity::{planarity, PlanarityVerdict};
use crate::arith;
use crate::hypergraph::{build_hypergraph, incidence_graph};
use crate::lattice::GroupParam;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceClass {
    Planar,
    ToroidalAndProjective,
    HigherGenus,
}

impl SurfaceClass {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceClass::Planar => "planar",
            SurfaceClass::ToroidalAndProjective => "toroidal and projective",
            SurfaceClass::HigherGenus => "higher genus",
        }
    }
}

/// What supports a classification: the closed-form characterisation, an
/// independently verified certificate, or both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Theorem,
    Certificate,
    Both,
}

/// Class expected from `n` alone.
pub fn predicted_surface(n: GroupParam) -> SurfaceClass {
    match n.get() {
        n if arith::is_prime_power(n) => SurfaceClass::Planar,
        6 => SurfaceClass::ToroidalAndProjective,
        _ => SurfaceClass::HigherGenus,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub n: u64,
    pub class: SurfaceClass,
    pub basis: Basis,
    pub planarity: PlanarityVerdict,
    /// A triple in seven hyperedges: `K_{3,7}` has genus 2 and crosscap number 3.
    pub k37: Option<TripleCertificate>,
    /// A triple in five hyperedges: `K_{3,5}` has crosscap number 2.
    pub k35: Option<TripleCertificate>,
    pub euler_bounds: GenusPair,
    /// Lower bounds implied by the attached certificates.
    pub certified_lower_bounds: GenusPair,
    /// The certificates do not contradict the class.
    pub consistent: bool,
}

pub fn classify_surface(n: GroupParam) -> SurfaceReport {
    let h = build_hypergraph(n);
    let inc = incidence_graph(&h);
    let verdict = planarity(&inc);
    let euler = euler_genus_lower_bounds(&inc.to_graph());
    let k37 = find_triple_certificate(&h, 7).expect("k >= 3");
    let k35 = if k37.is_some() { None } else { find_triple_certificate(&h, 5).expect("k >= 3") };

    let mut bounds = euler;
    if !verdict.is_planar() {
        bounds.orientable = bounds.orientable.max(1);
        bounds.nonorientable = bounds.nonorientable.max(1);
    }
    for cert in k37.iter().chain(&k35) {
        let g = kmn_genus(3, cert.k() as u64).expect("k >= 3");
        bounds.orientable = bounds.orientable.max(g.orientable);
        bounds.nonorientable = bounds.nonorientable.max(g.nonorientable);
    }

    let class = predicted_surface(n);
    let consistent = match class {
        SurfaceClass::Planar => verdict.is_planar(),
        SurfaceClass::ToroidalAndProjective => {
            !verdict.is_planar() && bounds.orientable <= 1 && bounds.nonorientable <= 1
        }
        SurfaceClass::HigherGenus => !verdict.is_planar(),
    };
    let certified = match class {
        SurfaceClass::Planar => verdict.is_planar(),
        SurfaceClass::ToroidalAndProjective => false,
        SurfaceClass::HigherGenus => bounds.orientable >= 2 && bounds.nonorientable >= 2,
    };
    SurfaceReport {
        n: n.get(),
        class,
        basis: if certified { Basis::Both } else { Basis::Theorem },
        planarity: verdict,
        k37,
        k35,
        euler_bounds: euler,
        certified_lower_bounds: bounds,
        consistent,
    }
}
