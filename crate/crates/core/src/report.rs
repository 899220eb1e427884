//! Full per-`n` analysis: hypergraph, invariants, predictions and surface.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::embedding::{classify_surface, SurfaceReport};
use crate::hypergraph::{build_hypergraph, Hypergraph};
use crate::lattice::{GroupParam, Subgroup};
use crate::structure::{analyze_structure, StructureReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: u64,
    pub vertices: Vec<Subgroup>,
    pub hyperedges: Vec<Vec<usize>>,
    pub structure: StructureReport,
    pub surface: SurfaceReport,
}

impl AnalysisReport {
    /// All invariants agree with their predictions and the surface
    /// certificates agree with the class.
    pub fn agreement(&self) -> bool {
        self.structure.agreement && self.surface.consistent
    }
}

pub fn analyze(n: GroupParam) -> AnalysisReport {
    let h = build_hypergraph(n);
    analyze_hypergraph(n, &h)
}

pub fn analyze_hypergraph(n: GroupParam, h: &Hypergraph) -> AnalysisReport {
    AnalysisReport {
        n: n.get(),
        vertices: h.vertices().to_vec(),
        hyperedges: h.hyperedges().to_vec(),
        structure: analyze_structure(n, h),
        surface: classify_surface(n),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn optional<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

/// Human-readable rendering of the invariants with their predictions.
pub fn render_structure(s: &StructureReport) -> String {
    let p = &s.predictions;
    let mut out = String::new();
    let mut row = |name: &str, got: String, want: String| {
        let mark = if got == want { "ok" } else { "MISMATCH" };
        let _ = writeln!(out, "  {name:<10} {got:<8} predicted {want:<8} {mark}");
    };
    row("diameter", s.diameter.to_string(), p.diameter.to_string());
    row("girth", s.girth.to_string(), p.girth.to_string());
    row("chromatic", s.chromatic.to_string(), p.chromatic.to_string());
    row("star", yes_no(s.star).into(), yes_no(p.star).into());
    row("hypertree", yes_no(s.hypertree).into(), yes_no(p.hypertree).into());
    row("uniform", optional(s.uniform), optional(p.uniform));
    let _ = writeln!(out, "  helly      {}", yes_no(s.helly));
    out
}

pub fn render_surface(r: &SurfaceReport) -> String {
    let mut out = String::new();
    let basis = match r.basis {
        crate::embedding::Basis::Theorem => "theorem only (no independent certificate found)",
        crate::embedding::Basis::Certificate => "certificate",
        crate::embedding::Basis::Both => "theorem and certificate",
    };
    let _ = writeln!(out, "  class      {}", r.class.name());
    let _ = writeln!(out, "  basis      {basis}");
    let _ = writeln!(out, "  planarity  {}", r.planarity.summary());
    if let Some(c) = &r.k37 {
        let _ = writeln!(out, "  K3,{}     vertices {:?}", c.k(), c.vertices);
    }
    if let Some(c) = &r.k35 {
        let _ = writeln!(out, "  K3,{}     vertices {:?}", c.k(), c.vertices);
    }
    let _ = writeln!(
        out,
        "  euler      genus >= {}, crosscaps >= {}",
        r.euler_bounds.orientable, r.euler_bounds.nonorientable
    );
    let _ = writeln!(
        out,
        "  certified  genus >= {}, crosscaps >= {}",
        r.certified_lower_bounds.orientable, r.certified_lower_bounds.nonorientable
    );
    let _ = writeln!(out, "  consistent {}", yes_no(r.consistent));
    out
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut out = format!("D_{} co-maximal hypergraph\n", r.n);
    let _ = writeln!(out, "vertices ({}):", r.vertices.len());
    for (i, v) in r.vertices.iter().enumerate() {
        let _ = writeln!(out, "  {i:>4}  {v}  {}", v.notation());
    }
    let _ = writeln!(out, "hyperedges ({}):", r.hyperedges.len());
    for (i, e) in r.hyperedges.iter().enumerate() {
        let names: Vec<String> = e.iter().map(|&v| r.vertices[v].to_string()).collect();
        let _ = writeln!(out, "  e{:<4} {{{}}}", i + 1, names.join(", "));
    }
    out.push_str("invariants:\n");
    out.push_str(&render_structure(&r.structure));
    out.push_str("surface:\n");
    out.push_str(&render_surface(&r.surface));
    let _ = writeln!(out, "agreement: {}", yes_no(r.agreement()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_report() {
        let r = analyze(GroupParam::new(4).unwrap());
        assert_eq!((r.vertices.len(), r.hyperedges.len()), (7, 5));
        assert!(r.agreement());
        let text = render_text(&r);
        assert!(text.contains("hyperedges (5):"));
        assert!(text.contains("diameter   2"));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<AnalysisReport>(&json).unwrap(), r);
    }

    #[test]
    fn d2_text_uses_infinity_symbol() {
        let r = analyze(GroupParam::new(2).unwrap());
        let text = render_text(&r);
        assert!(text.contains("girth      ∞"));
        assert!(serde_json::to_string(&r.structure).unwrap().contains("\"girth\":\"inf\""));
    }
}
