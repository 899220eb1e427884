//! JSON, DOT and GraphML renderings of the hypergraph, the co-maximal graph
//! and the incidence graph.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{build_comaximal_graph, build_hypergraph, incidence_graph, CoMaximalGraph, Hypergraph};
use crate::lattice::{GroupParam, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExportTarget {
    Hypergraph,
    ComaxGraph,
    Incidence,
}

impl FromStr for ExportTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hypergraph" => Ok(ExportTarget::Hypergraph),
            "comax-graph" => Ok(ExportTarget::ComaxGraph),
            "incidence" => Ok(ExportTarget::Incidence),
            _ => Err(Error::InvalidArgument(format!(
                "unknown export target {s:?} (expected hypergraph, comax-graph or incidence)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExportFormat {
    Json,
    Dot,
    Graphml,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            "graphml" => Ok(ExportFormat::Graphml),
            _ => Err(Error::InvalidArgument(format!("unknown export format {s:?} (expected json, dot or graphml)"))),
        }
    }
}

/// `{"n":…,"vertices":[…],"hyperedges":[[…],…]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphDocument {
    pub n: GroupParam,
    pub vertices: Vec<Subgroup>,
    pub hyperedges: Vec<Vec<usize>>,
}

impl HypergraphDocument {
    pub fn new(n: GroupParam, h: &Hypergraph) -> Self {
        HypergraphDocument { n, vertices: h.vertices().to_vec(), hyperedges: h.hyperedges().to_vec() }
    }

    /// Validates the document back into a hypergraph.
    pub fn into_hypergraph(self) -> Result<Hypergraph> {
        for s in &self.vertices {
            s.validate(self.n)?;
        }
        Hypergraph::new(self.vertices, self.hyperedges)
    }
}

/// `{"n":…,"vertices":[…],"edges":[[u,v],…]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: GroupParam,
    pub vertices: Vec<Subgroup>,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDocument {
    pub fn new(g: &CoMaximalGraph) -> Self {
        GraphDocument { n: g.n(), vertices: g.vertices().to_vec(), edges: g.edges().collect() }
    }
}

/// `{"n":…,"vertices":[…],"hyperedge_count":…,"edges":[[vertex,hyperedge],…]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceDocument {
    pub n: GroupParam,
    pub vertices: Vec<Subgroup>,
    pub hyperedge_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl IncidenceDocument {
    pub fn new(n: GroupParam, h: &Hypergraph) -> Self {
        let inc = incidence_graph(h);
        IncidenceDocument { n, vertices: h.vertices().to_vec(), hyperedge_count: inc.edge_count, edges: inc.edges }
    }
}

/// Renders one view of the structures for `n`. Output is deterministic.
pub fn export(n: GroupParam, target: ExportTarget, format: ExportFormat) -> String {
    match target {
        ExportTarget::ComaxGraph => {
            let g = build_comaximal_graph(n);
            match format {
                ExportFormat::Json => to_json(&GraphDocument::new(&g)),
                ExportFormat::Dot => comax_dot(&g),
                ExportFormat::Graphml => comax_graphml(&g),
            }
        }
        ExportTarget::Hypergraph | ExportTarget::Incidence => {
            let h = build_hypergraph(n);
            match (target, format) {
                (ExportTarget::Hypergraph, ExportFormat::Json) => to_json(&HypergraphDocument::new(n, &h)),
                (_, ExportFormat::Json) => to_json(&IncidenceDocument::new(n, &h)),
                (_, ExportFormat::Dot) => incidence_dot(n, &h),
                (_, ExportFormat::Graphml) => incidence_graphml(n, &h),
            }
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialise");
    s.push('\n');
    s
}

pub fn comax_dot(g: &CoMaximalGraph) -> String {
    let mut out = format!("graph comaximal_D{} {{\n  node [shape=circle];\n", g.n());
    for (i, s) in g.vertices().iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{s}\"];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  v{u} -- v{v};");
    }
    out.push_str("}\n");
    out
}

/// Incidence graph in DOT: subgroup nodes are circles, hyperedge nodes boxes.
pub fn incidence_dot(n: GroupParam, h: &Hypergraph) -> String {
    let mut out = format!("graph incidence_D{n} {{\n");
    for (i, s) in h.vertices().iter().enumerate() {
        let _ = writeln!(out, "  v{i} [shape=circle, label=\"{s}\"];");
    }
    for e in 0..h.edge_count() {
        let _ = writeln!(out, "  e{e} [shape=box, label=\"e{}\"];", e + 1);
    }
    for (e, members) in h.hyperedges().iter().enumerate() {
        for v in members {
            let _ = writeln!(out, "  v{v} -- e{e};");
        }
    }
    out.push_str("}\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

const GRAPHML_HEAD: &str = concat!(
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
    "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n",
    "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n",
    "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n",
);

fn graphml_node(out: &mut String, id: &str, label: &str, kind: &str) {
    let _ = writeln!(
        out,
        "    <node id=\"{id}\"><data key=\"label\">{}</data><data key=\"kind\">{kind}</data></node>",
        xml_escape(label)
    );
}

pub fn comax_graphml(g: &CoMaximalGraph) -> String {
    let mut out = String::from(GRAPHML_HEAD);
    let _ = writeln!(out, "  <graph id=\"comaximal_D{}\" edgedefault=\"undirected\">", g.n());
    for (i, s) in g.vertices().iter().enumerate() {
        graphml_node(&mut out, &format!("v{i}"), &s.to_string(), "subgroup");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "    <edge source=\"v{u}\" target=\"v{v}\"/>");
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

pub fn incidence_graphml(n: GroupParam, h: &Hypergraph) -> String {
    let mut out = String::from(GRAPHML_HEAD);
    let _ = writeln!(out, "  <graph id=\"incidence_D{n}\" edgedefault=\"undirected\">");
    for (i, s) in h.vertices().iter().enumerate() {
        graphml_node(&mut out, &format!("v{i}"), &s.to_string(), "subgroup");
    }
    for e in 0..h.edge_count() {
        graphml_node(&mut out, &format!("e{e}"), &format!("e{}", e + 1), "hyperedge");
    }
    for (e, members) in h.hyperedges().iter().enumerate() {
        for v in members {
            let _ = writeln!(out, "    <edge source=\"v{v}\" target=\"e{e}\"/>");
        }
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(n: u64) -> GroupParam {
        GroupParam::new(n).unwrap()
    }

    #[test]
    fn hypergraph_json_round_trip() {
        for n in [2, 4, 6, 12] {
            let s = export(gp(n), ExportTarget::Hypergraph, ExportFormat::Json);
            let doc: HypergraphDocument = serde_json::from_str(&s).unwrap();
            assert_eq!(doc.into_hypergraph().unwrap(), build_hypergraph(gp(n)));
        }
        let doc: HypergraphDocument =
            serde_json::from_str(&export(gp(2), ExportTarget::Hypergraph, ExportFormat::Json)).unwrap();
        assert_eq!((doc.vertices.len(), doc.hyperedges.len()), (3, 1));
    }

    #[test]
    fn invalid_documents_are_rejected() {
        let bad = r#"{"n":4,"vertices":[{"type":"rotation","r":3}],"hyperedges":[]}"#;
        let doc: HypergraphDocument = serde_json::from_str(bad).unwrap();
        assert!(doc.into_hypergraph().is_err());
        assert!(serde_json::from_str::<HypergraphDocument>(r#"{"n":1,"vertices":[],"hyperedges":[]}"#).is_err());
    }

    #[test]
    fn graph_and_incidence_json() {
        let doc: GraphDocument =
            serde_json::from_str(&export(gp(4), ExportTarget::ComaxGraph, ExportFormat::Json)).unwrap();
        assert_eq!((doc.vertices.len(), doc.edges.len()), (7, 11));
        let inc: IncidenceDocument =
            serde_json::from_str(&export(gp(4), ExportTarget::Incidence, ExportFormat::Json)).unwrap();
        assert_eq!((inc.vertices.len() + inc.hyperedge_count, inc.edges.len()), (12, 15));
    }

    #[test]
    fn dot_shapes_and_counts() {
        let dot = export(gp(6), ExportTarget::Incidence, ExportFormat::Dot);
        assert_eq!(dot.matches("shape=circle").count(), 14);
        assert_eq!(dot.matches("shape=box").count(), 13);
        assert_eq!(dot.matches(" -- ").count(), 39);
        let comax = export(gp(4), ExportTarget::ComaxGraph, ExportFormat::Dot);
        assert_eq!(comax.matches("[label=").count(), 7);
        assert_eq!(comax.matches(" -- ").count(), 11);
        assert_eq!(export(gp(6), ExportTarget::Hypergraph, ExportFormat::Dot), dot);
    }

    #[test]
    fn graphml_counts() {
        let xml = export(gp(4), ExportTarget::Incidence, ExportFormat::Graphml);
        assert_eq!(xml.matches("<node ").count(), 12);
        assert_eq!(xml.matches("<edge ").count(), 15);
        let xml = export(gp(4), ExportTarget::ComaxGraph, ExportFormat::Graphml);
        assert_eq!(xml.matches("<node ").count(), 7);
        assert_eq!(xml.matches("<edge ").count(), 11);
        assert_eq!(xml_escape("a<b&\"c\""), "a&lt;b&amp;&quot;c&quot;");
    }

    #[test]
    fn parse_names() {
        assert_eq!("comax-graph".parse::<ExportTarget>(), Ok(ExportTarget::ComaxGraph));
        assert!("graph".parse::<ExportTarget>().is_err());
        assert_eq!("graphml".parse::<ExportFormat>(), Ok(ExportFormat::Graphml));
        assert!("svg".parse::<ExportFormat>().is_err());
    }
}
