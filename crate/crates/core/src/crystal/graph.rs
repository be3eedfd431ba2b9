//! Crystal graphs as DOT, JSON or plain text.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use super::{components, Crystal};
use crate::base::Interval;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub id: String,
    pub weight: String,
}

/// An `i`-colored edge `b -> f_i(b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub source: String,
    pub target: String,
    pub color: usize,
}

/// The crystal graph of a set restricted to an interval, with vertices sorted
/// by canonical label and grouped into connected components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalGraph {
    pub rank: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    /// Vertex ids per component, each sorted, components ordered by their
    /// smallest id.
    pub components: Vec<Vec<String>>,
}

/// Builds the graph of `set` (closed under the operators of `j`; the full
/// diagram when `j` is `None`).
pub fn export_graph<C: Crystal>(c: &C, set: &[C::Elem], j: Option<Interval>) -> Result<CrystalGraph> {
    let mut labelled: BTreeMap<String, &C::Elem> = BTreeMap::new();
    for b in set {
        labelled.insert(c.label(b), b);
    }
    let vertices = labelled
        .iter()
        .map(|(id, b)| Vertex { id: id.clone(), weight: c.weight(b).to_string() })
        .collect();
    let nodes: Vec<usize> = match j {
        Some(j) => j.nodes().collect(),
        None => (1..c.rank()).collect(),
    };
    let mut edges = Vec::new();
    for (id, b) in &labelled {
        for &i in &nodes {
            if let Some(t) = c.lower(i, b) {
                edges.push(Edge { source: id.clone(), target: c.label(&t), color: i });
            }
        }
    }
    let mut comps: Vec<Vec<String>> = match j.or_else(|| Interval::full(c.rank())) {
        Some(j) => components(c, set, j)?
            .into_iter()
            .map(|comp| {
                let mut ids: Vec<String> = comp.elements.iter().map(|b| c.label(b)).collect();
                ids.sort();
                ids
            })
            .collect(),
        None => labelled.keys().map(|id| vec![id.clone()]).collect(),
    };
    comps.sort();
    Ok(CrystalGraph { rank: c.rank(), vertices, edges, components: comps })
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let weight: BTreeMap<&str, &str> =
            self.vertices.iter().map(|v| (v.id.as_str(), v.weight.as_str())).collect();
        let mut out = String::from("digraph crystal {\n  edge [colorscheme=set19];\n");
        for (k, comp) in self.components.iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_{k} {{");
            for id in comp {
                let _ = writeln!(out, "    {} [wt={}];", quote(id), quote(weight[id.as_str()]));
            }
            out.push_str("  }\n");
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  {} -> {} [color={}, label={}];",
                quote(&e.source),
                quote(&e.target),
                e.color,
                e.color
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("graph serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} vertices, {} edges, {} components",
            self.vertices.len(),
            self.edges.len(),
            self.components.len()
        );
        for v in &self.vertices {
            let _ = writeln!(out, "{}  wt={}", v.id, v.weight);
        }
        for e in &self.edges {
            let _ = writeln!(out, "{} -{}-> {}", e.source, e.color, e.target);
        }
        out
    }
}
