use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Adjacency, SimpleGraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonVertex {
    pub id: usize,
    pub label: String,
    pub order: usize,
    pub generators: Vec<String>,
}

/// The JSON export document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub kind: String,
    pub ring: String,
    pub module: String,
    pub vertices: Vec<JsonVertex>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        GraphDocument {
            kind: g.kind.name().to_string(),
            ring: g.ring.to_string(),
            module: g.module.clone(),
            vertices: g
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| JsonVertex {
                    id,
                    label: v.label.clone(),
                    order: v.order,
                    generators: v.generators.clone(),
                })
                .collect(),
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn adjacency(&self) -> Adjacency {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Adjacency::from_edges(self.vertices.len(), &edges)
    }
}

pub fn export_graph(g: &SimpleGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(g),
        ExportFormat::Json => {
            let mut text = serde_json::to_string_pretty(&GraphDocument::from_graph(g))
                .expect("graph documents always serialize");
            text.push('\n');
            text
        }
    }
}

/// Reads the adjacency matrix back out of JSON export text.
pub fn parse_json_adjacency(text: &str) -> std::result::Result<Adjacency, serde_json::Error> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    Ok(doc.adjacency())
}

fn to_dot(g: &SimpleGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", g.kind.name());
    let _ = writeln!(
        out,
        "  label=\"{} of {} over {}\";",
        g.kind.name(),
        escape(&g.module),
        g.ring
    );
    for (id, v) in g.vertices.iter().enumerate() {
        let _ = writeln!(out, "  {id} [label=\"{}\"];", escape(&v.long_label()));
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}
