//! The six graphs on submodules and ideals, their invariants, and export.

mod export;
mod metrics;

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::algebra::{Ideal, Ring, SubmoduleLattice};
use crate::error::{Error, Result};

pub use export::{export_graph, parse_json_adjacency, ExportFormat, GraphDocument, JsonVertex};
pub use metrics::{graph_metrics, metrics_of, Extended, GraphMetrics};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GraphKind {
    /// Second submodule intersection graph.
    #[serde(rename = "SSI")]
    Ssi,
    /// Prime submodule sum graph.
    #[serde(rename = "PSS")]
    Pss,
    /// Prime ideal sum graph of the ring.
    #[serde(rename = "PIS")]
    Pis,
    /// Second ideal intersection graph of the ring.
    #[serde(rename = "SII")]
    Sii,
    /// Colon ideals `(N :_R M)` joined when their sum is prime.
    #[serde(rename = "PSS_TILDE")]
    PssTilde,
    /// Annihilators `Ann_R(N)` joined when their sum is prime.
    #[serde(rename = "SSI_TILDE")]
    SsiTilde,
}

impl GraphKind {
    pub const ALL: [GraphKind; 6] = [
        GraphKind::Ssi,
        GraphKind::Pss,
        GraphKind::Pis,
        GraphKind::Sii,
        GraphKind::PssTilde,
        GraphKind::SsiTilde,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Ssi => "SSI",
            GraphKind::Pss => "PSS",
            GraphKind::Pis => "PIS",
            GraphKind::Sii => "SII",
            GraphKind::PssTilde => "PSS_TILDE",
            GraphKind::SsiTilde => "SSI_TILDE",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().to_ascii_uppercase().replace('-', "_");
        GraphKind::ALL
            .into_iter()
            .find(|k| k.name() == normalized)
            .ok_or_else(|| Error::UnknownGraphKind(s.to_string()))
    }
}

/// What a vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexRef {
    /// Index into the submodule lattice.
    Submodule(usize),
    Ideal(Ideal),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub reference: VertexRef,
    pub label: String,
    pub order: usize,
    pub generators: Vec<String>,
    pub elements: Vec<String>,
}

impl Vertex {
    /// `label={e1,e2,...}`, as used in DOT output.
    pub fn long_label(&self) -> String {
        format!("{}={{{}}}", self.label, self.elements.join(","))
    }

    pub fn submodule(&self) -> Option<usize> {
        match self.reference {
            VertexRef::Submodule(i) => Some(i),
            VertexRef::Ideal(_) => None,
        }
    }
}

/// Symmetric, irreflexive adjacency stored as one bitset row per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjacency {
    rows: Vec<FixedBitSet>,
}

impl Adjacency {
    pub fn empty(n: usize) -> Self {
        Adjacency {
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds from an edge list; self-loops are dropped and duplicates merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = Adjacency::empty(n);
        for &(a, b) in edges {
            adj.add_edge(a, b);
        }
        adj
    }

    pub fn from_matrix(matrix: &[Vec<bool>]) -> Self {
        let n = matrix.len();
        let mut adj = Adjacency::empty(n);
        for (i, row) in matrix.iter().enumerate() {
            for (j, &on) in row.iter().enumerate() {
                if on {
                    adj.add_edge(i, j);
                }
            }
        }
        adj
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.rows[a].insert(b);
            self.rows[b].insert(a);
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    /// Edges `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            out.extend(row.ones().filter(|&j| j > i).map(|j| (i, j)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        (0..n)
            .map(|i| (0..n).map(|j| self.has_edge(i, j)).collect())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    pub kind: GraphKind,
    pub ring: Ring,
    pub module: String,
    pub vertices: Vec<Vertex>,
    pub adjacency: Adjacency,
}

impl SimpleGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency.edges()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency.has_edge(a, b)
    }

    pub fn position_of_label(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    /// Vertex position of a lattice member, for submodule-based graphs.
    pub fn position_of_submodule(&self, index: usize) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| v.reference == VertexRef::Submodule(index))
    }

    pub fn position_of_ideal(&self, ideal: &Ideal) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| v.reference == VertexRef::Ideal(*ideal))
    }

    /// Edges as label pairs, e.g. `("2M", "3M")`.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(a, b)| {
                (
                    self.vertices[a].label.clone(),
                    self.vertices[b].label.clone(),
                )
            })
            .collect()
    }
}

fn submodule_vertex(lattice: &SubmoduleLattice, i: usize) -> Vertex {
    let s = lattice.get(i);
    Vertex {
        reference: VertexRef::Submodule(i),
        label: lattice.label(i),
        order: s.order(),
        generators: s.format_generators(),
        elements: s.format_elements(),
    }
}

fn ideal_vertex(ideal: Ideal) -> Vertex {
    Vertex {
        reference: VertexRef::Ideal(ideal),
        label: ideal.label(),
        order: ideal.order() as usize,
        generators: vec![ideal.divisor().to_string()],
        elements: ideal.elements().iter().map(u32::to_string).collect(),
    }
}

/// Builds one of the six graphs from an enumerated lattice.
///
/// SSI and PSS use the nonzero proper submodules, joined when the
/// intersection is second (SSI) or the sum is prime (PSS). PIS and SII are the
/// same constructions on the ring over itself. The tilde graphs take the
/// distinct nonzero proper colon ideals (PSS_TILDE) or annihilators
/// (SSI_TILDE) over all submodules and join two ideals when their sum is prime.
pub fn build_graph(kind: GraphKind, lattice: &SubmoduleLattice) -> Result<SimpleGraph> {
    let module = lattice.module();
    if matches!(kind, GraphKind::Pis | GraphKind::Sii) && !module.is_regular() {
        return Err(Error::NotRegular {
            kind: kind.name().to_string(),
            module: module.descriptor(),
            ring: module.ring().to_string(),
        });
    }

    let (vertices, adjacency) = match kind {
        GraphKind::Ssi | GraphKind::Pss | GraphKind::Pis | GraphKind::Sii => {
            let members = lattice.vertices();
            let by_intersection = matches!(kind, GraphKind::Ssi | GraphKind::Sii);
            let mut adj = Adjacency::empty(members.len());
            for (a, &n) in members.iter().enumerate() {
                for (b, &k) in members.iter().enumerate().skip(a + 1) {
                    let joined = if by_intersection {
                        lattice.flags(lattice.meet(n, k)).is_second
                    } else {
                        lattice.flags(lattice.join(n, k)).is_prime
                    };
                    if joined {
                        adj.add_edge(a, b);
                    }
                }
            }
            let vertices = members
                .iter()
                .map(|&i| {
                    if matches!(kind, GraphKind::Pis | GraphKind::Sii) {
                        Vertex {
                            reference: VertexRef::Ideal(lattice.colon(i)),
                            ..ideal_vertex(lattice.colon(i))
                        }
                    } else {
                        submodule_vertex(lattice, i)
                    }
                })
                .collect();
            (vertices, adj)
        }
        GraphKind::PssTilde | GraphKind::SsiTilde => {
            let mut ideals: Vec<Ideal> = (0..lattice.len())
                .map(|i| {
                    if kind == GraphKind::PssTilde {
                        lattice.colon(i)
                    } else {
                        lattice.annihilator(i)
                    }
                })
                .filter(Ideal::is_nontrivial)
                .collect();
            ideals.sort();
            ideals.dedup();
            let mut adj = Adjacency::empty(ideals.len());
            for a in 0..ideals.len() {
                for b in a + 1..ideals.len() {
                    if ideals[a].sum(&ideals[b]).is_prime() {
                        adj.add_edge(a, b);
                    }
                }
            }
            (ideals.into_iter().map(ideal_vertex).collect(), adj)
        }
    };

    Ok(SimpleGraph {
        kind,
        ring: module.ring(),
        module: module.descriptor(),
        vertices,
        adjacency,
    })
}
