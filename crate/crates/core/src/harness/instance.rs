use std::sync::Arc;

use crate::algebra::{
    enumerate_submodules_with, module_properties, prime_radical, second_socle, FiniteModule,
    ModuleProperties, Ring, SizeGuard, SubmoduleLattice,
};
use crate::error::Result;
use crate::graph::{build_graph, graph_metrics, GraphKind, GraphMetrics, SimpleGraph};

/// A graph together with its invariants.
#[derive(Clone, Debug)]
pub struct MeasuredGraph {
    pub graph: SimpleGraph,
    pub metrics: GraphMetrics,
}

impl MeasuredGraph {
    fn build(kind: GraphKind, lattice: &SubmoduleLattice) -> Result<Self> {
        let graph = build_graph(kind, lattice)?;
        let metrics = graph_metrics(&graph);
        Ok(MeasuredGraph { graph, metrics })
    }

    /// Vertex positions mapped back to lattice indices.
    pub fn submodule_at(&self, position: usize) -> usize {
        self.graph.vertices[position]
            .submodule()
            .expect("submodule graph")
    }

    pub fn position(&self, lattice_index: usize) -> Option<usize> {
        self.graph.position_of_submodule(lattice_index)
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(x), Some(y)) => self.graph.has_edge(x, y),
            _ => false,
        }
    }

    pub fn is_universal(&self, lattice_index: usize) -> bool {
        self.position(lattice_index)
            .is_some_and(|p| self.metrics.universal_vertices.contains(&p))
    }

    pub fn is_isolated(&self, lattice_index: usize) -> bool {
        self.position(lattice_index)
            .is_some_and(|p| self.metrics.isolated_vertices.contains(&p))
    }
}

/// One module with everything the checks look at, computed once.
#[derive(Clone, Debug)]
pub struct Instance {
    pub ring: Ring,
    pub module: Arc<FiniteModule>,
    pub lattice: SubmoduleLattice,
    pub properties: ModuleProperties,
    pub ssi: MeasuredGraph,
    pub pss: MeasuredGraph,
    pub pss_tilde: MeasuredGraph,
    pub ssi_tilde: MeasuredGraph,
    /// PIS of the ring acting on the module.
    pub pis: MeasuredGraph,
    /// SII of the ring acting on the module.
    pub sii: MeasuredGraph,
    /// Lattice of the ring over itself.
    pub ring_lattice: SubmoduleLattice,
    pub second_socle: usize,
    pub prime_radical: usize,
}

impl Instance {
    pub fn new(module: &FiniteModule, guard: SizeGuard) -> Result<Self> {
        let lattice = enumerate_submodules_with(module, guard)?;
        let ring = module.ring();
        let ring_lattice = if module.is_regular() {
            lattice.clone()
        } else {
            enumerate_submodules_with(
                &FiniteModule::regular(ring),
                SizeGuard {
                    max_order: guard.max_order.max(u64::from(ring.modulus())),
                    ..guard
                },
            )?
        };
        Ok(Instance {
            ring,
            module: Arc::clone(lattice.module()),
            properties: module_properties(&lattice),
            ssi: MeasuredGraph::build(GraphKind::Ssi, &lattice)?,
            pss: MeasuredGraph::build(GraphKind::Pss, &lattice)?,
            pss_tilde: MeasuredGraph::build(GraphKind::PssTilde, &lattice)?,
            ssi_tilde: MeasuredGraph::build(GraphKind::SsiTilde, &lattice)?,
            pis: MeasuredGraph::build(GraphKind::Pis, &ring_lattice)?,
            sii: MeasuredGraph::build(GraphKind::Sii, &ring_lattice)?,
            second_socle: second_socle(&lattice, lattice.top()),
            prime_radical: prime_radical(&lattice),
            lattice,
            ring_lattice,
        })
    }

    /// `Z2xZ4/Z4` style descriptor.
    pub fn descriptor(&self) -> String {
        format!("{}/{}", self.module.descriptor(), self.ring)
    }

    pub fn label(&self, i: usize) -> String {
        self.lattice.label(i)
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.lattice.vertices()
    }

    pub fn minimals(&self) -> Vec<usize> {
        self.lattice.minimals()
    }

    pub fn maximals(&self) -> Vec<usize> {
        self.lattice.maximals()
    }

    pub fn graph(&self, kind: GraphKind) -> &MeasuredGraph {
        match kind {
            GraphKind::Ssi => &self.ssi,
            GraphKind::Pss => &self.pss,
            GraphKind::PssTilde => &self.pss_tilde,
            GraphKind::SsiTilde => &self.ssi_tilde,
            GraphKind::Pis => &self.pis,
            GraphKind::Sii => &self.sii,
        }
    }
}
