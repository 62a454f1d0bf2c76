//! Submodule lattices of finite modules over `Z_n`, the graphs built on them,
//! and an exhaustive checker for statements about those graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`] enumerates submodules and decides the module-theoretic
//!   predicates (prime, second, minimal, maximal, large, small, ...).
//! * [`graph`] builds the second-intersection and prime-sum graphs (and their
//!   ideal-level relatives) and computes their invariants.
//! * [`harness`] encodes each statement as a named check and evaluates it over
//!   generated families of modules.

pub mod algebra;
pub mod error;
pub mod graph;
pub mod harness;

pub use algebra::{
    annihilated_by, annihilator, classify_submodule, colon_ideal, enumerate_submodules,
    enumerate_submodules_with, ideal_times_module, module_properties, parse_descriptor,
    prime_radical, second_socle, span, submodule_intersection, submodule_sum, FiniteModule, Ideal,
    ModuleProperties, Ring, SizeGuard, Submodule, SubmoduleFlags, SubmoduleLattice,
};
pub use error::{Error, Result};
pub use graph::{
    build_graph, export_graph, graph_metrics, Adjacency, ExportFormat, Extended, GraphKind,
    GraphMetrics, SimpleGraph, Vertex, VertexRef,
};
pub use harness::{
    generate_family, list_checks, run_check, run_suite, CheckReport, CheckResult, Instance,
    SuiteOptions, Verdict,
};
