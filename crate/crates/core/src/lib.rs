//! Exact graph invariants around triangles and bipartizations, with a
//! streaming verification harness.
//!
//! The library computes three invariants of a simple graph `G` on `n <= 64`
//! vertices, each with a certifying witness:
//!
//! * `alpha1(G)` — the largest edge set containing at most one edge from each
//!   triangle of `G`;
//! * `tau(G)` — the smallest edge set whose deletion leaves `G` triangle-free;
//! * `taub(G)` — the smallest edge set whose deletion leaves `G` bipartite.
//!
//! On top of the solvers sit structural predicates that a vertex-minimal
//! violator of the bound `alpha1 + tau <= n²/4` (or its bipartization
//! variant) would have to satisfy, and a harness that streams graph6
//! catalogs, checks every inequality in exact scaled-integer arithmetic, and
//! emits deterministic reports.

pub mod edges;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod report;
pub mod solve;
pub mod structure;

pub use edges::{EdgeIndex, EdgeSet};
pub use graph::{Graph, GraphError, Triangle, VertexSet, MAX_VERTICES};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error, Graph6Reader};
pub use harness::{
    compute_record, HarnessError, RecordFlags, RunManifest, Variant, VerificationRecord,
};
pub use report::ReportFormat;
pub use solve::{
    alpha1_exact, brute_force, independence_number, invariants, tau_exact, taub_exact,
    taub_exact_with_limit, validate_witness, InvariantKind, Invariants, SolveResult, SolverError,
    SolverKind, WitnessViolation,
};
pub use structure::{structure_profile, StructureError, StructureProfile};
