//! Certifying search for induced copies of the radius-three trees
//! `T(t,2,1)` inside triangle-free radius-two graphs.
//!
//! The crate bundles four things that keep each other honest:
//!
//! * a small immutable graph core with layered-neighborhood primitives,
//! * deterministic generators for triangle-free high-chromatic graphs
//!   (iterated Mycielskians, Kneser graphs, a seeded triangle-free
//!   process),
//! * an exact chromatic-number solver (saturation-order branch and
//!   bound) plus a brute-force induced-copy oracle,
//! * the hunter: a step-by-step constructive search that either emits a
//!   verified embedding certificate or a structured report naming the
//!   exact step that failed to apply.
//!
//! Every choice the search makes is resolved to least-index order, so
//! certificates are reproducible byte for byte across runs.

pub mod coloring;
pub mod generators;
pub mod graph;
pub mod hunter;
pub mod instances;
pub mod tree;

pub use graph::{build_graph, Graph, GraphError, RootedLayers, VertexSet};
pub use hunter::{hunt, FoundVia, HuntOutcome, HuntStatus};
pub use tree::{build_tree, find_induced_copy, verify_embedding, Embedding, TreeSpec};
