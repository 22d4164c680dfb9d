//! Deciding t-perfection of projective-plane triangulations.
//!
//! Embeddings are signed rotation systems ([`surface`]); imperfection
//! certificates are found by [`detectors`]; local reductions live in
//! [`transforms`]; the infinite families of minimally t-imperfect
//! triangulations are generated by [`catalog`]; and [`oracle`] checks the
//! polyhedral definitions directly on small graphs.

pub mod bitset;
pub mod catalog;
pub mod corpus;
pub mod detectors;
pub mod graph;
pub mod iso;
pub mod oracle;
pub mod surface;
pub mod transforms;

pub use bitset::BitSet;
pub use graph::Graph;
pub use surface::{CycleWitness, Dart, EmbeddedGraph};
