//! Exact non-backtracking (Hashimoto) edge-space operators of finite simple
//! graphs: sector decomposition, the line-graph/correction factorization of
//! the Ihara determinant, gauge-invariant mixed shadows, numerical-range
//! bounds on the Hashimoto spectrum, and census screening over graph6 input.

pub mod error;
pub mod graph;
pub mod edge_space;
pub mod linalg;
pub mod screen;
pub mod shadows;
pub mod spectral;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use graph::corpus::{corpus, lookup, CorpusEntry};
pub use graph::graph6::{encode_graph6, parse_graph6};
pub use graph::Graph;
