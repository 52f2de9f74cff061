//! Perfect forests in graphs: parity-constrained induced spanning forests,
//! the polynomial algorithms that construct them, the hardness gadgets, and
//! brute-force oracles used to certify all of it on small inputs.

pub mod avoid_edge;
pub mod error;
pub mod forest;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;
pub mod min_forest;
pub mod one_forest;
pub mod oracle;
pub mod reductions;

pub use error::{Error, Result};
pub use forest::{ParityForest, ParityTarget, Violation};
pub use graph::{Edge, Graph, Vertex, VertexMap};
