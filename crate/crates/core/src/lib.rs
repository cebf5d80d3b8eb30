//! Exact connected-domination toolkit for small graphs: bit-set graphs,
//! invariant solvers, the constructed critical families, and executable
//! checks of the structural bounds relating independence number,
//! connectivity and minimum degree of 3-γc-critical graphs.

pub mod canon;
pub mod domination;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod set;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::Graph;
pub use set::VertexSet;
