//! Exact computation of clique/chromatic extremal quantities on small
//! graphs: the minimum clique number over n-vertex graphs of chromatic
//! number c, inverse Ramsey numbers with provenance-tagged intervals,
//! the constructions that witness the known bounds, and a verification
//! harness that checks every bound against brute-force ground truth.

pub mod bounds;
pub mod cache;
pub mod canon;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod interval;
pub mod qnc;
pub mod ramsey;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{Graph, Invariants};
pub use interval::ValueInterval;
pub use rational::RationalRate;
