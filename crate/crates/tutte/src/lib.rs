//! Exact Tutte polynomial engine.
//!
//! Three independent computation paths — rank-nullity subset expansion,
//! memoized deletion-contraction over biconnected blocks, and closed-form
//! transfer recurrences for fan-like, wheel-like, and benzenoid chain
//! families — all over exact integer arithmetic.

pub mod benzenoid;
pub mod corpus;
pub mod engine;
pub mod fanlike;
pub mod graph;
pub mod poly;
pub mod verify;

pub use graph::{GraphError, MultiGraph};
pub use poly::{Poly, PolyError};
