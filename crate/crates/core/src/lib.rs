//! Vertex-disjoint P2-packing: greedy packings, Rule 1/2 local reductions,
//! double and fat crown reductions, the `7k - 8` kernel, iterative
//! augmentation, and the total edge cover dual.
//!
//! The crate is `no_std` and only needs `alloc`. Exact reference algorithms
//! for small graphs live in [`oracle`].

#![no_std]

extern crate alloc;

pub mod augment;
pub mod crown;
pub mod error;
pub mod graph;
pub mod instance;
pub mod matching;
pub mod oracle;
pub mod reconstruct;
pub mod reduce;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Graph, P2Path, Packing, Vertex, VertexSet};
pub use instance::{Answer, Instance, SolveResult, SolveStats, TraceEvent};
pub use solver::{kernelize, solve, solve_total_edge_cover, Kernel, KernelOutcome, TecResult};
