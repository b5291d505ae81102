//! Problem instances and solver results.

use alloc::vec::Vec;

use crate::crown::CrownKind;
use crate::graph::{Graph, Packing, Vertex};

/// Does `graph` contain `k` vertex-disjoint P2s?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: usize,
}

impl Instance {
    pub fn new(graph: Graph, k: usize) -> Self {
        Self { graph, k }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }
}

/// One reduction step. Vertex ids refer to the original input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    /// Vertices in components with fewer than three vertices were deleted.
    Cleaned { removed: Vec<Vertex> },
    /// A rule-free packing was reached after the given rule applications.
    Reduced {
        packing_size: usize,
        rule1: usize,
        rule2: usize,
    },
    /// `H + C` was deleted and the parameter dropped from `k_before` to
    /// `k_before - |H|`.
    Crown {
        kind: CrownKind,
        head: Vec<Vertex>,
        crown: Vec<Vertex>,
        k_before: usize,
    },
    /// The packing grew from `from` to `from + 1` paths.
    Augmented { from: usize },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub rule1_applications: usize,
    pub rule2_applications: usize,
    pub crowns: usize,
    pub augmentation_rounds: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub answer: Answer,
    /// A packing of size at least `k` in the input graph; present iff YES.
    pub certificate: Option<Packing>,
    pub kernel_trace: Vec<TraceEvent>,
    pub stats: SolveStats,
}
