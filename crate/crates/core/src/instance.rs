//! Mutable working instance threaded through the reduction stages.

use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::stats::{Rule, RuleCounts};
use crate::trace::MinorTrace;

/// Graph, budget, the minor operations applied so far and rule counters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: usize,
    pub trace: MinorTrace,
    pub fires: RuleCounts,
}

/// Result of a stage that may decide the instance instead of producing a structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stage<T> {
    Ready(T),
    /// `opd > k` is certain.
    AboveBudget,
    /// The stage could not certify either answer.
    Unknown,
}

impl<T> Stage<T> {
    pub fn ready(self) -> Option<T> {
        match self {
            Stage::Ready(t) => Some(t),
            _ => None,
        }
    }
}

impl Instance {
    pub fn new(graph: Graph, k: usize) -> Self {
        Self { graph, k, ..Self::default() }
    }

    pub fn delete_vertex(&mut self, v: Vertex) -> Result<()> {
        self.trace.delete_vertex(&mut self.graph, v)
    }

    pub fn delete_vertices<'a>(&mut self, vs: impl IntoIterator<Item = &'a Vertex>) -> Result<()> {
        self.trace.delete_vertices(&mut self.graph, vs)
    }

    pub fn delete_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.trace.delete_edge(&mut self.graph, u, v)
    }

    pub fn contract_set(&mut self, set: &[Vertex]) -> Result<Vertex> {
        self.trace.contract_set(&mut self.graph, set)
    }

    pub fn fired(&mut self, rule: Rule) {
        self.fires.add(rule, 1);
    }
}
