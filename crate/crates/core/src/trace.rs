//! Replayable minor traces.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// One minor operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinorOp {
    DeleteVertex(Vertex),
    DeleteEdge(Vertex, Vertex),
    /// Contract `u v`; `survivor` is the smaller label.
    ContractEdge { u: Vertex, v: Vertex, survivor: Vertex },
}

impl fmt::Display for MinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MinorOp::DeleteVertex(v) => write!(f, "dv {v}"),
            MinorOp::DeleteEdge(u, v) => write!(f, "de {u} {v}"),
            MinorOp::ContractEdge { u, v, survivor } => write!(f, "ce {u} {v} -> {survivor}"),
        }
    }
}

impl FromStr for MinorOp {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let tok: Vec<&str> = s.split_whitespace().collect();
        let num = |t: &str| t.parse::<Vertex>().map_err(|e| format!("bad label {t:?}: {e}"));
        match tok.as_slice() {
            ["dv", v] => Ok(MinorOp::DeleteVertex(num(v)?)),
            ["de", u, v] => Ok(MinorOp::DeleteEdge(num(u)?, num(v)?)),
            ["ce", u, v, "->", w] => Ok(MinorOp::ContractEdge { u: num(u)?, v: num(v)?, survivor: num(w)? }),
            _ => Err(format!("unrecognized trace step {s:?}")),
        }
    }
}

impl Graph {
    /// Applies one operation in place.
    pub fn apply(&mut self, op: MinorOp) -> Result<()> {
        match op {
            MinorOp::DeleteVertex(v) => self.remove_vertex(v),
            MinorOp::DeleteEdge(u, v) => self.remove_edge(u, v),
            MinorOp::ContractEdge { u, v, survivor } => {
                if survivor != u.min(v) {
                    return Err(Error::Precondition(format!("survivor of {u}-{v} must be {}", u.min(v))));
                }
                self.contract_edge(u, v).map(|_| ())
            }
        }
    }
}

/// Ordered log of minor operations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorTrace {
    steps: Vec<MinorOp>,
}

impl MinorTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[MinorOp] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, op: MinorOp) {
        self.steps.push(op);
    }

    pub fn append(&mut self, other: MinorTrace) {
        self.steps.extend(other.steps);
    }

    /// Applies `op` to `g` and records it.
    pub fn apply(&mut self, g: &mut Graph, op: MinorOp) -> Result<()> {
        g.apply(op)?;
        self.steps.push(op);
        Ok(())
    }

    pub fn delete_vertex(&mut self, g: &mut Graph, v: Vertex) -> Result<()> {
        self.apply(g, MinorOp::DeleteVertex(v))
    }

    pub fn delete_vertices<'a>(&mut self, g: &mut Graph, vs: impl IntoIterator<Item = &'a Vertex>) -> Result<()> {
        for &v in vs {
            self.delete_vertex(g, v)?;
        }
        Ok(())
    }

    pub fn delete_edge(&mut self, g: &mut Graph, u: Vertex, v: Vertex) -> Result<()> {
        let (a, b) = crate::graph::edge(u, v);
        self.apply(g, MinorOp::DeleteEdge(a, b))
    }

    pub fn contract_edge(&mut self, g: &mut Graph, u: Vertex, v: Vertex) -> Result<Vertex> {
        let (a, b) = crate::graph::edge(u, v);
        self.apply(g, MinorOp::ContractEdge { u: a, v: b, survivor: a })?;
        Ok(a)
    }

    /// Contracts the connected set `set` into a single vertex and returns
    /// its label (the minimum of the set).
    pub fn contract_set(&mut self, g: &mut Graph, set: &[Vertex]) -> Result<Vertex> {
        let Some(&first) = set.iter().min() else {
            return Err(Error::Precondition("cannot contract an empty set".into()));
        };
        let mut pending: std::collections::BTreeSet<Vertex> = set.iter().copied().collect();
        pending.remove(&first);
        let mut rep = first;
        while !pending.is_empty() {
            let next = g
                .neighbors(rep)
                .find(|w| pending.contains(w))
                .ok_or_else(|| Error::Precondition("contracted set is not connected".into()))?;
            pending.remove(&next);
            rep = self.contract_edge(g, rep, next)?;
        }
        Ok(rep)
    }
}

impl fmt::Display for MinorTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

impl FromIterator<MinorOp> for MinorTrace {
    fn from_iter<I: IntoIterator<Item = MinorOp>>(iter: I) -> Self {
        Self { steps: iter.into_iter().collect() }
    }
}

/// Replays `t` on a copy of `g`.
pub fn replay_trace(g: &Graph, t: &MinorTrace) -> Result<Graph> {
    let mut out = g.clone();
    for (index, &op) in t.steps().iter().enumerate() {
        out.apply(op).map_err(|e| Error::IllegalStep { index, reason: e.to_string() })?;
    }
    Ok(out)
}
