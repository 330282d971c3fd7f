//! Avoidance sets and the augmented modulator loop.

use std::collections::BTreeMap;

use crate::compact::Compact;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::{Instance, Stage};
use crate::outerplanar::{embed, mask_is_outerplanar};
use crate::stats::Rule;
use crate::tree_decomp::decompose_outerplanar;

use super::provider::{modulator_provider, ProviderMode, ProviderOutcome};
use super::AugmentedModulator;

/// Outcome of [`avoidance_set`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Avoidance {
    /// Deletion set of size at most `3k` avoiding the vertex.
    Set(VertexSet),
    /// No deletion set of size at most `k` avoids the vertex.
    Refused,
}

/// Deletion set of `g` avoiding `v` with at most `3k` vertices, or a refusal
/// certified by `k+1` disjoint obstructions through `v`. Requires `g - v`
/// outerplanar.
pub fn avoidance_set(g: &Graph, v: Vertex, k: usize) -> Result<Avoidance> {
    if !g.has_vertex(v) {
        return Err(Error::MissingVertex(v));
    }
    let rest = g.without(&[v]);
    embed(&rest)?;
    let td = decompose_outerplanar(&rest)?;
    let c = Compact::new(g);
    let vi = c.index(v).expect("checked above") as usize;
    let mut removed = vec![false; c.n()];
    let mut s = VertexSet::new();
    let mut marks = 0;
    for &t in td.tree.preorder.iter().rev() {
        let mut mask = vec![false; c.n()];
        let mut stack = vec![t];
        while let Some(node) = stack.pop() {
            for &w in &td.bags[node] {
                let i = c.index(w).expect("bag vertices exist") as usize;
                mask[i] = !removed[i];
            }
            stack.extend(td.tree.children[node].iter().copied());
        }
        mask[vi] = true;
        if mask_is_outerplanar(&c, &mask) {
            continue;
        }
        marks += 1;
        if marks > k {
            return Ok(Avoidance::Refused);
        }
        mask[vi] = false;
        for (i, m) in mask.into_iter().enumerate() {
            removed[i] |= m;
        }
        s.extend(td.bags[t].iter().copied());
    }
    Ok(Avoidance::Set(s))
}

/// Builds an augmented modulator for `inst`, deleting vertices that every
/// solution of size at most `k` must contain (each lowers `k` by one).
pub fn build_augmented(inst: &mut Instance, mode: ProviderMode) -> Result<Stage<AugmentedModulator>> {
    let c = mode.c();
    'restart: loop {
        let k = inst.k;
        let x0 = match modulator_provider(&inst.graph, k, mode) {
            ProviderOutcome::Modulator(x) => x,
            ProviderOutcome::AboveBudget => return Ok(Stage::AboveBudget),
            ProviderOutcome::Unknown => return Ok(Stage::Unknown),
        };
        if x0.len() > c * k {
            return Ok(Stage::AboveBudget);
        }
        let mut r = BTreeMap::new();
        for &v in &x0 {
            let others: Vec<Vertex> = x0.iter().copied().filter(|&w| w != v).collect();
            let gv = inst.graph.without(&others);
            match avoidance_set(&gv, v, k)? {
                Avoidance::Set(s) => {
                    r.insert(v, s);
                }
                Avoidance::Refused => {
                    inst.delete_vertex(v)?;
                    inst.k -= 1;
                    inst.fired(Rule::ForcedVertex);
                    continue 'restart;
                }
            }
        }
        let mut am = AugmentedModulator { x0, x1: VertexSet::new(), r, c };
        am.refresh_x1();
        return Ok(Stage::Ready(am));
    }
}
