//! Degree reduction between modulator and components, and pendant removal.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Vertex, VertexSet};
use crate::instance::Instance;
use crate::outerplanar::is_outerplanar;
use crate::stats::Rule;

use super::AugmentedModulator;

/// For every modulator pair, marks the first `k+3` common components (by
/// minimum label); deletes the edges of unmarked vertex-component pairs, then
/// drops components without modulator neighbours and isolated modulator
/// vertices. Returns whether the graph changed.
pub fn rule1_reduce_degree(inst: &mut Instance, am: &mut AugmentedModulator) -> Result<bool> {
    am.validate(&inst.graph, inst.k)?;
    let g = &inst.graph;
    let x = am.all();
    let comps = g.components_avoiding(&x);
    // modulator neighbours per component
    let attached: Vec<VertexSet> = comps
        .iter()
        .map(|c| g.neighborhood(c).into_iter().filter(|v| x.contains(v)).collect())
        .collect();
    let mut marked: BTreeSet<(Vertex, usize)> = BTreeSet::new();
    let mut shared: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    for (i, nb) in attached.iter().enumerate() {
        let nb: Vec<Vertex> = nb.iter().copied().collect();
        for (a, &u) in nb.iter().enumerate() {
            for &v in &nb[a + 1..] {
                let count = shared.entry((u, v)).or_default();
                if *count < inst.k + 3 {
                    *count += 1;
                    marked.insert((u, i));
                    marked.insert((v, i));
                }
            }
        }
    }
    let mut doomed_edges = Vec::new();
    for (i, nb) in attached.iter().enumerate() {
        for &u in nb {
            if !marked.contains(&(u, i)) {
                doomed_edges.extend(comps[i].iter().filter(|&&w| g.has_edge(u, w)).map(|&w| (u, w)));
            }
        }
    }
    let mut changed = !doomed_edges.is_empty();
    for (u, w) in doomed_edges {
        inst.delete_edge(u, w)?;
    }
    for (i, comp) in comps.iter().enumerate() {
        if attached[i].iter().all(|&u| !marked.contains(&(u, i))) {
            inst.delete_vertices(comp)?;
            changed = true;
        }
    }
    let isolated: Vec<Vertex> = x.iter().copied().filter(|&v| inst.graph.degree(v) == 0).collect();
    for v in isolated {
        inst.delete_vertex(v)?;
        am.forget(v);
        changed = true;
    }
    if changed {
        inst.fired(Rule::ReduceDegree);
    }
    Ok(changed)
}

/// Deletes `c`, which must have an outerplanar closure and at most one
/// neighbour.
pub fn rule2_remove_pendant(inst: &mut Instance, c: &VertexSet) -> Result<()> {
    let g = &inst.graph;
    if let Some(&v) = c.iter().find(|&&v| !g.has_vertex(v)) {
        return Err(Error::MissingVertex(v));
    }
    if g.neighborhood(c).len() > 1 {
        return Err(Error::Precondition("set has more than one neighbour".into()));
    }
    if !is_outerplanar(&g.closure(c)) {
        return Err(Error::Precondition("closure is not outerplanar".into()));
    }
    inst.delete_vertices(c)?;
    inst.fired(Rule::RemovePendant);
    Ok(())
}

/// Applies pendant removal to every component of `g - s` with at most one
/// neighbour and an outerplanar closure. Returns the number of deletions.
pub fn remove_pendant_components(inst: &mut Instance, s: &VertexSet) -> Result<usize> {
    let targets: Vec<VertexSet> = inst
        .graph
        .components_avoiding(s)
        .into_iter()
        .map(|c| c.into_iter().collect::<VertexSet>())
        .filter(|c| inst.graph.neighborhood(c).len() <= 1 && is_outerplanar(&inst.graph.closure(c)))
        .collect();
    for c in &targets {
        rule2_remove_pendant(inst, c)?;
    }
    Ok(targets.len())
}
