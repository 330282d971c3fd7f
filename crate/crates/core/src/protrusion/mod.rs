//! Protrusion decomposition and the local reduction rules acting on
//! protrusions.

mod neighborhood;
mod reducible;
mod rules;
mod shrink;

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::error::{invalid, precondition, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::Instance;
use crate::modulator::{rule2_remove_pendant, OpDecomposition};
use crate::outerplanar::is_outerplanar;
use crate::tree_decomp::expand_separator;

pub use neighborhood::{neighborhood_path, rule3_irrelevant_edge};
pub use reducible::{find_reducible_structure, ReducibleStructure, LARGE_FACE, STRUCTURE_THRESHOLD, WINDOW};
pub use rules::{
    check_fan, check_ladder, is_biconnected, is_order_respecting, ladder_paths, rule4_replace_component,
    rule5_contract_bump, rule6_fan, rule7_ladder,
};
pub use shrink::{shrink_blockcut, BlockSummary, Shrink, MAX_BLOCKS};

/// How eagerly protrusions are reduced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Reduce whenever a validated structure exists.
    #[default]
    Aggressive,
    /// Reduce only protrusions above the size guaranteeing a structure.
    Strict,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Aggressive => "aggressive",
            Mode::Strict => "strict",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "aggressive" => Ok(Mode::Aggressive),
            "strict" => Ok(Mode::Strict),
            other => Err(precondition(format!("unknown mode '{other}'"))),
        }
    }
}

/// Protrusion size above which strict mode reduces.
pub const STRICT_PROTRUSION: usize = bounds::PROTRUSION_THRESHOLD as usize;

/// Set `L` whose complement splits into protrusions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProtrusionDecomposition {
    pub l: VertexSet,
    /// Components of `g - L` ordered by minimum label.
    pub components: Vec<Vec<Vertex>>,
    pub c: usize,
    pub d: usize,
    pub k: usize,
}

impl ProtrusionDecomposition {
    /// `f5(c, d)·(k+3)^4`.
    pub fn cap(&self) -> u128 {
        bounds::f5(self.c as u128, self.d as u128) * (self.k as u128 + 3).pow(4)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if let Some(&v) = self.l.iter().find(|&&v| !g.has_vertex(v)) {
            return Err(Error::MissingVertex(v));
        }
        if self.components != g.components_avoiding(&self.l) {
            return Err(invalid("components do not match g - L"));
        }
        let cap = self.cap();
        let sizes = [
            ("|L|", self.l.len()),
            ("|E(L,L)|", g.edges_within(&self.l)),
            ("component count", self.components.len()),
        ];
        for (what, size) in sizes {
            if size as u128 > cap {
                return Err(invalid(format!("{what} = {size} exceeds {cap}")));
            }
        }
        for comp in &self.components {
            if g.neighborhood(comp).len() > 4 {
                return Err(invalid(format!("component at {} has more than four neighbours", comp[0])));
            }
            if !is_outerplanar(&g.closure(comp)) {
                return Err(invalid(format!("closure of the component at {} is not outerplanar", comp[0])));
            }
        }
        Ok(())
    }
}

/// Removes irrelevant modulator edges and pendant protrusions; if nothing
/// changes, returns the protrusion decomposition. `None` means the graph
/// changed and the caller should rebuild.
pub fn build_l(inst: &mut Instance, od: &OpDecomposition) -> Result<Option<ProtrusionDecomposition>> {
    let x = od.modulator.all();
    let comps = od.components(&inst.graph);
    for &v in &x {
        for comp in &comps {
            if rule3_irrelevant_edge(inst, od, v, comp)?.is_some() {
                return Ok(None);
            }
        }
    }
    let g = &inst.graph;
    let mut seed = od.z.clone();
    seed.extend(g.neighborhood(&x));
    let zp = expand_separator(&g.without(&x), &seed)?;
    let mut l = x;
    l.extend(zp);
    let components = g.components_avoiding(&l);
    if let Some(comp) = components.iter().find(|c| g.neighborhood(*c).len() <= 1) {
        let c: VertexSet = comp.iter().copied().collect();
        rule2_remove_pendant(inst, &c)?;
        return Ok(None);
    }
    let pd = ProtrusionDecomposition {
        l,
        components,
        c: od.modulator.c,
        d: od.d,
        k: od.k,
    };
    pd.validate(&inst.graph)?;
    Ok(Some(pd))
}

/// Applies one shrinking rule inside the protrusion `a`. Returns whether the
/// graph changed.
pub fn reduce_protrusion(inst: &mut Instance, a: &VertexSet, mode: Mode) -> Result<bool> {
    if mode == Mode::Strict && a.len() <= STRICT_PROTRUSION {
        return Err(precondition(format!("protrusion of {} vertices is below the strict threshold", a.len())));
    }
    let boundary: Vec<Vertex> = inst.graph.neighborhood(a).into_iter().collect();
    if let &[u, v] = boundary.as_slice() {
        if a.len() >= 2 && is_outerplanar(&inst.graph.closure(a)) && replace_between(inst, u, v, a)? {
            return Ok(true);
        }
    }
    match shrink_blockcut(&inst.graph, a, mode)? {
        Shrink::Pendant(c) => {
            rule2_remove_pendant(inst, &c)?;
            Ok(true)
        }
        Shrink::Replace { u, v, c } => replace_between(inst, u, v, &c),
        Shrink::Blocks(blocks) => {
            for block in blocks {
                if block.vertices.len() < 3 || (mode == Mode::Strict && block.vertices.len() <= STRUCTURE_THRESHOLD) {
                    continue;
                }
                let b = inst.graph.induced(&block.vertices);
                let Some(s) = find_reducible_structure(&b, &block.boundary)? else {
                    continue;
                };
                return apply_structure(inst, &s);
            }
            if mode == Mode::Strict {
                return Err(Error::Internal("large protrusion without a reducible structure".into()));
            }
            Ok(false)
        }
    }
}

/// Shrinks the parts of `c` (a union of components of `g - {u, v}`).
fn replace_between(inst: &mut Instance, u: Vertex, v: Vertex, c: &VertexSet) -> Result<bool> {
    let outside: VertexSet = inst.graph.vertices().filter(|w| !c.contains(w)).collect();
    for part in inst.graph.components_avoiding(&outside) {
        let part: VertexSet = part.into_iter().collect();
        let changed = if inst.graph.neighborhood(&part).len() <= 1 {
            rule2_remove_pendant(inst, &part)?;
            true
        } else if inst.graph.has_edge(u, v) {
            rule5_contract_bump(inst, u, v, &part)?
        } else {
            rule4_replace_component(inst, &part)?
        };
        if changed {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Dispatches a validated structure to its rule.
pub fn apply_structure(inst: &mut Instance, s: &ReducibleStructure) -> Result<bool> {
    match s {
        ReducibleStructure::SmallCutPair { u, v, c } => {
            if inst.graph.has_edge(*u, *v) {
                rule5_contract_bump(inst, *u, *v, c)
            } else {
                rule4_replace_component(inst, c)
            }
        }
        ReducibleStructure::Ladder { rungs, .. } => rule7_ladder(inst, rungs).map(|()| true),
        ReducibleStructure::Fan { x, fan, path, .. } => rule6_fan(inst, *x, fan, path).map(|()| true),
    }
}
