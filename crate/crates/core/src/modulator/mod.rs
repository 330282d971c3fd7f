//! Modulator construction: deletion-set providers, avoidance sets, degree
//! reduction, separators and the outerplanar decomposition `(X0, X1, Z)`.

mod augment;
mod provider;
mod rules;
mod separate;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::error::{invalid, Error, Result};
use crate::flow::max_disjoint_paths;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::{Instance, Stage};
use crate::outerplanar::is_outerplanar;
use crate::tree_decomp::expand_separator;

pub use augment::{avoidance_set, build_augmented, Avoidance};
pub use provider::{modulator_provider, ProviderMode, ProviderOutcome};
pub use rules::{remove_pendant_components, rule1_reduce_degree, rule2_remove_pendant};
pub use separate::{compute_z, outerplanar_separator};

/// Classification of a pair of modulator vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairType {
    /// Both in `X0`, or one in `X0` and the other in its `R` set.
    A,
    /// Not type A and at least one endpoint in `X0`.
    B,
    /// Both in `X1`.
    C,
}

/// Deletion set `X0` together with per-vertex avoidance sets `R(v) ⊆ X1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentedModulator {
    pub x0: VertexSet,
    pub x1: VertexSet,
    pub r: BTreeMap<Vertex, VertexSet>,
    /// Approximation factor bounding `|X0| <= c·k`.
    pub c: usize,
}

impl AugmentedModulator {
    pub fn empty(c: usize) -> Self {
        Self { c, ..Self::default() }
    }

    /// `X0 ∪ X1`.
    pub fn all(&self) -> VertexSet {
        self.x0.union(&self.x1).copied().collect()
    }

    /// Recomputes `X1` as the union of the `R` sets.
    pub(crate) fn refresh_x1(&mut self) {
        self.x1 = self.r.values().flatten().copied().collect();
    }

    /// Drops `v` from every set.
    pub(crate) fn forget(&mut self, v: Vertex) {
        self.x0.remove(&v);
        self.r.remove(&v);
        for set in self.r.values_mut() {
            set.remove(&v);
        }
        self.refresh_x1();
    }

    pub fn pair_type(&self, u: Vertex, v: Vertex) -> PairType {
        let in_r = |a: Vertex, b: Vertex| self.r.get(&a).is_some_and(|s| s.contains(&b));
        let (a0, b0) = (self.x0.contains(&u), self.x0.contains(&v));
        if (a0 && b0) || in_r(u, v) || in_r(v, u) {
            PairType::A
        } else if a0 || b0 {
            PairType::B
        } else {
            PairType::C
        }
    }

    /// Checks every defining condition for budget `k`.
    pub fn validate(&self, g: &Graph, k: usize) -> Result<()> {
        let all = self.all();
        if let Some(&v) = all.iter().find(|&&v| !g.has_vertex(v)) {
            return Err(Error::MissingVertex(v));
        }
        if self.x0.iter().any(|v| self.x1.contains(v)) {
            return Err(invalid("X0 and X1 intersect"));
        }
        if self.x0.len() > self.c * k {
            return Err(invalid(format!("|X0| = {} exceeds c·k = {}", self.x0.len(), self.c * k)));
        }
        let keys: VertexSet = self.r.keys().copied().collect();
        if keys != self.x0 {
            return Err(invalid("R is not indexed by X0"));
        }
        let union: VertexSet = self.r.values().flatten().copied().collect();
        if union != self.x1 {
            return Err(invalid("X1 differs from the union of the R sets"));
        }
        if !is_outerplanar(&g.without(&self.x0)) {
            return Err(invalid("G - X0 is not outerplanar"));
        }
        for (&v, rv) in &self.r {
            if rv.len() > 3 * k {
                return Err(invalid(format!("|R({v})| = {} exceeds 3k", rv.len())));
            }
            let removed: VertexSet = self.x0.iter().filter(|&&w| w != v).chain(rv).copied().collect();
            if !is_outerplanar(&g.without(&removed)) {
                return Err(invalid(format!("G - ((X0 - {v}) ∪ R({v})) is not outerplanar")));
            }
        }
        for &v in &all {
            let mut rest = all.clone();
            rest.remove(&v);
            if !is_outerplanar(&g.without(&rest)) {
                return Err(invalid(format!("G - (X - {v}) is not outerplanar")));
            }
        }
        Ok(())
    }
}

/// Whether `u` and `v` share no adjacent component of `g - removed`.
pub fn is_separated(g: &Graph, removed: &VertexSet, u: Vertex, v: Vertex) -> bool {
    let mut seen = VertexSet::new();
    for s in g.neighbors(u).filter(|w| !removed.contains(w)) {
        if seen.contains(&s) {
            continue;
        }
        let comp = g.component_of(s, removed);
        if comp.iter().any(|&w| g.has_edge(w, v)) {
            return false;
        }
        seen.extend(comp);
    }
    true
}

/// Augmented modulator plus the separator `Z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpDecomposition {
    pub modulator: AugmentedModulator,
    pub z: VertexSet,
    pub d: usize,
    pub k: usize,
}

impl OpDecomposition {
    /// `X0 ∪ X1 ∪ Z`.
    pub fn all(&self) -> VertexSet {
        let mut s = self.modulator.all();
        s.extend(self.z.iter().copied());
        s
    }

    /// Components of `g - (X ∪ Z)`, ordered by minimum label.
    pub fn components(&self, g: &Graph) -> Vec<Vec<Vertex>> {
        g.components_avoiding(&self.all())
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let k = self.k;
        self.modulator.validate(g, k)?;
        let x = self.modulator.all();
        if let Some(&v) = self.z.iter().find(|&&v| !g.has_vertex(v)) {
            return Err(Error::MissingVertex(v));
        }
        if self.z.iter().any(|v| x.contains(v)) {
            return Err(invalid("Z meets the modulator"));
        }
        let all = self.all();
        let xs: Vec<Vertex> = x.iter().copied().collect();
        for (i, &u) in xs.iter().enumerate() {
            for &v in &xs[i + 1..] {
                if is_separated(g, &all, u, v) {
                    continue;
                }
                let paths = max_disjoint_paths(&g.without_edge(u, v), u, v, k + 4)?;
                if paths.count < k + 4 {
                    return Err(invalid(format!("pair {u},{v} is neither separated nor richly connected")));
                }
            }
        }
        let comps = self.components(g);
        for comp in &comps {
            let nz = g.neighborhood(comp).intersection(&self.z).count();
            if nz > 4 {
                return Err(invalid(format!("component at {} has {nz} neighbours in Z", comp[0])));
            }
        }
        let cap = self.d as u128 * (k as u128 + 3).pow(3);
        if self.z.len() as u128 > cap {
            return Err(invalid(format!("|Z| = {} exceeds {cap}", self.z.len())));
        }
        if comps.len() as u128 > cap {
            return Err(invalid(format!("{} components exceed {cap}", comps.len())));
        }
        Ok(())
    }
}

/// Bipartite graph between a vertex set `X` and the components of `g - X`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentGraph {
    pub modulator: Vec<Vertex>,
    /// Components of `g - X` ordered by minimum label.
    pub components: Vec<Vec<Vertex>>,
    /// `(modulator vertex, component index)`, sorted.
    pub edges: Vec<(Vertex, usize)>,
}

impl ComponentGraph {
    pub fn build(g: &Graph, x: &VertexSet) -> Self {
        let components = g.components_avoiding(x);
        let mut edges = Vec::new();
        for (i, comp) in components.iter().enumerate() {
            for v in g.neighborhood(comp) {
                if x.contains(&v) {
                    edges.push((v, i));
                }
            }
        }
        edges.sort_unstable();
        Self { modulator: x.iter().copied().collect(), components, edges }
    }

    pub fn degree(&self, component: usize) -> usize {
        self.edges.iter().filter(|&&(_, c)| c == component).count()
    }

    /// Component indices with at least two modulator neighbours.
    pub fn rich_components(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.components.len()];
        for &(_, c) in &self.edges {
            deg[c] += 1;
        }
        (0..deg.len()).filter(|&c| deg[c] >= 2).collect()
    }

    /// `(|Y|, |E|)` restricted to components with at least two neighbours.
    pub fn rich_size(&self) -> (usize, usize) {
        let rich = self.rich_components();
        let e = self.edges.iter().filter(|&&(_, c)| rich.binary_search(&c).is_ok()).count();
        (rich.len(), e)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for comp in &self.components {
            if !seen.insert(comp.clone()) {
                return Err(invalid("duplicate component"));
            }
        }
        let x: VertexSet = self.modulator.iter().copied().collect();
        if *self != ComponentGraph::build(g, &x) {
            return Err(invalid("component graph does not match the host graph"));
        }
        Ok(())
    }
}

/// Builds an outerplanar decomposition, applying forced deletions, degree
/// reduction and pendant removal on the way. All changes go to `inst`.
pub fn build_op_decomposition(inst: &mut Instance, mode: ProviderMode) -> Result<Stage<OpDecomposition>> {
    let mut am = match build_augmented(inst, mode)? {
        Stage::Ready(am) => am,
        Stage::AboveBudget => return Ok(Stage::AboveBudget),
        Stage::Unknown => return Ok(Stage::Unknown),
    };
    rule1_reduce_degree(inst, &mut am)?;
    let k = inst.k;
    let z0 = compute_z(&inst.graph, k, &am)?;
    let x = am.all();
    let z = expand_separator(&inst.graph.without(&x), &z0)?;
    let od = OpDecomposition { modulator: am, z, d: bounds::f3(mode.c() as u128) as usize, k };
    let removed = remove_pendant_components(inst, &od.all())?;
    if removed > 0 {
        // deleted components never touch X or Z, but a modulator vertex may now be isolated
        od.modulator.validate(&inst.graph, k)?;
    }
    od.validate(&inst.graph)?;
    Ok(Stage::Ready(od))
}
