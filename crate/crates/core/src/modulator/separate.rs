//! Separators between modulator vertices.

use crate::error::Result;
use crate::flow::{max_disjoint_paths, min_separator};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::outerplanar::embed;
use crate::tree_decomp::decompose_outerplanar;

use super::{AugmentedModulator, PairType};

/// Set `Y` disjoint from `x` with `|Y| <= 4|x|` such that every two vertices
/// of `x` share no component of `g - (x ∪ Y)`. Peels the vertex of `x` whose
/// topmost bag is deepest, separating it from the rest by a minimum cut.
pub fn outerplanar_separator(g: &Graph, x: &VertexSet) -> Result<VertexSet> {
    embed(g)?;
    if let Some(&v) = x.iter().find(|&&v| !g.has_vertex(v)) {
        return Err(crate::Error::MissingVertex(v));
    }
    let mut h = g.clone();
    for &u in x {
        let inner: Vec<Vertex> = h.neighbors(u).filter(|w| x.contains(w)).collect();
        for w in inner {
            h.remove_edge(u, w)?;
        }
    }
    let td = decompose_outerplanar(g)?;
    let top = td.topmost();
    let mut order: Vec<Vertex> = x.iter().copied().collect();
    order.sort_by_key(|v| (std::cmp::Reverse(td.tree.depth[top[v]]), *v));
    let mut y = VertexSet::new();
    let mut remaining: VertexSet = x.clone();
    for &v in &order {
        remaining.remove(&v);
        if remaining.is_empty() {
            break;
        }
        y.extend(min_separator(&h, &[v].into(), &remaining)?);
        h.remove_vertex(v)?;
    }
    Ok(y)
}

/// Separator `Z` making every modulator pair either separated or joined by
/// at least `k+4` internally disjoint paths of length at least two.
pub fn compute_z(g: &Graph, k: usize, am: &AugmentedModulator) -> Result<VertexSet> {
    let x = am.all();
    let xs: Vec<Vertex> = x.iter().copied().collect();
    let mut z = VertexSet::new();
    for (i, &u) in xs.iter().enumerate() {
        for &v in &xs[i + 1..] {
            if am.pair_type(u, v) == PairType::C {
                continue;
            }
            let others: Vec<Vertex> = xs.iter().copied().filter(|&w| w != u && w != v).collect();
            let h = g.without(&others).without_edge(u, v);
            let paths = max_disjoint_paths(&h, u, v, k + 4)?;
            if let Some(sep) = paths.separator {
                z.extend(sep);
            }
        }
    }
    if am.x1.len() > 1 {
        z.extend(outerplanar_separator(&g.without(&am.x0), &am.x1)?);
    }
    Ok(z)
}
