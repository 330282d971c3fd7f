//! Local replacements inside protrusions: component replacement, bump
//! contraction, fans and ladders.

use std::collections::HashMap;

use crate::blockcut::block_cut_tree;
use crate::error::{invalid, precondition, Error, Result};
use crate::flow::disjoint_paths;
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::instance::Instance;
use crate::outerplanar::is_outerplanar;
use crate::stats::Rule;

fn require_vertices(g: &Graph, vs: impl IntoIterator<Item = Vertex>) -> Result<()> {
    match vs.into_iter().find(|&v| !g.has_vertex(v)) {
        Some(v) => Err(Error::MissingVertex(v)),
        None => Ok(()),
    }
}

/// Whether `g` is connected, has at least three vertices and no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && block_cut_tree(g).is_ok_and(|t| t.blocks.len() == 1)
}

/// Replaces `c`, a connected set with exactly two non-adjacent neighbours
/// `x`, `y` and an outerplanar closure, by at most two vertices adjacent to
/// both. Returns whether the graph changed.
pub fn rule4_replace_component(inst: &mut Instance, c: &VertexSet) -> Result<bool> {
    let g = &inst.graph;
    require_vertices(g, c.iter().copied())?;
    let nb: Vec<Vertex> = g.neighborhood(c).into_iter().collect();
    let &[x, y] = nb.as_slice() else {
        return Err(precondition(format!("component has {} neighbours, expected two", nb.len())));
    };
    if g.has_edge(x, y) {
        return Err(precondition("boundary vertices are adjacent"));
    }
    if !g.is_connected_set(c) {
        return Err(precondition("component is not connected"));
    }
    let h = g.closure(c);
    if !is_outerplanar(&h) {
        return Err(precondition("closure is not outerplanar"));
    }
    let p = h.shortest_path(x, y).expect("closure is connected");
    let on_path: VertexSet = p.iter().copied().collect();
    let pos: HashMap<Vertex, usize> = p.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let ds = h.components_avoiding(&on_path);
    let attach: Vec<Vec<usize>> = ds
        .iter()
        .map(|d| {
            let mut a: Vec<usize> = h.neighborhood(d).iter().map(|v| pos[v]).collect();
            a.sort_unstable();
            a
        })
        .collect();

    let before = (g.vertex_count(), g.edge_count());
    let m = p.len();
    let split = |inst: &mut Instance, keep: &[usize], j: usize, h_: usize| -> Result<(Vertex, Vertex)> {
        for (i, d) in ds.iter().enumerate() {
            if !keep.contains(&i) {
                inst.delete_vertices(d)?;
            }
        }
        let px = inst.contract_set(&p[..=j])?;
        let py = inst.contract_set(&p[h_..m])?;
        Ok((px, py))
    };
    // case 1: a component attached to two non-consecutive path vertices
    if let Some(i) = attach.iter().position(|a| a.last().unwrap() - a.first().unwrap() >= 2) {
        let (j, h_) = (attach[i][0], *attach[i].last().unwrap());
        split(inst, &[i], j, h_)?;
        let c1 = inst.contract_set(&p[j + 1..h_])?;
        let c2 = inst.contract_set(&ds[i])?;
        if inst.graph.has_edge(c1, c2) {
            inst.delete_edge(c1, c2)?;
        }
    } else if let Some((i1, i2)) = (0..ds.len())
        .flat_map(|a| (a + 1..ds.len()).map(move |b| (a, b)))
        .find(|&(a, b)| attach[a].iter().filter(|v| attach[b].contains(v)).count() >= 2)
    {
        // case 2: two components sharing two (consecutive) attachments
        let j = attach[i1][0];
        let (px, py) = split(inst, &[i1, i2], j, j + 1)?;
        inst.contract_set(&ds[i1])?;
        inst.contract_set(&ds[i2])?;
        if inst.graph.has_edge(px, py) {
            inst.delete_edge(px, py)?;
        }
    } else {
        // case 3: the whole component becomes one vertex
        let members: Vec<Vertex> = c.iter().copied().collect();
        inst.contract_set(&members)?;
    }
    let changed = (inst.graph.vertex_count(), inst.graph.edge_count()) != before;
    if changed {
        inst.fired(Rule::ReplaceComponent);
    }
    Ok(changed)
}

/// Contracts `c`, a component of `g - {u, v}` for an edge `uv`, whose closure
/// is outerplanar. Returns whether the graph changed.
pub fn rule5_contract_bump(inst: &mut Instance, u: Vertex, v: Vertex, c: &VertexSet) -> Result<bool> {
    let g = &inst.graph;
    require_vertices(g, c.iter().copied().chain([u, v]))?;
    if !g.has_edge(u, v) {
        return Err(precondition("bump base is not an edge"));
    }
    if c.contains(&u) || c.contains(&v) || !g.is_connected_set(c) {
        return Err(precondition("bump is not a connected set avoiding its base"));
    }
    if !g.neighborhood(c).is_subset(&VertexSet::from([u, v])) {
        return Err(precondition("bump has neighbours outside its base"));
    }
    if !is_outerplanar(&g.closure(c)) {
        return Err(precondition("closure is not outerplanar"));
    }
    if c.len() < 2 {
        return Ok(false);
    }
    let members: Vec<Vertex> = c.iter().copied().collect();
    inst.contract_set(&members)?;
    inst.fired(Rule::ContractBump);
    Ok(true)
}

/// Checks that `path` is an induced path of `g - x` whose vertices adjacent
/// to `x` are exactly `fan`, in order, with `fan` starting and ending the path.
pub fn check_fan(g: &Graph, x: Vertex, fan: &[Vertex; 5], path: &[Vertex]) -> Result<VertexSet> {
    require_vertices(g, path.iter().copied().chain([x]))?;
    if path.first() != Some(&fan[0]) || path.last() != Some(&fan[4]) || path.contains(&x) {
        return Err(invalid("fan does not start and end the path"));
    }
    let pos: HashMap<Vertex, usize> = path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if pos.len() != path.len() {
        return Err(invalid("path repeats a vertex"));
    }
    for (i, &u) in path.iter().enumerate() {
        if i + 1 < path.len() && !g.has_edge(u, path[i + 1]) {
            return Err(invalid("path uses a non-edge"));
        }
        if g.neighbors(u).any(|w| pos.get(&w).is_some_and(|&j| j > i + 1)) {
            return Err(invalid("path is not induced"));
        }
    }
    let on_x: Vec<Vertex> = path.iter().copied().filter(|&w| g.has_edge(x, w)).collect();
    if on_x != fan {
        return Err(invalid("neighbours of the hub on the path differ from the fan"));
    }
    if path.len() < 3 {
        return Err(invalid("path has no interior"));
    }
    let removed = VertexSet::from([fan[0], fan[4], x]);
    let c: VertexSet = g.component_of(path[1], &removed).into_iter().collect();
    if !is_outerplanar(&g.closure(&c)) {
        return Err(invalid("closure of the fan component is not outerplanar"));
    }
    Ok(c)
}

/// Removes the middle fan edge `x·fan[2]`.
pub fn rule6_fan(inst: &mut Instance, x: Vertex, fan: &[Vertex; 5], path: &[Vertex]) -> Result<()> {
    check_fan(&inst.graph, x, fan, path).map_err(|e| precondition(e.to_string()))?;
    inst.delete_edge(x, fan[2])?;
    inst.fired(Rule::Fan);
    Ok(())
}

/// Whether `es` is a matching in `g` such that for `i < j < k` the edges
/// `e_i` and `e_k` lie in different components of `g - V(e_j)`.
pub fn is_order_respecting(g: &Graph, es: &[Edge]) -> bool {
    let ends: VertexSet = es.iter().flat_map(|&(a, b)| [a, b]).collect();
    if ends.len() != 2 * es.len() || es.iter().any(|&(a, b)| !g.has_edge(a, b)) {
        return false;
    }
    for j in 1..es.len().saturating_sub(1) {
        let removed = VertexSet::from([es[j].0, es[j].1]);
        let left: VertexSet = es[..j].iter().flat_map(|e| g.component_of(e.0, &removed)).collect();
        if es[j + 1..].iter().any(|e| left.contains(&e.0)) {
            return false;
        }
    }
    true
}

/// Two internally disjoint paths from `e_1` to `e_l` that meet every `V(e_i)`
/// in index order, obtained by subdividing the end edges.
pub fn ladder_paths(g: &Graph, es: &[Edge]) -> Result<[Vec<Vertex>; 2]> {
    let (Some(&first), Some(&last)) = (es.first(), es.last()) else {
        return Err(precondition("empty matching"));
    };
    let top = g.max_label().unwrap_or(0);
    let (a, b) = (top + 1, top + 2);
    let mut h = g.clone();
    for (mid, (p, q)) in [(a, first), (b, last)] {
        h.remove_edge(p, q)?;
        h.add_edge(p, mid)?;
        h.add_edge(mid, q)?;
    }
    let paths = disjoint_paths(&h, a, b, 2)?;
    let [p1, p2]: [Vec<Vertex>; 2] = paths
        .try_into()
        .map_err(|_| invalid("fewer than two disjoint paths between the end edges"))?;
    let strip = |p: Vec<Vertex>| -> Result<Vec<Vertex>> {
        let inner = p[1..p.len() - 1].to_vec();
        let hits: Vec<usize> = inner
            .iter()
            .filter_map(|&v| es.iter().position(|&(s, t)| s == v || t == v))
            .collect();
        if hits != (0..es.len()).collect::<Vec<_>>() {
            return Err(invalid("ladder path misses a rung or meets rungs out of order"));
        }
        Ok(inner)
    };
    Ok([strip(p1)?, strip(p2)?])
}

/// Checks the ladder conditions on `es` and returns the component between
/// the end edges.
pub fn check_ladder(g: &Graph, es: &[Edge; 7]) -> Result<VertexSet> {
    require_vertices(g, es.iter().flat_map(|&(a, b)| [a, b]))?;
    let ends = VertexSet::from([es[0].0, es[0].1, es[6].0, es[6].1]);
    if ends.len() != 4 {
        return Err(invalid("end edges share a vertex"));
    }
    let c: VertexSet = g.component_of(es[3].0, &ends).into_iter().collect();
    if es[1..6].iter().any(|&(a, b)| !c.contains(&a) || !c.contains(&b)) {
        return Err(invalid("inner rungs leave the component"));
    }
    if g.neighborhood(&c) != ends {
        return Err(invalid("component is not attached to all end vertices"));
    }
    let h = g.closure(&c);
    if !is_biconnected(&h) || !is_outerplanar(&h) {
        return Err(invalid("closure is not biconnected outerplanar"));
    }
    if !is_order_respecting(&h, es) {
        return Err(invalid("rungs are not order-respecting"));
    }
    Ok(c)
}

/// Removes the middle rung of a ladder.
pub fn rule7_ladder(inst: &mut Instance, es: &[Edge; 7]) -> Result<()> {
    check_ladder(&inst.graph, es).map_err(|e| precondition(e.to_string()))?;
    let (u, v) = es[3];
    inst.delete_edge(u, v)?;
    inst.fired(Rule::Ladder);
    Ok(())
}
