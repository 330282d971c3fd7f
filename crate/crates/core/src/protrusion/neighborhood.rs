//! Neighbourhood paths and irrelevant modulator edges.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::bounds;
use crate::error::{invalid, precondition, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::Instance;
use crate::modulator::OpDecomposition;
use crate::outerplanar::is_outerplanar;
use crate::stats::Rule;

/// Induced path in `g - x` containing every neighbour of `x`, listed from the
/// smaller endpoint. Requires `g` outerplanar and `g - x` connected.
pub fn neighborhood_path(g: &Graph, x: Vertex) -> Result<Vec<Vertex>> {
    if !g.has_vertex(x) {
        return Err(Error::MissingVertex(x));
    }
    if !is_outerplanar(g) {
        return Err(precondition("graph is not outerplanar"));
    }
    let h = g.without(&[x]);
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let nx: VertexSet = g.neighbors(x).collect();
    let Some(&root) = nx.first() else {
        return Ok(Vec::new());
    };

    // BFS spanning tree of g - x, then prune leaves outside N(x)
    let mut tree: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    let mut seen = VertexSet::from([root]);
    let mut queue = VecDeque::from([root]);
    tree.insert(root, Vec::new());
    while let Some(a) = queue.pop_front() {
        for b in h.neighbors(a) {
            if seen.insert(b) {
                tree.entry(a).or_default().push(b);
                tree.entry(b).or_default().push(a);
                queue.push_back(b);
            }
        }
    }
    let mut leaves: Vec<Vertex> = tree.iter().filter(|(v, a)| a.len() <= 1 && !nx.contains(v)).map(|(&v, _)| v).collect();
    while let Some(v) = leaves.pop() {
        let Some(adj) = tree.remove(&v) else { continue };
        for w in adj {
            let list = tree.get_mut(&w).expect("tree is symmetric");
            list.retain(|&u| u != v);
            if list.len() <= 1 && !nx.contains(&w) {
                leaves.push(w);
            }
        }
    }
    if tree.values().any(|a| a.len() > 2) {
        return Err(invalid("pruned spanning tree is not a path"));
    }
    let start = *tree.iter().find(|(_, a)| a.len() <= 1).expect("a finite tree has a leaf").0;
    let mut path = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(&next) = tree[&cur].iter().find(|&&w| Some(w) != prev) {
        path.push(next);
        prev = Some(cur);
        cur = next;
    }

    // shortcut chords that skip no neighbour of x
    loop {
        let pos: HashMap<Vertex, usize> = path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut before = vec![0usize; path.len() + 1];
        for (i, v) in path.iter().enumerate() {
            before[i + 1] = before[i] + usize::from(nx.contains(v));
        }
        let cut = path.iter().enumerate().find_map(|(i, &u)| {
            h.neighbors(u)
                .filter_map(|w| pos.get(&w).copied())
                .filter(|&j| j > i + 1 && before[j] == before[i + 1])
                .max()
                .map(|j| (i, j))
        });
        match cut {
            Some((i, j)) => {
                path.drain(i + 1..j);
            }
            None => break,
        }
    }
    let pos: HashMap<Vertex, usize> = path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for (i, &u) in path.iter().enumerate() {
        if h.neighbors(u).any(|w| pos.get(&w).is_some_and(|&j| j > i + 1)) {
            return Err(invalid("neighbourhood path has a chord around a neighbour"));
        }
    }
    if path.first() > path.last() {
        path.reverse();
    }
    Ok(path)
}

/// Looks for an irrelevant edge between `x` and the component `comp` of
/// `g - (X ∪ Z)` and removes the first one found.
pub fn rule3_irrelevant_edge(
    inst: &mut Instance,
    od: &OpDecomposition,
    x: Vertex,
    comp: &[Vertex],
) -> Result<Option<(Vertex, Vertex)>> {
    let g = &inst.graph;
    let cset: VertexSet = comp.iter().copied().collect();
    let in_comp = cset.iter().filter(|&&w| g.has_edge(x, w)).count();
    if in_comp == 0 {
        return Ok(None);
    }
    let mut keep = cset.clone();
    keep.extend(g.neighborhood(&cset).intersection(&od.z).copied());
    keep.insert(x);
    let cplus = g.induced(&keep);
    let path = neighborhood_path(&cplus, x)?;
    let fan: Vec<Vertex> = path.iter().copied().filter(|&w| cplus.has_edge(x, w)).collect();
    let pos: HashMap<Vertex, usize> = path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for i in 0..fan.len().saturating_sub(4) {
        let (a, b) = (fan[i], fan[i + 4]);
        let inner = path[pos[&a] + 1];
        let removed = VertexSet::from([a, b, x]);
        let ci = cplus.component_of(inner, &removed);
        if ci.iter().all(|w| !od.z.contains(w)) {
            let target = fan[i + 2];
            inst.delete_edge(x, target)?;
            inst.fired(Rule::IrrelevantEdge);
            return Ok(Some((x, target)));
        }
    }
    if in_comp > bounds::MAX_COMPONENT_NEIGHBORS {
        return Err(Error::Internal(format!(
            "vertex {x} keeps {in_comp} neighbours in the component at {} without an irrelevant edge",
            comp[0]
        )));
    }
    Ok(None)
}
