//! Outerplanarity: recognition, embeddings, K4/K2,3 witnesses and the
//! structural predicates used by rule preconditions.

mod embed;
mod engine;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use embed::{BlockEmbedding, DualEdge, OuterplanarEmbedding};

use crate::compact::{Compact, RawBlock};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// The two forbidden minors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MinorKind {
    K4,
    K23,
}

impl fmt::Display for MinorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MinorKind::K4 => "K4",
            MinorKind::K23 => "K2,3",
        })
    }
}

impl MinorKind {
    /// The pattern graph on labels `1..=4` or `1..=5` (hubs 1, 2).
    pub fn graph(self) -> Graph {
        match self {
            MinorKind::K4 => Graph::complete(4),
            MinorKind::K23 => Graph::complete_bipartite(2, 3),
        }
    }

    /// Pairs of branch-set indices that must be adjacent.
    pub fn required_pairs(self) -> Vec<(usize, usize)> {
        match self {
            MinorKind::K4 => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            MinorKind::K23 => (0..2).flat_map(|h| (2..5).map(move |j| (h, j))).collect(),
        }
    }

    pub fn branch_count(self) -> usize {
        match self {
            MinorKind::K4 => 4,
            MinorKind::K23 => 5,
        }
    }
}

/// A K4 or K2,3 minor model. For K2,3 the first two sets are the hubs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub kind: MinorKind,
    /// Disjoint connected vertex sets, each sorted.
    pub branch_sets: Vec<Vec<Vertex>>,
}

impl Obstruction {
    /// Checks that the branch sets form a minor model in `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.branch_sets.len() != self.kind.branch_count() {
            return Err(invalid("wrong number of branch sets"));
        }
        let mut seen = VertexSet::new();
        for set in &self.branch_sets {
            let s: VertexSet = set.iter().copied().collect();
            if s.is_empty() || !g.is_connected_set(&s) {
                return Err(invalid("branch set is empty or disconnected"));
            }
            if s.iter().any(|v| !seen.insert(*v)) {
                return Err(invalid("branch sets overlap"));
            }
        }
        for (i, j) in self.kind.required_pairs() {
            let other: VertexSet = self.branch_sets[j].iter().copied().collect();
            let linked = self.branch_sets[i].iter().any(|&v| g.neighbors(v).any(|w| other.contains(&w)));
            if !linked {
                return Err(invalid(format!("branch sets {i} and {j} are not adjacent")));
            }
        }
        Ok(())
    }

    /// Union of all branch sets.
    pub fn vertices(&self) -> VertexSet {
        self.branch_sets.iter().flatten().copied().collect()
    }
}

/// Outcome of recognition.
pub type Recognition = std::result::Result<OuterplanarEmbedding, Obstruction>;

/// Local edge list of a block, vertices renumbered by their position in
/// `block.vertices`.
fn local_edges(c: &Compact, block: &RawBlock) -> Vec<(u32, u32)> {
    let local = |x: u32| block.vertices.binary_search(&x).unwrap() as u32;
    block
        .edges
        .iter()
        .map(|&id| {
            let (a, b) = c.ends[id as usize];
            (local(a), local(b))
        })
        .collect()
}

/// Hamiltonian cycle (global indices) of a block with at least 3 vertices.
fn raw_block_cycle(c: &Compact, block: &RawBlock) -> Option<Vec<u32>> {
    let cycle = engine::block_cycle(block.vertices.len(), &local_edges(c, block))?;
    Some(cycle.into_iter().map(|i| block.vertices[i as usize]).collect())
}

fn block_ok(c: &Compact, block: &RawBlock) -> bool {
    block.vertices.len() < 3 || raw_block_cycle(c, block).is_some()
}

/// First non-outerplanar block of the active subgraph.
pub(crate) fn failing_block(c: &Compact, vmask: &[bool], emask: Option<&[bool]>) -> Option<RawBlock> {
    c.blocks(vmask, emask).into_iter().find(|b| !block_ok(c, b))
}

pub(crate) fn mask_is_outerplanar(c: &Compact, vmask: &[bool]) -> bool {
    failing_block(c, vmask, None).is_none()
}

/// Whether `g` is outerplanar.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n >= 2 && g.edge_count() > 2 * n - 3 {
        return false;
    }
    let c = Compact::new(g);
    mask_is_outerplanar(&c, &vec![true; c.n()])
}

/// Embedding of every block, or a K4/K2,3 witness.
pub fn recognize(g: &Graph) -> Recognition {
    let c = Compact::new(g);
    let vmask = vec![true; c.n()];
    let mut blocks = Vec::new();
    for block in c.blocks(&vmask, None) {
        let labels: Vec<Vertex> = block.vertices.iter().map(|&i| c.label(i)).collect();
        if labels.len() < 3 {
            blocks.push(BlockEmbedding::trivial(labels));
            continue;
        }
        let embedded = raw_block_cycle(&c, &block).and_then(|cycle| {
            let cycle: Vec<Vertex> = cycle.into_iter().map(|i| c.label(i)).collect();
            let edges: Vec<_> = block
                .edges
                .iter()
                .map(|&id| {
                    let (a, b) = c.ends[id as usize];
                    (c.label(a), c.label(b))
                })
                .collect();
            BlockEmbedding::from_cycle(cycle, &edges).ok()
        });
        match embedded {
            Some(e) => blocks.push(e),
            None => return Err(extract_obstruction(&c, &block)),
        }
    }
    Ok(OuterplanarEmbedding { blocks })
}

/// Embedding or an error carrying the witness.
pub fn embed(g: &Graph) -> Result<OuterplanarEmbedding> {
    recognize(g).map_err(|o| Error::NotOuterplanar(Box::new(o)))
}

/// A K4/K2,3 witness when `g` is not outerplanar.
pub fn find_obstruction(g: &Graph) -> Option<Obstruction> {
    let c = Compact::new(g);
    let block = failing_block(&c, &vec![true; c.n()], None)?;
    Some(extract_obstruction(&c, &block))
}

/// Vertex-minimal non-outerplanar vertex set inside the active subgraph
/// (global indices, sorted). Every outerplanar deletion set meets it.
pub(crate) fn minimal_obstruction_vertices(c: &Compact, vmask: &[bool]) -> Option<Vec<u32>> {
    let block = failing_block(c, vmask, None)?;
    let mut mask = vec![false; c.n()];
    for &v in &block.vertices {
        mask[v as usize] = true;
    }
    let mut set = block.vertices;
    let mut chunk = set.len() / 2;
    loop {
        let chunk_len = chunk.max(1);
        let mut i = 0;
        while i < set.len() {
            let end = (i + chunk_len).min(set.len());
            for &v in &set[i..end] {
                mask[v as usize] = false;
            }
            if failing_block(c, &mask, None).is_some() {
                set.drain(i..end);
            } else {
                for &v in &set[i..end] {
                    mask[v as usize] = true;
                }
                i = end;
            }
        }
        if chunk <= 1 {
            break;
        }
        chunk /= 2;
    }
    Some(set)
}

/// Edge-minimal non-outerplanar edge set on the active vertices.
fn minimal_obstruction_edges(c: &Compact, vmask: &[bool]) -> Vec<u32> {
    let mut emask = vec![false; c.m()];
    let mut set: Vec<u32> = Vec::new();
    for (id, &(a, b)) in c.ends.iter().enumerate() {
        if vmask[a as usize] && vmask[b as usize] {
            emask[id] = true;
            set.push(id as u32);
        }
    }
    let mut chunk = set.len() / 2;
    loop {
        let chunk_len = chunk.max(1);
        let mut i = 0;
        while i < set.len() {
            let end = (i + chunk_len).min(set.len());
            for &e in &set[i..end] {
                emask[e as usize] = false;
            }
            if failing_block(c, vmask, Some(&emask)).is_some() {
                set.drain(i..end);
            } else {
                for &e in &set[i..end] {
                    emask[e as usize] = true;
                }
                i = end;
            }
        }
        if chunk <= 1 {
            break;
        }
        chunk /= 2;
    }
    set
}

fn extract_obstruction(c: &Compact, block: &RawBlock) -> Obstruction {
    let mut vmask = vec![false; c.n()];
    for &v in &block.vertices {
        vmask[v as usize] = true;
    }
    let vertices = minimal_obstruction_vertices(c, &vmask).unwrap_or_else(|| block.vertices.clone());
    let mut vmask = vec![false; c.n()];
    for &v in &vertices {
        vmask[v as usize] = true;
    }
    let edges = minimal_obstruction_edges(c, &vmask);
    let mut sub = Graph::new();
    for &id in &edges {
        let (a, b) = c.ends[id as usize];
        sub.add_edge(c.label(a), c.label(b)).unwrap();
    }
    if let Some(o) = decode_subdivision(&sub) {
        if o.validate(&sub).is_ok() {
            return o;
        }
    }
    crate::oracle::find_minor_model(&sub)
        .expect("a non-outerplanar graph has a K4 or K2,3 minor model")
}

/// Reads branch sets off a subdivision of K4 or K2,3.
fn decode_subdivision(h: &Graph) -> Option<Obstruction> {
    let branch: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) == 3).collect();
    if h.vertices().any(|v| h.degree(v) != 2 && h.degree(v) != 3) {
        return None;
    }
    // every maximal thread between branch vertices, as (start, interior, end)
    let mut threads = Vec::new();
    for &s in &branch {
        for first in h.neighbors(s) {
            let mut interior = Vec::new();
            let (mut prev, mut cur) = (s, first);
            while h.degree(cur) == 2 {
                interior.push(cur);
                let next = h.neighbors(cur).find(|&w| w != prev)?;
                prev = cur;
                cur = next;
            }
            if s < cur {
                threads.push((s, interior, cur));
            }
        }
    }
    match branch.len() {
        4 => {
            let mut sets: Vec<Vec<Vertex>> = branch.iter().map(|&b| vec![b]).collect();
            for (s, interior, _) in threads {
                let i = branch.iter().position(|&b| b == s)?;
                sets[i].extend(interior);
            }
            for s in &mut sets {
                s.sort_unstable();
            }
            Some(Obstruction { kind: MinorKind::K4, branch_sets: sets })
        }
        2 => {
            let mut sets = vec![vec![branch[0]], vec![branch[1]]];
            let mut middles: Vec<Vec<Vertex>> = threads.into_iter().map(|(_, mut i, _)| {
                i.sort_unstable();
                i
            }).collect();
            middles.sort();
            if middles.len() != 3 || middles.iter().any(|m| m.is_empty()) {
                return None;
            }
            sets.extend(middles);
            Some(Obstruction { kind: MinorKind::K23, branch_sets: sets })
        }
        _ => None,
    }
}

/// Number of components of `g - {u, v}` adjacent to both `u` and `v`, capped
/// at `limit`: the internally disjoint induced `u`-`v` paths of `g - uv`.
pub fn count_induced_uv_paths(g: &Graph, u: Vertex, v: Vertex, limit: usize) -> Result<usize> {
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    for x in [u, v] {
        if !g.has_vertex(x) {
            return Err(Error::MissingVertex(x));
        }
    }
    let removed: VertexSet = [u, v].into();
    let count = g
        .components_avoiding(&removed)
        .into_iter()
        .filter(|comp| {
            let touches = |x: Vertex| comp.iter().any(|&w| g.has_edge(x, w));
            touches(u) && touches(v)
        })
        .count();
    Ok(count.min(limit))
}

/// The two-part edge criterion: every component `C` of `g - V(e)` has
/// outerplanar `g⟨C⟩`, and fewer than three induced disjoint endpoint paths
/// exist. Equivalent to outerplanarity of `g`.
pub fn check_edge_removal_criterion(g: &Graph, e: (Vertex, Vertex)) -> Result<bool> {
    let (u, v) = e;
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    let removed: VertexSet = [u, v].into();
    let parts_ok = g
        .components_avoiding(&removed)
        .iter()
        .all(|comp| is_outerplanar(&g.closure(comp)));
    Ok(parts_ok && count_induced_uv_paths(&g.without_edge(u, v), u, v, 3)? < 3)
}

/// Whether every component of `g - V(cycle)` sees at most two cycle vertices,
/// and two only when they are consecutive on the cycle.
pub fn cycle_attachment_check(g: &Graph, cycle: &[Vertex]) -> Result<bool> {
    let n = cycle.len();
    let on: VertexSet = cycle.iter().copied().collect();
    if n < 3 || on.len() != n || (0..n).any(|i| !g.has_edge(cycle[i], cycle[(i + 1) % n])) {
        return Err(invalid("input is not a cycle of the graph"));
    }
    let pos = |x: Vertex| cycle.iter().position(|&c| c == x).unwrap();
    for comp in g.components_avoiding(&on) {
        let attach: Vec<Vertex> = g.neighborhood(&comp).into_iter().collect();
        match attach.len() {
            0 | 1 => {}
            2 => {
                let d = (pos(attach[0]) + n - pos(attach[1])) % n;
                if d != 1 && d != n - 1 {
                    return Ok(false);
                }
            }
            _ => return Ok(false),
        }
    }
    Ok(true)
}
