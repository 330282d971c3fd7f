//! Reducible structures inside a large biconnected outerplanar block.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::error::{invalid, precondition, Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex, VertexSet};
use crate::outerplanar::{embed, BlockEmbedding};

use super::rules::{check_fan, check_ladder, is_biconnected};

/// Window length (in weak-dual edges) searched for a fan or a ladder.
pub const WINDOW: usize = 25;
/// Faces with more vertices than this always contain a bump.
pub const LARGE_FACE: usize = 16;
/// Size above which a block with at most four terminals always contains a
/// reducible structure.
pub const STRUCTURE_THRESHOLD: usize = bounds::REDUCIBLE_THRESHOLD as usize;

/// A part of a block that one of the local rules shrinks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReducibleStructure {
    /// `c` is a component of `g - {u, v}` with more than two vertices.
    SmallCutPair { u: Vertex, v: Vertex, c: VertexSet },
    /// Seven order-respecting rungs; `c` lies between the end rungs.
    Ladder { rungs: [Edge; 7], c: VertexSet },
    /// Hub `x` with five spokes on the induced path `path`.
    Fan { x: Vertex, fan: [Vertex; 5], path: Vec<Vertex>, c: VertexSet },
}

impl ReducibleStructure {
    /// The component the structure acts on.
    pub fn component(&self) -> &VertexSet {
        match self {
            Self::SmallCutPair { c, .. } | Self::Ladder { c, .. } | Self::Fan { c, .. } => c,
        }
    }

    /// Checks the defining conditions in `g` with terminal set `t`.
    pub fn validate(&self, g: &Graph, t: &VertexSet) -> Result<()> {
        let c = self.component();
        if c.iter().any(|v| t.contains(v)) {
            return Err(invalid("structure component contains a terminal"));
        }
        match self {
            Self::SmallCutPair { u, v, c } => {
                let base = VertexSet::from([*u, *v]);
                if c.len() <= 2 || c.contains(u) || c.contains(v) || u == v {
                    return Err(invalid("cut pair component is too small or meets its base"));
                }
                if !g.is_connected_set(c) || g.neighborhood(c) != base {
                    return Err(invalid("cut pair component is not a component with both base neighbours"));
                }
                let mut h = g.closure(c);
                h.add_edge(*u, *v)?;
                if !is_biconnected(&h) {
                    return Err(invalid("cut pair closure plus the base edge is not biconnected"));
                }
            }
            Self::Ladder { rungs, c } => {
                if &check_ladder(g, rungs)? != c {
                    return Err(invalid("ladder component differs"));
                }
            }
            Self::Fan { x, fan, path, c } => {
                if &check_fan(g, *x, fan, path)? != c {
                    return Err(invalid("fan component differs"));
                }
            }
        }
        Ok(())
    }
}

/// Weak dual of a block as an adjacency list of `(neighbour face, chord)`.
struct Dual<'a> {
    emb: &'a BlockEmbedding,
    adj: Vec<Vec<(usize, Edge)>>,
}

impl<'a> Dual<'a> {
    fn new(emb: &'a BlockEmbedding) -> Self {
        let mut adj = vec![Vec::new(); emb.faces.len()];
        for de in &emb.dual {
            adj[de.faces.0].push((de.faces.1, de.chord));
            adj[de.faces.1].push((de.faces.0, de.chord));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { emb, adj }
    }

    /// Vertices of the faces reachable from `start` without entering `avoid`.
    fn side(&self, start: usize, avoid: usize) -> VertexSet {
        let mut out = VertexSet::new();
        let mut stack = vec![(start, avoid)];
        while let Some((f, from)) = stack.pop() {
            out.extend(self.emb.faces[f].iter().copied());
            stack.extend(self.adj[f].iter().filter(|&&(w, _)| w != from).map(|&(w, _)| (w, f)));
        }
        out
    }
}

/// Finds a validated reducible structure in the biconnected outerplanar
/// graph `b` avoiding the terminals `t` (`1 <= |t| <= 4`). Returns `None`
/// when the block is too small to be guaranteed one and none is found.
pub fn find_reducible_structure(b: &Graph, t: &VertexSet) -> Result<Option<ReducibleStructure>> {
    if t.is_empty() || t.len() > 4 {
        return Err(precondition(format!("expected one to four terminals, got {}", t.len())));
    }
    if let Some(&v) = t.iter().find(|&&v| !b.has_vertex(v)) {
        return Err(Error::MissingVertex(v));
    }
    let emb = embed(b)?;
    let [block] = emb.blocks.as_slice() else {
        return Err(precondition("graph is not biconnected"));
    };
    if block.vertices.len() != b.vertex_count() || block.is_trivial() {
        return Err(precondition("graph is not biconnected"));
    }
    let dual = Dual::new(block);
    let nf = block.faces.len();

    // f(t): smallest face through each terminal
    let mut home = vec![false; nf];
    for &v in t {
        let f = block.faces.iter().position(|face| face.contains(&v)).expect("every vertex lies on a face");
        home[f] = true;
    }

    // root the dual at a home face; count home faces per subtree
    let root = home.iter().position(|&h| h).expect("nonempty terminals");
    let mut parent = vec![usize::MAX; nf];
    let mut order = Vec::with_capacity(nf);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(f) = stack.pop() {
        order.push(f);
        for &(w, _) in &dual.adj[f] {
            if parent[w] == usize::MAX {
                parent[w] = f;
                stack.push(w);
            }
        }
    }
    let mut below = vec![0usize; nf];
    for &f in order.iter().rev() {
        below[f] += usize::from(home[f]);
        if f != root {
            below[parent[f]] += below[f];
        }
    }
    let total = below[root];
    // the spanning subtree: faces whose subtree holds a home face
    let in_span: Vec<bool> = (0..nf).map(|f| below[f] > 0).collect();
    // home faces on the far side of the chord from f to w
    let far = |f: usize, w: usize| if parent[w] == f && w != root { below[w] } else { total - below[f] };

    let found = pendant_trees(b, &dual, &in_span)
        .or_else(|| long_paths(b, &dual, &in_span, &home))
        .or_else(|| large_faces(b, block, &dual, t, &far));
    if let Some(s) = &found {
        s.validate(b, t).map_err(|e| Error::Internal(format!("found structure fails validation: {e}")))?;
    } else if b.vertex_count() > STRUCTURE_THRESHOLD {
        return Err(Error::Internal(format!(
            "no reducible structure in a block of {} vertices",
            b.vertex_count()
        )));
    }
    Ok(found)
}

/// A subtree hanging off the spanning subtree through a chord `uv` that
/// carries more than two further vertices.
fn pendant_trees(b: &Graph, dual: &Dual, in_span: &[bool]) -> Option<ReducibleStructure> {
    for f in (0..in_span.len()).filter(|&f| in_span[f]) {
        for &(w, (u, v)) in &dual.adj[f] {
            if in_span[w] {
                continue;
            }
            let mut c = dual.side(w, f);
            c.remove(&u);
            c.remove(&v);
            if c.len() > 2 {
                debug_assert!(b.neighborhood(&c).len() == 2);
                return Some(ReducibleStructure::SmallCutPair { u, v, c });
            }
        }
    }
    None
}

/// A run of `WINDOW` dual edges along the spanning subtree whose inner faces
/// have degree two there and hold no terminal: yields a fan or a ladder.
fn long_paths(b: &Graph, dual: &Dual, in_span: &[bool], home: &[bool]) -> Option<ReducibleStructure> {
    let span_deg = |f: usize| dual.adj[f].iter().filter(|&&(w, _)| in_span[w]).count();
    let important = |f: usize| home[f] || span_deg(f) != 2;
    for start in (0..in_span.len()).filter(|&f| in_span[f] && important(f)) {
        for &(first, chord) in &dual.adj[start] {
            if !in_span[first] {
                continue;
            }
            let mut faces = vec![start, first];
            let mut chords = vec![chord];
            while chords.len() < WINDOW {
                let cur = *faces.last().unwrap();
                if important(cur) {
                    break;
                }
                let prev = faces[faces.len() - 2];
                let &(next, ch) = dual.adj[cur].iter().find(|&&(w, _)| in_span[w] && w != prev).expect("degree two");
                faces.push(next);
                chords.push(ch);
            }
            if chords.len() == WINDOW && faces[1..WINDOW].iter().all(|&f| !important(f)) {
                return Some(window_structure(b, dual, &faces, &chords));
            }
        }
    }
    None
}

fn window_structure(b: &Graph, dual: &Dual, faces: &[usize], chords: &[Edge]) -> ReducibleStructure {
    let shared = |e: Edge, f: Edge| [e.0, e.1].into_iter().find(|&v| v == f.0 || v == f.1);
    for i in 0..=5 {
        let (e, f) = (chords[4 * i], chords[4 * i + 4]);
        let Some(x) = shared(e, f) else { continue };
        let other = |e: Edge| if e.0 == x { e.1 } else { e.0 };
        let fan: [Vertex; 5] = std::array::from_fn(|j| other(chords[4 * i + j]));
        let mut keep: VertexSet = faces[4 * i + 1..=4 * i + 4]
            .iter()
            .flat_map(|&fc| dual.emb.faces[fc].iter().copied())
            .collect();
        keep.remove(&x);
        let path = b.induced(&keep).shortest_path(fan[0], fan[4]).unwrap_or_default();
        let removed = VertexSet::from([fan[0], fan[4], x]);
        let c = path.get(1).map(|&p| b.component_of(p, &removed).into_iter().collect()).unwrap_or_default();
        return ReducibleStructure::Fan { x, fan, path, c };
    }
    let rungs: [Edge; 7] = std::array::from_fn(|j| edge(chords[4 * j].0, chords[4 * j].1));
    let ends = VertexSet::from([rungs[0].0, rungs[0].1, rungs[6].0, rungs[6].1]);
    let c = b.component_of(rungs[3].0, &ends).into_iter().collect();
    ReducibleStructure::Ladder { rungs, c }
}

/// A face with more than `LARGE_FACE` vertices has a five-vertex boundary run
/// whose inner three vertices avoid terminals and portals.
fn large_faces(
    b: &Graph,
    block: &BlockEmbedding,
    dual: &Dual,
    t: &VertexSet,
    far: &dyn Fn(usize, usize) -> usize,
) -> Option<ReducibleStructure> {
    for (f, face) in block.faces.iter().enumerate() {
        let m = face.len();
        if m <= LARGE_FACE {
            continue;
        }
        let chord_face: HashMap<Edge, usize> = dual.adj[f].iter().map(|&(w, ch)| (ch, w)).collect();
        let mut blocked: VertexSet = face.iter().copied().filter(|v| t.contains(v)).collect();
        for i in 0..m {
            let e = edge(face[i], face[(i + 1) % m]);
            if chord_face.get(&e).is_some_and(|&w| far(f, w) > 0) {
                blocked.insert(e.0);
                blocked.insert(e.1);
            }
        }
        for i in 0..m {
            if (1..=3).all(|j| !blocked.contains(&face[(i + j) % m])) {
                let (u, v) = (face[i], face[(i + 4) % m]);
                let c = b.component_of(face[(i + 1) % m], &VertexSet::from([u, v])).into_iter().collect();
                return Some(ReducibleStructure::SmallCutPair { u, v, c });
            }
        }
    }
    None
}
