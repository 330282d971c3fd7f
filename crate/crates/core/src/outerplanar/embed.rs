//! Outerplanar embeddings: Hamiltonian cycle, chords, interior faces and the
//! weak dual of every block.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::{edge, Edge, Graph, Vertex};

/// Weak-dual edge: two interior faces sharing a chord.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEdge {
    pub faces: (usize, usize),
    pub chord: Edge,
}

/// Embedding of one block. Blocks with fewer than three vertices have an
/// empty cycle and an empty weak dual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEmbedding {
    /// Sorted vertex list.
    pub vertices: Vec<Vertex>,
    /// Hamiltonian cycle starting at the smallest label, oriented so that
    /// `cycle[1] < cycle[n-1]`.
    pub cycle: Vec<Vertex>,
    pub chords: Vec<Edge>,
    /// Interior faces as cyclic vertex lists (weak-dual nodes).
    pub faces: Vec<Vec<Vertex>>,
    /// Weak-dual edges, one per chord.
    pub dual: Vec<DualEdge>,
}

/// Embedding of every block of an outerplanar graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterplanarEmbedding {
    /// Blocks ordered by their sorted vertex lists.
    pub blocks: Vec<BlockEmbedding>,
}

impl BlockEmbedding {
    pub(crate) fn trivial(vertices: Vec<Vertex>) -> Self {
        Self { vertices, cycle: Vec::new(), chords: Vec::new(), faces: Vec::new(), dual: Vec::new() }
    }

    /// Builds the embedding of a biconnected block from its Hamiltonian cycle
    /// and edge list. Fails if chords cross or the face count is off.
    pub(crate) fn from_cycle(mut cycle: Vec<Vertex>, edges: &[Edge]) -> Result<Self> {
        let n = cycle.len();
        let start = (0..n).min_by_key(|&i| cycle[i]).unwrap();
        cycle.rotate_left(start);
        if cycle[1] > cycle[n - 1] {
            cycle[1..].reverse();
        }
        let pos: HashMap<Vertex, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let is_cycle_edge = |(u, v): Edge| {
            let d = (pos[&u] + n - pos[&v]) % n;
            d == 1 || d == n - 1
        };
        let mut chords: Vec<Edge> = edges.iter().map(|&(u, v)| edge(u, v)).filter(|&e| !is_cycle_edge(e)).collect();
        chords.sort_unstable();
        if edges.len() - chords.len() != n {
            return Err(invalid("cycle edges missing from the block"));
        }
        check_non_crossing(&chords, &pos)?;

        // rotation: neighbours sorted by forward offset along the cycle
        let offset = |v: Vertex, w: Vertex| (pos[&w] + n - pos[&v]) % n;
        let mut rot: HashMap<Vertex, Vec<Vertex>> = HashMap::with_capacity(n);
        for &(u, v) in edges {
            rot.entry(u).or_default().push(v);
            rot.entry(v).or_default().push(u);
        }
        for (&v, list) in rot.iter_mut() {
            list.sort_by_key(|&w| offset(v, w));
        }
        let mut darts: Vec<(Vertex, Vertex)> = (0..n).map(|i| (cycle[i], cycle[(i + 1) % n])).collect();
        for &(u, v) in &chords {
            darts.push((u, v));
            darts.push((v, u));
        }
        let mut face_of: HashMap<(Vertex, Vertex), usize> = HashMap::with_capacity(darts.len());
        let mut faces = Vec::new();
        for &d in &darts {
            if face_of.contains_key(&d) {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let mut cur = d;
            loop {
                if face_of.insert(cur, id).is_some() {
                    return Err(invalid("face tracing revisited a dart"));
                }
                boundary.push(cur.0);
                let (v, w) = cur;
                let back = offset(w, v);
                let list = &rot[&w];
                let k = list.partition_point(|&x| offset(w, x) < back);
                if k == 0 {
                    return Err(invalid("face tracing left the interior"));
                }
                cur = (w, list[k - 1]);
                if cur == d {
                    break;
                }
            }
            faces.push(boundary);
        }
        if faces.len() != edges.len() - n + 1 {
            return Err(invalid("interior face count disagrees with Euler's formula"));
        }
        let dual = chords
            .iter()
            .map(|&(u, v)| DualEdge { faces: (face_of[&(u, v)], face_of[&(v, u)]), chord: (u, v) })
            .collect();
        let mut vertices = cycle.clone();
        vertices.sort_unstable();
        Ok(Self { vertices, cycle, chords, faces, dual })
    }

    pub fn is_trivial(&self) -> bool {
        self.vertices.len() < 3
    }

    /// Position of every vertex on the cycle.
    pub fn positions(&self) -> HashMap<Vertex, usize> {
        self.cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    /// All block edges (cycle edges then chords).
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.cycle.len();
        let mut out: Vec<Edge> = (0..n).map(|i| edge(self.cycle[i], self.cycle[(i + 1) % n])).collect();
        if n == 0 && self.vertices.len() == 2 {
            out.push(edge(self.vertices[0], self.vertices[1]));
        }
        out.extend(&self.chords);
        out
    }

    /// Checks the embedding invariants against the host graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.is_trivial() {
            return Ok(());
        }
        let n = self.cycle.len();
        for i in 0..n {
            if !g.has_edge(self.cycle[i], self.cycle[(i + 1) % n]) {
                return Err(invalid("cycle uses a non-edge"));
            }
        }
        let rebuilt = Self::from_cycle(self.cycle.clone(), &self.edges())?;
        if &rebuilt != self {
            return Err(invalid("embedding is not canonical"));
        }
        let m = self.edges().len();
        if self.faces.len() != m - n + 1 || self.dual.len() + 1 != self.faces.len() {
            return Err(invalid("weak dual is not a tree"));
        }
        Ok(())
    }
}

/// Stack sweep over chord intervals; touching at endpoints is allowed.
fn check_non_crossing(chords: &[Edge], pos: &HashMap<Vertex, usize>) -> Result<()> {
    let mut spans: Vec<(usize, usize)> = chords
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (pos[&u], pos[&v]);
            (a.min(b), a.max(b))
        })
        .collect();
    spans.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    let mut stack: Vec<usize> = Vec::new();
    for (s, e) in spans {
        while stack.last().is_some_and(|&top| top <= s) {
            stack.pop();
        }
        if stack.last().is_some_and(|&top| top < e) {
            return Err(invalid("chords cross"));
        }
        stack.push(e);
    }
    Ok(())
}

impl OuterplanarEmbedding {
    /// Validates every block against `g`, and that blocks cover all edges once.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut covered = 0;
        for b in &self.blocks {
            b.validate(g)?;
            covered += b.edges().len();
        }
        if covered != g.edge_count() {
            return Err(invalid("blocks do not partition the edges"));
        }
        Ok(())
    }

    /// Block embedding containing edge `uv`, if any.
    pub fn block_of_edge(&self, u: Vertex, v: Vertex) -> Option<&BlockEmbedding> {
        self.blocks
            .iter()
            .find(|b| b.vertices.binary_search(&u).is_ok() && b.vertices.binary_search(&v).is_ok())
    }
}
