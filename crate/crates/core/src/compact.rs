//! Index-based snapshot of a [`Graph`] used by the hot loops (recognition,
//! flows, biconnectivity). Indices follow ascending label order.

use crate::graph::{Graph, Vertex};

pub(crate) const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Compact {
    pub labels: Vec<Vertex>,
    /// `(neighbour, edge id)`, sorted by neighbour.
    pub adj: Vec<Vec<(u32, u32)>>,
    pub ends: Vec<(u32, u32)>,
}

/// A biconnected component given by local vertex and edge ids.
#[derive(Clone, Debug, Default)]
pub(crate) struct RawBlock {
    pub vertices: Vec<u32>,
    pub edges: Vec<u32>,
}

impl Compact {
    pub fn new(g: &Graph) -> Self {
        let labels: Vec<Vertex> = g.vertices().collect();
        let mut adj = vec![Vec::new(); labels.len()];
        let mut ends = Vec::with_capacity(g.edge_count());
        for (u, v) in g.edges() {
            let a = labels.binary_search(&u).unwrap() as u32;
            let b = labels.binary_search(&v).unwrap() as u32;
            let id = ends.len() as u32;
            ends.push((a, b));
            adj[a as usize].push((b, id));
            adj[b as usize].push((a, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { labels, adj, ends }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn index(&self, v: Vertex) -> Option<u32> {
        self.labels.binary_search(&v).ok().map(|i| i as u32)
    }

    pub fn label(&self, i: u32) -> Vertex {
        self.labels[i as usize]
    }

    /// Biconnected components of the active subgraph (iterative Tarjan).
    /// Isolated active vertices form single-vertex blocks. Blocks come out
    /// with sorted vertex lists, ordered by their smallest vertex.
    pub fn blocks(&self, vmask: &[bool], emask: Option<&[bool]>) -> Vec<RawBlock> {
        let n = self.n();
        let edge_on = |id: u32| emask.is_none_or(|e| e[id as usize]);
        let mut disc = vec![NONE; n];
        let mut low = vec![0u32; n];
        let mut time = 0u32;
        let mut out = Vec::new();
        let mut edge_stack: Vec<u32> = Vec::new();
        let mut stamp = vec![NONE; n];
        // frame: (vertex, parent edge, next adjacency index)
        let mut frames: Vec<(u32, u32, usize)> = Vec::new();
        for root in 0..n {
            if !vmask[root] || disc[root] != NONE {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let has_edge = self.adj[root]
                .iter()
                .any(|&(w, id)| vmask[w as usize] && edge_on(id));
            if !has_edge {
                out.push(RawBlock { vertices: vec![root as u32], edges: Vec::new() });
                continue;
            }
            frames.push((root as u32, NONE, 0));
            while let Some(frame) = frames.last_mut() {
                let v = frame.0 as usize;
                if frame.2 < self.adj[v].len() {
                    let (w, id) = self.adj[v][frame.2];
                    frame.2 += 1;
                    if !vmask[w as usize] || !edge_on(id) || id == frame.1 {
                        continue;
                    }
                    let wi = w as usize;
                    if disc[wi] == NONE {
                        edge_stack.push(id);
                        disc[wi] = time;
                        low[wi] = time;
                        time += 1;
                        frames.push((w, id, 0));
                    } else if disc[wi] < disc[v] {
                        edge_stack.push(id);
                        low[v] = low[v].min(disc[wi]);
                    }
                } else {
                    let (_, pe, _) = frames.pop().unwrap();
                    if let Some(parent) = frames.last() {
                        let u = parent.0 as usize;
                        low[u] = low[u].min(low[v]);
                        if low[v] >= disc[u] {
                            let mut block = RawBlock::default();
                            let tag = out.len() as u32;
                            while let Some(id) = edge_stack.pop() {
                                block.edges.push(id);
                                let (a, b) = self.ends[id as usize];
                                for x in [a, b] {
                                    if stamp[x as usize] != tag {
                                        stamp[x as usize] = tag;
                                        block.vertices.push(x);
                                    }
                                }
                                if id == pe {
                                    break;
                                }
                            }
                            block.vertices.sort_unstable();
                            block.edges.sort_unstable();
                            out.push(block);
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        out
    }
}
