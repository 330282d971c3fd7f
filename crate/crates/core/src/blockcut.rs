//! Biconnected components and block-cut trees.

use std::collections::{BTreeMap, BTreeSet};

use crate::compact::Compact;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Node of a block-cut tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BctNode {
    Block(usize),
    Cut(Vertex),
}

/// Block-cut tree of a connected graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockCutTree {
    /// Sorted vertex lists, ordered by smallest vertex.
    pub blocks: Vec<Vec<Vertex>>,
    pub articulation_points: Vec<Vertex>,
    /// `(block index, articulation vertex)` with the vertex in the block.
    pub edges: Vec<(usize, Vertex)>,
}

/// Biconnected components of any graph; isolated vertices are singleton blocks.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let c = Compact::new(g);
    let mask = vec![true; c.n()];
    c.blocks(&mask, None)
        .into_iter()
        .map(|b| b.vertices.into_iter().map(|i| c.label(i)).collect())
        .collect()
}

/// Articulation points of any graph.
pub fn articulation_points(g: &Graph) -> VertexSet {
    let mut seen = VertexSet::new();
    let mut cut = VertexSet::new();
    for block in biconnected_components(g) {
        for v in block {
            if !seen.insert(v) {
                cut.insert(v);
            }
        }
    }
    cut
}

/// Block-cut tree of a connected graph.
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let blocks = biconnected_components(g);
    let mut count: BTreeMap<Vertex, usize> = BTreeMap::new();
    for b in &blocks {
        for &v in b {
            *count.entry(v).or_default() += 1;
        }
    }
    let articulation_points: Vec<Vertex> = count.iter().filter(|(_, &c)| c > 1).map(|(&v, _)| v).collect();
    let cuts: BTreeSet<Vertex> = articulation_points.iter().copied().collect();
    let mut edges = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            if cuts.contains(&v) {
                edges.push((i, v));
            }
        }
    }
    Ok(BlockCutTree { blocks, articulation_points, edges })
}

impl BlockCutTree {
    pub fn node_count(&self) -> usize {
        self.blocks.len() + self.articulation_points.len()
    }

    /// Dense node index: blocks first, then articulation points.
    pub fn index(&self, node: BctNode) -> usize {
        match node {
            BctNode::Block(i) => i,
            BctNode::Cut(v) => self.blocks.len() + self.articulation_points.binary_search(&v).unwrap(),
        }
    }

    pub fn node(&self, index: usize) -> BctNode {
        if index < self.blocks.len() {
            BctNode::Block(index)
        } else {
            BctNode::Cut(self.articulation_points[index - self.blocks.len()])
        }
    }

    /// Edges in dense-index form.
    pub fn index_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(b, v)| (b, self.index(BctNode::Cut(v))))
            .collect()
    }

    /// Vertices of the graph carried by a node.
    pub fn node_vertices(&self, node: BctNode) -> Vec<Vertex> {
        match node {
            BctNode::Block(i) => self.blocks[i].clone(),
            BctNode::Cut(v) => vec![v],
        }
    }

    /// The node "closest" to a vertex: its articulation node if it has one,
    /// otherwise its unique block.
    pub fn home(&self, v: Vertex) -> Option<BctNode> {
        if self.articulation_points.binary_search(&v).is_ok() {
            return Some(BctNode::Cut(v));
        }
        self.blocks.iter().position(|b| b.binary_search(&v).is_ok()).map(BctNode::Block)
    }
}
