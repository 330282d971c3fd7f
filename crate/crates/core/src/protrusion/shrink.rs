//! Shrinking a protrusion along its block-cut tree.

use std::collections::BTreeSet;

use crate::blockcut::{block_cut_tree, BctNode, BlockCutTree};
use crate::bounds;
use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::outerplanar::is_outerplanar;
use crate::tree_decomp::{lca_closure, RootedTree};

use super::Mode;

/// Block count above which a protrusion without pendant parts must contain a
/// long chain of blocks.
pub const MAX_BLOCKS: usize = bounds::MAX_BLOCKS as usize;

/// Outcome of [`shrink_blockcut`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shrink {
    /// A subset with at most one neighbour (pendant removal applies).
    Pendant(VertexSet),
    /// A subset `c` with neighbours exactly `{u, v}` and an outerplanar closure.
    Replace { u: Vertex, v: Vertex, c: VertexSet },
    /// Blocks of the closure with their boundaries (members with neighbours
    /// outside the block).
    Blocks(Vec<BlockSummary>),
}

/// One block of a protrusion closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSummary {
    pub vertices: Vec<Vertex>,
    pub boundary: VertexSet,
}

/// Finds a pendant or replaceable part of the protrusion `a` using the
/// block-cut tree of its closure, or summarises its blocks. Requires
/// `|N(a)| <= 4`, `g[a]` connected and an outerplanar closure.
pub fn shrink_blockcut(g: &Graph, a: &VertexSet, mode: Mode) -> Result<Shrink> {
    if let Some(&v) = a.iter().find(|&&v| !g.has_vertex(v)) {
        return Err(Error::MissingVertex(v));
    }
    let na = g.neighborhood(a);
    if na.len() > 4 {
        return Err(precondition(format!("protrusion has {} neighbours", na.len())));
    }
    if !g.is_connected_set(a) {
        return Err(precondition("protrusion is not connected"));
    }
    let h = g.closure(a);
    if !is_outerplanar(&h) {
        return Err(precondition("protrusion closure is not outerplanar"));
    }
    if na.len() <= 1 {
        return Ok(Shrink::Pendant(a.clone()));
    }
    let bct = block_cut_tree(&h)?;
    let cuts: VertexSet = bct.articulation_points.iter().copied().collect();
    let boundary = |b: &[Vertex]| -> VertexSet {
        b.iter().copied().filter(|v| na.contains(v) || cuts.contains(v)).collect()
    };
    let n = bct.node_count();
    let tree_edges = bct.index_edges();
    let mut adj = vec![Vec::new(); n];
    for &(p, q) in &tree_edges {
        adj[p].push(q);
        adj[q].push(p);
    }
    let is_terminal = |t: usize| bct.node_vertices(bct.node(t)).iter().any(|v| na.contains(v));

    // a block with more than four boundary vertices hangs a terminal-free part
    if let Some(bi) = (0..bct.blocks.len()).find(|&i| boundary(&bct.blocks[i]).len() > 4) {
        for &v in bct.blocks[bi].iter().filter(|v| cuts.contains(v)) {
            let cv = bct.index(BctNode::Cut(v));
            let side = side_vertices(&bct, &adj, cv, bi);
            if side.iter().all(|w| !na.contains(w)) {
                let mut c = side;
                c.remove(&v);
                return Ok(Shrink::Pendant(c));
            }
        }
        return Err(Error::Internal("crowded block without a terminal-free branch".into()));
    }

    let blocks = bct.blocks.len();
    if blocks > MAX_BLOCKS || (mode == Mode::Aggressive && blocks > 1) {
        let homes: BTreeSet<usize> = na.iter().map(|&v| bct.index(bct.home(v).expect("boundary lies in the closure"))).collect();
        let root = *homes.first().expect("at least two boundary vertices");
        let tree = RootedTree::new(n, &tree_edges, root)?;
        let l = lca_closure(&tree, &homes);
        let mut seen = vec![false; n];
        let mut chains = Vec::new();
        for s in 0..n {
            if seen[s] || l.contains(&s) {
                continue;
            }
            // component of the tree minus L, and its edges into L
            let mut comp = vec![s];
            let mut links = Vec::new();
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let t = comp[i];
                i += 1;
                for &w in &adj[t] {
                    if l.contains(&w) {
                        links.push((t, w));
                    } else if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            debug_assert!(comp.iter().all(|&t| !is_terminal(t)));
            let vertices: VertexSet = comp.iter().flat_map(|&t| bct.node_vertices(bct.node(t))).collect();
            let link_vertex = |(t, w): (usize, usize)| match (bct.node(t), bct.node(w)) {
                (BctNode::Cut(v), _) | (_, BctNode::Cut(v)) => v,
                _ => unreachable!("block-cut tree edges join a block and a cut"),
            };
            if links.len() == 1 {
                let mut c = vertices;
                c.remove(&link_vertex(links[0]));
                if !c.is_empty() {
                    return Ok(Shrink::Pendant(c));
                }
                continue;
            }
            let degree = |t: usize| adj[t].iter().filter(|w| !l.contains(w)).count();
            if let Some(&leaf) = comp.iter().find(|&&t| adj[t].len() == 1 && !l.contains(&adj[t][0])) {
                if comp.iter().any(|&t| degree(t) >= 3) || mode == Mode::Aggressive {
                    if let BctNode::Block(b) = bct.node(leaf) {
                        let BctNode::Cut(v) = bct.node(adj[leaf][0]) else { unreachable!() };
                        let mut c: VertexSet = bct.blocks[b].iter().copied().collect();
                        c.remove(&v);
                        return Ok(Shrink::Pendant(c));
                    }
                }
            }
            if links.len() == 2 {
                let (u, v) = (link_vertex(links[0]), link_vertex(links[1]));
                let block_nodes = comp.iter().filter(|&&t| t < bct.blocks.len()).count();
                if u != v {
                    let mut c = vertices;
                    c.remove(&u);
                    c.remove(&v);
                    if !c.is_empty() {
                        chains.push((block_nodes, u, v, c));
                    }
                }
            }
        }
        let long = chains.into_iter().find(|ch| ch.0 >= 4 || (mode == Mode::Aggressive && ch.3.len() >= 2));
        if let Some((_, u, v, c)) = long {
            return Ok(Shrink::Replace { u, v, c });
        }
        if blocks > MAX_BLOCKS {
            return Err(Error::Internal(format!("{blocks} blocks without a reducible part")));
        }
    }
    Ok(Shrink::Blocks(
        bct.blocks.iter().map(|b| BlockSummary { vertices: b.clone(), boundary: boundary(b) }).collect(),
    ))
}

/// Vertices carried by the part of the tree reached from `start` without
/// passing through node `avoid`.
fn side_vertices(bct: &BlockCutTree, adj: &[Vec<usize>], start: usize, avoid: usize) -> VertexSet {
    let mut seen = vec![false; adj.len()];
    seen[avoid] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = VertexSet::new();
    while let Some(t) = stack.pop() {
        out.extend(bct.node_vertices(bct.node(t)));
        for &w in &adj[t] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    out
}
