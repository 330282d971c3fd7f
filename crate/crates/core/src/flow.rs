//! Vertex-disjoint paths and minimum vertex separators (Menger) via
//! unit-capacity max-flow on the vertex-split network.

use std::collections::VecDeque;

use crate::compact::{Compact, NONE};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

const INF: i32 = i32::MAX / 4;

#[derive(Clone, Copy, Debug)]
struct Arc {
    to: u32,
    cap: i32,
    /// Initial capacity; zero for residual partners.
    orig: i32,
    rev: u32,
}

/// Vertex-split flow network between two disjoint vertex sets.
struct Network {
    arcs: Vec<Vec<Arc>>,
    source: usize,
    sink: usize,
}

impl Network {
    fn add(&mut self, a: usize, b: usize, cap: i32) {
        let ra = self.arcs[b].len() as u32;
        let rb = self.arcs[a].len() as u32;
        self.arcs[a].push(Arc { to: b as u32, cap, orig: cap, rev: ra });
        self.arcs[b].push(Arc { to: a as u32, cap: 0, orig: 0, rev: rb });
    }

    /// Builds the network on the active part of `c`. Vertex `i` splits into
    /// `2i` (in) and `2i+1` (out) with capacity 1, terminals get infinite
    /// capacity. Edge `skip` is left out.
    fn build(c: &Compact, active: &[bool], skip: Option<u32>, sources: &[u32], sinks: &[u32]) -> Self {
        let n = c.n();
        let mut role = vec![0u8; n];
        for &s in sources {
            role[s as usize] = 1;
        }
        for &t in sinks {
            role[t as usize] = 2;
        }
        let mut net = Network { arcs: vec![Vec::new(); 2 * n + 2], source: 2 * n, sink: 2 * n + 1 };
        for i in 0..n {
            if !active[i] {
                continue;
            }
            match role[i] {
                1 => {
                    net.add(net.source, 2 * i, INF);
                    net.add(2 * i, 2 * i + 1, INF);
                }
                2 => net.add(2 * i, net.sink, INF),
                _ => net.add(2 * i, 2 * i + 1, 1),
            }
        }
        for (id, &(a, b)) in c.ends.iter().enumerate() {
            let (a, b) = (a as usize, b as usize);
            if Some(id as u32) == skip || !active[a] || !active[b] {
                continue;
            }
            if role[b] != 1 && role[a] != 2 {
                net.add(2 * a + 1, 2 * b, INF);
            }
            if role[a] != 1 && role[b] != 2 {
                net.add(2 * b + 1, 2 * a, INF);
            }
        }
        net
    }

    fn augment(&mut self) -> bool {
        let mut prev: Vec<(u32, u32)> = vec![(NONE, NONE); self.arcs.len()];
        prev[self.source] = (self.source as u32, NONE);
        let mut queue = VecDeque::from([self.source]);
        while let Some(v) = queue.pop_front() {
            if v == self.sink {
                break;
            }
            for (k, arc) in self.arcs[v].iter().enumerate() {
                let w = arc.to as usize;
                if arc.cap > 0 && prev[w].0 == NONE {
                    prev[w] = (v as u32, k as u32);
                    queue.push_back(w);
                }
            }
        }
        if prev[self.sink].0 == NONE {
            return false;
        }
        let mut w = self.sink;
        while w != self.source {
            let (v, k) = prev[w];
            let (v, k) = (v as usize, k as usize);
            self.arcs[v][k].cap -= 1;
            let rev = self.arcs[v][k].rev as usize;
            self.arcs[w][rev].cap += 1;
            w = v;
        }
        true
    }

    fn max_flow(&mut self, cap: usize) -> usize {
        let mut flow = 0;
        while flow < cap && self.augment() {
            flow += 1;
        }
        flow
    }

    fn residual_reach(&self) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(v) = queue.pop_front() {
            for arc in &self.arcs[v] {
                if arc.cap > 0 && !seen[arc.to as usize] {
                    seen[arc.to as usize] = true;
                    queue.push_back(arc.to as usize);
                }
            }
        }
        seen
    }

    /// Vertices whose split arc is saturated and crosses the residual cut.
    fn separator(&self, n: usize) -> Vec<u32> {
        let seen = self.residual_reach();
        (0..n).filter(|&i| seen[2 * i] && !seen[2 * i + 1]).map(|i| i as u32).collect()
    }

    /// Decomposes the current flow into vertex sequences (graph indices).
    /// Consumes the flow.
    fn paths(&mut self, n: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        loop {
            let mut path = Vec::new();
            let mut v = self.source;
            while v != self.sink {
                let Some(k) = self.arcs[v].iter().position(|a| a.orig > 0 && a.cap < a.orig) else {
                    return out;
                };
                self.arcs[v][k].cap += 1;
                let w = self.arcs[v][k].to as usize;
                if w < 2 * n && w.is_multiple_of(2) {
                    path.push((w / 2) as u32);
                }
                v = w;
            }
            out.push(path);
        }
    }
}

/// Result of a bounded Menger computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPaths {
    /// `min(cap, number of internally disjoint u-v paths)`; the edge `uv`
    /// itself counts as one path.
    pub count: usize,
    /// Minimum `(u,v)`-separator, present when `count < cap` and `uv` is not an edge.
    pub separator: Option<Vec<Vertex>>,
}

fn endpoints(c: &Compact, u: Vertex, v: Vertex) -> Result<(u32, u32)> {
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    let a = c.index(u).ok_or(Error::MissingVertex(u))?;
    let b = c.index(v).ok_or(Error::MissingVertex(v))?;
    Ok((a, b))
}

/// Maximum number of internally vertex-disjoint `u`-`v` paths, capped.
pub fn max_disjoint_paths(g: &Graph, u: Vertex, v: Vertex, cap: usize) -> Result<DisjointPaths> {
    let c = Compact::new(g);
    let (a, b) = endpoints(&c, u, v)?;
    let direct = g.has_edge(u, v);
    if direct && cap <= 1 {
        return Ok(DisjointPaths { count: cap, separator: None });
    }
    let skip = direct.then(|| c.adj[a as usize].iter().find(|&&(w, _)| w == b).unwrap().1);
    let active = vec![true; c.n()];
    let mut net = Network::build(&c, &active, skip, &[a], &[b]);
    let budget = cap - usize::from(direct);
    let flow = net.max_flow(budget);
    let count = flow + usize::from(direct);
    let separator = (!direct && count < cap)
        .then(|| net.separator(c.n()).into_iter().map(|i| c.label(i)).collect());
    Ok(DisjointPaths { count, separator })
}

/// Up to `cap` internally disjoint `u`-`v` paths of `g - uv`, each listed
/// from `u` to `v`.
pub fn disjoint_paths(g: &Graph, u: Vertex, v: Vertex, cap: usize) -> Result<Vec<Vec<Vertex>>> {
    let c = Compact::new(g);
    let (a, b) = endpoints(&c, u, v)?;
    let skip = c.adj[a as usize].iter().find(|&&(w, _)| w == b).map(|&(_, id)| id);
    let active = vec![true; c.n()];
    Ok(paths_between(&c, &active, skip, &[a], &[b], cap)
        .into_iter()
        .map(|p| p.into_iter().map(|i| c.label(i)).collect())
        .collect())
}

/// Minimum vertex set separating `sources` from `sinks` (both excluded from
/// the separator). The sets must be disjoint and non-adjacent.
pub fn min_separator(g: &Graph, sources: &VertexSet, sinks: &VertexSet) -> Result<Vec<Vertex>> {
    let c = Compact::new(g);
    let idx = |s: &VertexSet| -> Result<Vec<u32>> {
        s.iter().map(|&v| c.index(v).ok_or(Error::MissingVertex(v))).collect()
    };
    let (src, snk) = (idx(sources)?, idx(sinks)?);
    if sources.iter().any(|v| sinks.contains(v) || g.neighbors(*v).any(|w| sinks.contains(&w))) {
        return Err(Error::Precondition("separator terminals overlap or are adjacent".into()));
    }
    let active = vec![true; c.n()];
    let mut net = Network::build(&c, &active, None, &src, &snk);
    net.max_flow(usize::MAX);
    Ok(net.separator(c.n()).into_iter().map(|i| c.label(i)).collect())
}

pub(crate) fn paths_between(
    c: &Compact,
    active: &[bool],
    skip: Option<u32>,
    sources: &[u32],
    sinks: &[u32],
    cap: usize,
) -> Vec<Vec<u32>> {
    let mut net = Network::build(c, active, skip, sources, sinks);
    net.max_flow(cap);
    net.paths(c.n())
}
