//! Simple undirected graphs with stable labels.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Vertex label. Labels are stable across minor operations; contraction keeps
/// the smaller label.
pub type Vertex = u32;

/// Vertex set with ascending iteration.
pub type VertexSet = BTreeSet<Vertex>;

/// An undirected edge stored with `0 <= 1`.
pub type Edge = (Vertex, Vertex);

/// Normalizes an edge so the smaller label comes first.
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph: no loops, no parallel edges.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, VertexSet>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.vertex_count(), self.edge_count, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on the given vertices with no edges.
    pub fn with_vertices(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        g
    }

    /// Builds a graph from an edge list, creating endpoints as needed.
    /// Panics on self-loops; intended for literals and tests.
    pub fn from_edges(edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Self::new();
        for &(u, v) in edges {
            g.add_edge(u, v).expect("edge list without self-loops");
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn max_label(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, n)| n.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Neighbours in ascending order; empty for a missing vertex.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn neighbor_set(&self, v: Vertex) -> Option<&VertexSet> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, |n| n.len())
    }

    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, VertexSet::new());
        true
    }

    /// Adds `uv`, creating missing endpoints. Returns false if it already existed.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_vertex(u);
        self.add_vertex(v);
        let fresh = self.adj.get_mut(&u).unwrap().insert(v);
        if fresh {
            self.adj.get_mut(&v).unwrap().insert(u);
            self.edge_count += 1;
        }
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        self.adj.get_mut(&u).unwrap().remove(&v);
        self.adj.get_mut(&v).unwrap().remove(&u);
        self.edge_count -= 1;
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> Result<()> {
        let nbrs = self.adj.remove(&v).ok_or(Error::MissingVertex(v))?;
        self.edge_count -= nbrs.len();
        for w in nbrs {
            self.adj.get_mut(&w).unwrap().remove(&v);
        }
        Ok(())
    }

    /// Contracts `uv`; the smaller label survives and is returned.
    pub fn contract_edge(&mut self, u: Vertex, v: Vertex) -> Result<Vertex> {
        if u == v {
            return Err(Error::SameEndpoints(u));
        }
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let moved: Vec<Vertex> = self.neighbors(gone).filter(|&w| w != keep).collect();
        self.remove_vertex(gone)?;
        for w in moved {
            self.add_edge(keep, w)?;
        }
        Ok(keep)
    }

    /// Induced subgraph on `keep` (labels absent from the graph are ignored).
    pub fn induced<'a>(&self, keep: impl IntoIterator<Item = &'a Vertex>) -> Graph {
        let keep: VertexSet = keep.into_iter().copied().filter(|v| self.has_vertex(*v)).collect();
        let mut g = Graph::new();
        for &v in &keep {
            g.add_vertex(v);
        }
        for &v in &keep {
            for &w in self.adj[&v].range(v + 1..) {
                if keep.contains(&w) {
                    g.add_edge(v, w).unwrap();
                }
            }
        }
        g
    }

    /// `g - removed`.
    pub fn without<'a>(&self, removed: impl IntoIterator<Item = &'a Vertex>) -> Graph {
        let removed: VertexSet = removed.into_iter().copied().collect();
        self.induced(self.adj.keys().filter(|v| !removed.contains(v)))
    }

    /// `g - uv`; a missing edge is ignored.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let mut g = self.clone();
        let _ = g.remove_edge(u, v);
        g
    }

    /// Open neighbourhood `N(S)`.
    pub fn neighborhood<'a>(&self, s: impl IntoIterator<Item = &'a Vertex>) -> VertexSet {
        let s: VertexSet = s.into_iter().copied().collect();
        s.iter()
            .flat_map(|&v| self.neighbors(v))
            .filter(|w| !s.contains(w))
            .collect()
    }

    /// Closed neighbourhood `N[S]`.
    pub fn closed_neighborhood<'a>(&self, s: impl IntoIterator<Item = &'a Vertex>) -> VertexSet {
        let s: VertexSet = s.into_iter().copied().collect();
        let mut out = self.neighborhood(&s);
        out.extend(s);
        out
    }

    /// `g⟨C⟩ = g[N[C]]`.
    pub fn closure<'a>(&self, c: impl IntoIterator<Item = &'a Vertex>) -> Graph {
        let nc = self.closed_neighborhood(c);
        self.induced(&nc)
    }

    /// Connected components, each sorted, listed by minimum label.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&VertexSet::new())
    }

    /// Components of `g - removed`.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<Vec<Vertex>> {
        let mut seen: VertexSet = removed.clone();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = self.reach(v, &seen);
            comp.sort_unstable();
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reach(&self, start: Vertex, blocked: &VertexSet) -> Vec<Vertex> {
        let mut seen = VertexSet::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !blocked.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Component of `g - removed` containing `v`, sorted.
    pub fn component_of(&self, v: Vertex, removed: &VertexSet) -> Vec<Vertex> {
        self.reach(v, removed)
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(v) => self.reach(v, &VertexSet::new()).len() == self.vertex_count(),
        }
    }

    /// Whether `s` induces a connected, non-empty subgraph.
    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        let Some(&first) = s.iter().next() else {
            return false;
        };
        let outside: VertexSet = self.vertices().filter(|v| !s.contains(v)).collect();
        s.iter().all(|&v| self.has_vertex(v)) && self.reach(first, &outside).len() == s.len()
    }

    /// Shortest `u`-`v` path by BFS; ties broken by ascending label.
    pub fn shortest_path(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([u]);
        parent.insert(u, u);
        while let Some(a) = queue.pop_front() {
            if a == v {
                let mut path = vec![v];
                let mut cur = v;
                while cur != u {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for b in self.neighbors(a) {
                if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(b) {
                    e.insert(a);
                    queue.push_back(b);
                }
            }
        }
        None
    }

    /// Number of edges with both endpoints in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter()
            .map(|&v| self.neighbors(v).filter(|w| *w > v && s.contains(w)).count())
            .sum()
    }

    /// Complete graph on labels `1..=n`.
    pub fn complete(n: Vertex) -> Graph {
        let mut g = Graph::with_vertices(1..=n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Complete bipartite graph with sides `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: Vertex, b: Vertex) -> Graph {
        let mut g = Graph::with_vertices(1..=a + b);
        for u in 1..=a {
            for v in a + 1..=a + b {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: Vertex) -> Graph {
        let mut g = Graph::with_vertices(1..=n);
        for v in 1..n {
            g.add_edge(v, v + 1).unwrap();
        }
        g
    }

    /// Cycle `1 - 2 - ... - n - 1`.
    pub fn cycle(n: Vertex) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n, 1).unwrap();
        }
        g
    }

    /// Disjoint union; `other` is shifted above this graph's largest label.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.max_label().unwrap_or(0);
        let mut g = self.clone();
        for v in other.vertices() {
            g.add_vertex(v + shift);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift).unwrap();
        }
        g
    }

    /// Copy with labels mapped through `f` (must be injective).
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Graph {
        let mut g = Graph::with_vertices(self.vertices().map(&f));
        for (u, v) in self.edges() {
            g.add_edge(f(u), f(v)).unwrap();
        }
        g
    }
}
