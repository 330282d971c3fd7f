//! Width-2 tree decompositions of outerplanar graphs and LCA-closure marking.

use std::collections::{BTreeSet, HashMap};

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::outerplanar::embed;

/// Tree node identifier.
pub type Node = usize;

/// Rooted tree over nodes `0..n` with constant-time depth and
/// logarithmic-time lowest common ancestors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootedTree {
    pub root: Node,
    pub parent: Vec<Option<Node>>,
    pub depth: Vec<usize>,
    pub children: Vec<Vec<Node>>,
    /// Nodes in depth-first preorder (children ascending).
    pub preorder: Vec<Node>,
    position: Vec<usize>,
    up: Vec<Vec<Node>>,
}

impl RootedTree {
    /// Roots the tree given by `edges` at `root`. Fails unless the edges form
    /// a spanning tree of `0..n`.
    pub fn new(n: usize, edges: &[(Node, Node)], root: Node) -> Result<Self> {
        if n == 0 {
            return Ok(Self::default());
        }
        if edges.len() + 1 != n || root >= n {
            return Err(invalid("edge count does not match a spanning tree"));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut children = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        let mut preorder = Vec::with_capacity(n);
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            preorder.push(v);
            let mut next: Vec<Node> = adj[v].iter().copied().filter(|&w| !seen[w]).collect();
            next.sort_unstable();
            for &w in &next {
                seen[w] = true;
                parent[w] = Some(v);
                depth[w] = depth[v] + 1;
            }
            children[v] = next.clone();
            stack.extend(next.into_iter().rev());
        }
        if preorder.len() != n {
            return Err(invalid("tree edges do not connect all nodes"));
        }
        let mut position = vec![0; n];
        for (i, &v) in preorder.iter().enumerate() {
            position[v] = i;
        }
        let levels = usize::BITS as usize - n.leading_zeros() as usize;
        let mut up = vec![(0..n).map(|v| parent[v].unwrap_or(v)).collect::<Vec<_>>()];
        for j in 1..levels.max(1) {
            let prev = &up[j - 1];
            let row = (0..n).map(|v| prev[prev[v]]).collect();
            up.push(row);
        }
        Ok(Self { root, parent, depth, children, preorder, position, up })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Undirected tree edges `(parent, child)`.
    pub fn edges(&self) -> Vec<(Node, Node)> {
        (0..self.len()).filter_map(|v| self.parent[v].map(|p| (p, v))).collect()
    }

    pub fn neighbors(&self, v: Node) -> impl Iterator<Item = Node> + '_ {
        self.parent[v].into_iter().chain(self.children[v].iter().copied())
    }

    pub fn preorder_index(&self, v: Node) -> usize {
        self.position[v]
    }

    /// Lowest common ancestor.
    pub fn lca(&self, mut a: Node, mut b: Node) -> Node {
        if self.depth[a] < self.depth[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let mut diff = self.depth[a] - self.depth[b];
        let mut j = 0;
        while diff > 0 {
            if diff & 1 == 1 {
                a = self.up[j][a];
            }
            diff >>= 1;
            j += 1;
        }
        if a == b {
            return a;
        }
        for j in (0..self.up.len()).rev() {
            if self.up[j][a] != self.up[j][b] {
                a = self.up[j][a];
                b = self.up[j][b];
            }
        }
        self.parent[a].unwrap_or(a)
    }

    /// Whether `a` is an ancestor of `b` (or equal).
    pub fn is_ancestor(&self, a: Node, b: Node) -> bool {
        self.depth[a] <= self.depth[b] && self.lca(a, b) == a
    }
}

/// `S` together with the pairwise lowest common ancestors of its members.
/// Consecutive members in preorder suffice.
pub fn lca_closure(tree: &RootedTree, s: &BTreeSet<Node>) -> BTreeSet<Node> {
    let mut sorted: Vec<Node> = s.iter().copied().collect();
    sorted.sort_by_key(|&v| tree.preorder_index(v));
    let mut out = s.clone();
    for w in sorted.windows(2) {
        out.insert(tree.lca(w[0], w[1]));
    }
    out
}

/// Rooted tree decomposition with bags of at most three vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Sorted bags indexed by node.
    pub bags: Vec<Vec<Vertex>>,
    pub tree: RootedTree,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1)
    }

    /// For every vertex, the node of minimum depth containing it.
    pub fn topmost(&self) -> HashMap<Vertex, Node> {
        let mut out = HashMap::new();
        for &t in &self.tree.preorder {
            for &v in &self.bags[t] {
                out.entry(v).or_insert(t);
            }
        }
        out
    }

    /// Checks the three decomposition axioms and width at most two.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.bags.len() != self.tree.len() {
            return Err(invalid("bag count differs from node count"));
        }
        if self.width() > 2 && !g.is_empty() {
            return Err(invalid("width exceeds two"));
        }
        let mut occurrences: HashMap<Vertex, Vec<Node>> = HashMap::new();
        for (t, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if !g.has_vertex(v) {
                    return Err(Error::MissingVertex(v));
                }
                occurrences.entry(v).or_default().push(t);
            }
        }
        for v in g.vertices() {
            let Some(nodes) = occurrences.get(&v) else {
                return Err(invalid(format!("vertex {v} is in no bag")));
            };
            // connected iff exactly one occurrence has its parent outside
            let roots = nodes
                .iter()
                .filter(|&&t| self.tree.parent[t].is_none_or(|p| self.bags[p].binary_search(&v).is_err()))
                .count();
            if roots != 1 {
                return Err(invalid(format!("occurrences of {v} are disconnected")));
            }
        }
        for (u, v) in g.edges() {
            if !occurrences[&u].iter().any(|&t| self.bags[t].binary_search(&v).is_ok()) {
                return Err(invalid(format!("edge {u}-{v} is in no bag")));
            }
        }
        Ok(())
    }
}

/// Width-2 decomposition built from the block structure and the weak duals,
/// every interior face fan-triangulated. Rooted at the first bag containing
/// the smallest label.
pub fn decompose_outerplanar(g: &Graph) -> Result<TreeDecomposition> {
    let emb = embed(g)?;
    let mut bags: Vec<Vec<Vertex>> = Vec::new();
    let mut edges: Vec<(Node, Node)> = Vec::new();
    // per vertex: one bag of each block containing it
    let mut holders: HashMap<Vertex, Vec<Node>> = HashMap::new();
    for block in &emb.blocks {
        let first = bags.len();
        if block.is_trivial() {
            bags.push(block.vertices.clone());
        } else {
            let base = face_bases(&block.faces, first);
            for face in &block.faces {
                for i in 1..face.len() - 1 {
                    let mut bag = vec![face[0], face[i], face[i + 1]];
                    bag.sort_unstable();
                    if i > 1 {
                        edges.push((bags.len() - 1, bags.len()));
                    }
                    bags.push(bag);
                }
            }
            for d in &block.dual {
                let (f1, f2) = d.faces;
                edges.push((triangle_with(&block.faces, &base, f1, d.chord), triangle_with(&block.faces, &base, f2, d.chord)));
            }
        }
        for &v in &block.vertices {
            let t = (first..bags.len()).find(|&t| bags[t].binary_search(&v).is_ok()).unwrap();
            holders.entry(v).or_default().push(t);
        }
    }
    for nodes in holders.values() {
        for &t in &nodes[1..] {
            edges.push((nodes[0], t));
        }
    }
    let n = bags.len();
    if n == 0 {
        return Ok(TreeDecomposition::default());
    }
    // link component roots into one tree
    let mut dsu: Vec<Node> = (0..n).collect();
    fn find(d: &mut [Node], x: Node) -> Node {
        let mut r = x;
        while d[r] != r {
            r = d[r];
        }
        let mut y = x;
        while d[y] != r {
            let next = d[y];
            d[y] = r;
            y = next;
        }
        r
    }
    for &(a, b) in &edges {
        let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
        dsu[ra] = rb;
    }
    let mut reps: Vec<Node> = Vec::new();
    let mut seen_roots = BTreeSet::new();
    for t in 0..n {
        if seen_roots.insert(find(&mut dsu, t)) {
            reps.push(t);
        }
    }
    for w in reps.windows(2) {
        edges.push((w[0], w[1]));
    }
    let min_label = g.vertices().next().unwrap();
    let root = (0..n).find(|&t| bags[t].binary_search(&min_label).is_ok()).unwrap();
    let tree = RootedTree::new(n, &edges, root)?;
    let td = TreeDecomposition { bags, tree };
    debug_assert!(td.validate(g).is_ok());
    Ok(td)
}

/// First bag index of every face of a block whose bags start at `first`.
fn face_bases(faces: &[Vec<Vertex>], first: Node) -> Vec<Node> {
    let mut out = Vec::with_capacity(faces.len());
    let mut next = first;
    for f in faces {
        out.push(next);
        next += f.len() - 2;
    }
    out
}

/// Triangle of face `f` that contains the boundary edge `chord`.
fn triangle_with(faces: &[Vec<Vertex>], base: &[Node], f: usize, chord: (Vertex, Vertex)) -> Node {
    let face = &faces[f];
    let m = face.len();
    let i = (0..m)
        .find(|&i| crate::graph::edge(face[i], face[(i + 1) % m]) == chord)
        .expect("chord lies on both of its faces");
    let local = match i {
        0 => 0,
        i if i == m - 1 => m - 3,
        i => i - 1,
    };
    base[f] + local
}

/// Union of the bags of an LCA-closed node set. Fails if `b` is not closed.
pub fn mark_bags(td: &TreeDecomposition, b: &BTreeSet<Node>) -> Result<VertexSet> {
    if &lca_closure(&td.tree, b) != b {
        return Err(invalid("node set is not closed under lowest common ancestors"));
    }
    Ok(b.iter().flat_map(|&t| td.bags[t].iter().copied()).collect())
}

/// Superset `z'` of `z` with `|z'| <= 6|z|` such that every component of
/// `g - z'` has at most four neighbours in `z'`.
pub fn expand_separator(g: &Graph, z: &VertexSet) -> Result<VertexSet> {
    let td = decompose_outerplanar(g)?;
    expand_with(&td, z)
}

/// [`expand_separator`] on a precomputed decomposition.
pub fn expand_with(td: &TreeDecomposition, z: &VertexSet) -> Result<VertexSet> {
    if z.is_empty() {
        return Ok(VertexSet::new());
    }
    let top = td.topmost();
    let mut nodes = BTreeSet::new();
    for &v in z {
        nodes.insert(*top.get(&v).ok_or(Error::MissingVertex(v))?);
    }
    let closed = lca_closure(&td.tree, &nodes);
    mark_bags(td, &closed)
}
