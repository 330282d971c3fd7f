//! Seeded random instances: outerplanar base plus apex vertices.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{edge, Edge, Graph, Vertex};

/// Generator parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenParams {
    pub seed: u64,
    /// Vertices of the outerplanar base.
    pub n_base: usize,
    /// Extra vertices attached to random base subsets.
    pub k_apex: usize,
    /// Probability that an apex is adjacent to a given base vertex.
    pub p_edge: f64,
    /// Probability that a base chord is dropped.
    pub drop_chord: f64,
}

/// A generated instance with its budget and the known upper bound on opd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedInstance {
    pub graph: Graph,
    /// Budget attached to the instance (`k_apex`).
    pub k: usize,
    /// `opd(graph) <= opd_upper` holds by construction.
    pub opd_upper: usize,
    /// Labels of the apex vertices.
    pub apex: Vec<Vertex>,
}

/// Random maximal outerplanar graph on `0..n` grown by stacking triangles on
/// random outer edges (a random weak-dual tree). Returns edges and a flag
/// per edge marking outer-cycle edges.
fn triangulated_polygon(rng: &mut ChaCha8Rng, n: usize) -> Vec<(Edge, bool)> {
    match n {
        0 | 1 => return Vec::new(),
        2 => return vec![((0, 1), true)],
        _ => {}
    }
    let mut outer: Vec<Edge> = vec![(0, 1), (1, 2), (2, 0)];
    let mut chords: Vec<Edge> = Vec::new();
    for w in 3..n as Vertex {
        let i = rng.random_range(0..outer.len());
        let (u, v) = outer[i];
        chords.push((u, v));
        outer[i] = (u, w);
        outer.insert(i + 1, (w, v));
    }
    let mut out: Vec<(Edge, bool)> = outer.into_iter().map(|(u, v)| (edge(u, v), true)).collect();
    out.extend(chords.into_iter().map(|(u, v)| (edge(u, v), false)));
    out
}

/// Builds an instance from `params`; identical parameters give identical graphs.
pub fn generate_with(params: &GenParams) -> GeneratedInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = params.n_base + params.k_apex;
    let mut labels: Vec<Vertex> = (1..=n as Vertex).collect();
    labels.shuffle(&mut rng);
    let mut g = Graph::with_vertices(labels.iter().copied());
    for ((u, v), outer) in triangulated_polygon(&mut rng, params.n_base) {
        if outer || !rng.random_bool(params.drop_chord) {
            g.add_edge(labels[u as usize], labels[v as usize]).expect("distinct endpoints");
        }
    }
    let apex: Vec<Vertex> = labels[params.n_base..].to_vec();
    for &a in &apex {
        for &b in &labels[..params.n_base] {
            if rng.random_bool(params.p_edge) {
                g.add_edge(a, b).expect("distinct endpoints");
            }
        }
    }
    GeneratedInstance { graph: g, k: params.k_apex, opd_upper: params.k_apex, apex }
}

/// [`generate_with`] without chord dropping.
pub fn generate_instance(seed: u64, n_base: usize, k_apex: usize, p_edge: f64) -> GeneratedInstance {
    generate_with(&GenParams { seed, n_base, k_apex, p_edge, drop_chord: 0.0 })
}

/// Random biconnected outerplanar graph: a triangulated polygon with each
/// chord dropped with probability `drop_chord`, labels `1..=n`.
pub fn random_biconnected_outerplanar(seed: u64, n: usize, drop_chord: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices(1..=n as Vertex);
    for ((u, v), outer) in triangulated_polygon(&mut rng, n) {
        if outer || !rng.random_bool(drop_chord) {
            g.add_edge(u + 1, v + 1).expect("distinct endpoints");
        }
    }
    g
}
