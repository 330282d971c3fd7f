//! Minor-minimal obstructions for a fixed budget.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::opd_exact;

/// Largest graph [`check_obstruction`] accepts.
pub const OBSTRUCTION_MAX_VERTICES: usize = 16;

/// Every graph obtained from `g` by one vertex deletion, edge deletion or
/// edge contraction.
pub fn single_step_minors(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let deletions = g.vertices().map(move |v| g.without(&[v]));
    let edges: Vec<_> = g.edges().collect();
    let edge_ops = edges.into_iter().flat_map(move |(u, v)| {
        let mut contracted = g.clone();
        contracted.contract_edge(u, v).expect("edge of g");
        [g.without_edge(u, v), contracted]
    });
    deletions.chain(edge_ops)
}

/// Whether `opd(g) > k` while every single-step minor has `opd <= k`.
pub fn check_obstruction(g: &Graph, k: usize) -> Result<bool> {
    if g.vertex_count() > OBSTRUCTION_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "obstruction check refuses {} vertices (limit {OBSTRUCTION_MAX_VERTICES})",
            g.vertex_count()
        )));
    }
    if opd_exact(g, k).at_most(k) {
        return Ok(false);
    }
    Ok(single_step_minors(g).all(|h| opd_exact(&h, k).at_most(k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_obstructions() {
        assert!(check_obstruction(&Graph::complete(4), 0).unwrap());
        assert!(check_obstruction(&Graph::complete_bipartite(2, 3), 0).unwrap());
    }

    #[test]
    fn pendant_breaks_minimality() {
        let mut g = Graph::complete(4);
        g.add_edge(4, 5).unwrap();
        assert!(!check_obstruction(&g, 0).unwrap());
    }

    #[test]
    fn outerplanar_is_not_an_obstruction() {
        assert!(!check_obstruction(&Graph::cycle(5), 0).unwrap());
    }

    #[test]
    fn two_disjoint_k4_for_budget_one() {
        let g = Graph::complete(4).disjoint_union(&Graph::complete(4));
        assert!(check_obstruction(&g, 1).unwrap());
        assert!(check_obstruction(&Graph::complete(5), 1).unwrap());
    }
}
