//! Exponential-time ground truth: minor models, exact outerplanar deletion
//! number, and constrained variants.

use serde::{Deserialize, Serialize};

use crate::compact::Compact;
use crate::error::{Error, Result};
use crate::flow::paths_between;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::outerplanar::{minimal_obstruction_vertices, MinorKind, Obstruction};

/// Exact value or the verdict that it exceeds the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OpdValue {
    Exact(usize),
    AboveCap,
}

impl OpdValue {
    /// Whether the value is at most `k`. Only meaningful for `k <= cap`.
    pub fn at_most(self, k: usize) -> bool {
        matches!(self, OpdValue::Exact(v) if v <= k)
    }

    pub fn exact(self) -> Option<usize> {
        match self {
            OpdValue::Exact(v) => Some(v),
            OpdValue::AboveCap => None,
        }
    }
}

/// Whether `g` has `h` as a minor. Both patterns have maximum degree three, so
/// the search looks for topological models.
pub fn has_minor(g: &Graph, h: MinorKind) -> bool {
    minor_model(g, h).is_some()
}

/// A minor model of `h` in `g`, if one exists.
pub fn minor_model(g: &Graph, h: MinorKind) -> Option<Obstruction> {
    match h {
        MinorKind::K4 => k4_model(g),
        MinorKind::K23 => k23_model(g),
    }
}

/// Any K4 or K2,3 model.
pub fn find_minor_model(g: &Graph) -> Option<Obstruction> {
    k4_model(g).or_else(|| k23_model(g))
}

/// Hubs `a < b` joined by three internally disjoint paths of length >= 2.
fn k23_model(g: &Graph) -> Option<Obstruction> {
    let c = Compact::new(g);
    let active = vec![true; c.n()];
    for a in 0..c.n() as u32 {
        if c.adj[a as usize].len() < 3 {
            continue;
        }
        for b in a + 1..c.n() as u32 {
            if c.adj[b as usize].len() < 3 {
                continue;
            }
            let skip = c.adj[a as usize].iter().find(|&&(w, _)| w == b).map(|&(_, id)| id);
            let paths = paths_between(&c, &active, skip, &[a], &[b], 3);
            if paths.len() == 3 {
                let mut sets = vec![vec![c.label(a)], vec![c.label(b)]];
                let mut middles: Vec<Vec<Vertex>> = paths
                    .iter()
                    .map(|p| {
                        let mut m: Vec<Vertex> =
                            p.iter().filter(|&&x| x != a && x != b).map(|&x| c.label(x)).collect();
                        m.sort_unstable();
                        m
                    })
                    .collect();
                middles.sort();
                sets.extend(middles);
                return Some(Obstruction { kind: MinorKind::K23, branch_sets: sets });
            }
        }
    }
    None
}

/// A cycle `D` plus a component of `g - V(D)` with three attachments on `D`.
fn k4_model(g: &Graph) -> Option<Obstruction> {
    let c = Compact::new(g);
    let n = c.n();
    let mut on_path = vec![false; n];
    for s in 0..n as u32 {
        let mut path = vec![s];
        on_path[s as usize] = true;
        if let Some(model) = extend_cycles(&c, &mut path, &mut on_path) {
            return Some(model);
        }
        on_path[s as usize] = false;
    }
    None
}

fn extend_cycles(c: &Compact, path: &mut Vec<u32>, on_path: &mut [bool]) -> Option<Obstruction> {
    let s = path[0];
    let last = *path.last().unwrap();
    for &(w, _) in &c.adj[last as usize] {
        if w == s && path.len() >= 3 && path[1] < last {
            if let Some(model) = bridge_model(c, path, on_path) {
                return Some(model);
            }
        }
        if w > s && !on_path[w as usize] {
            on_path[w as usize] = true;
            path.push(w);
            let found = extend_cycles(c, path, on_path);
            path.pop();
            on_path[w as usize] = false;
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

fn bridge_model(c: &Compact, cycle: &[u32], on_cycle: &[bool]) -> Option<Obstruction> {
    let n = c.n();
    let mut seen = on_cycle.to_vec();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start as u32];
        seen[start] = true;
        let mut attach = vec![false; n];
        let mut i = 0;
        while i < comp.len() {
            for &(w, _) in &c.adj[comp[i] as usize] {
                if on_cycle[w as usize] {
                    attach[w as usize] = true;
                } else if !seen[w as usize] {
                    seen[w as usize] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        let hits: Vec<usize> = (0..cycle.len()).filter(|&i| attach[cycle[i] as usize]).collect();
        if hits.len() >= 3 {
            let (p1, p2, p3) = (hits[0], hits[1], hits[2]);
            let arc = |from: usize, to: usize| -> Vec<Vertex> {
                let mut out: Vec<Vertex> = (from..to).map(|i| c.label(cycle[i])).collect();
                out.sort_unstable();
                out
            };
            let mut third: Vec<Vertex> = (p3..cycle.len()).chain(0..p1).map(|i| c.label(cycle[i])).collect();
            third.sort_unstable();
            let mut body: Vec<Vertex> = comp.iter().map(|&x| c.label(x)).collect();
            body.sort_unstable();
            let mut sets = vec![arc(p1, p2), arc(p2, p3), third, body];
            sets.sort();
            return Some(Obstruction { kind: MinorKind::K4, branch_sets: sets });
        }
    }
    None
}

/// Minimum outerplanar deletion set of size at most `cap` that avoids
/// `frozen`, by iterative deepening with obstruction-guided branching.
fn solve(g: &Graph, cap: usize, frozen: &VertexSet) -> Option<Vec<Vertex>> {
    let c = Compact::new(g);
    let mut alive = vec![true; c.n()];
    let mut fixed = vec![false; c.n()];
    for &v in frozen {
        if let Some(i) = c.index(v) {
            fixed[i as usize] = true;
        }
    }
    let mut chosen = Vec::new();
    for budget in 0..=cap {
        if branch(&c, &mut alive, &mut fixed, budget, &mut chosen) {
            let mut out: Vec<Vertex> = chosen.iter().map(|&i| c.label(i)).collect();
            out.sort_unstable();
            return Some(out);
        }
    }
    None
}

fn branch(c: &Compact, alive: &mut [bool], fixed: &mut [bool], budget: usize, chosen: &mut Vec<u32>) -> bool {
    let Some(obstruction) = minimal_obstruction_vertices(c, alive) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let candidates: Vec<u32> = obstruction.into_iter().filter(|&v| !fixed[v as usize]).collect();
    let mut frozen_here = Vec::new();
    let mut found = false;
    for &v in &candidates {
        alive[v as usize] = false;
        chosen.push(v);
        if branch(c, alive, fixed, budget - 1, chosen) {
            found = true;
            break;
        }
        chosen.pop();
        alive[v as usize] = true;
        // later branches keep `v`
        fixed[v as usize] = true;
        frozen_here.push(v);
    }
    for v in frozen_here {
        fixed[v as usize] = false;
    }
    found
}

/// `opd(g)` if it is at most `cap`.
pub fn opd_exact(g: &Graph, cap: usize) -> OpdValue {
    match solve(g, cap, &VertexSet::new()) {
        Some(s) => OpdValue::Exact(s.len()),
        None => OpdValue::AboveCap,
    }
}

/// A minimum outerplanar deletion set, if `opd(g) <= cap`.
pub fn opd_solution(g: &Graph, cap: usize) -> Option<Vec<Vertex>> {
    solve(g, cap, &VertexSet::new())
}

/// Minimum deletion set size among sets avoiding `v`, if at most `cap`.
pub fn opd_exact_avoiding(g: &Graph, v: Vertex, cap: usize) -> Result<OpdValue> {
    if !g.has_vertex(v) {
        return Err(Error::MissingVertex(v));
    }
    Ok(match solve(g, cap, &[v].into()) {
        Some(s) => OpdValue::Exact(s.len()),
        None => OpdValue::AboveCap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(opd_exact(&Graph::complete(4), 3), OpdValue::Exact(1));
        assert_eq!(opd_exact(&Graph::complete_bipartite(2, 3), 3), OpdValue::Exact(1));
        assert_eq!(opd_exact(&Graph::complete(5), 3), OpdValue::Exact(2));
        assert_eq!(opd_exact(&Graph::complete(5), 1), OpdValue::AboveCap);
    }

    #[test]
    fn models_validate() {
        for g in [Graph::complete(4), Graph::complete(5), Graph::complete_bipartite(2, 3), Graph::complete_bipartite(3, 3)] {
            let m = find_minor_model(&g).unwrap();
            m.validate(&g).unwrap();
        }
        assert!(!has_minor(&Graph::path(7), MinorKind::K23));
        assert!(!has_minor(&Graph::complete(4), MinorKind::K23));
    }

    #[test]
    fn wheel_has_k4() {
        let mut g = Graph::cycle(5);
        for v in 1..=5 {
            g.add_edge(v, 6).unwrap();
        }
        let m = minor_model(&g, MinorKind::K4).unwrap();
        m.validate(&g).unwrap();
    }

    #[test]
    fn avoiding() {
        let k4 = Graph::complete(4);
        assert_eq!(opd_exact_avoiding(&k4, 2, 3).unwrap(), OpdValue::Exact(1));
        assert_eq!(opd_exact_avoiding(&Graph::cycle(5), 1, 3).unwrap(), OpdValue::Exact(0));
    }
}
