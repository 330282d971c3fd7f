//! Outerplanar deletion set providers.

use serde::{Deserialize, Serialize};

use crate::compact::Compact;
use crate::graph::{Graph, VertexSet};
use crate::oracle::opd_solution;
use crate::outerplanar::{is_outerplanar, mask_is_outerplanar, minimal_obstruction_vertices};

/// Source of the initial deletion set `X0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProviderMode {
    /// Minimum deletion set by exhaustive search; factor 1.
    #[default]
    Exact,
    /// Greedy obstruction hitting; factor 40 without a guarantee.
    Heuristic,
}

impl ProviderMode {
    /// Factor `c` with `|X0| <= c·k` whenever `opd <= k`.
    pub fn c(self) -> usize {
        match self {
            ProviderMode::Exact => 1,
            ProviderMode::Heuristic => 40,
        }
    }
}

impl std::str::FromStr for ProviderMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(ProviderMode::Exact),
            "heuristic" => Ok(ProviderMode::Heuristic),
            other => Err(format!("unknown provider '{other}'")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProviderOutcome {
    Modulator(VertexSet),
    /// `opd > k` is certain.
    AboveBudget,
    /// The heuristic set exceeds `c·k`.
    Unknown,
}

/// Deletion set of size at most `c·k`, or a verdict.
pub fn modulator_provider(g: &Graph, k: usize, mode: ProviderMode) -> ProviderOutcome {
    if is_outerplanar(g) {
        return ProviderOutcome::Modulator(VertexSet::new());
    }
    if k == 0 {
        return ProviderOutcome::AboveBudget;
    }
    match mode {
        ProviderMode::Exact => match opd_solution(g, k) {
            Some(x) => ProviderOutcome::Modulator(x.into_iter().collect()),
            None => ProviderOutcome::AboveBudget,
        },
        ProviderMode::Heuristic => {
            let x = greedy_deletion_set(g);
            if x.len() > mode.c() * k {
                ProviderOutcome::Unknown
            } else {
                ProviderOutcome::Modulator(x)
            }
        }
    }
}

/// Repeatedly deletes the highest-degree vertex (smallest label on ties) of a
/// minimal obstruction, then drops members that are not needed.
fn greedy_deletion_set(g: &Graph) -> VertexSet {
    let c = Compact::new(g);
    let mut alive = vec![true; c.n()];
    let mut chosen = Vec::new();
    while let Some(obstruction) = minimal_obstruction_vertices(&c, &alive) {
        let pick = obstruction
            .into_iter()
            .max_by_key(|&i| (c.adj[i as usize].len(), std::cmp::Reverse(i)))
            .expect("obstructions are non-empty");
        alive[pick as usize] = false;
        chosen.push(pick);
    }
    for &v in chosen.iter().rev() {
        alive[v as usize] = true;
        if !mask_is_outerplanar(&c, &alive) {
            alive[v as usize] = false;
        }
    }
    chosen.into_iter().filter(|&i| !alive[i as usize]).map(|i| c.label(i)).collect()
}
