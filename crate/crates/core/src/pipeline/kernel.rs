//! The kernelization loop.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::{Instance, Stage};
use crate::modulator::{build_op_decomposition, ProviderMode};
use crate::oracle::has_minor;
use crate::outerplanar::{is_outerplanar, MinorKind};
use crate::protrusion::{build_l, reduce_protrusion, Mode, STRICT_PROTRUSION};
use crate::stats::RuleCounts;
use crate::trace::MinorTrace;

/// Kernelization settings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelConfig {
    pub mode: Mode,
    pub provider: ProviderMode,
}

/// Outcome classification of a kernelization run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// `g_out` is a kernel obtained from the input by the recorded trace.
    Kernel,
    /// The budget covers every vertex; `g_out` is empty with budget zero.
    TriviallyYes,
    /// `opd > k`; `g_out` is the named obstruction with budget zero.
    TriviallyNo(MinorKind),
    /// The heuristic provider overflowed its size limit; `g_out` is the
    /// equivalent instance reached so far.
    Unknown,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Kernel => "kernel",
            Verdict::TriviallyYes => "trivially-yes",
            Verdict::TriviallyNo(_) => "trivially-no",
            Verdict::Unknown => "unknown",
        }
    }
}

/// Vertex, edge and budget counts at one point of the run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Size {
    pub vertices: usize,
    pub edges: usize,
    pub k: usize,
}

impl Size {
    fn of(g: &Graph, k: usize) -> Self {
        Self { vertices: g.vertex_count(), edges: g.edge_count(), k }
    }
}

/// Sizes of the decomposition built in the last round.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSize {
    pub x0: usize,
    pub x1: usize,
    pub z: usize,
    pub l: usize,
    pub protrusions: usize,
}

/// Counters collected by [`kernelize`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelStats {
    pub fires: RuleCounts,
    /// Number of passes through the loop (one per rule application plus the final pass).
    pub rounds: usize,
    pub input: Size,
    pub output: Size,
    pub decomposition: Option<DecompositionSize>,
}

/// Output of [`kernelize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelResult {
    pub g_out: Graph,
    pub k_out: usize,
    pub trace: MinorTrace,
    pub verdict: Verdict,
    pub stats: KernelStats,
    pub config: KernelConfig,
}

/// Reduces the first component of `g - x` that is a protrusion (at most four
/// neighbours, outerplanar closure) and admits a rule. Catches protrusions
/// that the final set `L` would cut into pieces.
fn reduce_modulator_protrusions(inst: &mut Instance, x: &VertexSet) -> Result<bool> {
    for comp in inst.graph.components_avoiding(x) {
        let a: VertexSet = comp.into_iter().collect();
        let g = &inst.graph;
        if g.neighborhood(&a).len() > 4 || !is_outerplanar(&g.closure(&a)) {
            continue;
        }
        if reduce_protrusion(inst, &a, Mode::Aggressive)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Reduces `(g, k)` until no rule applies, restarting after every change.
pub fn kernelize(g: &Graph, k: usize, config: KernelConfig) -> Result<KernelResult> {
    let mut inst = Instance::new(g.clone(), k);
    let mut stats = KernelStats { input: Size::of(g, k), ..KernelStats::default() };
    let verdict = 'run: loop {
        stats.rounds += 1;
        if stats.rounds == 1 && !g.is_empty() && k >= g.vertex_count() {
            let all: Vec<Vertex> = inst.graph.vertices().collect();
            inst.delete_vertices(&all)?;
            inst.k = 0;
            break Verdict::TriviallyYes;
        }
        let mark = inst.trace.len();
        let od = match build_op_decomposition(&mut inst, config.provider)? {
            Stage::Ready(od) => od,
            Stage::AboveBudget => {
                let h = if has_minor(&inst.graph, MinorKind::K4) { MinorKind::K4 } else { MinorKind::K23 };
                inst.graph = h.graph();
                inst.k = 0;
                break Verdict::TriviallyNo(h);
            }
            Stage::Unknown => break Verdict::Unknown,
        };
        if inst.trace.len() != mark {
            continue;
        }
        if config.mode == Mode::Aggressive && reduce_modulator_protrusions(&mut inst, &od.modulator.all())? {
            continue;
        }
        let Some(pd) = build_l(&mut inst, &od)? else { continue };
        stats.decomposition = Some(DecompositionSize {
            x0: od.modulator.x0.len(),
            x1: od.modulator.x1.len(),
            z: od.z.len(),
            l: pd.l.len(),
            protrusions: pd.components.len(),
        });
        for comp in &pd.components {
            if config.mode == Mode::Strict && comp.len() <= STRICT_PROTRUSION {
                continue;
            }
            let a: VertexSet = comp.iter().copied().collect();
            if reduce_protrusion(&mut inst, &a, config.mode)? {
                continue 'run;
            }
        }
        break Verdict::Kernel;
    };
    stats.fires = inst.fires;
    stats.output = Size::of(&inst.graph, inst.k);
    Ok(KernelResult { g_out: inst.graph, k_out: inst.k, trace: inst.trace, verdict, stats, config })
}
