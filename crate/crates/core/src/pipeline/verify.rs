//! Oracle-backed verification of kernelization results.

use serde::{Deserialize, Serialize};

use crate::bounds::kernel_size_bound;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{opd_exact, OpdValue};
use crate::trace::replay_trace;

use super::kernel::{KernelResult, Verdict};

/// Largest input the exact oracle is trusted to finish on.
pub const VERIFY_MAX_VERTICES: usize = 64;
/// Largest budget the exact oracle is asked to decide.
pub const VERIFY_MAX_BUDGET: usize = 6;

/// Outcome of [`verify`]; `failures` lists every violated contract.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub verdict: Verdict,
    pub replay_ok: bool,
    /// `opd(g)` up to `k + 1`.
    pub opd_in: OpdValue,
    /// `opd(g_out)` up to `k_out + 1`.
    pub opd_out: OpdValue,
    pub equivalent: bool,
    /// `None` when the shift contract does not apply.
    pub shift_ok: Option<bool>,
    pub size_ok: bool,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks trace replay, equivalence, the budget shift and the size bound of
/// `result` against the input `(g, k)`.
pub fn verify(g: &Graph, k: usize, result: &KernelResult) -> Result<VerifyReport> {
    if g.vertex_count() > VERIFY_MAX_VERTICES || k > VERIFY_MAX_BUDGET {
        return Err(Error::TooLarge(format!(
            "unverifiable at this size: {} vertices, budget {k} (limits {VERIFY_MAX_VERTICES}, {VERIFY_MAX_BUDGET})",
            g.vertex_count()
        )));
    }
    let mut failures = Vec::new();
    let traced = matches!(result.verdict, Verdict::Kernel | Verdict::Unknown | Verdict::TriviallyYes);
    let replay_ok = !traced
        || match replay_trace(g, &result.trace) {
            Ok(h) if h == result.g_out => true,
            Ok(_) => {
                failures.push("replay: trace does not reproduce the output graph".to_string());
                false
            }
            Err(e) => {
                failures.push(format!("replay: {e}"));
                false
            }
        };
    if result.k_out > k {
        failures.push(format!("budget grew from {k} to {}", result.k_out));
    }
    let opd_in = opd_exact(g, k + 1);
    let opd_out = opd_exact(&result.g_out, result.k_out + 1);
    let equivalent = opd_in.at_most(k) == opd_out.at_most(result.k_out);
    if !equivalent {
        failures.push(format!(
            "equivalence: opd(g) = {} against k = {k}, opd(g') = {} against k' = {}",
            show(opd_in),
            show(opd_out),
            result.k_out
        ));
    }
    let shift_ok = match (result.verdict, opd_in) {
        (Verdict::Kernel, OpdValue::Exact(p)) if p <= k => {
            let expected = p - (k - result.k_out).min(p);
            let ok = p + result.k_out >= k && opd_out == OpdValue::Exact(expected);
            if !ok {
                failures.push(format!("shift: expected opd(g') = {expected}, got {}", show(opd_out)));
            }
            Some(ok)
        }
        _ => None,
    };
    let size_ok = match result.verdict {
        Verdict::Kernel => {
            let bound = kernel_size_bound(result.config.provider.c() as u128, result.k_out as u128);
            let ok = result.g_out.vertex_count() as u128 <= bound && result.g_out.edge_count() as u128 <= bound;
            if !ok {
                failures.push(format!("size: output exceeds the bound {bound}"));
            }
            ok
        }
        _ => true,
    };
    Ok(VerifyReport { verdict: result.verdict, replay_ok, opd_in, opd_out, equivalent, shift_ok, size_ok, failures })
}

fn show(v: OpdValue) -> String {
    match v {
        OpdValue::Exact(p) => p.to_string(),
        OpdValue::AboveCap => "above the cap".to_string(),
    }
}
