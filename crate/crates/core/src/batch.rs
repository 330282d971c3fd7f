//! Batch entry points over independent instances. With the `parallel`
//! feature they run on the rayon pool; without it they run sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::pipeline::{kernelize, verify, KernelConfig, KernelResult, VerifyReport};

/// Applies `f` to every item, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_sequential(items, f)
    }
}

/// Sequential counterpart of [`map`], available in every build.
pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// One kernelized and verified instance.
pub type Checked = Result<(KernelResult, VerifyReport)>;

/// Kernelizes and verifies one `(graph, budget)` pair.
pub fn kernelize_and_verify(g: &Graph, k: usize, config: KernelConfig) -> Checked {
    let result = kernelize(g, k, config)?;
    let report = verify(g, k, &result)?;
    Ok((result, report))
}

/// [`kernelize_and_verify`] over a batch via [`map`].
pub fn kernelize_verify_batch(instances: &[(Graph, usize)], config: KernelConfig) -> Vec<Checked> {
    map(instances, |(g, k)| kernelize_and_verify(g, *k, config))
}

/// Aggregate over a batch of checked instances.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

impl BatchSummary {
    pub fn of(checked: &[Checked]) -> Self {
        checked.iter().fold(Self::default(), |mut s, c| {
            match c {
                Ok((_, r)) if r.passed() => s.passed += 1,
                Ok(_) => s.failed += 1,
                Err(_) => s.errors += 1,
            }
            s
        })
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.errors == 0
    }
}
