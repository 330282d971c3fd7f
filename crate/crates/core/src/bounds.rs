//! Size formulas of the kernel, evaluated exactly in integers.

/// Threshold above which a biconnected protrusion always contains a
/// reducible structure.
pub const REDUCIBLE_THRESHOLD: u128 = 6288;

/// Maximum number of blocks kept by the block-cut shrinking step.
pub const MAX_BLOCKS: u128 = 25;

/// Protrusion size above which a reduction is guaranteed.
pub const PROTRUSION_THRESHOLD: u128 = MAX_BLOCKS * REDUCIBLE_THRESHOLD;

/// Modulator-to-component neighbours left after irrelevant-edge removal.
pub const MAX_COMPONENT_NEIGHBORS: usize = 20;

/// Component-graph size factor after degree reduction: `14c² + 60c`.
pub fn f1(c: u128) -> u128 {
    14 * c * c + 60 * c
}

/// Separator size factor: `4c² + 15c`.
pub fn f2(c: u128) -> u128 {
    4 * c * c + 15 * c
}

/// Decomposition factor: `3·f1(c) + 24·f2(c)`.
pub fn f3(c: u128) -> u128 {
    3 * f1(c) + 24 * f2(c)
}

/// Component-graph edge factor: `cd + 6c + 4d`.
pub fn f4(c: u128, d: u128) -> u128 {
    c * d + 6 * c + 4 * d
}

/// Final decomposition factor: `24·(20·f4(c,d) + d + c + c²)`.
pub fn f5(c: u128, d: u128) -> u128 {
    24 * (20 * f4(c, d) + d + c + c * c)
}

/// Bound on `|V|` and `|E|` of the kernel for budget `k`:
/// `2·(25·6288 + 5)·f5(c, f3(c))·(k+3)⁴`.
pub fn kernel_size_bound(c: u128, k: u128) -> u128 {
    let base = k + 3;
    2 * (PROTRUSION_THRESHOLD + 5) * f5(c, f3(c)) * base.pow(4)
}
