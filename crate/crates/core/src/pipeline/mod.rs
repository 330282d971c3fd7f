//! Top-level kernelization, verification, instance generation and I/O.

mod generate;
mod io;
mod kernel;
mod obstruction;
mod verify;

pub use generate::{generate_instance, generate_with, random_biconnected_outerplanar, GenParams, GeneratedInstance};
pub use io::{parse_instance, write_instance, write_kernel, ParsedInstance};
pub use kernel::{kernelize, DecompositionSize, KernelConfig, KernelResult, KernelStats, Size, Verdict};
pub use obstruction::{check_obstruction, single_step_minors, OBSTRUCTION_MAX_VERTICES};
pub use verify::{verify, VerifyReport, VERIFY_MAX_BUDGET, VERIFY_MAX_VERTICES};
