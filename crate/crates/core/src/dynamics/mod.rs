//! Best-response dynamics and convergence checks.

mod theorems;
mod trace;

pub use theorems::{
    check_convergence_theorems, cost_quality_factor, random_starts, sandwich_constants, Sandwich,
    C_REPORT,
};
pub use trace::{meets, run_br, steps_to_quality, QualityHit, Step, Trace};
