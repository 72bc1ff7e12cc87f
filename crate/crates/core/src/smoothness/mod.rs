//! Semi-smoothness, niceness and lower-bound certification.

mod bounds;
mod certify;
mod lower;

pub use bounds::{effective_machines, table1_bounds, table1_for, SmoothnessParams, Table1Bounds};
pub use certify::{
    check_nice, check_semi_smooth, deviation_profile, max_rho_over_pure_sigmas,
    max_rho_pure_sigma, requires_n_at_least_m, rho_precision, semi_smooth_lhs,
    uniform_lhs_closed_form, RhoInterval, SmoothVerdict,
};
pub use lower::{check_opt_lower_bounds, LowerBoundCheck};
