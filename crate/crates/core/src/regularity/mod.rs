//! Point-local regularity checks on explicit instances, and seeded random
//! instances for genericity experiments.

pub mod check;
pub mod linalg;
pub mod monte_carlo;
pub mod random;

pub use check::{
    check_regularity_at_origin, classify_excess, line_vanishing_check, linear_parts_independent,
    regularity_report, regularity_sequence, restrict_to_slice, restricted_local_problem,
    ExcessKind, ExcessReport, HCheck, LineSpec, RegularityReport,
};
pub use monte_carlo::{monte_carlo_regularity, MonteCarloStats};
pub use random::{random_h, random_hs, random_instance};
