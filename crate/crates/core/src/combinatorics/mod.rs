//! Exact combinatorics of degree vectors: case taxonomy, hypertangent
//! selection, the closing ratio, and the codimension estimates.
//!
//! Everything here is integer or rational arithmetic; nothing touches
//! floating point.

pub mod codim;
pub mod crux;
pub mod profile;
pub mod scan;
pub mod xi;

pub use codim::{
    codim_report, line_codim_report, nonline_codim_report, CodimReport, LineCodimReport,
    NonlineCodimReport,
};
pub use crux::{crux_certificate, crux_ratio, CruxCertificate, HypothesisGates};
pub use profile::{
    bs_codim_profile, classify_case, hypertangent_profile, selection_unchecked, BaseLocusEntry, CaseTag,
    HypertangentProfile,
};
pub use scan::{scan, GateFlag, ScanRequest, ScanRow};
pub use xi::{xi_min_bruteforce, xi_min_formula};
