//! Exact certificates for the hypertangent-divisor inequalities of index-one
//! Fano complete intersections, and a finite-field regularity checker for
//! small explicit instances.

pub mod combinatorics;
pub mod degree;
pub mod error;
pub mod ledger;
pub mod limits;
pub mod poly;
pub mod regularity;
pub mod render;

pub use degree::{ComponentLabel, DegreeSummary, DegreeVector};
pub use error::{Error, ErrorKind, Result};
pub use limits::Limits;
