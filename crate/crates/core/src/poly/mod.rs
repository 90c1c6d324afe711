//! Polynomial arithmetic over prime fields, instances and ideal dimension.

pub mod field;
pub mod format;
pub mod groebner;
pub mod instance;
pub mod monomial;
pub mod sparse;

pub use field::{is_prime, PrimeField, DEFAULT_PRIME};
pub use format::{instance_to_json, parse_instance, PolyDocument};
pub use groebner::{
    groebner_basis, groebner_dimension, groebner_dimension_in, is_groebner_basis,
    monomial_ideal_dimension, reduce, IdealBasis,
};
pub use instance::{CIInstance, SequenceEntry};
pub use monomial::Monomial;
pub use sparse::SparsePoly;
