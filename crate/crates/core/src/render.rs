//! Serialization helpers for exact quantities.
//!
//! Rationals are always written as reduced `numerator/denominator` strings,
//! including integral values (`"1/1"`), so certificates stay exact in transit.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serializer;

pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

pub fn biguint_string<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn bigint_string<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integral_rationals_keep_denominator() {
        let one = BigRational::from_integer(1.into());
        assert_eq!(rational_string(&one), "1/1");
        let r = BigRational::new(98.into(), 96.into());
        assert_eq!(rational_string(&r), "49/48");
    }
}
