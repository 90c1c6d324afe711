//! The closing inequality: the 1-cycle cut out by the selected hypertangent
//! divisors has `mult_o / deg` strictly above `2^{k+1}/d * prod ((i+1)/i)^{l_i}`,
//! so a ratio of at least one forces `mult_o C > deg C`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::combinatorics::profile::{hypertangent_profile, CaseTag, HypertangentProfile};
use crate::degree::{DegreeSummary, DegreeVector};
use crate::error::Result;

/// Smallest `delta = d_k` covered by the main theorem.
pub const DELTA_THRESHOLD: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HypothesisGates {
    /// `delta >= 8`.
    pub delta_ok: bool,
    /// `|d| >= 3k + 3`.
    pub size_ok: bool,
}

impl HypothesisGates {
    pub fn evaluate(d: &DegreeVector) -> Self {
        Self {
            delta_ok: d.delta() >= DELTA_THRESHOLD,
            size_ok: d.meets_size_bound(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CruxCertificate {
    pub vector: DegreeSummary,
    pub case: CaseTag,
    #[serde(serialize_with = "crate::render::rational")]
    pub ratio: BigRational,
    pub hypothesis_gate: HypothesisGates,
    pub numeric_pass: bool,
    pub overall_pass: bool,
}

/// `2^{k+1} * prod (i+1)^{l_i}` over `d * prod i^{l_i}`, assembled as one
/// fraction and reduced once.
pub fn crux_ratio(d: &DegreeVector, profile: &HypertangentProfile) -> BigRational {
    let mut numer = BigInt::from(2u32).pow(d.k() + 1);
    let mut denom = BigInt::from(d.product());
    for (&i, &l) in &profile.selection {
        numer *= BigInt::from(i + 1).pow(l);
        denom *= BigInt::from(i).pow(l);
    }
    BigRational::new(numer, denom)
}

pub fn crux_certificate(d: &DegreeVector) -> Result<CruxCertificate> {
    let profile = hypertangent_profile(d)?;
    let ratio = crux_ratio(d, &profile);
    let gates = HypothesisGates::evaluate(d);
    let numeric_pass = ratio >= BigRational::one();
    Ok(CruxCertificate {
        vector: d.into(),
        case: profile.case,
        ratio,
        hypothesis_gate: gates,
        numeric_pass,
        overall_pass: numeric_pass && gates.delta_ok && gates.size_ok,
    })
}
