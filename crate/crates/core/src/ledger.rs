//! Numeric shadow of the intersection construction.
//!
//! A hypothetical divisor `D ~ nH` with `mult_o D > 2n` on a hyperplane
//! section is cut successively by the `k` tangent divisors and then by the
//! selected hypertangent divisors. Each cut by a divisor in `|aH|` with
//! multiplicity `mu` at the point multiplies the degree bound by `a` and the
//! multiplicity bound by `mu`. Bounds are in units of `n`, which cancels.
//!
//! The closing ratio is rebuilt step by step and shares no arithmetic with
//! [`crate::combinatorics::crux`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::combinatorics::profile::HypertangentProfile;
use crate::degree::DegreeVector;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum StepKind {
    /// The starting divisor; its multiplicity bound is taken as given.
    Axiom,
    /// Intersection with the tangent divisor `T_i = {q_(i,1) = 0}`.
    Tangent { equation: u32 },
    /// Intersection with a general divisor of the degree-`system`
    /// hypertangent linear system.
    Hypertangent { system: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CycleBound {
    pub label: String,
    pub step: StepKind,
    /// Codimension inside the hyperplane section.
    pub codim: u32,
    /// Upper bound on the degree, in units of `n`.
    #[serde(serialize_with = "crate::render::rational")]
    pub deg_bound: BigRational,
    /// Lower bound on the multiplicity at the point, in units of `n`.
    #[serde(serialize_with = "crate::render::rational")]
    pub mult_bound: BigRational,
    /// Whether `mult_bound` is a strict inequality.
    pub strict: bool,
}

impl CycleBound {
    /// `mult_bound / deg_bound`.
    pub fn ratio(&self) -> BigRational {
        &self.mult_bound / &self.deg_bound
    }

    fn cut(&self, label: String, step: StepKind, degree: u32, multiplicity: u32) -> Self {
        Self {
            label,
            step,
            codim: self.codim + 1,
            deg_bound: &self.deg_bound * BigRational::from_integer(degree.into()),
            mult_bound: &self.mult_bound * BigRational::from_integer(multiplicity.into()),
            strict: self.strict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LedgerTrace {
    pub vector: Vec<u32>,
    /// Dimension of the hyperplane section, `M - 1`.
    pub ambient_dimension: u32,
    pub steps: Vec<CycleBound>,
    /// `mult_o/deg` of the last step, rendered exactly.
    #[serde(serialize_with = "crate::render::rational")]
    pub final_ratio: BigRational,
    /// `Some(ratio >= 1)` once the chain reaches a 1-cycle; with a strict
    /// multiplicity bound this means `mult_o C > deg C`.
    pub final_verdict: Option<bool>,
}

impl LedgerTrace {
    pub fn last(&self) -> &CycleBound {
        self.steps.last().expect("a trace always has its axiom step")
    }

    fn refresh(&mut self) {
        self.final_ratio = self.last().ratio();
    }
}

/// Starting divisor and the `k` tangent cuts, ending at the subvariety of
/// codimension `k + 1` with `mult_o/deg > 2^{k+1}/d`.
pub fn build_tangent_chain(d: &DegreeVector) -> Result<LedgerTrace> {
    if !d.meets_size_bound() {
        return Err(Error::HypothesisViolated(format!(
            "the tangent chain needs M >= 2k + 3; {d} has M = {}",
            d.dimension()
        )));
    }
    let degree = BigRational::from_integer(BigInt::from(d.product()));
    let mut steps = vec![CycleBound {
        label: "D".to_string(),
        step: StepKind::Axiom,
        codim: 1,
        deg_bound: degree,
        mult_bound: BigRational::from_integer(2.into()),
        strict: true,
    }];
    for j in 1..=d.k() {
        let next = steps
            .last()
            .unwrap()
            .cut(format!("Y_{j}"), StepKind::Tangent { equation: j }, 1, 2);
        steps.push(next);
    }
    let mut trace = LedgerTrace {
        vector: d.degrees().to_vec(),
        ambient_dimension: d.dimension() - 1,
        steps,
        final_ratio: BigRational::one(),
        final_verdict: None,
    };
    trace.refresh();
    Ok(trace)
}

/// Cuts the tangent-stage cycle by `l_i` divisors from each `Lambda_i`,
/// each in `|iH|` with multiplicity `i + 1`, down to a 1-cycle `C`.
pub fn apply_hypertangent_chain(
    mut trace: LedgerTrace,
    profile: &HypertangentProfile,
) -> Result<LedgerTrace> {
    let k = trace.vector.len() as u32;
    let tangent_end = trace.last();
    if tangent_end.codim != k + 1 || !matches!(tangent_end.step, StepKind::Tangent { .. }) {
        return Err(Error::TraceIncomplete(format!(
            "last step {} has codimension {}, expected {}",
            tangent_end.label,
            tangent_end.codim,
            k + 1
        )));
    }
    let cuts: Vec<u32> = profile.divisor_sequence().collect();
    let needed = i64::from(trace.ambient_dimension) - 1 - i64::from(k + 1);
    if cuts.len() as i64 != needed {
        return Err(Error::DimensionMismatch {
            expected: needed,
            found: cuts.len() as i64,
        });
    }
    let total = cuts.len();
    for (t, &system) in cuts.iter().enumerate() {
        let label = if t + 1 == total {
            "C".to_string()
        } else {
            format!("Z_{}", t + 1)
        };
        let next = trace
            .last()
            .cut(label, StepKind::Hypertangent { system }, system, system + 1);
        trace.steps.push(next);
    }
    trace.refresh();
    trace.final_verdict = Some(trace.final_ratio >= BigRational::one());
    Ok(trace)
}

/// Convenience: both stages for a vector.
pub fn full_ledger(d: &DegreeVector) -> Result<LedgerTrace> {
    let profile = crate::combinatorics::hypertangent_profile(d)?;
    let trace = build_tangent_chain(d)?;
    apply_hypertangent_chain(trace, &profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::hypertangent_profile;

    fn dv(raw: &[u32]) -> DegreeVector {
        DegreeVector::new(raw).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn tangent_chain_two_eight() {
        let t = build_tangent_chain(&dv(&[2, 8])).unwrap();
        assert_eq!(t.steps.len(), 3);
        assert_eq!(t.steps[1].ratio(), q(1, 4));
        assert_eq!(t.final_ratio, q(1, 2));
        assert_eq!(t.last().codim, 3);
        assert!(t.last().strict);
        assert_eq!(t.final_verdict, None);
    }

    #[test]
    fn tangent_chain_eight_eight() {
        let t = build_tangent_chain(&dv(&[8, 8])).unwrap();
        assert_eq!(t.final_ratio, q(1, 8));
    }

    #[test]
    fn full_chain_values() {
        let t = full_ledger(&dv(&[2, 8])).unwrap();
        assert_eq!(t.final_ratio, q(1, 1));
        assert_eq!(t.final_verdict, Some(true));
        assert_eq!(t.last().label, "C");
        // the 1-cycle sits in codimension M - 2 of the hyperplane section
        assert_eq!(t.last().codim, 6);

        assert_eq!(full_ledger(&dv(&[8, 8])).unwrap().final_ratio, q(49, 48));
        let t = full_ledger(&dv(&[2, 7])).unwrap();
        assert_eq!(t.final_ratio, q(20, 21));
        assert_eq!(t.final_verdict, Some(false));
    }

    #[test]
    fn codimension_grows_by_one_per_step() {
        let t = full_ledger(&dv(&[3, 5, 9])).unwrap();
        for w in t.steps.windows(2) {
            assert_eq!(w[1].codim, w[0].codim + 1);
        }
    }

    #[test]
    fn mismatched_profile_is_rejected() {
        let trace = build_tangent_chain(&dv(&[2, 8])).unwrap();
        let mut profile = hypertangent_profile(&dv(&[8, 8])).unwrap();
        let err = apply_hypertangent_chain(trace.clone(), &profile).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        profile.selection.clear();
        let done = full_ledger(&dv(&[2, 8])).unwrap();
        assert!(matches!(
            apply_hypertangent_chain(done, &profile),
            Err(Error::TraceIncomplete(_))
        ));
    }

    #[test]
    fn needs_size_bound() {
        assert!(matches!(
            build_tangent_chain(&dv(&[2, 2, 2, 8])),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
