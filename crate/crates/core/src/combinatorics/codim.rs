//! Codimension estimates for the locus of coefficient tuples that violate
//! regularity at a fixed point.
//!
//! Two strata are bounded separately: tuples whose forms all vanish on a
//! common line (needs codimension at least `M + 1`), and tuples whose zero
//! set has an excess component that is not a line (needs at least `2M`).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::combinatorics::profile::{classify_case, CaseTag};
use crate::combinatorics::xi::xi_min_formula;
use crate::degree::DegreeVector;
use crate::error::{Error, Result};

fn require_size_bound(d: &DegreeVector) -> Result<()> {
    if !d.meets_size_bound() {
        return Err(Error::HypothesisViolated(format!(
            "M = {} < 2k + 3 = {} for {d}",
            d.dimension(),
            2 * d.k() + 3
        )));
    }
    Ok(())
}

fn binomial2(n: i64) -> i64 {
    n * (n - 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LineCodimReport {
    pub case: CaseTag,
    /// Degrees `delta(1..M-2)` of the forms left after dropping linear parts
    /// and the last two entries of the standard-order sequence.
    pub degree_sequence: Vec<u32>,
    /// Per-equation top degrees `a_i` kept in that sequence.
    pub a_vector: Vec<u32>,
    pub a_sum: u32,
    /// `sum a_i == M + k - 2`.
    pub a_sum_ok: bool,
    pub degree_sum: u32,
    /// `sum delta(i) == sum a_i (a_i + 1) / 2 - k`.
    pub degree_sum_ok: bool,
    /// `sum (delta(i) + 1) - 2 (M - 2)`.
    pub line_codim: i64,
    /// Minimum of `sum a_i (a_i + 1)` over admissible `a`, at `A = M + k - 2`.
    pub xi_min: u64,
    /// `xi_min / 2 - k - (M - 2)`, a lower bound on `line_codim` valid for
    /// every degree vector with the same `k` and `M`.
    pub line_codim_lower_bound: i64,
    /// `M - 2 = k * quotient + remainder`.
    pub quotient: u32,
    pub remainder: u32,
    /// `(k (a+1)^2 + k (a-1) + 2 l (a+1)) / 2 - (M - 2)`, the simplified bound
    /// that drops the `+l` term of the exact minimum.
    pub simplified_bound: i64,
    /// `k (a^2 - a) + 2 l (a - 1)`; at least 6 iff the simplified bound
    /// reaches `M + 1`.
    pub reduced_margin: i64,
    pub target: i64,
    pub holds: bool,
}

pub fn line_codim_report(d: &DegreeVector) -> Result<LineCodimReport> {
    require_size_bound(d)?;
    let case = classify_case(d);
    let k = d.k();
    let m = d.dimension();

    let labels = d.standard_order();
    let kept = &labels[..labels.len() - 2];
    let degree_sequence: Vec<u32> = kept
        .iter()
        .filter(|c| c.degree >= 2)
        .map(|c| c.degree)
        .collect();
    debug_assert_eq!(degree_sequence.len() as u32, m - 2);

    let degs = d.degrees();
    let ku = k as usize;
    let mut a_vector = degs.to_vec();
    if case.top_shared() {
        a_vector[ku - 2] = degs[ku - 1] - 1;
        a_vector[ku - 1] = degs[ku - 1] - 1;
    } else {
        a_vector[ku - 1] = degs[ku - 1] - 2;
    }
    let a_sum: u32 = a_vector.iter().sum();
    let degree_sum: u32 = degree_sequence.iter().sum();
    let from_a: u32 = a_vector.iter().map(|a| a * (a + 1) / 2).sum::<u32>() - k;

    let mm2 = i64::from(m) - 2;
    let line_codim = degree_sequence
        .iter()
        .map(|&x| i64::from(x) + 1)
        .sum::<i64>()
        - 2 * mm2;

    let xi_min = xi_min_formula(k, m + k - 2)?;
    let line_codim_lower_bound = (xi_min / 2) as i64 - i64::from(k) - mm2;

    let (ki, a, l) = (i64::from(k), mm2 / i64::from(k), mm2 % i64::from(k));
    let simplified_bound =
        (ki * (a + 1) * (a + 1) + ki * (a - 1) + 2 * l * (a + 1)) / 2 - mm2;
    let reduced_margin = ki * (a * a - a) + 2 * l * (a - 1);
    let target = i64::from(m) + 1;

    Ok(LineCodimReport {
        case,
        a_sum,
        a_sum_ok: a_sum == m + k - 2,
        degree_sum,
        degree_sum_ok: degree_sum == from_a,
        degree_sequence,
        a_vector,
        line_codim,
        xi_min,
        line_codim_lower_bound,
        quotient: a as u32,
        remainder: l as u32,
        simplified_bound,
        reduced_margin,
        target,
        holds: line_codim >= target,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StageMinimum {
    pub stage: u32,
    pub argmin: u32,
    pub value: i64,
    /// The minimum sits at `b = 0` or at the largest admissible `b`.
    pub at_endpoint: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NonlineCodimReport {
    /// `i -> C(M + 1 - i, 2)` for the quadratic stages `i = 1..k`.
    pub quadratic_stage_bounds: BTreeMap<u32, i64>,
    /// `C(M + 1 - k, 2) - 2M`.
    pub quadratic_gap: i64,
    /// `((M - (2k + 3)) M + k^2 - k) / 2`, which must equal the gap.
    pub quadratic_gap_closed_form: i64,
    /// `b -> M (2b + 3) - 2b^2 - 6b - 5` for every `b` admissible at some stage.
    pub good_sequence_bounds: BTreeMap<u32, i64>,
    /// Minimum over admissible `b` for each stage `i = k+1..M-2`.
    pub stage_minima: Vec<StageMinimum>,
    pub target: i64,
    pub quadratic_holds: bool,
    pub good_sequence_holds: bool,
    pub holds: bool,
}

pub fn good_sequence_bound(m: u32, b: u32) -> i64 {
    let (m, b) = (i64::from(m), i64::from(b));
    m * (2 * b + 3) - 2 * b * b - 6 * b - 5
}

/// Admissible `b` at stage `i`: `0..=i-1` minus `M - 3`.
fn admissible(m: u32, stage: u32) -> impl Iterator<Item = u32> {
    (0..stage).filter(move |&b| b + 3 != m)
}

pub fn nonline_codim_report(d: &DegreeVector) -> Result<NonlineCodimReport> {
    require_size_bound(d)?;
    let k = d.k();
    let m = d.dimension();
    let (mi, ki) = (i64::from(m), i64::from(k));
    let target = 2 * mi;

    let quadratic_stage_bounds: BTreeMap<u32, i64> = (1..=k)
        .map(|i| (i, binomial2(mi + 1 - i64::from(i))))
        .collect();
    let quadratic_gap = binomial2(mi + 1 - ki) - target;
    let doubled = (mi - (2 * ki + 3)) * mi + ki * ki - ki;
    let quadratic_gap_closed_form = doubled / 2;

    let mut good_sequence_bounds = BTreeMap::new();
    let mut stage_minima = Vec::new();
    for stage in k + 1..=m - 2 {
        let values: Vec<(u32, i64)> = admissible(m, stage)
            .map(|b| (b, good_sequence_bound(m, b)))
            .collect();
        good_sequence_bounds.extend(values.iter().copied());
        let &(argmin, value) = values
            .iter()
            .min_by_key(|&&(b, v)| (v, b))
            .expect("b = 0 is always admissible");
        let right = values.last().map(|&(b, _)| b).unwrap_or(0);
        let endpoint_min = good_sequence_bound(m, 0).min(good_sequence_bound(m, right));
        stage_minima.push(StageMinimum {
            stage,
            argmin,
            value,
            at_endpoint: value == endpoint_min,
        });
    }

    let quadratic_holds = quadratic_stage_bounds.values().all(|&v| v >= target)
        && quadratic_gap == quadratic_gap_closed_form
        && doubled % 2 == 0;
    let good_sequence_holds = stage_minima
        .iter()
        .all(|s| s.value >= target && s.at_endpoint);
    Ok(NonlineCodimReport {
        quadratic_stage_bounds,
        quadratic_gap,
        quadratic_gap_closed_form,
        good_sequence_bounds,
        stage_minima,
        target,
        quadratic_holds,
        good_sequence_holds,
        holds: quadratic_holds && good_sequence_holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CodimReport {
    pub line: LineCodimReport,
    pub nonline: NonlineCodimReport,
}

impl CodimReport {
    pub fn holds(&self) -> bool {
        self.line.holds && self.nonline.holds
    }
}

pub fn codim_report(d: &DegreeVector) -> Result<CodimReport> {
    Ok(CodimReport {
        line: line_codim_report(d)?,
        nonline: nonline_codim_report(d)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(raw: &[u32]) -> DegreeVector {
        DegreeVector::new(raw).unwrap()
    }

    #[test]
    fn line_report_two_eight() {
        let r = line_codim_report(&dv(&[2, 8])).unwrap();
        assert_eq!(r.degree_sequence, vec![2, 2, 3, 4, 5, 6]);
        assert_eq!(r.line_codim, 16);
        assert_eq!(r.target, 9);
        assert!(r.holds);
        assert_eq!(r.a_vector, vec![2, 6]);
        assert_eq!(r.a_sum, 8);
        assert!(r.a_sum_ok && r.degree_sum_ok);
        assert!(r.line_codim_lower_bound <= r.line_codim);
        // M - 2 = 6 = 2 * 3 + 0
        assert_eq!((r.quotient, r.remainder), (3, 0));
        assert_eq!(r.reduced_margin, 12);
    }

    #[test]
    fn line_report_eight_eight_reduced_margin() {
        let r = line_codim_report(&dv(&[8, 8])).unwrap();
        assert_eq!((r.quotient, r.remainder), (6, 0));
        assert_eq!(r.reduced_margin, 60);
        assert_eq!(r.a_vector, vec![7, 7]);
        assert!(r.holds);
    }

    #[test]
    fn size_bound_is_required() {
        let err = line_codim_report(&dv(&[2, 2, 2, 8])).unwrap_err();
        assert!(matches!(err, Error::HypothesisViolated(_)));
        assert!(nonline_codim_report(&dv(&[3, 4])).is_err());
    }

    #[test]
    fn nonline_report_two_eight() {
        let r = nonline_codim_report(&dv(&[2, 8])).unwrap();
        assert_eq!(r.target, 16);
        assert_eq!(r.quadratic_stage_bounds[&2], 21);
        assert_eq!(r.quadratic_stage_bounds[&1], 28);
        assert_eq!(r.good_sequence_bounds[&0], 19);
        assert_eq!(r.good_sequence_bounds[&4], 27);
        // M - 3 = 5 is never admissible; M - 4 = 4 is the largest b
        assert!(!r.good_sequence_bounds.contains_key(&5));
        assert_eq!(r.quadratic_gap, r.quadratic_gap_closed_form);
        assert!(r.holds);
    }

    #[test]
    fn simplified_bound_never_exceeds_exact_minimum() {
        for raw in [[2u32, 8], [8, 8], [5, 12], [7, 9]] {
            let r = line_codim_report(&dv(&raw)).unwrap();
            assert!(r.simplified_bound <= r.line_codim_lower_bound);
            assert_eq!(r.simplified_bound >= r.target, r.reduced_margin >= 6);
        }
    }
}
