//! Case taxonomy, the counts `k_a`, `m_a`, and the hypertangent selection `l_i`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::degree::DegreeVector;
use crate::error::{Error, Result};

/// Which of the four mutually exclusive cases a degree vector falls into,
/// decided by how many degrees equal `delta = d_k` and `delta - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    /// At least three degrees equal `delta`.
    One,
    /// Exactly two degrees equal `delta`.
    TwoA,
    /// One degree equals `delta` and at least one equals `delta - 1`.
    TwoB,
    /// One degree equals `delta` and none equals `delta - 1`.
    Three,
}

impl CaseTag {
    pub fn label(self) -> &'static str {
        match self {
            CaseTag::One => "I",
            CaseTag::TwoA => "IIA",
            CaseTag::TwoB => "IIB",
            CaseTag::Three => "III",
        }
    }

    /// Cases I and IIA drop the two top-degree components of two different
    /// equations; IIB and III drop the two top components of the last one.
    pub fn top_shared(self) -> bool {
        matches!(self, CaseTag::One | CaseTag::TwoA)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for CaseTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

pub fn classify_case(d: &DegreeVector) -> CaseTag {
    let delta = d.delta();
    match d.count_equal(delta) {
        c if c >= 3 => CaseTag::One,
        2 => CaseTag::TwoA,
        _ if d.count_equal(delta - 1) >= 1 => CaseTag::TwoB,
        _ => CaseTag::Three,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HypertangentProfile {
    pub case: CaseTag,
    pub delta: u32,
    /// `a -> k_a` for `2 <= a <= delta`.
    pub k_counts: BTreeMap<u32, u32>,
    /// `a -> m_a` for `2 <= a <= delta`.
    pub m_counts: BTreeMap<u32, u32>,
    /// `i -> l_i` for every index the selection rules assign, zeros included.
    pub selection: BTreeMap<u32, u32>,
    pub selection_total: u32,
    /// `M - k - 3`.
    pub expected_total: i64,
}

impl HypertangentProfile {
    /// `l_i`, zero for indices outside the selection.
    pub fn l(&self, i: u32) -> u32 {
        self.selection.get(&i).copied().unwrap_or(0)
    }

    pub fn m(&self, a: u32) -> u32 {
        self.m_counts.get(&a).copied().unwrap_or(0)
    }

    pub fn is_consistent(&self) -> bool {
        i64::from(self.selection_total) == self.expected_total
    }

    /// The selected systems in intersection order: `l_2` copies of 2, then
    /// `l_3` copies of 3, and so on.
    pub fn divisor_sequence(&self) -> impl Iterator<Item = u32> + '_ {
        self.selection
            .iter()
            .flat_map(|(&i, &l)| std::iter::repeat_n(i, l as usize))
    }
}

fn require_delta(d: &DegreeVector) -> Result<u32> {
    let delta = d.delta();
    if delta <= 4 {
        return Err(Error::DeltaTooSmall { delta });
    }
    Ok(delta)
}

/// Computes the selection without checking `sum l_i = M - k - 3`.
///
/// Fails only for `delta <= 4`, where the tail rules land on index 2 and
/// collide with the rule for `l_2`.
pub fn selection_unchecked(d: &DegreeVector) -> Result<HypertangentProfile> {
    let delta = require_delta(d)?;
    let case = classify_case(d);
    let k_counts: BTreeMap<u32, u32> = (2..=delta).map(|a| (a, d.count_equal(a))).collect();
    let m_counts: BTreeMap<u32, u32> = (2..=delta).map(|a| (a, d.count_at_least(a))).collect();
    let m = |a: u32| i64::from(d.count_at_least(a));

    let mut rules: Vec<(u32, i64)> = vec![(2, m(3) - 1)];
    rules.extend((3..=delta - 3).map(|i| (i, m(i + 1))));
    match case {
        CaseTag::One => {
            rules.push((delta - 2, m(delta - 1)));
            rules.push((delta - 1, m(delta) - 2));
        }
        CaseTag::TwoA => rules.push((delta - 2, m(delta - 1))),
        CaseTag::TwoB => rules.push((delta - 2, m(delta - 1) - 1)),
        CaseTag::Three => {}
    }

    let mut selection = BTreeMap::new();
    for (i, l) in rules {
        // Each rule yields a nonnegative count for delta >= 5; a negative
        // value would mean the case analysis is wrong.
        let l = u32::try_from(l).map_err(|_| Error::SelectionInconsistent {
            sum: l,
            expected: 0,
        })?;
        let prev = selection.insert(i, l);
        debug_assert!(prev.is_none(), "selection index {i} assigned twice");
    }
    let selection_total = selection.values().sum();
    Ok(HypertangentProfile {
        case,
        delta,
        k_counts,
        m_counts,
        selection,
        selection_total,
        expected_total: i64::from(d.dimension()) - i64::from(d.k()) - 3,
    })
}

/// The full profile, rejecting selections whose total is not `M - k - 3`.
pub fn hypertangent_profile(d: &DegreeVector) -> Result<HypertangentProfile> {
    let profile = selection_unchecked(d)?;
    if !profile.is_consistent() {
        return Err(Error::SelectionInconsistent {
            sum: i64::from(profile.selection_total),
            expected: profile.expected_total,
        });
    }
    Ok(profile)
}

/// One row of the base-locus codimension profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BaseLocusEntry {
    /// Degree `a` of the hypertangent system.
    pub degree: u32,
    /// Codimension of the base locus near the point, inside the hyperplane
    /// section (of dimension `M - 1`).
    pub codim: u32,
    /// True when `codim` is the count `m_2 + ... + m_{a+1}`; false for a
    /// boundary row whose value comes from the base locus being a curve.
    pub from_counts: bool,
    /// The base locus is one-dimensional at this degree.
    pub curve_boundary: bool,
}

/// Last degree for which the base-locus codimension is given by counting.
pub fn counted_range_end(case: CaseTag, delta: u32) -> u32 {
    if case.top_shared() {
        delta - 2
    } else {
        delta - 3
    }
}

/// Degree at which the base locus becomes a curve.
pub fn curve_boundary(case: CaseTag, delta: u32) -> u32 {
    match case {
        CaseTag::One => delta - 1,
        CaseTag::TwoA | CaseTag::TwoB => delta - 2,
        CaseTag::Three => delta - 3,
    }
}

pub fn bs_codim_profile(d: &DegreeVector) -> Result<Vec<BaseLocusEntry>> {
    let delta = require_delta(d)?;
    let case = classify_case(d);
    let end = counted_range_end(case, delta);
    let boundary = curve_boundary(case, delta);
    let mut rows: Vec<BaseLocusEntry> = (1..=end)
        .map(|a| BaseLocusEntry {
            degree: a,
            codim: (2..=a + 1).map(|i| d.count_at_least(i)).sum(),
            from_counts: true,
            curve_boundary: a == boundary,
        })
        .collect();
    if boundary > end {
        rows.push(BaseLocusEntry {
            degree: boundary,
            codim: d.dimension() - 2,
            from_counts: false,
            curve_boundary: true,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(raw: &[u32]) -> DegreeVector {
        DegreeVector::new(raw).unwrap()
    }

    #[test]
    fn case_examples() {
        assert_eq!(classify_case(&dv(&[8, 8, 8])), CaseTag::One);
        assert_eq!(classify_case(&dv(&[8, 8])), CaseTag::TwoA);
        assert_eq!(classify_case(&dv(&[7, 8])), CaseTag::TwoB);
        assert_eq!(classify_case(&dv(&[2, 2, 8])), CaseTag::Three);
    }

    #[test]
    fn profile_two_eight() {
        let p = hypertangent_profile(&dv(&[2, 8])).unwrap();
        assert_eq!(p.case, CaseTag::Three);
        assert_eq!(p.m(2), 2);
        for a in 3..=8 {
            assert_eq!(p.m(a), 1);
        }
        let expected: BTreeMap<u32, u32> = [(2, 0), (3, 1), (4, 1), (5, 1)].into();
        assert_eq!(p.selection, expected);
        assert_eq!(p.selection_total, 3);
        assert_eq!(p.expected_total, 3);
        assert_eq!(p.divisor_sequence().collect::<Vec<_>>(), vec![3, 4, 5]);
    }

    #[test]
    fn profile_eight_eight_eight() {
        let p = hypertangent_profile(&dv(&[8, 8, 8])).unwrap();
        let expected: BTreeMap<u32, u32> =
            [(2, 2), (3, 3), (4, 3), (5, 3), (6, 3), (7, 1)].into();
        assert_eq!(p.selection, expected);
        assert_eq!(p.selection_total, 15);
    }

    #[test]
    fn profile_seven_eight() {
        let p = hypertangent_profile(&dv(&[7, 8])).unwrap();
        assert_eq!(p.case, CaseTag::TwoB);
        let expected: BTreeMap<u32, u32> = [(2, 1), (3, 2), (4, 2), (5, 2), (6, 1)].into();
        assert_eq!(p.selection, expected);
        assert_eq!(p.selection_total, 8);
    }

    #[test]
    fn small_delta_is_refused() {
        assert_eq!(
            hypertangent_profile(&dv(&[4, 4, 4])),
            Err(Error::DeltaTooSmall { delta: 4 })
        );
        assert!(bs_codim_profile(&dv(&[2, 3])).is_err());
        assert!(hypertangent_profile(&dv(&[5, 5, 5])).is_ok());
    }

    #[test]
    fn base_locus_examples() {
        let rows = bs_codim_profile(&dv(&[2, 8])).unwrap();
        assert_eq!(rows.iter().find(|r| r.degree == 3).unwrap().codim, 4);
        // case III: the boundary a = delta - 3 is inside the counted range
        let last = rows.last().unwrap();
        assert_eq!((last.degree, last.codim), (5, 6));
        assert!(last.curve_boundary && last.from_counts);

        let rows = bs_codim_profile(&dv(&[8, 8])).unwrap();
        assert_eq!(rows[0].degree, 1);
        assert_eq!(rows[0].codim, 2);

        let rows = bs_codim_profile(&dv(&[8, 8, 8])).unwrap();
        let last = rows.last().unwrap();
        assert_eq!(last.degree, 7);
        assert!(last.curve_boundary && !last.from_counts);
        assert_eq!(rows.iter().filter(|r| r.curve_boundary).count(), 1);
    }
}
