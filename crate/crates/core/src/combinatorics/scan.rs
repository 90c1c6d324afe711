//! Batch certification over a box of degree vectors.

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::crux::{crux_certificate, HypothesisGates};
use crate::combinatorics::profile::{classify_case, CaseTag};
use crate::degree::{DegreeSummary, DegreeVector};
use crate::error::{Error, Result};
use crate::render::rational_string;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum GateFlag {
    DeltaOk,
    SizeOk,
    NumericPass,
    OverallPass,
}

impl GateFlag {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "deltaOk" => Some(GateFlag::DeltaOk),
            "sizeOk" => Some(GateFlag::SizeOk),
            "numericPass" => Some(GateFlag::NumericPass),
            "overallPass" => Some(GateFlag::OverallPass),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanRequest {
    pub k_min: u32,
    pub k_max: u32,
    pub d_min: u32,
    pub d_max: u32,
    /// Every listed flag must hold for a row to be emitted.
    pub filters: Vec<GateFlag>,
}

impl ScanRequest {
    pub fn new(k_min: u32, k_max: u32, d_max: u32) -> Self {
        Self {
            k_min,
            k_max,
            d_min: 2,
            d_max,
            filters: Vec::new(),
        }
    }

    pub fn with_filter(mut self, flag: GateFlag) -> Self {
        self.filters.push(flag);
        self
    }

    /// Number of vectors the request enumerates before filtering.
    pub fn enumeration_size(&self) -> u128 {
        if self.d_max < self.d_min.max(2) {
            return 0;
        }
        let values = u128::from(self.d_max - self.d_min.max(2) + 1);
        (self.k_min.max(2)..=self.k_max)
            .map(|k| multiset_count(values, u128::from(k)))
            .sum()
    }
}

/// `C(n + k - 1, k)`, saturating.
fn multiset_count(n: u128, k: u128) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n + i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanRow {
    pub vector: DegreeSummary,
    pub case: CaseTag,
    /// `None` when the selection is undefined (`delta <= 4`).
    pub ratio: Option<String>,
    pub delta_ok: bool,
    pub size_ok: bool,
    pub numeric_pass: Option<bool>,
    pub overall_pass: bool,
    pub note: Option<String>,
}

impl ScanRow {
    fn flag(&self, f: GateFlag) -> bool {
        match f {
            GateFlag::DeltaOk => self.delta_ok,
            GateFlag::SizeOk => self.size_ok,
            GateFlag::NumericPass => self.numeric_pass == Some(true),
            GateFlag::OverallPass => self.overall_pass,
        }
    }
}

pub fn scan_row(d: &DegreeVector) -> ScanRow {
    let gates = HypothesisGates::evaluate(d);
    match crux_certificate(d) {
        Ok(c) => ScanRow {
            vector: c.vector,
            case: c.case,
            ratio: Some(rational_string(&c.ratio)),
            delta_ok: gates.delta_ok,
            size_ok: gates.size_ok,
            numeric_pass: Some(c.numeric_pass),
            overall_pass: c.overall_pass,
            note: None,
        },
        Err(e) => ScanRow {
            vector: d.into(),
            case: classify_case(d),
            ratio: None,
            delta_ok: gates.delta_ok,
            size_ok: gates.size_ok,
            numeric_pass: None,
            overall_pass: false,
            note: Some(e.to_string()),
        },
    }
}

/// All ordered vectors with entries in `[lo, hi]`, lexicographic in
/// `(k, d_1, ..., d_k)`.
pub fn enumerate_vectors(k_min: u32, k_max: u32, lo: u32, hi: u32) -> Vec<DegreeVector> {
    let lo = lo.max(2);
    let mut out = Vec::new();
    for k in k_min.max(2)..=k_max {
        let mut current = vec![lo; k as usize];
        if lo > hi {
            break;
        }
        loop {
            out.push(DegreeVector::new(&current).expect("enumeration yields ordered vectors"));
            // advance to the next nondecreasing tuple
            let Some(pos) = current.iter().rposition(|&x| x < hi) else {
                break;
            };
            let next = current[pos] + 1;
            for x in &mut current[pos..] {
                *x = next;
            }
        }
    }
    out
}

pub fn scan(request: &ScanRequest, limit: u64) -> Result<Vec<ScanRow>> {
    if request.enumeration_size() > u128::from(limit) {
        return Err(Error::limit("scan enumeration size", limit));
    }
    let vectors = enumerate_vectors(request.k_min, request.k_max, request.d_min, request.d_max);
    // indexed parallel collect keeps the enumeration order
    let rows: Vec<ScanRow> = vectors
        .par_iter()
        .map(scan_row)
        .filter(|row| request.filters.iter().all(|&f| row.flag(f)))
        .collect();
    Ok(rows)
}
