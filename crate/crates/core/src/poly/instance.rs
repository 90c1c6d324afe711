//! Explicit complete intersections in affine coordinates centred at the
//! marked point.

use serde::Serialize;

use crate::degree::{ComponentLabel, DegreeVector};
use crate::error::{Error, Result};
use crate::poly::field::PrimeField;
use crate::poly::sparse::SparsePoly;

/// `k` polynomials `f_1..f_k` in `M + k` variables with `deg f_i <= d_i` and
/// `f_i(0) = 0`, i.e. a complete intersection through the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CIInstance {
    field: PrimeField,
    degrees: DegreeVector,
    polys: Vec<SparsePoly>,
}

impl CIInstance {
    pub fn new(field: PrimeField, degrees: DegreeVector, polys: Vec<SparsePoly>) -> Result<Self> {
        let n = degrees.size() as usize;
        if polys.len() != degrees.k() as usize {
            return Err(Error::InvalidInstance(format!(
                "{} polynomials for a degree vector with k = {}",
                polys.len(),
                degrees.k()
            )));
        }
        for (i, (f, &d)) in polys.iter().zip(degrees.degrees()).enumerate() {
            if f.modulus() != field.modulus() {
                return Err(Error::ModulusMismatch {
                    left: field.modulus(),
                    right: f.modulus(),
                });
            }
            if f.num_vars() != n {
                return Err(Error::InvalidInstance(format!(
                    "f_{} has {} variables, expected M + k = {n}",
                    i + 1,
                    f.num_vars()
                )));
            }
            if f.total_degree().unwrap_or(0) > d {
                return Err(Error::InvalidInstance(format!(
                    "f_{} has degree {} > d_{} = {d}",
                    i + 1,
                    f.total_degree().unwrap_or(0),
                    i + 1
                )));
            }
            if f.constant_term() != 0 {
                return Err(Error::InvalidInstance(format!(
                    "f_{} does not vanish at the origin",
                    i + 1
                )));
            }
            if f.component(1).is_zero() {
                return Err(Error::InvalidInstance(format!(
                    "f_{} has no linear part",
                    i + 1
                )));
            }
        }
        Ok(Self {
            field,
            degrees,
            polys,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn degrees(&self) -> &DegreeVector {
        &self.degrees
    }

    pub fn polys(&self) -> &[SparsePoly] {
        &self.polys
    }

    pub fn num_vars(&self) -> usize {
        self.degrees.size() as usize
    }

    /// Homogeneous component `q_{i,j}` (1-based `i`).
    pub fn component(&self, i: u32, j: u32) -> SparsePoly {
        self.polys[i as usize - 1].component(j)
    }

    /// The linear parts `q_{1,1}, ..., q_{k,1}`.
    pub fn linear_parts(&self) -> Vec<SparsePoly> {
        (1..=self.degrees.k()).map(|i| self.component(i, 1)).collect()
    }

    /// `f_{i,j} = q_{i,1} + ... + q_{i,j}`.
    pub fn truncated_equation(&self, i: u32, j: u32) -> Result<SparsePoly> {
        let k = self.degrees.k();
        if i == 0 || i > k {
            return Err(Error::IndexOutOfRange(format!("equation {i} not in 1..={k}")));
        }
        let d = self.degrees.degrees()[i as usize - 1];
        if j == 0 || j > d {
            return Err(Error::IndexOutOfRange(format!("degree {j} not in 1..={d}")));
        }
        let f = &self.polys[i as usize - 1];
        Ok(SparsePoly::from_terms(
            self.field,
            self.num_vars(),
            f.terms()
                .filter(|(m, _)| (1..=j).contains(&m.degree()))
                .map(|(m, c)| (m.clone(), c)),
        ))
    }

    /// The `M + k` components `q_{i,j}` in standard order. Components that
    /// vanish are kept as explicit zeros and flagged.
    pub fn standard_order_sequence(&self) -> Vec<SequenceEntry> {
        self.degrees
            .standard_order()
            .into_iter()
            .map(|label| {
                let poly = self.component(label.equation, label.degree);
                SequenceEntry {
                    label,
                    is_zero: poly.is_zero(),
                    poly,
                }
            })
            .collect()
    }

    /// Applies `z -> A z` to every equation.
    pub fn change_coordinates(&self, rows: &[Vec<u64>]) -> CIInstance {
        Self {
            field: self.field,
            degrees: self.degrees.clone(),
            polys: self.polys.iter().map(|f| f.compose_linear(rows)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SequenceEntry {
    pub label: ComponentLabel,
    #[serde(serialize_with = "display_string")]
    pub poly: SparsePoly,
    pub is_zero: bool,
}

fn display_string<S: serde::Serializer>(p: &SparsePoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}
