//! Degree vectors `d = (d_1, ..., d_k)` of complete intersections.

use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An ordered degree vector with `k >= 2` and `2 <= d_1 <= ... <= d_k`.
///
/// The vector describes a complete intersection of codimension `k` in
/// projective space of dimension `|d| = d_1 + ... + d_k`; the intersection
/// itself has dimension `M = |d| - k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeVector {
    degrees: Vec<u32>,
}

impl DegreeVector {
    /// Validates a raw tuple of degrees.
    ///
    /// Checks run in a fixed order: length, lower bound on each entry,
    /// then ordering.
    pub fn new(raw: &[u32]) -> Result<Self> {
        if raw.len() < 2 {
            return Err(Error::TooFewFactors { k: raw.len() });
        }
        if let Some((i, &d)) = raw.iter().enumerate().find(|(_, &d)| d < 2) {
            return Err(Error::DegreeTooSmall {
                index: i + 1,
                degree: d,
            });
        }
        if let Some(i) = raw.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::NotOrdered {
                index: i + 1,
                left: raw[i],
                right: raw[i + 1],
            });
        }
        Ok(Self {
            degrees: raw.to_vec(),
        })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Codimension `k`.
    pub fn k(&self) -> u32 {
        self.degrees.len() as u32
    }

    /// `|d| = d_1 + ... + d_k`, the dimension of the ambient projective space.
    pub fn size(&self) -> u32 {
        self.degrees.iter().sum()
    }

    /// `M = |d| - k`, the dimension of the complete intersection.
    pub fn dimension(&self) -> u32 {
        self.size() - self.k()
    }

    /// `d = d_1 * ... * d_k`, the degree of the complete intersection.
    pub fn product(&self) -> BigUint {
        self.degrees.iter().map(|&d| BigUint::from(d)).product()
    }

    /// The largest degree `d_k`.
    pub fn delta(&self) -> u32 {
        *self.degrees.last().expect("validated vectors are nonempty")
    }

    /// `k_a`: how many of the `d_i` equal `a`.
    pub fn count_equal(&self, a: u32) -> u32 {
        self.degrees.iter().filter(|&&d| d == a).count() as u32
    }

    /// `m_a = sum_{i >= a} k_i`: how many of the `d_i` are at least `a`.
    pub fn count_at_least(&self, a: u32) -> u32 {
        self.degrees.iter().filter(|&&d| d >= a).count() as u32
    }

    /// `M >= 3`, the standing assumption on the family. Only `(2, 2)`
    /// fails it among validated vectors.
    pub fn is_fano_family(&self) -> bool {
        self.dimension() >= 3
    }

    /// `M >= 2k + 3`, equivalently `|d| >= 3k + 3`.
    pub fn meets_size_bound(&self) -> bool {
        self.size() >= 3 * self.k() + 3
    }
}

/// Position of a homogeneous component `q_{i,j}` (1-based equation index
/// `i`, degree `j`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ComponentLabel {
    pub equation: u32,
    pub degree: u32,
}

impl DegreeVector {
    /// Labels of all `q_{i,j}` in standard order: by degree `j` first, then by
    /// equation index `i`. The list has `|d| = M + k` entries.
    pub fn standard_order(&self) -> Vec<ComponentLabel> {
        (1..=self.delta())
            .flat_map(|j| {
                self.degrees
                    .iter()
                    .enumerate()
                    .filter(move |(_, &d)| d >= j)
                    .map(move |(i, _)| ComponentLabel {
                        equation: i as u32 + 1,
                        degree: j,
                    })
            })
            .collect()
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for DegreeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.degrees.serialize(serializer)
    }
}

/// Summary of the derived invariants, used in machine-readable output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeSummary {
    pub degrees: Vec<u32>,
    pub k: u32,
    pub dimension: u32,
    pub size: u32,
    #[serde(serialize_with = "crate::render::biguint_string")]
    pub product: BigUint,
    pub delta: u32,
}

impl From<&DegreeVector> for DegreeSummary {
    fn from(d: &DegreeVector) -> Self {
        Self {
            degrees: d.degrees.clone(),
            k: d.k(),
            dimension: d.dimension(),
            size: d.size(),
            product: d.product(),
            delta: d.delta(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_invariants_of_two_eight() {
        let d = DegreeVector::new(&[2, 8]).unwrap();
        assert_eq!(d.k(), 2);
        assert_eq!(d.dimension(), 8);
        assert_eq!(d.size(), 10);
        assert_eq!(d.product(), BigUint::from(16u32));
        assert_eq!(d.delta(), 8);
        assert!(d.is_fano_family());
        assert!(d.meets_size_bound());
    }

    #[test]
    fn rejects_bad_vectors() {
        assert_eq!(
            DegreeVector::new(&[8, 2]),
            Err(Error::NotOrdered {
                index: 1,
                left: 8,
                right: 2
            })
        );
        assert_eq!(DegreeVector::new(&[3]), Err(Error::TooFewFactors { k: 1 }));
        assert_eq!(DegreeVector::new(&[]), Err(Error::TooFewFactors { k: 0 }));
        assert_eq!(
            DegreeVector::new(&[1, 5]),
            Err(Error::DegreeTooSmall {
                index: 1,
                degree: 1
            })
        );
    }

    #[test]
    fn quartic_surface_is_representable_but_flagged() {
        let d = DegreeVector::new(&[2, 2]).unwrap();
        assert_eq!(d.dimension(), 2);
        assert!(!d.is_fano_family());
    }

    #[test]
    fn counts() {
        let d = DegreeVector::new(&[2, 7, 8, 8]).unwrap();
        assert_eq!(d.count_equal(8), 2);
        assert_eq!(d.count_equal(5), 0);
        assert_eq!(d.count_at_least(3), 3);
        assert_eq!(d.count_at_least(9), 0);
        assert_eq!(d.to_string(), "(2,7,8,8)");
    }

    #[test]
    fn standard_order_of_two_three() {
        let d = DegreeVector::new(&[2, 3]).unwrap();
        let labels: Vec<(u32, u32)> = d
            .standard_order()
            .iter()
            .map(|c| (c.equation, c.degree))
            .collect();
        assert_eq!(labels, vec![(1, 1), (2, 1), (1, 2), (2, 2), (2, 3)]);
    }
}
