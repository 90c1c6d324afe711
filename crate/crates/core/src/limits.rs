//! Resource budgets shared by the algebra routines.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, rename_all = "snake_case", deny_unknown_fields)]
pub struct Limits {
    /// Largest number of variables a polynomial system may use.
    pub max_vars: usize,
    /// Largest total degree of an input polynomial.
    pub max_degree: u32,
    /// S-pairs Buchberger may process before giving up.
    pub max_pairs: usize,
    /// Largest intermediate basis size.
    pub max_basis: usize,
    /// Largest number of terms in any intermediate polynomial.
    pub max_terms: usize,
    /// Largest number of degree vectors a scan may enumerate.
    pub scan_limit: u64,
    /// Attempts allowed when resampling random linear forms.
    pub resample_attempts: u32,
    /// Projective points the excess-component classifier may visit.
    pub point_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_vars: 8,
            max_degree: 6,
            max_pairs: 50_000,
            max_basis: 2_000,
            max_terms: 50_000,
            scan_limit: 2_000_000,
            resample_attempts: 64,
            point_budget: 200_000,
        }
    }
}

impl Limits {
    pub fn check_vars(&self, n: usize) -> Result<()> {
        if n > self.max_vars {
            return Err(Error::limit(format!("{n} variables"), self.max_vars));
        }
        Ok(())
    }

    pub fn check_degree(&self, degree: u32) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::limit(format!("total degree {degree}"), self.max_degree));
        }
        Ok(())
    }
}
