//! Seeded random instances and admissible forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::degree::DegreeVector;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::field::PrimeField;
use crate::poly::instance::CIInstance;
use crate::poly::monomial::Monomial;
use crate::poly::sparse::SparsePoly;
use crate::regularity::linalg::rank;

fn random_vector<R: Rng>(field: PrimeField, n: usize, rng: &mut R) -> Vec<u64> {
    (0..n).map(|_| rng.random_range(0..field.modulus())).collect()
}

/// Dense random homogeneous components with uniform coefficients. Linear
/// parts are drawn first and redrawn until independent.
pub fn random_instance(d: &DegreeVector, p: u64, seed: u64, limits: &Limits) -> Result<CIInstance> {
    let field = PrimeField::new(p)?;
    let n = d.size() as usize;
    limits.check_vars(n)?;
    limits.check_degree(d.delta())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = d.k() as usize;
    let mut linear = None;
    for _ in 0..limits.resample_attempts {
        let rows: Vec<Vec<u64>> = (0..k).map(|_| random_vector(field, n, &mut rng)).collect();
        if rank(field, &rows) == k {
            linear = Some(rows);
            break;
        }
    }
    let linear = linear.ok_or(Error::RetriesExhausted {
        attempts: limits.resample_attempts,
    })?;
    let polys = d
        .degrees()
        .iter()
        .zip(linear)
        .map(|(&di, row)| {
            let mut f = SparsePoly::linear(field, &row);
            for j in 2..=di {
                let terms: Vec<(Monomial, u64)> = Monomial::all_of_degree(n, j)
                    .into_iter()
                    .map(|m| (m, rng.random_range(0..p)))
                    .collect();
                f = f.add_unchecked(&SparsePoly::from_terms(field, n, terms));
            }
            f
        })
        .collect();
    CIInstance::new(field, d.clone(), polys)
}

/// A uniformly random linear form outside the span of the linear parts.
pub fn random_h<R: Rng>(inst: &CIInstance, rng: &mut R, limits: &Limits) -> Result<SparsePoly> {
    let field = inst.field();
    let mut rows: Vec<Vec<u64>> = inst
        .linear_parts()
        .iter()
        .map(|q| q.linear_coefficients().expect("linear"))
        .collect();
    let k = rank(field, &rows);
    rows.push(Vec::new());
    for _ in 0..limits.resample_attempts {
        let v = random_vector(field, inst.num_vars(), rng);
        *rows.last_mut().unwrap() = v;
        if rank(field, &rows) > k {
            return Ok(SparsePoly::linear(field, rows.last().unwrap()));
        }
    }
    Err(Error::RetriesExhausted {
        attempts: limits.resample_attempts,
    })
}

/// `count` admissible forms drawn from a generator seeded with `seed`.
pub fn random_hs(inst: &CIInstance, count: usize, seed: u64, limits: &Limits) -> Result<Vec<SparsePoly>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_h(inst, &mut rng, limits)).collect()
}
