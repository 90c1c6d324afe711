//! Dense linear algebra over `F_p` for coefficient vectors of linear forms.

use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::field::PrimeField;

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(field: PrimeField, rows: &mut [Vec<u64>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row).take(cols) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(field: PrimeField, rows: &[Vec<u64>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    rref(field, &mut m, cols).len()
}

/// A basis of `{x : rows * x = 0}` in `F_p^cols`.
pub fn nullspace(field: PrimeField, rows: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(m[r][f]);
            }
            v
        })
        .collect()
}

/// Uniformly random invertible `n x n` matrix, by rejection.
pub fn random_invertible<R: Rng>(
    field: PrimeField,
    n: usize,
    rng: &mut R,
    attempts: u32,
) -> Result<Vec<Vec<u64>>> {
    for _ in 0..attempts {
        let m: Vec<Vec<u64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.random_range(0..field.modulus())).collect())
            .collect();
        if rank(field, &m) == n {
            return Ok(m);
        }
    }
    Err(Error::RetriesExhausted { attempts })
}
