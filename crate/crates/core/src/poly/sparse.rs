//! Sparse multivariate polynomials over `F_p`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::field::PrimeField;
use crate::poly::monomial::Monomial;

/// A polynomial stored as a map from exponent vectors to nonzero residues.
///
/// Terms iterate in ascending grevlex order; the leading term is the last
/// entry. No zero coefficient is ever stored, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    field: PrimeField,
    num_vars: usize,
    terms: BTreeMap<Monomial, u64>,
}

impl SparsePoly {
    pub fn zero(field: PrimeField, num_vars: usize) -> Self {
        Self {
            field,
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, num_vars: usize, c: u64) -> Self {
        Self::from_terms(field, num_vars, [(Monomial::one(num_vars), c)])
    }

    /// The variable `z_{i+1}` (0-based index `i`).
    pub fn var(field: PrimeField, num_vars: usize, i: usize) -> Self {
        Self::from_terms(field, num_vars, [(Monomial::var(i, num_vars), 1)])
    }

    /// Builds a polynomial, summing repeated monomials and dropping zeros.
    /// Coefficients are reduced modulo `p`.
    pub fn from_terms(
        field: PrimeField,
        num_vars: usize,
        terms: impl IntoIterator<Item = (Monomial, u64)>,
    ) -> Self {
        let mut out = Self::zero(field, num_vars);
        for (m, c) in terms {
            assert_eq!(m.num_vars(), num_vars, "exponent vector length");
            out.add_term(m, c % field.modulus());
        }
        out
    }

    /// Linear form `sum c_i z_i`.
    pub fn linear(field: PrimeField, coeffs: &[u64]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            field,
            n,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (Monomial::var(i, n), c)),
        )
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, u64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, u64)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        // grevlex is graded, so the leading monomial has maximal degree
        self.leading_monomial().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(first) => degrees.all(|d| d == first),
        }
    }

    pub fn constant_term(&self) -> u64 {
        self.coefficient(&Monomial::one(self.num_vars))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: u64) {
        if c == 0 {
            return;
        }
        let f = self.field;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &SparsePoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch {
                left: self.modulus(),
                right: other.modulus(),
            });
        }
        if self.num_vars != other.num_vars {
            return Err(Error::VarCountMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn scale(&self, c: u64) -> SparsePoly {
        let f = self.field;
        let c = c % f.modulus();
        if c == 0 {
            return Self::zero(f, self.num_vars);
        }
        Self {
            field: f,
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, &a)| (m.clone(), f.mul(a, c))).collect(),
        }
    }

    pub fn neg(&self) -> SparsePoly {
        self.scale(self.modulus() - 1)
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut acc = Self::constant(self.field, self.num_vars, 1);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    pub(crate) fn add_unchecked(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub(crate) fn mul_unchecked(&self, other: &SparsePoly) -> SparsePoly {
        let f = self.field;
        let mut out = Self::zero(f, self.num_vars);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.mul(b), f.mul(ca, cb));
            }
        }
        out
    }

    /// `c * m * self`.
    pub(crate) fn mul_term(&self, m: &Monomial, c: u64) -> SparsePoly {
        let f = self.field;
        Self {
            field: f,
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(a, &ca)| (a.mul(m), f.mul(ca, c)))
                .collect(),
        }
    }

    /// `self - c * m * other`, in place.
    pub(crate) fn sub_scaled(&mut self, other: &SparsePoly, m: &Monomial, c: u64) {
        let f = self.field;
        let neg = f.neg(c);
        for (a, &ca) in &other.terms {
            self.add_term(a.mul(m), f.mul(ca, neg));
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> SparsePoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(c)),
        }
    }

    /// Homogeneous component of degree `j`.
    pub fn component(&self, j: u32) -> SparsePoly {
        Self {
            field: self.field,
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == j)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    /// Nonzero homogeneous components keyed by degree; a zero constant term
    /// yields no entry.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, SparsePoly> {
        let mut out: BTreeMap<u32, SparsePoly> = BTreeMap::new();
        for (m, &c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Self::zero(self.field, self.num_vars))
                .terms
                .insert(m.clone(), c);
        }
        out
    }

    pub fn evaluate(&self, point: &[u64]) -> u64 {
        assert_eq!(point.len(), self.num_vars, "point dimension");
        let f = self.field;
        self.terms.iter().fold(0, |acc, (m, &c)| {
            let v = m
                .exps()
                .iter()
                .zip(point)
                .fold(c, |v, (&e, &x)| f.mul(v, f.pow(x, u64::from(e))));
            f.add(acc, v)
        })
    }

    /// Substitutes `z_j -> sum_l rows[j][l] * w_l`, producing a polynomial in
    /// `rows[j].len()` variables. With a square invertible matrix this is a
    /// linear change of coordinates fixing the origin.
    pub fn compose_linear(&self, rows: &[Vec<u64>]) -> SparsePoly {
        assert_eq!(rows.len(), self.num_vars, "one row per variable");
        let target = rows.first().map_or(0, Vec::len);
        let f = self.field;
        let images: Vec<SparsePoly> = rows.iter().map(|r| Self::linear(f, r)).collect();
        let mut out = Self::zero(f, target);
        let mut powers: Vec<Vec<SparsePoly>> = images
            .iter()
            .map(|p| vec![Self::constant(f, target, 1), p.clone()])
            .collect();
        for (m, &c) in &self.terms {
            let mut term = Self::constant(f, target, c);
            for (j, &e) in m.exps().iter().enumerate() {
                let cache = &mut powers[j];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_unchecked(&images[j]);
                    cache.push(next);
                }
                term = term.mul_unchecked(&cache[e as usize]);
            }
            out = out.add_unchecked(&term);
        }
        out
    }

    /// Coefficients of a linear form, or `None` if `self` has a term of
    /// another degree.
    pub fn linear_coefficients(&self) -> Option<Vec<u64>> {
        let mut coeffs = vec![0; self.num_vars];
        for (m, &c) in &self.terms {
            if m.degree() != 1 {
                return None;
            }
            let i = m.exps().iter().position(|&e| e == 1)?;
            coeffs[i] = c;
        }
        Some(coeffs)
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (c, m.is_one()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{m}")?,
                _ => write!(f, "{c}*{m}")?,
            }
        }
        Ok(())
    }
}
