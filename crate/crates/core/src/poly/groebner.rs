//! Buchberger's algorithm under grevlex with Gebauer–Möller pair pruning,
//! and the Krull dimension read off the leading-term ideal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::monomial::Monomial;
use crate::poly::sparse::SparsePoly;

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn lm(p: &SparsePoly) -> &Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

/// Full normal form of `p` with respect to monic `basis`.
fn normal_form(p: &SparsePoly, basis: &[&SparsePoly], limits: &Limits) -> Result<SparsePoly> {
    let mut rest = p.clone();
    let mut remainder = SparsePoly::zero(p.field(), p.num_vars());
    while let Some((m, c)) = rest.leading_term() {
        let m = m.clone();
        match basis.iter().find(|g| lm(g).divides(&m)) {
            Some(g) => {
                let q = lm(g).quotient_of(&m).expect("divisibility checked");
                rest.sub_scaled(g, &q, c);
                if rest.len() > limits.max_terms {
                    return Err(Error::limit("terms in a reduction", limits.max_terms));
                }
            }
            None => {
                rest.add_term(m.clone(), p.field().neg(c));
                remainder.add_term(m, c);
            }
        }
    }
    Ok(remainder)
}

fn s_polynomial(f: &SparsePoly, g: &SparsePoly) -> SparsePoly {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let field = f.field();
    let mut s = f.mul_term(&fm.quotient_of(&l).unwrap(), field.inv(fc));
    s.sub_scaled(g, &gm.quotient_of(&l).unwrap(), field.inv(gc));
    s
}

struct Engine<'a> {
    polys: Vec<SparsePoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    limits: &'a Limits,
}

impl Engine<'_> {
    fn active_polys(&self) -> Vec<&SparsePoly> {
        self.active.iter().map(|&i| &self.polys[i]).collect()
    }

    fn insert(&mut self, h: SparsePoly) -> Result<()> {
        if self.active.len() >= self.limits.max_basis {
            return Err(Error::limit("Groebner basis size", self.limits.max_basis));
        }
        let h_idx = self.polys.len();
        self.polys.push(h);
        let lh = lm(&self.polys[h_idx]).clone();

        let mut candidates: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, lh.lcm(lm(&self.polys[g]))))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while !candidates.is_empty() {
            let (g, l) = candidates.remove(0);
            let coprime = lh.is_coprime(lm(&self.polys[g]));
            let dominated = candidates.iter().any(|(_, o)| o.divides(&l))
                || kept.iter().any(|(_, o)| o.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = lh.lcm(lm(&polys[p.i]));
            let lj = lh.lcm(lm(&polys[p.j]));
            !(lh.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
        });
        for (g, l) in kept {
            if !lh.is_coprime(lm(&self.polys[g])) {
                self.pairs.push(Pair { i: g, j: h_idx, lcm: l });
            }
        }
        self.active.retain(|&g| !lh.divides(lm(&polys[g])));
        self.active.push(h_idx);
        Ok(())
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.lcm.cmp(&b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))))
            .map(|(idx, _)| idx)?;
        Some(self.pairs.swap_remove(best))
    }
}

fn check_system(gens: &[SparsePoly]) -> Result<()> {
    if let Some(first) = gens.first() {
        for g in &gens[1..] {
            if g.modulus() != first.modulus() {
                return Err(Error::ModulusMismatch {
                    left: first.modulus(),
                    right: g.modulus(),
                });
            }
            if g.num_vars() != first.num_vars() {
                return Err(Error::VarCountMismatch {
                    left: first.num_vars(),
                    right: g.num_vars(),
                });
            }
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic and sorted
/// by ascending leading monomial. The zero ideal gives an empty basis.
pub fn groebner_basis(gens: &[SparsePoly], limits: &Limits) -> Result<Vec<SparsePoly>> {
    check_system(gens)?;
    for g in gens {
        limits.check_vars(g.num_vars())?;
        limits.check_degree(g.total_degree().unwrap_or(0))?;
    }
    let mut engine = Engine {
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        limits,
    };
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let h = normal_form(g, &engine.active_polys(), limits)?;
        if !h.is_zero() {
            engine.insert(h.monic())?;
        }
    }
    let mut processed = 0usize;
    while let Some(pair) = engine.next_pair() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::limit("S-pairs processed", limits.max_pairs));
        }
        let s = s_polynomial(&engine.polys[pair.i], &engine.polys[pair.j]);
        let h = normal_form(&s, &engine.active_polys(), limits)?;
        if !h.is_zero() {
            engine.insert(h.monic())?;
        }
    }
    interreduce(engine.active.iter().map(|&i| engine.polys[i].clone()).collect(), limits)
}

fn interreduce(mut basis: Vec<SparsePoly>, limits: &Limits) -> Result<Vec<SparsePoly>> {
    basis.sort_by(|a, b| lm(a).cmp(lm(b)));
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<SparsePoly> = Vec::new();
    for (idx, p) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(o, q)| o != idx && lm(q).divides(lm(p)) && (lm(q) != lm(p) || o < idx));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<&SparsePoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(o, _)| o != idx)
            .map(|(_, q)| q)
            .collect();
        let (m, c) = minimal[idx].leading_term().unwrap();
        let mut tail = minimal[idx].clone();
        tail.add_term(m.clone(), tail.field().neg(c));
        let mut r = normal_form(&tail, &others, limits)?;
        r.add_term(m.clone(), c);
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| lm(a).cmp(lm(b)));
    Ok(reduced)
}

/// True when every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[SparsePoly], limits: &Limits) -> Result<bool> {
    let monic: Vec<SparsePoly> = basis.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    let refs: Vec<&SparsePoly> = monic.iter().collect();
    for i in 0..monic.len() {
        for j in i + 1..monic.len() {
            let s = s_polynomial(&monic[i], &monic[j]);
            if !normal_form(&s, &refs, limits)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Remainder of `p` on division by a Gröbner basis; zero iff `p` is in the ideal.
pub fn reduce(p: &SparsePoly, basis: &[SparsePoly], limits: &Limits) -> Result<SparsePoly> {
    let monic: Vec<SparsePoly> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    normal_form(p, &monic.iter().collect::<Vec<_>>(), limits)
}

/// Krull dimension of `k[z_1..z_n] / <monomials>`: the largest set `S` of
/// variables such that no monomial has its support inside `S`. The unit
/// ideal gets `-1`, the zero ideal `n`.
pub fn monomial_ideal_dimension(monomials: &[Monomial], num_vars: usize) -> i64 {
    assert!(num_vars < 64, "subset enumeration over at most 63 variables");
    let supports: Vec<u64> = monomials.iter().map(Monomial::support_mask).collect();
    if supports.contains(&0) {
        return -1;
    }
    let mut best = 0u32;
    for subset in 0u64..(1 << num_vars) {
        if subset.count_ones() > best && supports.iter().all(|&s| s & !subset != 0) {
            best = subset.count_ones();
        }
    }
    i64::from(best)
}

/// Generators of an ideal together with what has been computed about it.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealBasis {
    #[serde(serialize_with = "serialize_polys")]
    pub generators: Vec<SparsePoly>,
    #[serde(serialize_with = "serialize_opt_polys")]
    pub groebner: Option<Vec<SparsePoly>>,
    pub dimension: Option<i64>,
}

fn serialize_polys<S: serde::Serializer>(v: &[SparsePoly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.to_string()))
}

fn serialize_opt_polys<S: serde::Serializer>(
    v: &Option<Vec<SparsePoly>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => serialize_polys(v, s),
        None => s.serialize_none(),
    }
}

impl IdealBasis {
    pub fn new(generators: Vec<SparsePoly>) -> Self {
        Self {
            generators,
            groebner: None,
            dimension: None,
        }
    }

    pub fn num_vars(&self) -> Option<usize> {
        self.generators.first().map(SparsePoly::num_vars)
    }

    /// Computes the basis and the dimension. With no generators the
    /// dimension cannot be known without a variable count, so it is left
    /// unset; use [`groebner_dimension_in`] for that case.
    pub fn compute(&mut self, limits: &Limits) -> Result<()> {
        let basis = groebner_basis(&self.generators, limits)?;
        if let Some(n) = self.num_vars() {
            let leading: Vec<Monomial> = basis.iter().map(|p| lm(p).clone()).collect();
            self.dimension = Some(monomial_ideal_dimension(&leading, n));
        }
        self.groebner = Some(basis);
        Ok(())
    }
}

/// Affine Krull dimension of the quotient by the ideal generated by `gens`
/// in `num_vars` variables.
pub fn groebner_dimension_in(gens: &[SparsePoly], num_vars: usize, limits: &Limits) -> Result<i64> {
    if let Some(g) = gens.iter().find(|g| g.num_vars() != num_vars) {
        return Err(Error::VarCountMismatch {
            left: num_vars,
            right: g.num_vars(),
        });
    }
    limits.check_vars(num_vars)?;
    let basis = groebner_basis(gens, limits)?;
    let leading: Vec<Monomial> = basis.iter().map(|p| lm(p).clone()).collect();
    Ok(monomial_ideal_dimension(&leading, num_vars))
}

/// Like [`groebner_dimension_in`], taking the variable count from the
/// generators. An empty list is an error here since `n` is unknown.
pub fn groebner_dimension(gens: &[SparsePoly], limits: &Limits) -> Result<i64> {
    let n = gens
        .first()
        .map(SparsePoly::num_vars)
        .ok_or_else(|| Error::InvalidInstance("empty generator list has no variable count".into()))?;
    groebner_dimension_in(gens, n, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::PrimeField;

    fn k() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn mono(n: usize, e: &[u16]) -> SparsePoly {
        assert_eq!(e.len(), n);
        SparsePoly::from_terms(k(), n, [(Monomial::new(e.to_vec()), 1)])
    }

    fn dim(gens: &[SparsePoly], n: usize) -> i64 {
        groebner_dimension_in(gens, n, &Limits::default()).unwrap()
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim(&[mono(2, &[1, 0])], 2), 1);
        assert_eq!(dim(&[mono(2, &[2, 0]), mono(2, &[0, 2])], 2), 0);
        assert_eq!(dim(&[mono(2, &[1, 1])], 2), 1);
        assert_eq!(dim(&[], 3), 3);
        assert_eq!(dim(&[SparsePoly::constant(k(), 2, 5)], 2), -1);
    }

    #[test]
    fn inconsistent_system_is_unit_ideal() {
        // x = 1 and x = 2
        let x = SparsePoly::var(k(), 1, 0);
        let a = x.sub(&SparsePoly::constant(k(), 1, 1)).unwrap();
        let b = x.sub(&SparsePoly::constant(k(), 1, 2)).unwrap();
        let basis = groebner_basis(&[a, b], &Limits::default()).unwrap();
        assert_eq!(basis, vec![SparsePoly::constant(k(), 1, 1)]);
    }

    #[test]
    fn twisted_cubic() {
        // y - x^2, z - x^3 in k[x, y, z]: a curve, dimension 1
        let f = k();
        let x = SparsePoly::var(f, 3, 0);
        let y = SparsePoly::var(f, 3, 1);
        let z = SparsePoly::var(f, 3, 2);
        let g1 = y.sub(&x.pow(2)).unwrap();
        let g2 = z.sub(&x.pow(3)).unwrap();
        let limits = Limits::default();
        let basis = groebner_basis(&[g1.clone(), g2.clone()], &limits).unwrap();
        assert!(is_groebner_basis(&basis, &limits).unwrap());
        assert!(reduce(&g1, &basis, &limits).unwrap().is_zero());
        assert!(reduce(&g2, &basis, &limits).unwrap().is_zero());
        assert!(!reduce(&x, &basis, &limits).unwrap().is_zero());
        assert_eq!(dim(&[g1, g2], 3), 1);
    }

    #[test]
    fn variable_limit() {
        let g = SparsePoly::var(k(), 9, 0);
        assert!(matches!(
            groebner_basis(&[g], &Limits::default()),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn pair_budget_is_reported() {
        let f = k();
        let x = SparsePoly::var(f, 3, 0);
        let y = SparsePoly::var(f, 3, 1);
        let z = SparsePoly::var(f, 3, 2);
        let gens = [
            x.pow(2).add(&y.mul(&z).unwrap()).unwrap(),
            y.pow(2).add(&x.mul(&z).unwrap()).unwrap(),
            z.pow(2).add(&x.mul(&y).unwrap()).unwrap().add(&x).unwrap(),
        ];
        let tight = Limits {
            max_pairs: 1,
            ..Limits::default()
        };
        assert!(matches!(
            groebner_basis(&gens, &tight),
            Err(Error::LimitExceeded { .. })
        ));
        let basis = groebner_basis(&gens, &Limits::default()).unwrap();
        assert!(is_groebner_basis(&basis, &Limits::default()).unwrap());
    }

    #[test]
    fn ideal_basis_records_results() {
        let mut ideal = IdealBasis::new(vec![mono(3, &[1, 1, 0]), mono(3, &[0, 1, 1])]);
        ideal.compute(&Limits::default()).unwrap();
        assert_eq!(ideal.dimension, Some(2));
        assert_eq!(ideal.groebner.as_ref().unwrap().len(), 2);
    }
}
