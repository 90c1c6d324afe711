//! The regularity test at the origin and the excess-component dichotomy.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::field::PrimeField;
use crate::poly::groebner::groebner_dimension_in;
use crate::poly::instance::CIInstance;
use crate::poly::sparse::SparsePoly;
use crate::regularity::linalg::{nullspace, rank};

pub const SAMPLED_CHECK_NOTE: &str =
    "sampled check: the origin and the listed h over F_p only; this is not a certificate of condition (R)";

fn linear_rows(inst: &CIInstance) -> Vec<Vec<u64>> {
    inst.linear_parts()
        .iter()
        .map(|q| q.linear_coefficients().expect("component 1 is linear"))
        .collect()
}

/// Checks the preconditions on `h` and returns the coefficient rows of
/// `q_{1,1}, ..., q_{k,1}, h`.
fn admissible_rows(inst: &CIInstance, h: &SparsePoly) -> Result<Vec<Vec<u64>>> {
    if h.modulus() != inst.field().modulus() {
        return Err(Error::ModulusMismatch {
            left: inst.field().modulus(),
            right: h.modulus(),
        });
    }
    if h.num_vars() != inst.num_vars() {
        return Err(Error::VarCountMismatch {
            left: inst.num_vars(),
            right: h.num_vars(),
        });
    }
    let coeffs = match h.linear_coefficients() {
        Some(c) if !h.is_zero() => c,
        _ => return Err(Error::NotLinearForm),
    };
    let mut rows = linear_rows(inst);
    let k = rows.len();
    let r = rank(inst.field(), &rows);
    if r < k {
        return Err(Error::LinearPartsDependent { rank: r, k });
    }
    rows.push(coeffs);
    if rank(inst.field(), &rows) == k {
        return Err(Error::HInTangentSpan);
    }
    Ok(rows)
}

pub fn linear_parts_independent(inst: &CIInstance) -> bool {
    let rows = linear_rows(inst);
    rank(inst.field(), &rows) == rows.len()
}

/// The standard-order sequence without its last two entries, followed by `h`. Zero
/// components are kept.
pub fn regularity_sequence(inst: &CIInstance, h: &SparsePoly) -> Result<Vec<SparsePoly>> {
    admissible_rows(inst, h)?;
    let seq = inst.standard_order_sequence();
    let keep = seq.len() - 2;
    let mut out: Vec<SparsePoly> = seq.into_iter().take(keep).map(|e| e.poly).collect();
    out.push(h.clone());
    Ok(out)
}

/// `(dimension == 1, dimension)` for the ideal of [`regularity_sequence`].
pub fn check_regularity_at_origin(
    inst: &CIInstance,
    h: &SparsePoly,
    limits: &Limits,
) -> Result<(bool, i64)> {
    let seq = regularity_sequence(inst, h)?;
    let dim = groebner_dimension_in(&seq, inst.num_vars(), limits)?;
    Ok((dim == 1, dim))
}

/// True when the forms cut out a cone of dimension exactly 1 in
/// `num_vars`-space, i.e. finitely many lines through the origin.
pub fn restricted_local_problem(polys: &[SparsePoly], num_vars: usize, limits: &Limits) -> Result<bool> {
    Ok(groebner_dimension_in(polys, num_vars, limits)? == 1)
}

/// A line through the origin, or the plane through the origin spanned by
/// two points (a line in projective space).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum LineSpec {
    Direction { v: Vec<u64> },
    Pencil { u: Vec<u64>, v: Vec<u64> },
}

/// True when every polynomial vanishes identically on the line.
pub fn line_vanishing_check(polys: &[SparsePoly], line: &LineSpec) -> Result<bool> {
    match line {
        LineSpec::Direction { v } => {
            if v.iter().all(|&x| x == 0) {
                return Err(Error::ZeroDirection);
            }
            // p(t v) = sum_j t^j p_j(v)
            Ok(polys.iter().all(|p| {
                check_len(p, v);
                p.homogeneous_components()
                    .values()
                    .all(|q| q.evaluate(v) == 0)
            }))
        }
        LineSpec::Pencil { u, v } => {
            if u.iter().all(|&x| x == 0) || v.iter().all(|&x| x == 0) {
                return Err(Error::ZeroDirection);
            }
            Ok(polys.iter().all(|p| {
                check_len(p, u);
                check_len(p, v);
                let rows: Vec<Vec<u64>> = u.iter().zip(v).map(|(&a, &b)| vec![a, b]).collect();
                p.compose_linear(&rows).is_zero()
            }))
        }
    }
}

fn check_len(p: &SparsePoly, v: &[u64]) {
    assert_eq!(p.num_vars(), v.len(), "direction length must match the variable count");
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ExcessKind {
    /// Some projective line lies in the zero set.
    Line,
    /// No `F_p`-rational projective line lies in the zero set.
    NotLine,
    /// The point budget was too small to decide.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExcessReport {
    pub kind: ExcessKind,
    /// Two ambient points spanning a line of the zero set, when one was found.
    pub line: Option<LineSpec>,
    /// Projective `F_p`-points of the zero set inside the tangent slice.
    pub rational_points: Option<u64>,
    pub note: String,
}

/// Restriction of the nonlinear part of the sequence to the slice cut out
/// by the linear entries. Returns the slice basis (ambient vectors) and the
/// restricted forms `p_1, ..., p_{M-2}` in `M - 1` variables.
pub fn restrict_to_slice(inst: &CIInstance, h: &SparsePoly) -> Result<(Vec<Vec<u64>>, Vec<SparsePoly>)> {
    let rows = admissible_rows(inst, h)?;
    let seq = regularity_sequence(inst, h)?;
    let n = inst.num_vars();
    let basis = nullspace(inst.field(), &rows, n);
    let subst: Vec<Vec<u64>> = (0..n).map(|j| basis.iter().map(|b| b[j]).collect()).collect();
    // drop the k linear parts in front and h at the end
    let k = inst.degrees().k() as usize;
    let restricted = seq[k..seq.len() - 1]
        .iter()
        .map(|p| p.compose_linear(&subst))
        .collect();
    Ok((basis, restricted))
}

fn projective_points(field: PrimeField, s: usize) -> impl Iterator<Item = Vec<u64>> {
    let p = field.modulus();
    (0..s).rev().flat_map(move |lead| {
        // first nonzero coordinate at `s - 1 - lead`, equal to 1
        let first = s - 1 - lead;
        let tail = lead as u32;
        (0..p.pow(tail)).map(move |mut code| {
            let mut v = vec![0; s];
            v[first] = 1;
            for x in v.iter_mut().skip(first + 1) {
                *x = code % p;
                code /= p;
            }
            v
        })
    })
}

fn to_ambient(field: PrimeField, basis: &[Vec<u64>], coords: &[u64], n: usize) -> Vec<u64> {
    let mut out = vec![0; n];
    for (b, &c) in basis.iter().zip(coords) {
        for (o, &x) in out.iter_mut().zip(b) {
            *o = field.add(*o, field.mul(c, x));
        }
    }
    out
}

/// Decides which branch of the dichotomy an excess zero set falls in, by
/// enumerating the `F_p`-points of the slice and testing pairs for a line.
pub fn classify_excess(inst: &CIInstance, h: &SparsePoly, limits: &Limits) -> Result<ExcessReport> {
    let field = inst.field();
    let (basis, restricted) = restrict_to_slice(inst, h)?;
    let s = basis.len();
    let p = u128::from(field.modulus());
    let total = p.checked_pow(s as u32).map(|q| (q - 1) / (p - 1));
    if total.is_none_or(|t| t > u128::from(limits.point_budget)) {
        return Ok(ExcessReport {
            kind: ExcessKind::Undetermined,
            line: None,
            rational_points: None,
            note: format!("the slice has more projective points than the budget {}", limits.point_budget),
        });
    }
    let zeros: Vec<Vec<u64>> = projective_points(field, s)
        .filter(|v| restricted.iter().all(|q| q.evaluate(v) == 0))
        .collect();
    let mut budget = limits.point_budget;
    for (i, u) in zeros.iter().enumerate() {
        for v in &zeros[i + 1..] {
            if budget == 0 {
                return Ok(ExcessReport {
                    kind: ExcessKind::Undetermined,
                    line: None,
                    rational_points: Some(zeros.len() as u64),
                    note: format!("pair budget {} exhausted", limits.point_budget),
                });
            }
            budget -= 1;
            let pencil = LineSpec::Pencil {
                u: u.clone(),
                v: v.clone(),
            };
            if line_vanishing_check(&restricted, &pencil)? {
                let n = inst.num_vars();
                return Ok(ExcessReport {
                    kind: ExcessKind::Line,
                    line: Some(LineSpec::Pencil {
                        u: to_ambient(field, &basis, u, n),
                        v: to_ambient(field, &basis, v, n),
                    }),
                    rational_points: Some(zeros.len() as u64),
                    note: "the forms vanish on a projective line through two rational points".into(),
                });
            }
        }
    }
    Ok(ExcessReport {
        kind: ExcessKind::NotLine,
        line: None,
        rational_points: Some(zeros.len() as u64),
        note: "no line spanned by rational points lies in the zero set".into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HCheck {
    pub h: String,
    pub coefficients: Vec<u64>,
    pub verdict: Option<bool>,
    pub dimension: Option<i64>,
    pub excess: Option<ExcessReport>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RegularityReport {
    pub linear_parts_independent: bool,
    pub h_tested: Vec<HCheck>,
    pub overall_verdict: bool,
    pub notes: Vec<String>,
}

/// Runs the check for every `h`. Per-form failures are recorded in the
/// report rather than returned.
pub fn regularity_report(inst: &CIInstance, hs: &[SparsePoly], limits: &Limits) -> RegularityReport {
    let independent = linear_parts_independent(inst);
    let mut notes = vec![SAMPLED_CHECK_NOTE.to_string()];
    let h_tested: Vec<HCheck> = hs
        .iter()
        .map(|h| {
            let mut entry = HCheck {
                h: h.to_string(),
                coefficients: h.linear_coefficients().unwrap_or_default(),
                verdict: None,
                dimension: None,
                excess: None,
                error: None,
            };
            match check_regularity_at_origin(inst, h, limits) {
                Ok((verdict, dim)) => {
                    entry.verdict = Some(verdict);
                    entry.dimension = Some(dim);
                    if dim >= 2 {
                        entry.excess = Some(classify_excess(inst, h, limits).unwrap_or_else(|e| {
                            ExcessReport {
                                kind: ExcessKind::Undetermined,
                                line: None,
                                rational_points: None,
                                note: e.to_string(),
                            }
                        }));
                    }
                }
                Err(e) => entry.error = Some(e.to_string()),
            }
            entry
        })
        .collect();
    if !independent {
        notes.push("linear parts are dependent: the point is singular".into());
    }
    if hs.is_empty() {
        notes.push("no h forms were tested".into());
    }
    let overall_verdict =
        independent && !h_tested.is_empty() && h_tested.iter().all(|c| c.verdict == Some(true));
    RegularityReport {
        linear_parts_independent: independent,
        h_tested,
        overall_verdict,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::DegreeVector;
    use crate::poly::monomial::Monomial;

    fn field() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn var(n: usize, i: usize) -> SparsePoly {
        SparsePoly::var(field(), n, i)
    }

    fn mono(n: usize, e: &[u16]) -> SparsePoly {
        SparsePoly::from_terms(field(), n, [(Monomial::new(e.to_vec()), 1)])
    }

    fn add(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
        a.add(b).unwrap()
    }

    #[test]
    fn restricted_problem_examples() {
        let l = Limits::default();
        let x2 = mono(3, &[2, 0, 0]);
        let y2 = mono(3, &[0, 2, 0]);
        let xy = mono(3, &[1, 1, 0]);
        assert!(restricted_local_problem(&[x2.clone(), y2], 3, &l).unwrap());
        assert!(!restricted_local_problem(&[x2, xy], 3, &l).unwrap());
        assert!(!restricted_local_problem(&[], 2, &l).unwrap());
    }

    #[test]
    fn line_vanishing_examples() {
        let (x, y) = (var(3, 0), var(3, 1));
        let dir = |v: &[u64]| LineSpec::Direction { v: v.to_vec() };
        assert!(line_vanishing_check(&[x.clone(), y.clone()], &dir(&[0, 0, 1])).unwrap());
        let diff = x.pow(2).sub(&y.pow(2)).unwrap();
        assert!(line_vanishing_check(&[diff], &dir(&[1, 1, 0])).unwrap());
        let sum = add(&x.pow(2), &y.pow(2));
        assert!(!line_vanishing_check(&[sum], &dir(&[1, 0, 0])).unwrap());
        assert_eq!(line_vanishing_check(std::slice::from_ref(&x), &dir(&[0, 0, 0])), Err(Error::ZeroDirection));
        // x vanishes on the (y, z)-plane, x + y does not
        let pencil = LineSpec::Pencil {
            u: vec![0, 1, 0],
            v: vec![0, 0, 1],
        };
        assert!(line_vanishing_check(std::slice::from_ref(&x), &pencil).unwrap());
        assert!(!line_vanishing_check(&[add(&x, &y)], &pencil).unwrap());
    }

    #[test]
    fn direction_checks_inhomogeneous_components() {
        // x + x^2 - y^2 vanishes at (0, 1, 1)? x = 0 there, but -y^2 does not
        let (x, y) = (var(3, 0), var(3, 1));
        let p = add(&add(&x, &x.pow(2)), &y.pow(2).neg());
        assert!(!line_vanishing_check(&[p], &LineSpec::Direction { v: vec![0, 1, 1] }).unwrap());
    }

    /// d = (2, 3), f_1 = z1 + q, f_2 = z2 + z5^3, h = z3.
    fn inst23(q: SparsePoly) -> CIInstance {
        let n = 5;
        let f1 = add(&var(n, 0), &q);
        let f2 = add(&var(n, 1), &mono(n, &[0, 0, 0, 0, 3]));
        CIInstance::new(field(), DegreeVector::new(&[2, 3]).unwrap(), vec![f1, f2]).unwrap()
    }

    #[test]
    fn regular_and_degenerate_23() {
        let l = Limits::default();
        let h = var(5, 2);
        let good = inst23(add(&mono(5, &[0, 0, 0, 2, 0]), &mono(5, &[0, 0, 0, 0, 2])));
        assert_eq!(check_regularity_at_origin(&good, &h, &l).unwrap(), (true, 1));
        // q_{1,2} = z1 z4 vanishes on the whole slice z1 = z2 = z3 = 0
        let bad = inst23(mono(5, &[1, 0, 0, 1, 0]));
        assert_eq!(check_regularity_at_origin(&bad, &h, &l).unwrap(), (false, 2));
        let excess = classify_excess(&bad, &h, &l).unwrap();
        assert_eq!(excess.kind, ExcessKind::Line);
        let seq = regularity_sequence(&bad, &h).unwrap();
        assert!(line_vanishing_check(&seq, excess.line.as_ref().unwrap()).unwrap());
    }

    /// d = (3, 3) with quadratic parts `a` and `b`, h = z3.
    fn inst33(a: SparsePoly, b: SparsePoly) -> CIInstance {
        let n = 6;
        let f1 = add(&var(n, 0), &a);
        let f2 = add(&add(&var(n, 1), &b), &mono(n, &[0, 0, 0, 0, 0, 3]));
        CIInstance::new(field(), DegreeVector::new(&[3, 3]).unwrap(), vec![f1, f2]).unwrap()
    }

    #[test]
    fn excess_dichotomy_33() {
        let l = Limits::default();
        let h = var(6, 2);
        let z4z5 = mono(6, &[0, 0, 0, 1, 1, 0]);
        let z4z6 = mono(6, &[0, 0, 0, 1, 0, 1]);
        // common factor z4: the line {z4 = 0} in the projective plane
        let line = inst33(z4z5.clone(), z4z6);
        assert_eq!(check_regularity_at_origin(&line, &h, &l).unwrap(), (false, 2));
        assert_eq!(classify_excess(&line, &h, &l).unwrap().kind, ExcessKind::Line);
        // proportional quadrics: the excess component is a smooth conic
        let conic = add(&mono(6, &[0, 0, 0, 2, 0, 0]), &z4z5.neg());
        let conic = add(&conic, &mono(6, &[0, 0, 0, 0, 0, 2]).neg());
        let twisted = add(&conic.scale(2), &mono(6, &[1, 0, 0, 1, 0, 0]));
        let not_line = inst33(conic, twisted);
        assert_eq!(check_regularity_at_origin(&not_line, &h, &l).unwrap(), (false, 2));
        let report = classify_excess(&not_line, &h, &l).unwrap();
        assert_eq!(report.kind, ExcessKind::NotLine);
        // a smooth conic over F_101 has 102 rational points
        assert_eq!(report.rational_points, Some(102));
    }

    #[test]
    fn precondition_errors() {
        let l = Limits::default();
        let inst = inst23(mono(5, &[0, 0, 0, 2, 0]));
        let q11 = inst.component(1, 1);
        assert_eq!(check_regularity_at_origin(&inst, &q11, &l), Err(Error::HInTangentSpan));
        let combo = add(&q11, &inst.component(2, 1).scale(3));
        assert_eq!(check_regularity_at_origin(&inst, &combo, &l), Err(Error::HInTangentSpan));
        assert_eq!(
            check_regularity_at_origin(&inst, &mono(5, &[0, 0, 2, 0, 0]), &l),
            Err(Error::NotLinearForm)
        );
        assert_eq!(
            check_regularity_at_origin(&inst, &SparsePoly::zero(field(), 5), &l),
            Err(Error::NotLinearForm)
        );
        // z1 + z1^2 and z1 + z5^3: both linear parts equal z1
        let n = 5;
        let f1 = add(&var(n, 0), &mono(n, &[2, 0, 0, 0, 0]));
        let f2 = add(&var(n, 0), &mono(n, &[0, 0, 0, 0, 3]));
        let singular = CIInstance::new(field(), DegreeVector::new(&[2, 3]).unwrap(), vec![f1, f2]).unwrap();
        assert_eq!(
            check_regularity_at_origin(&singular, &var(n, 2), &l),
            Err(Error::LinearPartsDependent { rank: 1, k: 2 })
        );
        let report = regularity_report(&singular, &[var(n, 2)], &l);
        assert!(!report.linear_parts_independent);
        assert!(!report.overall_verdict);
        assert!(report.h_tested[0].error.is_some());
    }

    #[test]
    fn slice_restriction_matches_the_full_check() {
        let l = Limits::default();
        let h = var(6, 2);
        let inst = inst33(mono(6, &[0, 0, 0, 2, 0, 0]), mono(6, &[0, 0, 0, 0, 2, 0]));
        let (basis, restricted) = restrict_to_slice(&inst, &h).unwrap();
        // M = 4: p_1, p_2 in 3 variables
        assert_eq!(basis.len(), 3);
        assert_eq!(restricted.len(), 2);
        let full = check_regularity_at_origin(&inst, &h, &l).unwrap().0;
        assert!(full);
        assert_eq!(restricted_local_problem(&restricted, 3, &l).unwrap(), full);
    }

    #[test]
    fn report_notes_and_verdicts() {
        let l = Limits::default();
        let inst = inst23(mono(5, &[1, 0, 0, 1, 0]));
        let report = regularity_report(&inst, &[var(5, 2), var(5, 3)], &l);
        assert!(report.notes[0].contains("not a certificate"));
        assert!(!report.overall_verdict);
        assert_eq!(report.h_tested[0].excess.as_ref().unwrap().kind, ExcessKind::Line);
        assert!(!regularity_report(&inst, &[], &l).overall_verdict);
    }
}
