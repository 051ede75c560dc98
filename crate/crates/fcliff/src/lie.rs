//! Lie-algebraic structure of the anti-Hermitian single-excitation, pair,
//! and half-body operator families: closure under the commutator, structure
//! constants, dimension counts, and the explicit isomorphisms onto
//! so(M), so(M) (+) so(M), and so(M) (+) so(M+1).

use nalgebra::DMatrix;
use serde::Serialize;

use crate::coeff::{Coeff, Rational};
use crate::fermion::{FermionicString, FermionicSum, ModeOp};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieFamily {
    /// { A^p_q } for p < q: dimension M(M-1)/2.
    Singles,
    /// { A^p_q, A^{pq} }: dimension M(M-1).
    SinglesPairs,
    /// { A^p_q, A^{pq}, A^p }: dimension M^2.
    SinglesPairsHalf,
}

impl LieFamily {
    pub fn parse(name: &str) -> Result<LieFamily> {
        match name {
            "singles" => Ok(LieFamily::Singles),
            "singles_pairs" => Ok(LieFamily::SinglesPairs),
            "singles_pairs_half" => Ok(LieFamily::SinglesPairsHalf),
            _ => Err(Error::Invalid(format!("unknown Lie family `{name}`"))),
        }
    }

    pub fn dimension(self, m: usize) -> usize {
        match self {
            LieFamily::Singles => m * (m - 1) / 2,
            LieFamily::SinglesPairs => m * (m - 1),
            LieFamily::SinglesPairsHalf => m * m,
        }
    }
}

/// A basis element: its anti-Hermitian sum together with the lead string
/// whose coefficient reads off expansion coefficients.
#[derive(Debug, Clone)]
pub struct BasisElement {
    pub name: String,
    pub sum: FermionicSum,
    lead: FermionicString,
}

fn single_exc(m: usize, p: usize, q: usize) -> BasisElement {
    let f = FermionicString::normalize(m, &[(p, ModeOp::Cr), (q, ModeOp::An)], 0).unwrap();
    let mut sum = FermionicSum::from_string(&f, Coeff::one());
    sum.add_string(&f.dagger(), Coeff::from_int(-1));
    BasisElement {
        name: format!("A^{p}_{q}"),
        sum,
        lead: f,
    }
}

fn pair_create(m: usize, p: usize, q: usize) -> BasisElement {
    let f = FermionicString::normalize(m, &[(p, ModeOp::Cr), (q, ModeOp::Cr)], 0).unwrap();
    let mut sum = FermionicSum::from_string(&f, Coeff::one());
    sum.add_string(&f.dagger(), Coeff::from_int(-1));
    BasisElement {
        name: format!("A^{{{p}{q}}}"),
        sum,
        lead: f,
    }
}

fn half_body(m: usize, p: usize) -> BasisElement {
    let f = FermionicString::single(m, p, ModeOp::Cr).unwrap();
    let mut sum = FermionicSum::from_string(&f, Coeff::one());
    sum.add_string(&f.dagger(), Coeff::from_int(-1));
    BasisElement {
        name: format!("A^{p}"),
        sum,
        lead: f,
    }
}

/// The fixed-order basis: singles block (lexicographic p < q), then pairs,
/// then half-body generators.
pub fn basis(family: LieFamily, m: usize) -> Result<Vec<BasisElement>> {
    if m < 2 {
        return Err(Error::Invalid(
            "Lie families need at least two modes".into(),
        ));
    }
    let mut out = Vec::new();
    for p in 0..m {
        for q in p + 1..m {
            out.push(single_exc(m, p, q));
        }
    }
    if family != LieFamily::Singles {
        for p in 0..m {
            for q in p + 1..m {
                out.push(pair_create(m, p, q));
            }
        }
    }
    if family == LieFamily::SinglesPairsHalf {
        for p in 0..m {
            out.push(half_body(m, p));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub family: String,
    pub modes: usize,
    pub dimension: usize,
    pub closed: bool,
    /// (i, j, k, c): [B_i, B_j] = sum_k c B_k, entries with c != 0.
    pub structure_constants: Vec<(usize, usize, usize, String)>,
}

/// Expand a commutator exactly in the basis; None when it falls outside the
/// span.
fn expand_in_basis(
    comm: &FermionicSum,
    elements: &[BasisElement],
) -> Option<Vec<(usize, Rational)>> {
    let mut coeffs = Vec::new();
    let mut reconstruction = FermionicSum::zero(comm.n_modes());
    for (k, b) in elements.iter().enumerate() {
        let c = match comm.coeff_of(&b.lead) {
            Some(c) => c,
            None => continue,
        };
        let r = as_rational(&c)?;
        if r != Rational::from_integer(0) {
            coeffs.push((k, r));
            reconstruction = reconstruction.add(&b.sum.scale(&c)).ok()?;
        }
    }
    if comm.equivalent(&reconstruction) {
        Some(coeffs)
    } else {
        None
    }
}

fn as_rational(c: &Coeff) -> Option<Rational> {
    let Coeff::Exact(e) = c else { return None };
    if !e.im.is_zero() {
        return None;
    }
    let mut terms = e.re.terms();
    match (terms.next(), terms.next()) {
        (None, _) => Some(Rational::from_integer(0)),
        (Some((m, r)), None) if m.is_unit() => Some(*r),
        _ => None,
    }
}

/// Compute all pairwise commutators via the monoid arithmetic, expand each
/// exactly in the basis, and report closure with the structure constants.
pub fn verify_closure(family: LieFamily, m: usize) -> Result<ClosureReport> {
    let elements = basis(family, m)?;
    closure_of(&elements, family, m)
}

pub fn closure_of(
    elements: &[BasisElement],
    family: LieFamily,
    m: usize,
) -> Result<ClosureReport> {
    let mut constants = Vec::new();
    let mut closed = true;
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let comm = elements[i].sum.commutator(&elements[j].sum)?;
            match expand_in_basis(&comm, elements) {
                Some(cs) => {
                    for (k, c) in cs {
                        constants.push((i, j, k, c.to_string()));
                    }
                }
                None => closed = false,
            }
        }
    }
    Ok(ClosureReport {
        family: format!("{family:?}"),
        modes: m,
        dimension: elements.len(),
        closed,
        structure_constants: constants,
    })
}

type MatPair = (DMatrix<i64>, DMatrix<i64>);

/// L_pq = E_pq - E_qp.
fn l_matrix(dim: usize, p: usize, q: usize, scale: i64) -> DMatrix<i64> {
    let mut m = DMatrix::zeros(dim, dim);
    m[(p, q)] = scale;
    m[(q, p)] = -scale;
    m
}

fn images(family: LieFamily, m: usize) -> Vec<MatPair> {
    let second = match family {
        LieFamily::SinglesPairsHalf => m + 1,
        _ => m,
    };
    let mut out = Vec::new();
    for p in 0..m {
        for q in p + 1..m {
            out.push((l_matrix(m, p, q, 1), l_matrix(second, p, q, 1)));
        }
    }
    if family != LieFamily::Singles {
        for p in 0..m {
            for q in p + 1..m {
                out.push((l_matrix(m, p, q, 1), l_matrix(second, p, q, -1)));
            }
        }
    }
    if family == LieFamily::SinglesPairsHalf {
        for p in 0..m {
            out.push((DMatrix::zeros(m, m), l_matrix(second, p, m, 2)));
        }
    }
    out
}

fn pair_commutator(a: &MatPair, b: &MatPair) -> MatPair {
    (&a.0 * &b.0 - &b.0 * &a.0, &a.1 * &b.1 - &b.1 * &a.1)
}

/// Check that mapping the basis onto (L_pq, +-L_pq) and (0, 2 L_{p,M+1})
/// preserves every commutator exactly.
pub fn verify_isomorphism(family: LieFamily, m: usize) -> Result<bool> {
    let elements = basis(family, m)?;
    let report = closure_of(&elements, family, m)?;
    if !report.closed {
        return Ok(false);
    }
    let imgs = images(family, m);
    let dims = (imgs[0].0.nrows(), imgs[0].1.nrows());
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let lhs = pair_commutator(&imgs[i], &imgs[j]);
            let mut rhs = (
                DMatrix::zeros(dims.0, dims.0),
                DMatrix::zeros(dims.1, dims.1),
            );
            for &(ci, cj, k, ref c) in &report.structure_constants {
                if ci == i && cj == j {
                    let r: Rational = c.parse().map_err(|_| {
                        Error::Invalid("non-rational structure constant".into())
                    })?;
                    if !r.is_integer() {
                        return Err(Error::Invalid(
                            "fractional structure constant in integer isomorphism check".into(),
                        ));
                    }
                    let n = r.to_integer();
                    rhs.0 += imgs[k].0.clone() * n;
                    rhs.1 += imgs[k].1.clone() * n;
                }
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_counts() {
        for m in 2..=4 {
            assert_eq!(
                basis(LieFamily::Singles, m).unwrap().len(),
                m * (m - 1) / 2
            );
            assert_eq!(basis(LieFamily::SinglesPairs, m).unwrap().len(), m * (m - 1));
            assert_eq!(basis(LieFamily::SinglesPairsHalf, m).unwrap().len(), m * m);
        }
        assert_eq!(basis(LieFamily::Singles, 3).unwrap().len(), 3);
        assert_eq!(basis(LieFamily::SinglesPairs, 3).unwrap().len(), 6);
        assert_eq!(basis(LieFamily::SinglesPairsHalf, 3).unwrap().len(), 9);
    }

    #[test]
    fn singles_close_like_so3() {
        let report = verify_closure(LieFamily::Singles, 3).unwrap();
        assert!(report.closed);
        // [A^0_1, A^1_2] = A^0_2 and cyclic relatives, all +-1
        for (_, _, _, c) in &report.structure_constants {
            assert!(c == "1" || c == "-1");
        }
        assert_eq!(report.structure_constants.len(), 3);
    }

    #[test]
    fn pairs_alone_do_not_close() {
        // [A^{pq}, A^{rs}] lands among the singles
        let m = 3;
        let mut pairs = Vec::new();
        for p in 0..m {
            for q in p + 1..m {
                pairs.push(pair_create(m, p, q));
            }
        }
        let report = closure_of(&pairs, LieFamily::SinglesPairs, m).unwrap();
        assert!(!report.closed);
    }

    #[test]
    fn half_commutator_relation() {
        // [A^0, A^1] = 2 (A^{01} - A^0_1)
        let a0 = half_body(2, 0);
        let a1 = half_body(2, 1);
        let comm = a0.sum.commutator(&a1.sum).unwrap();
        let expect = pair_create(2, 0, 1)
            .sum
            .sub(&single_exc(2, 0, 1).sum)
            .unwrap()
            .scale(&Coeff::from_int(2));
        assert_eq!(comm, expect);
    }

    #[test]
    fn closure_of_full_families() {
        for m in 2..=4 {
            for family in [
                LieFamily::Singles,
                LieFamily::SinglesPairs,
                LieFamily::SinglesPairsHalf,
            ] {
                let report = verify_closure(family, m).unwrap();
                assert!(report.closed, "{family:?} M={m}");
                assert_eq!(report.dimension, family.dimension(m));
            }
        }
    }

    #[test]
    fn named_commutator_relations() {
        let m = 3;
        // [A^p_q, A^r] = d_qr A^p - d_pr A^q
        let apq = single_exc(m, 0, 1);
        let ar = half_body(m, 1);
        let comm = apq.sum.commutator(&ar.sum).unwrap();
        assert_eq!(comm, half_body(m, 0).sum);

        // [A^{pq}, A^r] = -[A^p_q, A^r]
        let pair = pair_create(m, 0, 1);
        let comm2 = pair.sum.commutator(&ar.sum).unwrap();
        assert_eq!(comm2, half_body(m, 0).sum.scale(&Coeff::from_int(-1)));

        // [A^{pq}, A^{rs}] = [A^p_q, A^r_s]
        let lhs = pair_create(m, 0, 1)
            .sum
            .commutator(&pair_create(m, 1, 2).sum)
            .unwrap();
        let rhs = single_exc(m, 0, 1)
            .sum
            .commutator(&single_exc(m, 1, 2).sum)
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn antisymmetry_and_jacobi() {
        let elements = basis(LieFamily::SinglesPairsHalf, 3).unwrap();
        let n = elements.len();
        for i in 0..n {
            for j in (i + 1..n).step_by(2) {
                let ab = elements[i].sum.commutator(&elements[j].sum).unwrap();
                let ba = elements[j].sum.commutator(&elements[i].sum).unwrap();
                assert!(ab.add(&ba).unwrap().expand_holes().is_empty());
            }
        }
        // Jacobi on a sample of triples, exact
        let triples = [(0, 1, 2), (0, 3, 6), (2, 4, 8), (1, 5, 7)];
        for (i, j, k) in triples {
            let a = &elements[i].sum;
            let b = &elements[j].sum;
            let c = &elements[k].sum;
            let cyc = a
                .commutator(b)
                .unwrap()
                .commutator(c)
                .unwrap()
                .add(&b.commutator(c).unwrap().commutator(a).unwrap())
                .unwrap()
                .add(&c.commutator(a).unwrap().commutator(b).unwrap())
                .unwrap();
            assert!(cyc.expand_holes().is_empty(), "Jacobi failed at ({i},{j},{k})");
        }
    }

    #[test]
    fn isomorphisms_hold() {
        assert!(verify_isomorphism(LieFamily::Singles, 2).unwrap());
        for m in 2..=4 {
            for family in [
                LieFamily::Singles,
                LieFamily::SinglesPairs,
                LieFamily::SinglesPairsHalf,
            ] {
                assert!(verify_isomorphism(family, m).unwrap(), "{family:?} M={m}");
            }
        }
    }
}
