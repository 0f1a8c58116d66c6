//! MLP factorizations `F = G0 * F0`: the minor-based algorithm, the
//! ideal-quotient baseline, and verification.

use crate::error::{Error, Result};
use crate::freebasis::{extract_free_basis, FreeBasis};
use crate::groebner::{self, ModuleOrder};
use crate::matrix::{select_blocks, PolyMatrix, RankWitness};
use crate::poly::Polynomial;
use crate::quotient::{fitting_freeness_test, quotient_by_ideal, quotient_by_poly, FittingCertificate, QuotientModule};

/// `G0 * F0` with `F0` minor left prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MlpFactorization {
    pub g0: PolyMatrix,
    pub f0: PolyMatrix,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Factorizable(MlpFactorization),
    NotFactorizable(FittingCertificate),
}

impl Decision {
    pub fn is_factorizable(&self) -> bool {
        matches!(self, Decision::Factorizable(_))
    }

    pub fn factorization(&self) -> Option<&MlpFactorization> {
        match self {
            Decision::Factorizable(f) => Some(f),
            Decision::NotFactorizable(_) => None,
        }
    }
}

/// `G11 = Q * P` with `G11 * F11 = F1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftResult {
    pub g11: PolyMatrix,
    /// Gröbner basis elements of `rho(F11)` over the rows of `F11`.
    pub p: PolyMatrix,
    /// Division quotients of the rows of `F1` by that basis.
    pub q: PolyMatrix,
}

/// Expresses the rows of `f1` over the rows of `f11`.
pub fn lift(f1: &PolyMatrix, f11: &PolyMatrix) -> Result<LiftResult> {
    let ring = f1.ring();
    if f1.ncols() != f11.ncols() {
        return Err(Error::ArityMismatch {
            expected: f11.ncols(),
            found: f1.ncols(),
        });
    }
    let gb = groebner::groebner_of(ring, f11.ncols(), &f11.row_vectors(), ModuleOrder::POT_DEGREVLEX, true);
    let p_rows = gb.transform().expect("tracked").to_vec();
    let p = PolyMatrix::from_fn(ring, p_rows.len(), f11.nrows(), |i, j| p_rows[i][j].clone());
    let mut q_rows = Vec::with_capacity(f1.nrows());
    for (i, row) in f1.row_vectors().iter().enumerate() {
        let div = gb.divide(row)?;
        if !div.remainder.is_zero() {
            return Err(Error::NonzeroRemainder { row: i });
        }
        q_rows.push(div.quotients);
    }
    let q = PolyMatrix::from_fn(ring, f1.nrows(), gb.len(), |i, j| q_rows[i][j].clone());
    let g11 = q.mul(&p)?;
    if &g11.mul(f11)? != f1 {
        return Err(Error::VerificationFailed("lift does not reproduce F1".into()));
    }
    Ok(LiftResult { g11, p, q })
}

/// Builds `G0 = U^{-1} [G11; A21 A11^{-1}]` and `F0 = F11`, where row `i` of
/// `fbar` is row `u[i]` of the input and its first `r` rows equal
/// `G11 * F11`.
pub fn youla_assemble(
    fbar: &PolyMatrix,
    f11: &PolyMatrix,
    g11: &PolyMatrix,
    u: &[usize],
    r: usize,
) -> Result<MlpFactorization> {
    let l = fbar.nrows();
    let m = fbar.ncols();
    if u.len() != l || f11.nrows() != r || g11.nrows() != r {
        return Err(Error::ArityMismatch {
            expected: l,
            found: u.len(),
        });
    }
    let witness = f11.rank();
    if witness.rank != r {
        return Err(Error::SingularBlock { size: r });
    }
    let mut v = witness.col_indices.clone();
    v.extend((0..m).filter(|j| !witness.col_indices.contains(j)));
    let c_rows: Vec<usize> = (r..l).collect();
    let cv = fbar.select_rows(&c_rows).select_cols(&v);
    let blocks = select_blocks(&f11.select_cols(&v), &cv, r)?;
    let lower = PolyMatrix::right_quotient(&blocks.a21, &blocks.a11)?;
    let stacked = g11.vstack(&lower)?;
    let mut g0 = PolyMatrix::zeros(fbar.ring(), l, r);
    let mut f = PolyMatrix::zeros(fbar.ring(), l, m);
    for (i, &src) in u.iter().enumerate() {
        for j in 0..r {
            g0.set(src, j, stacked.get(i, j).clone());
        }
        for j in 0..m {
            f.set(src, j, fbar.get(i, j).clone());
        }
    }
    let verified = verify(&f, &g0, f11);
    Ok(MlpFactorization {
        g0,
        f0: f11.clone(),
        verified,
    })
}

/// True iff `g0 * f0 = f` exactly, `f0` has full row rank `rank(f)` and
/// `d_r(f0)` is a nonzero constant.
pub fn verify(f: &PolyMatrix, g0: &PolyMatrix, f0: &PolyMatrix) -> bool {
    let r = f0.nrows();
    if g0.nrows() != f.nrows() || g0.ncols() != r || f0.ncols() != f.ncols() {
        return false;
    }
    match g0.mul(f0) {
        Ok(prod) if &prod == f => {}
        _ => return false,
    }
    if f.rank().rank != r {
        return false;
    }
    matches!(f0.determinantal_divisor(r), Ok(d) if d.is_nonzero_constant())
}

/// Intermediate values of one run of the minor-based algorithm.
#[derive(Clone, Debug)]
pub struct MlpTrace {
    pub witness: RankWitness,
    /// Row order: witness rows first.
    pub u: Vec<usize>,
    pub f1: PolyMatrix,
    pub d: Polynomial,
    pub quotient: QuotientModule,
    pub certificate: FittingCertificate,
    pub basis: Option<FreeBasis>,
    pub lift: Option<LiftResult>,
    pub decision: Decision,
}

pub fn factorize_mlp(f: &PolyMatrix) -> Result<Decision> {
    Ok(factorize_mlp_traced(f)?.decision)
}

pub fn factorize_mlp_traced(f: &PolyMatrix) -> Result<MlpTrace> {
    if f.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let witness = f.rank();
    let r = witness.rank;
    let mut u = witness.row_indices.clone();
    u.extend((0..f.nrows()).filter(|i| !witness.row_indices.contains(i)));
    let fbar = f.select_rows(&u);
    let f1 = f.select_rows(&witness.row_indices);
    let d = f1.determinantal_divisor(r)?;
    let quotient = quotient_by_poly(&f1, &d)?;
    let certificate = fitting_freeness_test(&quotient, r)?;
    if !certificate.is_free {
        return Ok(MlpTrace {
            witness,
            u,
            f1,
            d,
            quotient,
            decision: Decision::NotFactorizable(certificate.clone()),
            certificate,
            basis: None,
            lift: None,
        });
    }
    let basis = extract_free_basis(&quotient, &certificate, r)?;
    let lifted = lift(&f1, basis.matrix())?;
    let fact = youla_assemble(&fbar, basis.matrix(), &lifted.g11, &u, r)?;
    if !fact.verified {
        return Err(Error::VerificationFailed("G0 * F0 check failed".into()));
    }
    Ok(MlpTrace {
        witness,
        u,
        f1,
        d,
        quotient,
        certificate,
        basis: Some(basis),
        lift: Some(lifted),
        decision: Decision::Factorizable(fact),
    })
}

/// Baseline: free basis of `rho(F) : I_r(F)`, then `G0` by lifting every row
/// of `F`.
pub fn factorize_guan(f: &PolyMatrix) -> Result<Decision> {
    if f.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let r = f.rank().rank;
    let ideal = f.minor_ideal(r)?;
    let quotient = quotient_by_ideal(f, &ideal)?;
    let certificate = fitting_freeness_test(&quotient, r)?;
    if !certificate.is_free {
        return Ok(Decision::NotFactorizable(certificate));
    }
    let basis = extract_free_basis(&quotient, &certificate, r)?;
    let lifted = lift(f, basis.matrix())?;
    let f0 = basis.into_matrix();
    if !verify(f, &lifted.g11, &f0) {
        return Err(Error::VerificationFailed("G0 * F0 check failed".into()));
    }
    Ok(Decision::Factorizable(MlpFactorization {
        g0: lifted.g11,
        f0,
        verified: true,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn f4_matrix() -> PolyMatrix {
        let ring = Ring::standard(3);
        PolyMatrix::parse(
            &ring,
            &[
                vec!["z1^2*z2 + z1^2", "z1", "0"],
                vec!["z1*z3^2 - z1*z3", "0", "z2*z3 - z2 + z3 - 1"],
                vec![
                    "2*z1^2*z2*z3 - z1^2*z2 + z1^2*z3 - z1^2",
                    "z1*z3 - z1",
                    "z1*z2^2 + z1*z2",
                ],
            ],
        )
        .unwrap()
    }

    #[test]
    fn lift_self_is_identity_on_rows() {
        let f = f4_matrix();
        let f1 = f.select_rows(&[0, 1]);
        let res = lift(&f1, &f1).unwrap();
        assert_eq!(res.g11.mul(&f1).unwrap(), f1);
        assert_eq!(res.q.mul(&res.p).unwrap(), res.g11);
    }

    #[test]
    fn lift_outside_module() {
        let ring = Ring::standard(2);
        let f11 = PolyMatrix::parse(&ring, &[vec!["z1", "0"]]).unwrap();
        let f1 = PolyMatrix::parse(&ring, &[vec!["z2", "0"]]).unwrap();
        assert_eq!(lift(&f1, &f11), Err(Error::NonzeroRemainder { row: 0 }));
    }

    #[test]
    fn identity_factorizes() {
        let ring = Ring::standard(2);
        let id = PolyMatrix::identity(&ring, 3);
        let d = factorize_mlp(&id).unwrap();
        let fact = d.factorization().unwrap();
        assert!(verify(&id, &fact.g0, &fact.f0));
        assert!(factorize_guan(&id).unwrap().is_factorizable());
    }

    #[test]
    fn verify_rejects_perturbation() {
        let ring = Ring::standard(3);
        let f = f4_matrix();
        let g0 = PolyMatrix::parse(
            &ring,
            &[vec!["0", "z1"], vec!["z3 - 1", "0"], vec!["z1*z2", "z1*z3 - z1"]],
        )
        .unwrap();
        let f0 = PolyMatrix::parse(&ring, &[vec!["z1*z3", "0", "z2 + 1"], vec!["z1*z2 + z1", "1", "0"]]).unwrap();
        assert!(verify(&f, &g0, &f0));
        let mut bad = g0.clone();
        bad.set(0, 0, Polynomial::one(&ring));
        assert!(!verify(&f, &bad, &f0));
        assert!(!verify(&f, &g0, &f0.select_rows(&[0])));
    }

    #[test]
    fn zero_matrix_rejected() {
        let ring = Ring::standard(2);
        assert_eq!(factorize_mlp(&PolyMatrix::zeros(&ring, 2, 2)), Err(Error::ZeroMatrix));
    }
}
