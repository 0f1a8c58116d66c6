//! Quotient modules `K : d` and `K : J`, and the Fitting-ideal freeness test.

use crate::error::{Error, Result};
use crate::groebner::{self, ModuleVector, Submodule};
use crate::matrix::{MinorIdeal, PolyMatrix};
use crate::poly::Polynomial;
use crate::presentation::Presentation;

/// What the base module was divided by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientSource {
    Polynomial(Polynomial),
    /// Gröbner basis of the ideal.
    Ideal(Vec<Polynomial>),
}

/// Generators `F1'` (as rows) of `rho(base) : source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientModule {
    pub generators: PolyMatrix,
    pub base: PolyMatrix,
    pub source: QuotientSource,
}

impl QuotientModule {
    pub fn len(&self) -> usize {
        self.generators.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.nrows() == 0
    }

    pub fn module(&self) -> Submodule {
        self.generators.row_module()
    }
}

/// Presentation of the quotient module and the Gröbner basis of its Fitting
/// ideal `Fitt_r = I_{s-r}(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingCertificate {
    /// `t x s` matrix whose rows generate the syzygies of the generators.
    pub h: PolyMatrix,
    /// `s - r`.
    pub index: usize,
    pub gb: Vec<Polynomial>,
    pub is_free: bool,
    /// `s = r`: no syzygy computation was needed.
    pub shortcut: bool,
}

/// `rho(F1) : d`, read off the syzygies of the stacked matrix `[F1; -d * I]`:
/// each relation `(g, f)` gives `g * F1 = d * f`.
pub fn quotient_by_poly(f1: &PolyMatrix, d: &Polynomial) -> Result<QuotientModule> {
    if d.is_zero() {
        return Err(Error::DivideByZero);
    }
    let ring = f1.ring();
    let m = f1.ncols();
    let r = f1.nrows();
    let neg_d = -d;
    let mut rows = f1.row_vectors();
    rows.extend((0..m).map(|j| ModuleVector::unit(ring, m, j).scale(&neg_d)));
    let syz = groebner::syzygy(ring, m, &rows)?;
    let generators: Vec<ModuleVector> = syz
        .generators()
        .iter()
        .map(|u| ModuleVector::new(ring, u.components()[r..].to_vec()).expect("same ring"))
        .filter(|v| !v.is_zero())
        .collect();
    Ok(QuotientModule {
        generators: PolyMatrix::from_vectors(ring, m, &generators),
        base: f1.clone(),
        source: QuotientSource::Polynomial(d.clone()),
    })
}

/// `rho(F) : J = (rho(F) : a_1) ∩ ... ∩ (rho(F) : a_gamma)` over a Gröbner
/// basis `a_1, ..., a_gamma` of `J`.
pub fn quotient_by_ideal(f: &PolyMatrix, ideal: &MinorIdeal) -> Result<QuotientModule> {
    let ring = f.ring();
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let basis = ideal.groebner_basis(ring);
    let parts = basis
        .iter()
        .map(|a| quotient_by_poly(f, a).map(|q| q.module()))
        .collect::<Result<Vec<_>>>()?;
    let meet = groebner::intersect(&parts)?;
    Ok(QuotientModule {
        generators: PolyMatrix::from_vectors(ring, f.ncols(), meet.generators()),
        base: f.clone(),
        source: QuotientSource::Ideal(basis),
    })
}

/// Up to this many generators the relation matrix is a reduced Gröbner basis
/// of the syzygy module; beyond it, relations lifted from a Gröbner basis of
/// the generators are used instead.
pub const TAGGED_SYZYGY_LIMIT: usize = 8;

/// Decides whether the module generated by `q` is free of rank `r`.
pub fn fitting_freeness_test(q: &QuotientModule, r: usize) -> Result<FittingCertificate> {
    let ring = q.generators.ring();
    let s = q.len();
    if s < r {
        return Err(Error::InconsistentRank { generators: s, rank: r });
    }
    if s == r {
        // I_0 is the whole ring
        return Ok(FittingCertificate {
            h: PolyMatrix::zeros(ring, 0, s),
            index: 0,
            gb: vec![Polynomial::one(ring)],
            is_free: true,
            shortcut: true,
        });
    }
    let gens = q.generators.row_vectors();
    let m = q.generators.ncols();
    let h = if s <= TAGGED_SYZYGY_LIMIT {
        PolyMatrix::from_vectors(ring, s, groebner::syzygy(ring, m, &gens)?.generators())
    } else {
        PolyMatrix::from_vectors(ring, s, &groebner::syzygy_generators(ring, m, &gens)?)
    };
    let index = s - r;
    let t = h.nrows();
    // not enough relations for any minor of this size: Fitt_r = 0
    if index > t {
        return Ok(FittingCertificate {
            h,
            index,
            gb: Vec::new(),
            is_free: false,
            shortcut: false,
        });
    }
    // I_k(H) = I_{k-1}(H') for H' obtained by eliminating a unit pivot
    let reduced = Presentation::new(&h, None).reduce(index);
    let k = index - reduced.eliminated;
    let gb = if k == 0 {
        vec![Polynomial::one(ring)]
    } else if k > reduced.rows.len() {
        Vec::new()
    } else {
        let minors: Vec<Polynomial> = reduced.matrix().minors_iter(k)?.filter(|p| !p.is_zero()).collect();
        if minors.iter().any(Polynomial::is_nonzero_constant) {
            vec![Polynomial::one(ring)]
        } else {
            MinorIdeal {
                size: k,
                generators: minors,
            }
            .groebner_basis(ring)
        }
    };
    let is_free = gb.iter().any(Polynomial::is_nonzero_constant);
    Ok(FittingCertificate {
        h,
        index,
        gb,
        is_free,
        shortcut: false,
    })
}
