//! Free bases of quotient modules certified free by the Fitting test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{self, ModuleVector, Submodule};
use crate::matrix::{combinations, PolyMatrix};
use crate::poly::{Polynomial, Rational};
use crate::presentation::Presentation;
use crate::quotient::{FittingCertificate, QuotientModule};

/// Which rung of the extraction ladder produced the basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `s = r`: the generators already form a basis.
    Shortcut,
    /// Redundant generators were removed.
    Pruned,
    /// Produced by a completion backend.
    Completed,
}

/// An `r x m` matrix whose rows are a validated free basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeBasis {
    matrix: PolyMatrix,
    provenance: Provenance,
}

impl FreeBasis {
    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> PolyMatrix {
        self.matrix
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
}

/// Last rung of the ladder. Receives the generators (rows) and a relation
/// matrix whose rows generate their syzygies; returns candidate bases, which
/// are validated by the caller.
pub trait CompletionBackend {
    fn complete(&self, generators: &PolyMatrix, relations: &PolyMatrix, r: usize) -> Option<PolyMatrix>;
}

/// Removes generators through relations with a unit coefficient, creating
/// units by division steps whose remainder is a nonzero constant. If more
/// than `r` generators remain, searches `r`-subsets and then random constant
/// combinations of them for one with constant `d_r`.
#[derive(Clone, Debug)]
pub struct PivotCompletion {
    pub seed: u64,
    pub attempts: usize,
}

impl Default for PivotCompletion {
    fn default() -> Self {
        PivotCompletion {
            seed: 0x6662,
            attempts: 64,
        }
    }
}

impl CompletionBackend for PivotCompletion {
    fn complete(&self, generators: &PolyMatrix, relations: &PolyMatrix, r: usize) -> Option<PolyMatrix> {
        let ring = generators.ring();
        let s = generators.nrows();
        let reduced = Presentation::new(relations, Some(generators.row_vectors())).reduce(s.saturating_sub(r));
        let g = PolyMatrix::from_vectors(ring, generators.ncols(), reduced.gens.as_ref().expect("tracked"));
        if g.nrows() == r {
            return Some(g);
        }
        // r elements of a free module with a basis of constant d_r form a
        // basis iff their own d_r is a nonzero constant
        let is_basis = |v: &PolyMatrix| matches!(v.determinantal_divisor(r), Ok(d) if d.is_nonzero_constant());
        for rows in combinations(g.nrows(), r) {
            let v = g.select_rows(&rows);
            if is_basis(&v) {
                return Some(v);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for _ in 0..self.attempts {
            let c = PolyMatrix::from_fn(ring, r, g.nrows(), |_, _| {
                Polynomial::constant(ring, Rational::from_integer(rng.gen_range(-3..=3).into()))
            });
            let v = c.mul(&g).ok()?;
            if is_basis(&v) {
                return Some(v);
            }
        }
        None
    }
}

/// True iff `f11` has rank `r` (and `r` rows) and generates the same module
/// as the quotient generators.
pub fn validate_basis(f11: &PolyMatrix, q: &QuotientModule, r: usize) -> bool {
    if f11.nrows() != r || f11.ncols() != q.generators.ncols() || f11.rank().rank != r {
        return false;
    }
    groebner::module_equal(&f11.row_module(), &q.module()).unwrap_or(false)
}

/// Runs the extraction ladder with the default completion backend.
pub fn extract_free_basis(q: &QuotientModule, cert: &FittingCertificate, r: usize) -> Result<FreeBasis> {
    extract_free_basis_with(q, cert, r, &PivotCompletion::default())
}

pub fn extract_free_basis_with(
    q: &QuotientModule,
    cert: &FittingCertificate,
    r: usize,
    backend: &dyn CompletionBackend,
) -> Result<FreeBasis> {
    if !cert.is_free {
        return Err(Error::ExtractionIncomplete("module is not free".into()));
    }
    let ring = q.generators.ring();
    let m = q.generators.ncols();
    let s = q.len();
    if s == r {
        if validate_basis(&q.generators, q, r) {
            return Ok(FreeBasis {
                matrix: q.generators.clone(),
                provenance: Provenance::Shortcut,
            });
        }
        return Err(Error::ExtractionIncomplete("generators fail validation".into()));
    }

    let pruned = prune(q)?;
    if pruned.len() == r {
        let matrix = PolyMatrix::from_vectors(ring, m, &pruned);
        if validate_basis(&matrix, q, r) {
            return Ok(FreeBasis {
                matrix,
                provenance: Provenance::Pruned,
            });
        }
    }

    let mut attempt = None;
    if pruned.len() < s {
        let gens = PolyMatrix::from_vectors(ring, m, &pruned);
        let syz = groebner::syzygy(ring, m, &pruned)?;
        let h = PolyMatrix::from_vectors(ring, pruned.len(), syz.generators());
        attempt = backend.complete(&gens, &h, r);
    }
    if attempt.is_none() {
        attempt = backend.complete(&q.generators, &cert.h, r);
    }
    match attempt {
        Some(matrix) if validate_basis(&matrix, q, r) => Ok(FreeBasis {
            matrix,
            provenance: Provenance::Completed,
        }),
        Some(_) => Err(Error::ExtractionIncomplete("completion failed validation".into())),
        None => Err(Error::ExtractionIncomplete(format!(
            "{} generators remain after pruning, rank {r}",
            pruned.len()
        ))),
    }
}

/// Drops generators lying in the module of the others, trying them in
/// descending leading-term order.
fn prune(q: &QuotientModule) -> Result<Vec<ModuleVector>> {
    let ring = q.generators.ring();
    let m = q.generators.ncols();
    let mut gens = q.generators.row_vectors();
    gens.retain(|g| !g.is_zero());
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by(|&a, &b| groebner::compare_leading(&gens[b], &gens[a]).then(a.cmp(&b)));
    let mut keep = vec![true; gens.len()];
    for &i in &order {
        let others: Vec<ModuleVector> = (0..gens.len())
            .filter(|&j| j != i && keep[j])
            .map(|j| gens[j].clone())
            .collect();
        if others.is_empty() {
            continue;
        }
        if groebner::is_member(&gens[i], &Submodule::new(ring, m, others)?)? {
            keep[i] = false;
        }
    }
    Ok(gens.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use crate::quotient::{fitting_freeness_test, QuotientSource};

    fn quotient(ring: &Ring, rows: &[Vec<&str>]) -> QuotientModule {
        let generators = PolyMatrix::parse(ring, rows).unwrap();
        QuotientModule {
            base: generators.clone(),
            generators,
            source: QuotientSource::Polynomial(Polynomial::one(ring)),
        }
    }

    #[test]
    fn pruning_drops_sum() {
        let ring = Ring::standard(2);
        let q = quotient(&ring, &[vec!["1", "0"], vec!["0", "1"], vec!["1", "1"]]);
        let cert = fitting_freeness_test(&q, 2).unwrap();
        assert!(cert.is_free);
        let fb = extract_free_basis(&q, &cert, 2).unwrap();
        assert_eq!(fb.provenance(), Provenance::Pruned);
        assert_eq!(fb.matrix().nrows(), 2);
    }

    #[test]
    fn identity_slice_unchanged() {
        let ring = Ring::standard(3);
        let q = quotient(&ring, &[vec!["1", "0", "0"], vec!["0", "1", "0"]]);
        let cert = fitting_freeness_test(&q, 2).unwrap();
        let fb = extract_free_basis(&q, &cert, 2).unwrap();
        assert_eq!(fb.provenance(), Provenance::Shortcut);
        assert_eq!(fb.matrix(), &q.generators);
    }

    #[test]
    fn completion_when_no_generator_is_redundant() {
        // <x, 1 - x> = Q[x, y]: minimal with two generators, free of rank 1
        let ring = Ring::standard(2);
        let q = quotient(&ring, &[vec!["z1"], vec!["1 - z1"]]);
        let cert = fitting_freeness_test(&q, 1).unwrap();
        assert!(cert.is_free);
        let fb = extract_free_basis(&q, &cert, 1).unwrap();
        assert_eq!(fb.provenance(), Provenance::Completed);
        assert!(fb.matrix().get(0, 0).is_nonzero_constant());
    }

    #[test]
    fn validation() {
        let ring = Ring::standard(3);
        let q = quotient(&ring, &[vec!["z1*z3", "0", "z2 + 1"], vec!["z1*z2 + z1", "1", "0"]]);
        assert!(validate_basis(&q.generators, &q, 2));
        assert!(!validate_basis(&q.generators.select_rows(&[0]), &q, 2));
        let neg = PolyMatrix::from_fn(&ring, 2, 3, |i, j| -q.generators.get(i, j));
        assert!(validate_basis(&neg, &q, 2));
    }

    #[test]
    fn not_free_is_rejected() {
        let ring = Ring::standard(2);
        let q = quotient(&ring, &[vec!["z1"], vec!["z2"]]);
        let cert = fitting_freeness_test(&q, 1).unwrap();
        assert!(!cert.is_free);
        assert!(matches!(
            extract_free_basis(&q, &cert, 1),
            Err(Error::ExtractionIncomplete(_))
        ));
    }
}
