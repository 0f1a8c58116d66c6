//! Polynomial matrices: rank witnesses, minors, determinantal divisors,
//! fraction-free determinants and the exact right quotient `A21 * A11^-1`.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{self, ModuleVector, Submodule};
use crate::poly::{Polynomial, Rational, Ring};

/// Dense row-major `rows x cols` matrix over `Q[z]`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

/// Rank `r` together with row and column positions of a nonzero `r x r` minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankWitness {
    pub rank: usize,
    pub row_indices: Vec<usize>,
    pub col_indices: Vec<usize>,
}

/// `[A11 A12; A21 A22]` with `A11` square and nonsingular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSplit {
    pub a11: PolyMatrix,
    pub a12: PolyMatrix,
    pub a21: PolyMatrix,
    pub a22: PolyMatrix,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::ArityMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            for p in row {
                if p.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        Self::from_fn(ring, rows, cols, |_, _| Polynomial::zero(ring))
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        Self::from_fn(ring, n, n, |i, j| {
            if i == j {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            }
        })
    }

    /// Parses a grid of polynomial strings.
    pub fn parse(ring: &Ring, rows: &[Vec<&str>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| Polynomial::parse(ring, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(ring, rows)
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_vectors(ring: &Ring, arity: usize, vectors: &[ModuleVector]) -> Self {
        Self::from_fn(ring, vectors.len(), arity, |i, j| vectors[i].components()[j].clone())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> ModuleVector {
        ModuleVector::new(&self.ring, self.entries[i * self.cols..(i + 1) * self.cols].to_vec()).expect("same ring")
    }

    pub fn row_vectors(&self) -> Vec<ModuleVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    /// `rho(F)`: the submodule spanned by the rows.
    pub fn row_module(&self) -> Submodule {
        Submodule::new(&self.ring, self.cols, self.row_vectors()).expect("consistent rows")
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        Self::from_fn(&self.ring, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> PolyMatrix {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix(rows, &cols)
    }

    pub fn select_cols(&self, cols: &[usize]) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, cols)
    }

    pub fn transpose(&self) -> PolyMatrix {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn vstack(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::ArityMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows + other.rows,
            cols,
            entries,
        })
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::ArityMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        Ok(Self::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Polynomial::zero(&self.ring), |acc, k| {
                &acc + &(self.get(i, k) * other.get(k, j))
            })
        }))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).evaluate(point)).collect())
            .collect()
    }

    /// Rank with the lexicographically smallest independent row set and, on
    /// those rows, the lexicographically smallest independent column set.
    ///
    /// Candidates are screened at a random rational point (a nonzero value
    /// there proves independence); everything else is decided by exact
    /// fraction-free elimination, and the final witness minor is confirmed
    /// exactly.
    pub fn rank(&self) -> RankWitness {
        let point = self.sample_point();
        let values = self.evaluate(&point).expect("point arity");
        let row_indices = self.greedy_rows(&values);
        let rows_sub = self.select_rows(&row_indices);
        let t = rows_sub.transpose();
        let t_values: Vec<Vec<Rational>> = (0..self.cols)
            .map(|j| row_indices.iter().map(|&i| values[i][j].clone()).collect())
            .collect();
        let col_indices = t.greedy_rows(&t_values);
        debug_assert_eq!(col_indices.len(), row_indices.len());
        let witness = RankWitness {
            rank: row_indices.len(),
            row_indices,
            col_indices,
        };
        if witness.rank > 0 {
            let minor = self.submatrix(&witness.row_indices, &witness.col_indices).determinant();
            assert!(!minor.is_zero(), "rank witness minor must be nonzero");
        }
        witness
    }

    fn sample_point(&self) -> Vec<Rational> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d6c70);
        (0..self.ring.nvars())
            .map(|_| Rational::from_integer(rng.gen_range(-97i64..=97).into()))
            .collect()
    }

    fn greedy_rows(&self, values: &[Vec<Rational>]) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        for i in 0..self.rows {
            let mut candidate = chosen.clone();
            candidate.push(i);
            let numeric: Vec<Vec<Rational>> = candidate.iter().map(|&k| values[k].clone()).collect();
            let independent = rational_rank(numeric) == candidate.len()
                || self.select_rows(&candidate).exact_rank() == candidate.len();
            if independent {
                chosen = candidate;
            }
        }
        chosen
    }

    /// Rank by fraction-free row echelon form over `Q[z]`.
    pub fn exact_rank(&self) -> usize {
        let mut m = self.to_rows();
        let mut prev = Polynomial::one(&self.ring);
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in r + 1..self.rows {
                for j in col + 1..self.cols {
                    let num = &(&m[r][col] * &m[i][j]) - &(&m[i][col] * &m[r][j]);
                    m[i][j] = num.exact_divide(&prev).expect("fraction-free step is exact");
                }
                m[i][col] = Polynomial::zero(&self.ring);
            }
            prev = m[r][col].clone();
            r += 1;
        }
        r
    }

    /// Determinant by Bareiss elimination; every intermediate division is exact.
    pub fn determinant(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        let mut m = self.to_rows();
        let mut prev = Polynomial::one(&self.ring);
        let mut negate = false;
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return Polynomial::zero(&self.ring);
            };
            if p != k {
                m.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_divide(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Transposed cofactor matrix, `A * adj(A) = det(A) * I`.
    pub fn adjugate(&self) -> PolyMatrix {
        assert_eq!(self.rows, self.cols, "adjugate of a non-square matrix");
        let n = self.rows;
        if n == 1 {
            return PolyMatrix::identity(&self.ring, 1);
        }
        Self::from_fn(&self.ring, n, n, |i, j| {
            // entry (i, j) is the (j, i) cofactor
            let rows: Vec<usize> = (0..n).filter(|&k| k != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            let minor = self.submatrix(&rows, &cols).determinant();
            if (i + j) % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
    }

    /// All `size x size` minors, ordered lexicographically by (row set, column set).
    pub fn minors(&self, size: usize) -> Result<Vec<Polynomial>> {
        Ok(self.minors_iter(size)?.collect())
    }

    /// Lazy form of [`PolyMatrix::minors`].
    pub fn minors_iter(&self, size: usize) -> Result<impl Iterator<Item = Polynomial> + '_> {
        let limit = self.rows.min(self.cols);
        if size == 0 || size > limit {
            return Err(Error::OutOfRange { index: size, limit });
        }
        let row_sets = combinations(self.rows, size);
        let col_sets = combinations(self.cols, size);
        Ok(row_sets.into_iter().flat_map(move |rs| {
            col_sets
                .clone()
                .into_iter()
                .map(move |cs| self.submatrix(&rs, &cs).determinant())
        }))
    }

    /// `d_i(F)`: monic gcd of all `i x i` minors.
    pub fn determinantal_divisor(&self, size: usize) -> Result<Polynomial> {
        let mut acc: Option<Polynomial> = None;
        for m in self.minors_iter(size)?.filter(|m| !m.is_zero()) {
            let next = match acc {
                None => m.monic()?,
                Some(a) => groebner::gcd(&a, &m)?,
            };
            if next.is_constant() {
                return Ok(next);
            }
            acc = Some(next);
        }
        acc.ok_or(Error::AllMinorsZero { size })
    }

    /// `X` with `X * self = a21`, computed as `a21 * adj(self) / det(self)`.
    pub fn right_quotient(a21: &PolyMatrix, a11: &PolyMatrix) -> Result<PolyMatrix> {
        if a11.rows != a11.cols {
            return Err(Error::ArityMismatch {
                expected: a11.rows,
                found: a11.cols,
            });
        }
        let det = a11.determinant();
        if det.is_zero() {
            return Err(Error::SingularBlock { size: a11.rows });
        }
        let prod = a21.mul(&a11.adjugate())?;
        let entries = prod
            .entries
            .iter()
            .map(|p| p.exact_divide(&det))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { entries, ..prod })
    }

    /// True iff full row rank and `d_l` is a nonzero constant.
    pub fn is_mlp(&self) -> bool {
        if self.rows == 0 || self.rows > self.cols || self.rank().rank != self.rows {
            return false;
        }
        self.determinantal_divisor(self.rows)
            .is_ok_and(|d| d.is_nonzero_constant())
    }

    pub fn permute_rows(&self, perm: &[usize]) -> PolyMatrix {
        self.select_rows(perm)
    }

    pub fn permute_cols(&self, perm: &[usize]) -> PolyMatrix {
        self.select_cols(perm)
    }
}

/// Splits `[fbar11; cv]` after its first `r` columns; `fbar11` must have a
/// nonsingular leading `r x r` block.
pub fn select_blocks(fbar11: &PolyMatrix, cv: &PolyMatrix, r: usize) -> Result<BlockSplit> {
    let m = fbar11.ncols();
    if fbar11.nrows() != r || r > m {
        return Err(Error::ArityMismatch {
            expected: r,
            found: fbar11.nrows(),
        });
    }
    if cv.nrows() > 0 && cv.ncols() != m {
        return Err(Error::ArityMismatch {
            expected: m,
            found: cv.ncols(),
        });
    }
    let lead: Vec<usize> = (0..r).collect();
    let trail: Vec<usize> = (r..m).collect();
    let a11 = fbar11.select_cols(&lead);
    if a11.determinant().is_zero() {
        return Err(Error::SingularBlock { size: r });
    }
    let cv_rows: Vec<usize> = (0..cv.nrows()).collect();
    Ok(BlockSplit {
        a12: fbar11.select_cols(&trail),
        a21: cv.submatrix(&cv_rows, &lead),
        a22: cv.submatrix(&cv_rows, &trail),
        a11,
    })
}

/// Rank of a rational matrix by Gaussian elimination.
pub(crate) fn rational_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][col].clone();
        for i in r + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &pivot;
            for j in col..cols {
                let delta = &f * &m[r][j];
                m[i][j] -= delta;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The ideal `I_i(F)` generated by all `i x i` minors; `I_0` is the whole ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorIdeal {
    pub size: usize,
    pub generators: Vec<Polynomial>,
}

impl MinorIdeal {
    /// Number of minors, `C(l, i) * C(m, i)`.
    pub fn beta(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    /// Reduced Gröbner basis of the ideal (its size is `gamma`).
    pub fn groebner_basis(&self, ring: &Ring) -> Vec<Polynomial> {
        let gb = Submodule::ideal(ring, &self.generators).expect("same ring").groebner();
        gb.elements().iter().map(|e| e.components()[0].clone()).collect()
    }
}

impl PolyMatrix {
    pub fn minor_ideal(&self, size: usize) -> Result<MinorIdeal> {
        if size == 0 {
            return Ok(MinorIdeal {
                size,
                generators: vec![Polynomial::one(&self.ring)],
            });
        }
        Ok(MinorIdeal {
            size,
            generators: self.minors(size)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::standard(3)
    }

    fn mat(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::parse(&ring(), &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(&ring(), s).unwrap()
    }

    fn f4_matrix() -> PolyMatrix {
        mat(&[
            &["z1^2*z2 + z1^2", "z1", "0"],
            &["z1*z3^2 - z1*z3", "0", "z2*z3 - z2 + z3 - 1"],
            &[
                "2*z1^2*z2*z3 - z1^2*z2 + z1^2*z3 - z1^2",
                "z1*z3 - z1",
                "z1*z2^2 + z1*z2",
            ],
        ])
    }

    fn f1_matrix() -> PolyMatrix {
        mat(&[
            &["z1*z2 + z1 - z2 - 1", "0", "z3"],
            &["z2 + 1", "z2 + 1", "z1 - 1"],
            &["z1*z2 + z1", "z2 + 1", "z1 + z3 - 1"],
        ])
    }

    #[test]
    fn ranks() {
        for f in [f4_matrix(), f1_matrix()] {
            let w = f.rank();
            assert_eq!((w.rank, w.row_indices.clone()), (2, vec![0, 1]));
            assert!(f.minors(3).unwrap().iter().all(Polynomial::is_zero));
        }
        assert_eq!(PolyMatrix::identity(&ring(), 3).rank().rank, 3);
        let zero = PolyMatrix::zeros(&ring(), 2, 3).rank();
        assert_eq!(zero.rank, 0);
        assert!(zero.row_indices.is_empty() && zero.col_indices.is_empty());
    }

    #[test]
    fn two_by_two_minors() {
        let f1 = f4_matrix().select_rows(&[0, 1]);
        let minors: Vec<Polynomial> = f1.minors(2).unwrap().into_iter().map(|m| m.monic().unwrap()).collect();
        let expected = [
            p("z1^2*z3") * p("z3 - 1"),
            p("z1^2") * p("z2 + 1").pow(2) * p("z3 - 1"),
            p("z1") * p("z2 + 1") * p("z3 - 1"),
        ];
        assert_eq!(minors.len(), 3);
        for e in expected {
            assert!(minors.contains(&e), "{e} missing");
        }
        assert_eq!(PolyMatrix::identity(&ring(), 2).minors(2).unwrap(), vec![p("1")]);
        assert_eq!(f4_matrix().minors(2).unwrap().len(), 9);
    }

    #[test]
    fn determinantal_divisors() {
        assert_eq!(
            f4_matrix().select_rows(&[0, 1]).determinantal_divisor(2).unwrap(),
            p("z1*z3 - z1")
        );
        assert_eq!(
            f1_matrix().select_rows(&[0, 1]).determinantal_divisor(2).unwrap(),
            p("z2 + 1")
        );
        assert!(PolyMatrix::identity(&ring(), 3)
            .determinantal_divisor(3)
            .unwrap()
            .is_one());
        assert_eq!(
            PolyMatrix::zeros(&ring(), 2, 2).determinantal_divisor(1),
            Err(Error::AllMinorsZero { size: 1 })
        );
    }

    #[test]
    fn determinants() {
        assert!(PolyMatrix::identity(&ring(), 4).determinant().is_one());
        assert_eq!(mat(&[&["z1*z3", "0"], &["z1*z2 + z1", "1"]]).determinant(), p("z1*z3"));
        let a = mat(&[&["z1", "z2", "1"], &["z3", "z1 - 1", "z2"], &["1", "z3^2", "z1*z2"]]);
        assert_eq!(
            a.mul(&a.adjugate()).unwrap(),
            PolyMatrix::from_fn(&ring(), 3, 3, |i, j| {
                if i == j {
                    a.determinant()
                } else {
                    Polynomial::zero(&ring())
                }
            })
        );
    }

    #[test]
    fn right_quotients() {
        let a11 = mat(&[&["z1*z3", "0"], &["z1*z2 + z1", "1"]]);
        let a21 = mat(&[&["2*z1^2*z2*z3 - z1^2*z2 + z1^2*z3 - z1^2", "z1*z3 - z1"]]);
        let x = PolyMatrix::right_quotient(&a21, &a11).unwrap();
        assert_eq!(x, mat(&[&["z1*z2", "z1*z3 - z1"]]));
        assert_eq!(x.mul(&a11).unwrap(), a21);
        assert_eq!(
            PolyMatrix::right_quotient(&a21, &PolyMatrix::identity(&ring(), 2)).unwrap(),
            a21
        );
        let singular = mat(&[&["z1", "z1"], &["1", "1"]]);
        assert_eq!(
            PolyMatrix::right_quotient(&a21, &singular),
            Err(Error::SingularBlock { size: 2 })
        );
    }

    #[test]
    fn block_split() {
        let f11 = mat(&[&["z1*z3", "0", "z2 + 1"], &["z1*z2 + z1", "1", "0"]]);
        let c = f4_matrix().select_rows(&[2]);
        let b = select_blocks(&f11, &c, 2).unwrap();
        assert_eq!(b.a11, mat(&[&["z1*z3", "0"], &["z1*z2 + z1", "1"]]));
        assert_eq!(
            b.a21,
            mat(&[&["2*z1^2*z2*z3 - z1^2*z2 + z1^2*z3 - z1^2", "z1*z3 - z1"]])
        );
        let sq = select_blocks(&PolyMatrix::identity(&ring(), 2), &PolyMatrix::zeros(&ring(), 0, 2), 2).unwrap();
        assert_eq!((sq.a12.ncols(), sq.a22.ncols(), sq.a21.nrows()), (0, 0, 0));
    }

    #[test]
    fn mlp_predicate() {
        assert!(mat(&[&["z1*z3", "0", "z2 + 1"], &["z1*z2 + z1", "1", "0"]]).is_mlp());
        assert!(mat(&[&["z1", "z2"]]).is_mlp());
        assert!(!mat(&[&["z1", "z1*z2"]]).is_mlp());
    }

    #[test]
    fn minor_ideal_conventions() {
        let f = f4_matrix();
        assert!(f.minor_ideal(0).unwrap().generators[0].is_one());
        let i2 = f.minor_ideal(2).unwrap();
        assert_eq!(i2.beta(), 9);
        assert!(!i2.is_zero());
        assert!(f.minor_ideal(3).unwrap().is_zero());
        assert!(f.minors(4).is_err());
    }

    #[test]
    fn combination_order() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
    }
}
