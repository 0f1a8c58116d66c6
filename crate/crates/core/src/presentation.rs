//! Relation matrices `H` (rows are relations among generators indexed by
//! columns) and the unimodular steps that shrink them without changing their
//! Fitting ideals.

use crate::groebner::{self, ModuleOrder, ModuleVector};
use crate::matrix::PolyMatrix;
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Debug)]
pub(crate) struct Presentation {
    ring: Ring,
    pub rows: Vec<Vec<Polynomial>>,
    /// Generators kept in step with the column operations, when tracked.
    pub gens: Option<Vec<ModuleVector>>,
    ncols: usize,
    /// Number of generators eliminated so far.
    pub eliminated: usize,
}

impl Presentation {
    pub fn new(h: &PolyMatrix, gens: Option<Vec<ModuleVector>>) -> Self {
        let mut rows = h.to_rows();
        rows.retain(|row| row.iter().any(|p| !p.is_zero()));
        Presentation {
            ring: h.ring().clone(),
            rows,
            gens,
            ncols: h.ncols(),
            eliminated: 0,
        }
    }

    pub fn matrix(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.rows.len(), self.ncols, |i, j| self.rows[i][j].clone())
    }

    /// Unit entry with the least fill-in: row size times column count.
    fn find_unit(&self) -> Option<(usize, usize)> {
        let row_terms: Vec<usize> = self.rows.iter().map(|r| r.iter().map(Polynomial::len).sum()).collect();
        let col_count = |j: usize| self.rows.iter().filter(|r| !r[j].is_zero()).count();
        let mut best: Option<((usize, usize), usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if !p.is_nonzero_constant() {
                    continue;
                }
                let cost = (row_terms[i] - 1) * (col_count(j) - 1);
                if best.is_none_or(|(_, c)| cost < c) {
                    best = Some(((i, j), cost));
                }
            }
        }
        best.map(|(at, _)| at)
    }

    /// Uses the relation in row `i` to express generator `j` through the
    /// others, then drops row `i` and column `j`. `H[i][j]` must be a unit.
    fn eliminate(&mut self, i: usize, j: usize) {
        let pivot_row = self.rows.remove(i);
        let inv = pivot_row[j].leading_coeff().expect("unit pivot").recip();
        for row in &mut self.rows {
            if !row[j].is_zero() {
                let factor = row[j].scale(&inv);
                for (k, entry) in row.iter_mut().enumerate() {
                    if k != j && !pivot_row[k].is_zero() {
                        *entry = &*entry - &(&factor * &pivot_row[k]);
                    }
                }
            }
            row.remove(j);
        }
        self.rows.retain(|row| row.iter().any(|p| !p.is_zero()));
        if let Some(gens) = self.gens.as_mut() {
            gens.remove(j);
        }
        self.ncols -= 1;
        self.eliminated += 1;
    }

    /// `col_a -= q * col_b`, compensated by `gen_b += q * gen_a`.
    fn column_op(&mut self, a: usize, b: usize, q: &Polynomial) {
        for row in &mut self.rows {
            if !row[b].is_zero() {
                let delta = q * &row[b];
                row[a] = &row[a] - &delta;
            }
        }
        if let Some(gens) = self.gens.as_mut() {
            let shifted = gens[a].scale(q);
            gens[b] = gens[b].add(&shifted).expect("same arity");
        }
    }

    /// `col_a -= sum_b coeffs[b] * col_b`.
    fn clear_to(&mut self, a: usize, coeffs: &[(usize, Polynomial)]) {
        for (b, c) in coeffs {
            if !c.is_zero() {
                self.column_op(a, *b, c);
            }
        }
    }

    /// Looks for a row entry congruent to a nonzero constant modulo one other
    /// entry, then modulo all other entries of its row, and clears it down to
    /// that constant.
    fn create_unit(&mut self) -> bool {
        let mut cells: Vec<(usize, usize)> = (0..self.rows.len())
            .flat_map(|i| (0..self.ncols).map(move |a| (i, a)))
            .filter(|&(i, a)| !self.rows[i][a].is_constant())
            .collect();
        cells.sort_by_key(|&(i, a)| {
            (
                self.rows[i].iter().map(Polynomial::len).sum::<usize>(),
                self.rows[i][a].len(),
            )
        });
        for &(i, a) in &cells {
            let row = &self.rows[i];
            for b in (0..row.len()).filter(|&b| b != a && !row[b].is_zero()) {
                let (q, rem) = row[a].div_rem(&row[b]).expect("nonzero divisor");
                if rem.is_nonzero_constant() {
                    self.clear_to(a, &[(b, q)]);
                    return true;
                }
            }
        }
        for &(i, a) in &cells {
            if let Some(coeffs) = self.reduction_to_constant(i, a) {
                self.clear_to(a, &coeffs);
                debug_assert!(self.rows[i][a].is_nonzero_constant());
                return true;
            }
        }
        false
    }

    /// Coefficients `c_b` with `H[i][a] - sum_b c_b H[i][b]` a nonzero
    /// constant, if the other entries of row `i` allow it.
    fn reduction_to_constant(&self, i: usize, a: usize) -> Option<Vec<(usize, Polynomial)>> {
        let ring = &self.ring;
        let as_vec = |p: &Polynomial| ModuleVector::new(ring, vec![p.clone()]).expect("same ring");
        let row = &self.rows[i];
        let others: Vec<usize> = (0..row.len()).filter(|&b| b != a && !row[b].is_zero()).collect();
        if others.is_empty() {
            return None;
        }
        let polys: Vec<ModuleVector> = others.iter().map(|&b| as_vec(&row[b])).collect();
        let gb = groebner::groebner_of(ring, 1, &polys, ModuleOrder::POT_DEGREVLEX, true);
        let target = if gb.is_unit_ideal() {
            &row[a] - &Polynomial::one(ring)
        } else {
            let rem = gb.divide(&as_vec(&row[a])).expect("arity 1").remainder;
            let rem = &rem.components()[0];
            if !rem.is_nonzero_constant() {
                return None;
            }
            &row[a] - rem
        };
        let div = gb.divide(&as_vec(&target)).expect("arity 1");
        debug_assert!(div.remainder.is_zero());
        let transform = gb.transform().expect("tracked");
        let coeffs = others
            .iter()
            .enumerate()
            .map(|(k, &b)| {
                let mut c = Polynomial::zero(ring);
                for (quot, rep) in div.quotients.iter().zip(transform) {
                    c = &c + &(quot * &rep[k]);
                }
                (b, c)
            })
            .collect();
        Some(coeffs)
    }

    /// Eliminates generators while fewer than `limit` have been removed and a
    /// unit can be found or created.
    pub fn reduce(mut self, limit: usize) -> Self {
        while self.eliminated < limit {
            if let Some((i, j)) = self.find_unit() {
                self.eliminate(i, j);
            } else if !self.create_unit() {
                break;
            }
        }
        self
    }
}
