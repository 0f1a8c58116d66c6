//! Sparse module elements used inside the engine: a flat list of
//! `(position, monomial, coefficient)` terms kept strictly descending in a
//! [`ModuleOrder`].

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::ModuleOrder;
use crate::poly::{Monomial, Polynomial, Rational, Ring, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MTerm {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct MVec {
    pub terms: Vec<MTerm>,
}

impl MVec {
    pub fn from_components(components: &[Polynomial], order: &ModuleOrder) -> MVec {
        let mut terms: Vec<MTerm> = components
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                p.terms().iter().map(move |t| MTerm {
                    pos,
                    mono: t.monomial.clone(),
                    coeff: t.coeff.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| order.compare(b.pos, &b.mono, a.pos, &a.mono));
        MVec { terms }
    }

    pub fn unit(pos: usize, nvars: usize) -> MVec {
        MVec {
            terms: vec![MTerm {
                pos,
                mono: Monomial::one(nvars),
                coeff: Rational::one(),
            }],
        }
    }

    /// Splits back into `arity` polynomials of `ring`.
    pub fn to_components(&self, ring: &Ring, arity: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<Term>> = vec![Vec::new(); arity];
        for t in &self.terms {
            buckets[t.pos].push(Term {
                coeff: t.coeff.clone(),
                monomial: t.mono.clone(),
            });
        }
        buckets
            .into_iter()
            .map(|terms| {
                let mut terms = terms;
                // module order restricted to one position may differ from
                // degrevlex (elimination blocks), so re-sort
                terms.sort_by(|a, b| degrevlex_cmp(&b.monomial, &a.monomial));
                Polynomial::from_sorted_terms(ring, terms)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&MTerm> {
        self.terms.first()
    }

    pub fn make_monic(&mut self) -> Rational {
        let lc = self.terms[0].coeff.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            for t in &mut self.terms {
                t.coeff *= &inv;
            }
        }
        lc
    }

    pub fn scale(&mut self, c: &Rational) {
        for t in &mut self.terms {
            t.coeff *= c;
        }
    }

    /// `self - c * m * other`, starting from `self.terms[skip..]`.
    pub fn sub_mul(&self, skip: usize, c: &Rational, m: &Monomial, other: &[MTerm], order: &ModuleOrder) -> MVec {
        let a = &self.terms[skip..];
        let b = other;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<MTerm> = None;
        while i < a.len() || j < b.len() {
            if pending.is_none() && j < b.len() {
                pending = Some(MTerm {
                    pos: b[j].pos,
                    mono: b[j].mono.mul(m),
                    coeff: -(&b[j].coeff * c),
                });
            }
            match (a.get(i), pending.as_ref()) {
                (Some(x), Some(y)) => match order.compare(x.pos, &x.mono, y.pos, &y.mono) {
                    Ordering::Greater => {
                        out.push(x.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(pending.take().unwrap());
                        j += 1;
                    }
                    Ordering::Equal => {
                        let mut y = pending.take().unwrap();
                        y.coeff += &x.coeff;
                        if !y.coeff.is_zero() {
                            out.push(y);
                        }
                        i += 1;
                        j += 1;
                    }
                },
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(pending.take().unwrap());
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        MVec { terms: out }
    }

    /// Multiplies every term by `m` (order preserving).
    pub fn mul_monomial(&self, m: &Monomial) -> MVec {
        MVec {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    pos: t.pos,
                    mono: t.mono.mul(m),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }
}

fn degrevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    crate::poly::degrevlex_slices(a.exponents(), b.exponents())
}
