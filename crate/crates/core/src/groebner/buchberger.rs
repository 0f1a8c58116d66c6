//! Buchberger's algorithm for submodules of a free module, with optional
//! tracking of each basis element as a combination of the inputs.

use std::collections::HashSet;

use super::vector::{MTerm, MVec};
use super::ModuleOrder;
use crate::poly::{Monomial, Rational};

#[derive(Clone, Debug)]
pub(crate) struct Element {
    pub vec: MVec,
    /// Coefficients over the inputs, position = input index.
    pub rep: Option<MVec>,
}

impl Element {
    fn lead(&self) -> &MTerm {
        self.vec.lead().expect("basis elements are nonzero")
    }
}

pub(crate) struct Reduction {
    pub vec: MVec,
    pub rep: Option<MVec>,
}

/// Fully reduces `vec` by `basis`. When `rep` is given it is updated so that
/// the invariant `vec = rep * inputs` is preserved.
pub(crate) fn reduce(mut vec: MVec, mut rep: Option<MVec>, basis: &[Element], order: &ModuleOrder) -> Reduction {
    let mut done: Vec<MTerm> = Vec::new();
    let mut start = 0;
    while let Some(lead) = vec.terms.get(start) {
        let reducer = basis.iter().find(|g| {
            let gl = g.lead();
            gl.pos == lead.pos && gl.mono.divides(&lead.mono)
        });
        match reducer {
            Some(g) => {
                let gl = g.lead();
                let c = &lead.coeff / &gl.coeff;
                let m = lead.mono.div(&gl.mono).expect("divisible");
                if let (Some(r), Some(gr)) = (rep.as_mut(), g.rep.as_ref()) {
                    *r = r.sub_mul(0, &c, &m, &gr.terms, order);
                }
                vec = vec.sub_mul(start + 1, &c, &m, &g.vec.terms[1..], order);
                start = 0;
            }
            None => {
                done.push(lead.clone());
                start += 1;
            }
        }
    }
    Reduction {
        vec: MVec { terms: done },
        rep,
    }
}

struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
}

/// Computes the reduced Gröbner basis of the module spanned by `inputs`.
///
/// Returns elements in ascending order of leading term. When `track` is set,
/// each element carries its representation over the inputs.
pub(crate) fn groebner_basis(inputs: &[MVec], nvars: usize, order: &ModuleOrder, track: bool) -> Vec<Element> {
    let ideal_case = inputs.iter().all(|v| v.terms.iter().all(|t| t.pos == 0));
    let mut basis: Vec<Element> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let insert =
        |elem: Element, basis: &mut Vec<Element>, pairs: &mut Vec<Pair>, pending: &mut HashSet<(usize, usize)>| {
            let k = basis.len();
            let lk = elem.lead().clone();
            for (i, g) in basis.iter().enumerate() {
                let gl = g.lead();
                if gl.pos != lk.pos {
                    continue;
                }
                pairs.push(Pair {
                    i,
                    j: k,
                    pos: lk.pos,
                    lcm: gl.mono.lcm(&lk.mono),
                });
                pending.insert((i, k));
            }
            basis.push(elem);
            // descending, so that the smallest lcm is popped from the back
            pairs.sort_by(|a, b| order.compare(b.pos, &b.lcm, a.pos, &a.lcm));
        };

    for (idx, v) in inputs.iter().enumerate() {
        let rep = track.then(|| MVec::unit(idx, nvars));
        let mut red = reduce(v.clone(), rep, &basis, order);
        if red.vec.is_zero() {
            continue;
        }
        let lc = red.vec.make_monic();
        if let Some(r) = red.rep.as_mut() {
            r.scale(&lc.recip());
        }
        insert(
            Element {
                vec: red.vec,
                rep: red.rep,
            },
            &mut basis,
            &mut pairs,
            &mut pending,
        );
    }

    while let Some(pair) = pairs.pop() {
        pending.remove(&(pair.i, pair.j));
        let (gi, gj) = (&basis[pair.i], &basis[pair.j]);
        if ideal_case && gi.lead().mono.is_coprime(&gj.lead().mono) {
            continue;
        }
        if chain_criterion(&pair, &basis, &pending) {
            continue;
        }
        let (s, srep) = s_vector(gi, gj, &pair.lcm, order);
        let mut red = reduce(s, srep, &basis, order);
        if red.vec.is_zero() {
            continue;
        }
        let lc = red.vec.make_monic();
        if let Some(r) = red.rep.as_mut() {
            r.scale(&lc.recip());
        }
        insert(
            Element {
                vec: red.vec,
                rep: red.rep,
            },
            &mut basis,
            &mut pairs,
            &mut pending,
        );
    }

    interreduce(basis, order)
}

/// Buchberger's second criterion: skip `(i, j)` when some `k` has a leading
/// term dividing the lcm and both `(i, k)` and `(j, k)` are already treated.
fn chain_criterion(pair: &Pair, basis: &[Element], pending: &HashSet<(usize, usize)>) -> bool {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    basis.iter().enumerate().any(|(k, g)| {
        k != pair.i
            && k != pair.j
            && g.lead().pos == pair.pos
            && g.lead().mono.divides(&pair.lcm)
            && !pending.contains(&key(pair.i, k))
            && !pending.contains(&key(pair.j, k))
    })
}

pub(crate) fn s_vector(gi: &Element, gj: &Element, lcm: &Monomial, order: &ModuleOrder) -> (MVec, Option<MVec>) {
    let (li, lj) = (gi.lead(), gj.lead());
    let mi = lcm.div(&li.mono).expect("lcm");
    let mj = lcm.div(&lj.mono).expect("lcm");
    // basis elements are monic
    let ci = li.coeff.recip();
    let cj = lj.coeff.recip();
    let mut a = gi.vec.mul_monomial(&mi);
    a.scale(&ci);
    let s = a.sub_mul(0, &cj, &mj, &gj.vec.terms, order);
    let rep = match (&gi.rep, &gj.rep) {
        (Some(ri), Some(rj)) => {
            let mut r = ri.mul_monomial(&mi);
            r.scale(&ci);
            Some(r.sub_mul(0, &cj, &mj, &rj.terms, order))
        }
        _ => None,
    };
    (s, rep)
}

/// Removes redundant elements, reduces tails, normalizes to monic and sorts
/// ascending by leading term.
fn interreduce(basis: Vec<Element>, order: &ModuleOrder) -> Vec<Element> {
    let mut minimal: Vec<Element> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let gl = g.lead();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hl = h.lead();
            j != k
                && hl.pos == gl.pos
                && hl.mono.divides(&gl.mono)
                // equal leading monomials: keep the first one only
                && (hl.mono != gl.mono || j < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let g = &minimal[k];
        let others: Vec<Element> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, h)| h.clone())
            .collect();
        let head = MVec {
            terms: vec![g.vec.terms[0].clone()],
        };
        let tail = MVec {
            terms: g.vec.terms[1..].to_vec(),
        };
        let red = reduce(tail, g.rep.clone(), &others, order);
        let mut vec = head;
        vec.terms.extend(red.vec.terms);
        let mut elem = Element { vec, rep: red.rep };
        let lc = elem.vec.make_monic();
        if let Some(r) = elem.rep.as_mut() {
            r.scale(&lc.recip());
        }
        reduced.push(elem);
    }
    reduced.sort_by(|a, b| {
        let (la, lb) = (a.lead(), b.lead());
        order.compare(la.pos, &la.mono, lb.pos, &lb.mono)
    });
    reduced
}

/// Division of `vec` by a (not necessarily Gröbner) list of elements,
/// recording the quotient for each divisor.
pub(crate) fn divide_with_quotients(
    mut vec: MVec,
    divisors: &[MVec],
    order: &ModuleOrder,
) -> (Vec<Vec<(Rational, Monomial)>>, MVec) {
    let mut quotients: Vec<Vec<(Rational, Monomial)>> = vec![Vec::new(); divisors.len()];
    let mut remainder: Vec<MTerm> = Vec::new();
    let mut start = 0;
    while let Some(lead) = vec.terms.get(start) {
        let found = divisors.iter().enumerate().find(|(_, g)| {
            g.lead()
                .is_some_and(|gl| gl.pos == lead.pos && gl.mono.divides(&lead.mono))
        });
        match found {
            Some((k, g)) => {
                let gl = g.lead().unwrap();
                let c = &lead.coeff / &gl.coeff;
                let m = lead.mono.div(&gl.mono).expect("divisible");
                vec = vec.sub_mul(start + 1, &c, &m, &g.terms[1..], order);
                start = 0;
                quotients[k].push((c, m));
            }
            None => {
                remainder.push(lead.clone());
                start += 1;
            }
        }
    }
    (quotients, MVec { terms: remainder })
}
