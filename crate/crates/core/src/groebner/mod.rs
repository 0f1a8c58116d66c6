//! Gröbner bases for submodules of the free row module `Q[z]^{1 x m}`
//! (ideals are the case `m = 1`), together with division, syzygies,
//! intersections and polynomial gcd/lcm built on top of them.

mod buchberger;
mod order;
mod vector;

use std::fmt;

pub use order::ModuleOrder;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};
use buchberger::Element;
pub(crate) use vector::MVec;

/// An element of `Q[z]^{1 x m}`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleVector {
    ring: Ring,
    components: Vec<Polynomial>,
}

impl ModuleVector {
    pub fn new(ring: &Ring, components: Vec<Polynomial>) -> Result<Self> {
        if components.iter().any(|p| p.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(ModuleVector {
            ring: ring.clone(),
            components,
        })
    }

    pub fn zero(ring: &Ring, arity: usize) -> Self {
        ModuleVector {
            ring: ring.clone(),
            components: vec![Polynomial::zero(ring); arity],
        }
    }

    /// The standard basis vector `e_index`.
    pub fn unit(ring: &Ring, arity: usize, index: usize) -> Self {
        let mut v = Self::zero(ring, arity);
        v.components[index] = Polynomial::one(ring);
        v
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, f: &Polynomial) -> ModuleVector {
        ModuleVector {
            ring: self.ring.clone(),
            components: self.components.iter().map(|c| c * f).collect(),
        }
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check(other)?;
        Ok(ModuleVector {
            ring: self.ring.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check(other)?;
        Ok(ModuleVector {
            ring: self.ring.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    fn check(&self, other: &ModuleVector) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        Ok(())
    }

    pub(crate) fn to_mvec(&self, order: &ModuleOrder) -> MVec {
        MVec::from_components(&self.components, order)
    }

    pub(crate) fn from_mvec(ring: &Ring, arity: usize, v: &MVec) -> ModuleVector {
        ModuleVector {
            ring: ring.clone(),
            components: v.to_components(ring, arity),
        }
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Finitely generated submodule of `Q[z]^{1 x m}`. Zero generators are
/// dropped on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    ring: Ring,
    arity: usize,
    generators: Vec<ModuleVector>,
}

impl Submodule {
    pub fn new(ring: &Ring, arity: usize, generators: Vec<ModuleVector>) -> Result<Self> {
        for g in &generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if g.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: g.arity(),
                });
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            arity,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    /// The ideal generated by `polys`, viewed as a submodule of arity 1.
    pub fn ideal(ring: &Ring, polys: &[Polynomial]) -> Result<Self> {
        let gens = polys
            .iter()
            .map(|p| ModuleVector::new(ring, vec![p.clone()]))
            .collect::<Result<Vec<_>>>()?;
        Submodule::new(ring, 1, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[ModuleVector] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn groebner(&self) -> GroebnerBasis {
        groebner(self, ModuleOrder::POT_DEGREVLEX, false)
    }

    pub fn contains(&self, v: &ModuleVector) -> Result<bool> {
        is_member(v, self)
    }
}

/// A reduced Gröbner basis, optionally with the transform `P` expressing each
/// element over the input generators: `elements[i] = sum_j P[i][j] * inputs[j]`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    arity: usize,
    order: ModuleOrder,
    elements: Vec<ModuleVector>,
    transform: Option<Vec<Vec<Polynomial>>>,
    raw: Vec<MVec>,
}

/// `v = sum_i quotients[i] * basis[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: ModuleVector,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn elements(&self) -> &[ModuleVector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn transform(&self) -> Option<&[Vec<Polynomial>]> {
        self.transform.as_deref()
    }

    /// For ideals: true iff the basis contains a nonzero constant.
    pub fn is_unit_ideal(&self) -> bool {
        self.arity == 1 && self.elements.iter().any(|e| e.components()[0].is_nonzero_constant())
    }

    pub fn divide(&self, v: &ModuleVector) -> Result<DivisionResult> {
        if v.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: v.arity(),
            });
        }
        if v.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let (q, r) = buchberger::divide_with_quotients(v.to_mvec(&self.order), &self.raw, &self.order);
        Ok(DivisionResult {
            quotients: q
                .into_iter()
                .map(|terms| Polynomial::from_terms(&self.ring, terms))
                .collect(),
            remainder: ModuleVector::from_mvec(&self.ring, self.arity, &r),
        })
    }

    pub fn reduces_to_zero(&self, v: &ModuleVector) -> Result<bool> {
        Ok(self.divide(v)?.remainder.is_zero())
    }

    /// Every S-vector of a pair of elements with equal leading position
    /// reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let elems: Vec<Element> = self
            .raw
            .iter()
            .map(|v| Element {
                vec: v.clone(),
                rep: None,
            })
            .collect();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let (li, lj) = (elems[i].vec.lead().unwrap(), elems[j].vec.lead().unwrap());
                if li.pos != lj.pos {
                    continue;
                }
                let lcm = li.mono.lcm(&lj.mono);
                let (s, _) = buchberger::s_vector(&elems[i], &elems[j], &lcm, &self.order);
                if !buchberger::reduce(s, None, &elems, &self.order).vec.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of `gens` under `order`.
pub fn groebner(gens: &Submodule, order: ModuleOrder, track: bool) -> GroebnerBasis {
    groebner_of(&gens.ring, gens.arity, &gens.generators, order, track)
}

/// Like [`groebner`], for an explicit list of vectors that may contain zeros;
/// the transform columns follow the list indices.
pub fn groebner_of(ring: &Ring, arity: usize, gens: &[ModuleVector], order: ModuleOrder, track: bool) -> GroebnerBasis {
    let inputs: Vec<MVec> = gens.iter().map(|g| g.to_mvec(&order)).collect();
    let elems = buchberger::groebner_basis(&inputs, ring.nvars(), &order, track);
    let elements = elems
        .iter()
        .map(|e| ModuleVector::from_mvec(ring, arity, &e.vec))
        .collect();
    let transform = track.then(|| {
        elems
            .iter()
            .map(|e| e.rep.as_ref().expect("tracked").to_components(ring, gens.len()))
            .collect()
    });
    GroebnerBasis {
        ring: ring.clone(),
        arity,
        order,
        elements,
        transform,
        raw: elems.into_iter().map(|e| e.vec).collect(),
    }
}

pub fn divide(v: &ModuleVector, basis: &GroebnerBasis) -> Result<DivisionResult> {
    basis.divide(v)
}

pub fn is_member(v: &ModuleVector, m: &Submodule) -> Result<bool> {
    if v.arity() != m.arity {
        return Err(Error::ArityMismatch {
            expected: m.arity,
            found: v.arity(),
        });
    }
    m.groebner().reduces_to_zero(v)
}

/// True if every generator of `b` lies in `a`.
pub fn contains_module(a: &Submodule, b: &Submodule) -> Result<bool> {
    if a.arity != b.arity {
        return Err(Error::ArityMismatch {
            expected: a.arity,
            found: b.arity,
        });
    }
    let gb = a.groebner();
    for g in &b.generators {
        if !gb.reduces_to_zero(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn module_equal(a: &Submodule, b: &Submodule) -> Result<bool> {
    Ok(contains_module(a, b)? && contains_module(b, a)?)
}

/// Generators of the relations `u` with `sum_i u_i * gens[i] = 0`.
///
/// Computed from a Gröbner basis of the tagged vectors `(gens[i], e_i)` under
/// position over term, harvesting the elements whose original block vanishes.
pub fn syzygy(ring: &Ring, arity: usize, gens: &[ModuleVector]) -> Result<Submodule> {
    let k = gens.len();
    let mut tagged = Vec::with_capacity(k);
    for (i, g) in gens.iter().enumerate() {
        if g.arity() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: g.arity(),
            });
        }
        let mut comps = g.components().to_vec();
        comps.extend((0..k).map(|j| {
            if i == j {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            }
        }));
        tagged.push(ModuleVector::new(ring, comps)?);
    }
    let gb = groebner_of(ring, arity + k, &tagged, ModuleOrder::POT_DEGREVLEX, false);
    let relations = gb
        .elements
        .into_iter()
        .filter(|e| e.components()[..arity].iter().all(Polynomial::is_zero))
        .map(|e| ModuleVector {
            ring: ring.clone(),
            components: e.components[arity..].to_vec(),
        })
        .collect();
    Submodule::new(ring, k, relations)
}

/// Generators of the relations among `gens`, lifted from the relations of a
/// tracked Gröbner basis of their module: one per input (its division by the
/// basis) and one per S-pair. Not a Gröbner basis of the relation module.
pub fn syzygy_generators(ring: &Ring, arity: usize, gens: &[ModuleVector]) -> Result<Vec<ModuleVector>> {
    for g in gens {
        if g.arity() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: g.arity(),
            });
        }
    }
    let order = ModuleOrder::POT_DEGREVLEX;
    let s = gens.len();
    let gb = groebner_of(ring, arity, gens, order, true);
    let transform = gb.transform.as_ref().expect("tracked");
    let n = gb.raw.len();
    let elems: Vec<Element> = gb
        .raw
        .iter()
        .enumerate()
        .map(|(k, v)| Element {
            vec: v.clone(),
            rep: Some(MVec::unit(k, ring.nvars())),
        })
        .collect();
    // c * G = 0 over the basis, pulled back through the transform
    let pull_back = |c: &MVec, mut row: Vec<Polynomial>| {
        for (k, ck) in c.to_components(ring, n).iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (entry, t) in row.iter_mut().zip(&transform[k]) {
                if !t.is_zero() {
                    *entry = &*entry + &(ck * t);
                }
            }
        }
        ModuleVector {
            ring: ring.clone(),
            components: row,
        }
    };
    let mut rows: Vec<ModuleVector> = Vec::new();
    let mut push = |v: ModuleVector| {
        if !v.is_zero() && !rows.contains(&v) {
            rows.push(v);
        }
    };
    for (i, g) in gens.iter().enumerate() {
        let red = buchberger::reduce(g.to_mvec(&order), Some(MVec { terms: Vec::new() }), &elems, &order);
        debug_assert!(red.vec.is_zero());
        let mut unit = vec![Polynomial::zero(ring); s];
        unit[i] = Polynomial::one(ring);
        push(pull_back(red.rep.as_ref().expect("tracked"), unit));
    }
    for a in 0..n {
        for b in a + 1..n {
            let (la, lb) = (
                elems[a].vec.lead().expect("nonzero"),
                elems[b].vec.lead().expect("nonzero"),
            );
            if la.pos != lb.pos {
                continue;
            }
            let lcm = la.mono.lcm(&lb.mono);
            let (sv, rep) = buchberger::s_vector(&elems[a], &elems[b], &lcm, &order);
            let red = buchberger::reduce(sv, rep, &elems, &order);
            debug_assert!(red.vec.is_zero());
            push(pull_back(
                red.rep.as_ref().expect("tracked"),
                vec![Polynomial::zero(ring); s],
            ));
        }
    }
    Ok(rows)
}

/// Intersection of two submodules by eliminating an auxiliary variable `t`
/// from `t * M1 + (1 - t) * M2`.
pub fn intersect_pair(a: &Submodule, b: &Submodule) -> Result<Submodule> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    if a.arity != b.arity {
        return Err(Error::ArityMismatch {
            expected: a.arity,
            found: b.arity,
        });
    }
    if a.is_zero() || b.is_zero() {
        return Submodule::new(&a.ring, a.arity, Vec::new());
    }
    let ext = a.ring.with_leading_aux(1);
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let lift = |v: &ModuleVector, f: &Polynomial| ModuleVector {
        ring: ext.clone(),
        components: v.components.iter().map(|c| &c.embed_front(&ext) * f).collect(),
    };
    let gens: Vec<ModuleVector> = a
        .generators
        .iter()
        .map(|v| lift(v, &t))
        .chain(b.generators.iter().map(|v| lift(v, &one_minus_t)))
        .collect();
    let gb = groebner_of(&ext, a.arity, &gens, ModuleOrder::elimination(1), false);
    let out = gb
        .elements
        .iter()
        .filter_map(|e| {
            let comps = e
                .components
                .iter()
                .map(|c| c.strip_front(&a.ring))
                .collect::<Option<Vec<_>>>()?;
            Some(ModuleVector {
                ring: a.ring.clone(),
                components: comps,
            })
        })
        .collect();
    Submodule::new(&a.ring, a.arity, out)
}

/// Intersection of all `modules`, folded left to right.
pub fn intersect(modules: &[Submodule]) -> Result<Submodule> {
    let (first, rest) = modules.split_first().ok_or(Error::ZeroIdeal)?;
    rest.iter().try_fold(first.clone(), |acc, m| intersect_pair(&acc, m))
}

/// Monic generator of `<f> ∩ <g>`; zero if either input is zero.
pub fn lcm(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(f.ring()));
    }
    if f.is_constant() {
        return g.monic();
    }
    if g.is_constant() {
        return f.monic();
    }
    let ring = f.ring();
    let i = intersect_pair(
        &Submodule::ideal(ring, std::slice::from_ref(f))?,
        &Submodule::ideal(ring, std::slice::from_ref(g))?,
    )?;
    // the intersection of two principal ideals is principal; its reduced
    // basis is a single monic polynomial
    let gens = i.generators();
    debug_assert_eq!(gens.len(), 1);
    gens[0].components()[0].monic()
}

/// Monic greatest common divisor, computed as `f * g / lcm(f, g)`.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::ZeroPolynomial),
        (true, false) => return g.monic(),
        (false, true) => return f.monic(),
        _ => {}
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Polynomial::one(f.ring()));
    }
    let l = lcm(f, g)?;
    (f * g).exact_divide(&l)?.monic()
}

/// Compares leading terms under the default position-over-term order; the
/// zero vector is smallest.
pub fn compare_leading(a: &ModuleVector, b: &ModuleVector) -> std::cmp::Ordering {
    let order = ModuleOrder::POT_DEGREVLEX;
    let (va, vb) = (a.to_mvec(&order), b.to_mvec(&order));
    match (va.lead(), vb.lead()) {
        (None, None) => std::cmp::Ordering::Equal,
        (None, Some(_)) => std::cmp::Ordering::Less,
        (Some(_), None) => std::cmp::Ordering::Greater,
        (Some(x), Some(y)) => order.compare(x.pos, &x.mono, y.pos, &y.mono),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::standard(3)
    }

    fn v(parts: &[&str]) -> ModuleVector {
        let ring = ring();
        ModuleVector::new(
            &ring,
            parts.iter().map(|s| Polynomial::parse(&ring, s).unwrap()).collect(),
        )
        .unwrap()
    }

    fn module(rows: &[&[&str]]) -> Submodule {
        Submodule::new(&ring(), rows[0].len(), rows.iter().map(|r| v(r)).collect()).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(&ring(), s).unwrap()
    }

    #[test]
    fn redundant_generator_removed() {
        let gb = module(&[&["1", "0"], &["0", "1"], &["1", "1"]]).groebner();
        assert_eq!(gb.elements(), &[v(&["0", "1"]), v(&["1", "0"])]);
        let ideal = Submodule::ideal(&ring(), &[p("z1"), p("z2")]).unwrap().groebner();
        assert_eq!(ideal.len(), 2);
        assert!(ideal.elements().contains(&v(&["z1"])) && ideal.elements().contains(&v(&["z2"])));
    }

    #[test]
    fn tracked_transform_is_exact() {
        let gens = vec![
            v(&["z1^2*z2 + z1^2", "z1", "0"]),
            v(&["z1*z3^2 - z1*z3", "0", "z2*z3 - z2 + z3 - 1"]),
        ];
        let gb = groebner_of(&ring(), 3, &gens, ModuleOrder::POT_DEGREVLEX, true);
        assert!(gb.satisfies_buchberger_criterion());
        for (row, g) in gb.transform().unwrap().iter().zip(gb.elements()) {
            let mut acc = ModuleVector::zero(&ring(), 3);
            for (c, x) in row.iter().zip(&gens) {
                acc = acc.add(&x.scale(c)).unwrap();
            }
            assert_eq!(&acc, g);
        }
    }

    #[test]
    fn division() {
        let gb = module(&[&["1", "0"], &["0", "1"]]).groebner();
        let zero = gb.divide(&ModuleVector::zero(&ring(), 2)).unwrap();
        assert!(zero.remainder.is_zero() && zero.quotients.iter().all(Polynomial::is_zero));
        let d = gb.divide(&v(&["1", "1"])).unwrap();
        assert!(d.remainder.is_zero());
        assert!(d.quotients.iter().all(Polynomial::is_one));
    }

    #[test]
    fn membership() {
        assert!(is_member(&v(&["1", "0"]), &module(&[&["1", "1"], &["0", "1"]])).unwrap());
        assert!(!is_member(&v(&["z1"]), &module(&[&["z2"]])).unwrap());
        assert!(module_equal(
            &module(&[&["1", "0"], &["0", "1"]]),
            &module(&[&["1", "1"], &["0", "1"]])
        )
        .unwrap());
        assert!(!module_equal(&module(&[&["z1", "0"]]), &module(&[&["1", "0"]])).unwrap());
    }

    #[test]
    fn syzygies() {
        let free = syzygy(&ring(), 2, &[v(&["1", "0"]), v(&["0", "1"])]).unwrap();
        assert!(free.is_zero());
        let gens = [
            v(&["z2 + 1", "z2 + 1", "z1 - 1"]),
            v(&["z1*z2 + z1 - z2 - 1", "0", "z3"]),
            v(&["z1^2 - 2*z1 - z3 + 1", "-z3", "0"]),
        ];
        let syz = syzygy(&ring(), 3, &gens).unwrap();
        assert!(module_equal(&syz, &module(&[&["-z3", "z1 - 1", "-z2 - 1"]])).unwrap());
        let lifted = syzygy_generators(&ring(), 3, &gens).unwrap();
        assert!(module_equal(&Submodule::new(&ring(), 3, lifted).unwrap(), &syz).unwrap());
    }

    #[test]
    fn intersections() {
        let a = Submodule::ideal(&ring(), &[p("z1")]).unwrap();
        let b = Submodule::ideal(&ring(), &[p("z2")]).unwrap();
        let ab = Submodule::ideal(&ring(), &[p("z1*z2")]).unwrap();
        assert!(module_equal(&intersect(&[a.clone(), b]).unwrap(), &ab).unwrap());
        assert!(module_equal(&intersect(&[a.clone(), a.clone()]).unwrap(), &a).unwrap());
        assert!(module_equal(&intersect(&[a, ab.clone()]).unwrap(), &ab).unwrap());
    }

    #[test]
    fn gcd_and_lcm() {
        let f = p("z1^2") * p("z2 + 1").pow(2) * p("z3 - 1");
        let g = p("z1") * p("z2 + 1") * p("z3 - 1");
        let d = gcd(&f, &g).unwrap();
        assert_eq!(d, g);
        let (cf, cg) = (f.exact_divide(&d).unwrap(), g.exact_divide(&d).unwrap());
        assert!(gcd(&cf, &cg).unwrap().is_one());
        assert_eq!(gcd(&p("-2*z1 + 2"), &p("-2*z1 + 2")).unwrap(), p("z1 - 1"));
        assert_eq!(lcm(&p("z1"), &p("z2")).unwrap(), p("z1*z2"));
    }

    #[test]
    fn leading_comparison() {
        assert_eq!(
            compare_leading(&v(&["1", "0"]), &v(&["0", "z1^5"])),
            std::cmp::Ordering::Greater
        );
        assert_eq!(
            compare_leading(&v(&["0", "z1"]), &v(&["0", "z2^2"])),
            std::cmp::Ordering::Less
        );
        assert_eq!(
            compare_leading(&v(&["0", "0"]), &v(&["0", "1"])),
            std::cmp::Ordering::Less
        );
    }
}
