use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::degrevlex;
use super::{Monomial, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

/// A polynomial in canonical form: terms strictly descending in degrevlex,
/// no zero coefficients. The zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

fn cmp_mono(a: &Monomial, b: &Monomial) -> Ordering {
    degrevlex(a.exponents(), b.exponents())
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push(Term {
                coeff: c,
                monomial: Monomial::one(ring.nvars()),
            });
        }
        p
    }

    pub fn from_int(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(c.into()))
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                coeff: Rational::one(),
                monomial: Monomial::var(ring.nvars(), index),
            }],
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unordered) terms.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Rational, Monomial)>) -> Self {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, monomial)| {
                assert_eq!(monomial.nvars(), ring.nvars(), "monomial arity");
                Term { coeff, monomial }
            })
            .collect();
        raw.sort_by(|a, b| cmp_mono(&b.monomial, &a.monomial));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.monomial == t.monomial => last.coeff += t.coeff,
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant, including zero.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn is_nonzero_constant(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one() && self.terms[0].coeff.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match cmp_mono(&a[i].monomial, &b[j].monomial) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let mut t = b[j].clone();
                    if negate {
                        t.coeff = -t.coeff;
                    }
                    out.push(t);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].coeff - &b[j].coeff
                    } else {
                        &a[i].coeff + &b[j].coeff
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            monomial: a[i].monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| {
            let mut t = t.clone();
            if negate {
                t.coeff = -t.coeff;
            }
            t
        }));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &small.terms {
            acc = acc.merge(&large.mul_term(&t.coeff, &t.monomial), false);
        }
        acc
    }

    /// `c * m * self`; order is preserved since degrevlex is multiplicative.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    monomial: t.monomial.mul(m),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// Division with remainder by a single polynomial under degrevlex.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_ring(divisor)?;
        let lead = divisor.terms.first().ok_or(Error::DivideByZero)?;
        let mut quotient = Vec::new();
        let mut remainder = Vec::new();
        let mut p = self.clone();
        while let Some(t) = p.terms.first() {
            match t.monomial.div(&lead.monomial) {
                Some(m) => {
                    let c = &t.coeff / &lead.coeff;
                    p = p.merge(&divisor.mul_term(&c, &m), true);
                    quotient.push(Term { coeff: c, monomial: m });
                }
                None => remainder.push(p.terms.remove(0)),
            }
        }
        Ok((
            Polynomial {
                ring: self.ring.clone(),
                terms: quotient,
            },
            Polynomial {
                ring: self.ring.clone(),
                terms: remainder,
            },
        ))
    }

    /// Returns `h` with `divisor * h == self`, or `NotDivisible`.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_ring(divisor)?;
        let lead = divisor.terms.first().ok_or(Error::DivideByZero)?;
        if divisor.is_constant() {
            return Ok(self.scale(&lead.coeff.recip()));
        }
        let mut quotient = Vec::new();
        let mut p = self.clone();
        while let Some(t) = p.terms.first() {
            // the leading term of a multiple of `divisor` is always divisible
            let m = t.monomial.div(&lead.monomial).ok_or(Error::NotDivisible)?;
            let c = &t.coeff / &lead.coeff;
            p = p.merge(&divisor.mul_term(&c, &m), true);
            quotient.push(Term { coeff: c, monomial: m });
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: quotient,
        })
    }

    pub fn monic(&self) -> Result<Polynomial> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lc.recip()))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars(),
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (x, &e) in point.iter().zip(t.monomial.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Re-expresses `self` in `target`, a ring whose variable list ends with
    /// this ring's variables (leading auxiliary variables get exponent zero).
    pub(crate) fn embed_front(&self, target: &Ring) -> Polynomial {
        let extra = target.nvars() - self.ring.nvars();
        Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    monomial: t.monomial.extend_front(extra),
                })
                .collect(),
        }
    }

    /// Inverse of [`embed_front`]; `None` if an auxiliary variable occurs.
    pub(crate) fn strip_front(&self, target: &Ring) -> Option<Polynomial> {
        let extra = self.ring.nvars() - target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Some(Term {
                    coeff: t.coeff.clone(),
                    monomial: t.monomial.strip_front(extra)?,
                })
            })
            .collect::<Option<Vec<_>>>()?;
        // dropping zero exponents preserves degrevlex order
        Some(Polynomial {
            ring: target.clone(),
            terms,
        })
    }

    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| cmp_mono(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = t.coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            if !c.is_one() || t.monomial.is_one() {
                factors.push(c.to_string());
            }
            for (name, &e) in self.ring.vars().iter().zip(t.monomial.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator forms panic on ring mismatch; use the `try_*` methods to handle it.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(&Ring::standard(3), s).unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(p("z1 + 1") + p("-z1"), p("1"));
        assert_eq!(p("z1*z2 - 3") + p("0"), p("z1*z2 - 3"));
        assert_eq!(p("z2 + 1") + p("z2*z3 - z2 + z3 - 1"), p("z2*z3 + z3"));
    }

    #[test]
    fn multiplication() {
        assert_eq!(p("z1 + 1") * p("z1 - 1"), p("z1^2 - 1"));
        assert_eq!(p("z2 + 1") * p("z3 - 1") * p("z1"), p("z1*z2*z3 - z1*z2 + z1*z3 - z1"));
        assert_eq!(p("z1^2*z3 - 2/3*z2") * p("1"), p("z1^2*z3 - 2/3*z2"));
    }

    #[test]
    fn exact_division() {
        let num = p("z1^2") * p("z2 + 1").pow(2) * p("z3 - 1");
        assert_eq!(
            num.exact_divide(&p("z1*z3 - z1")).unwrap(),
            p("z1") * p("z2 + 1").pow(2)
        );
        assert_eq!(num.exact_divide(&p("1")).unwrap(), num);
        assert_eq!(p("z1 + 1").exact_divide(&p("z2")), Err(Error::NotDivisible));
        assert_eq!(p("z1").exact_divide(&p("0")), Err(Error::DivideByZero));
    }

    #[test]
    fn div_rem_recombines() {
        let a = p("z1^3*z2 - z2*z3 + 4");
        let b = p("z1*z2 + z3");
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q * b + r, a);
    }

    #[test]
    fn monic_normalization() {
        assert_eq!(p("2*z1 - 2").monic().unwrap(), p("z1 - 1"));
        assert_eq!(p("z3 - 1").monic().unwrap(), p("z3 - 1"));
        assert_eq!(p("-z2 - 1").monic().unwrap(), p("z2 + 1"));
        assert_eq!(p("0").monic(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn evaluation() {
        let pt = |v: [i64; 3]| v.map(|x| Rational::from_integer(x.into()));
        assert_eq!(
            p("z1*z3 - z1").evaluate(&pt([1, 0, 2])).unwrap(),
            Rational::from_integer(1.into())
        );
        assert!(p("0").evaluate(&pt([5, -1, 7])).unwrap().is_zero());
        assert!(p("z1").evaluate(&pt([1, 2, 3])[..2]).is_err());
    }

    #[test]
    fn leading_term_is_degrevlex_greatest() {
        let f = p("z3^2 + z1*z2 + z2^2 + z1");
        assert_eq!(f.leading_term().unwrap().monomial, Monomial::new(&[1, 1, 0]));
        assert_eq!(f.total_degree(), Some(2));
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn display_round_trips() {
        for s in ["2*z1^2*z2*z3 - z1^2*z2 + z1^2*z3 - z1^2", "-1/2*z3 + 7", "0", "-z1"] {
            let f = p(s);
            assert_eq!(p(&f.to_string()), f);
        }
    }

    #[test]
    fn ring_mismatch() {
        let a = Polynomial::var(&Ring::standard(2), 0);
        let b = Polynomial::var(&Ring::standard(3), 0);
        assert_eq!(a.try_add(&b), Err(Error::RingMismatch));
    }
}
