use minorprime::groebner::{self, ModuleOrder, ModuleVector, Submodule};
use minorprime::{Monomial, PolyMatrix, Polynomial, Rational, Ring};
use proptest::prelude::*;

fn ring() -> Ring {
    Ring::standard(3)
}

fn poly(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-4i64..=4, prop::array::uniform3(0..=max_exp)), 0..=max_terms).prop_map(|terms| {
        Polynomial::from_terms(
            &ring(),
            terms
                .into_iter()
                .map(|(c, e)| (Rational::from_integer(c.into()), Monomial::new(&e))),
        )
    })
}

fn vector(arity: usize) -> impl Strategy<Value = ModuleVector> {
    prop::collection::vec(poly(2, 2), arity).prop_map(|c| ModuleVector::new(&ring(), c).unwrap())
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-9i64..=9).prop_map(|x| Rational::from_integer(x.into())), 3)
}

fn combine(coeffs: &[Polynomial], gens: &[ModuleVector], arity: usize) -> ModuleVector {
    coeffs
        .iter()
        .zip(gens)
        .fold(ModuleVector::zero(&ring(), arity), |acc, (c, g)| {
            acc.add(&g.scale(c)).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(4, 3), b in poly(4, 3), c in poly(4, 3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_divide_inverts_multiplication(a in poly(4, 3), b in poly(4, 3)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(4, 3), b in poly(4, 3), x in point()) {
        let (ea, eb) = (a.evaluate(&x).unwrap(), b.evaluate(&x).unwrap());
        prop_assert_eq!((&a * &b).evaluate(&x).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).evaluate(&x).unwrap(), ea + eb);
    }

    #[test]
    fn text_round_trip(a in poly(5, 3)) {
        prop_assert_eq!(Polynomial::parse(&ring(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn division_recombines(gens in prop::collection::vec(vector(2), 1..=3), v in vector(2)) {
        let gb = groebner::groebner_of(&ring(), 2, &gens, ModuleOrder::POT_DEGREVLEX, false);
        let div = gb.divide(&v).unwrap();
        let back = combine(&div.quotients, gb.elements(), 2).add(&div.remainder).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn buchberger_criterion_and_uniqueness(gens in prop::collection::vec(vector(2), 1..=3)) {
        let gb = groebner::groebner_of(&ring(), 2, &gens, ModuleOrder::POT_DEGREVLEX, true);
        prop_assert!(gb.satisfies_buchberger_criterion());
        let again = groebner::groebner_of(&ring(), 2, gb.elements(), ModuleOrder::POT_DEGREVLEX, false);
        prop_assert_eq!(again.elements(), gb.elements());
        for (row, g) in gb.transform().unwrap().iter().zip(gb.elements()) {
            prop_assert_eq!(&combine(row, &gens, 2), g);
        }
    }

    #[test]
    fn syzygies_annihilate(gens in prop::collection::vec(vector(2), 1..=3)) {
        let arity = gens.len();
        for u in groebner::syzygy(&ring(), 2, &gens).unwrap().generators() {
            prop_assert_eq!(u.arity(), arity);
            prop_assert!(combine(u.components(), &gens, 2).is_zero());
        }
        for u in groebner::syzygy_generators(&ring(), 2, &gens).unwrap() {
            prop_assert!(combine(u.components(), &gens, 2).is_zero());
        }
    }

    #[test]
    fn intersection_lies_in_both(a in prop::collection::vec(vector(1), 1..=2), b in prop::collection::vec(vector(1), 1..=2)) {
        let (ma, mb) = (Submodule::new(&ring(), 1, a).unwrap(), Submodule::new(&ring(), 1, b).unwrap());
        prop_assume!(!ma.is_zero() && !mb.is_zero());
        let meet = groebner::intersect(&[ma.clone(), mb.clone()]).unwrap();
        for g in meet.generators() {
            prop_assert!(groebner::is_member(g, &ma).unwrap());
            prop_assert!(groebner::is_member(g, &mb).unwrap());
        }
    }

    #[test]
    fn right_quotient_round_trip(entries in prop::collection::vec(poly(2, 1), 6)) {
        let a11 = PolyMatrix::from_fn(&ring(), 2, 2, |i, j| entries[2 * i + j].clone());
        let x = PolyMatrix::from_fn(&ring(), 1, 2, |_, j| entries[4 + j].clone());
        prop_assume!(!a11.determinant().is_zero());
        let a21 = x.mul(&a11).unwrap();
        let q = PolyMatrix::right_quotient(&a21, &a11).unwrap();
        prop_assert_eq!(q.mul(&a11).unwrap(), a21);
    }
}
