use proptest::prelude::*;

use subdivision_algebra::algebra::{apply_perm, Permutation};
use subdivision_algebra::poly::PairIndex;
use subdivision_algebra::rewrite::{reduce_pathless, Strategy as Game};
use subdivision_algebra::ring::{rat, Rational};
use subdivision_algebra::series::{e_image, q_to_r_exponent, r_to_q_exponent};
use subdivision_algebra::{parse_poly, ParamCoeff, Params, TPoly, XMonomial, XPoly};

fn coeff() -> impl Strategy<Value = ParamCoeff> {
    prop::collection::vec(((0u32..3, 0u32..3), -6i64..=6, 1i64..=3), 0..4)
        .prop_map(|terms| ParamCoeff::from_terms(terms.into_iter().map(|(e, num, den)| (e, rat(num, den)))))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-7i64..=7, 1i64..=4).prop_map(|(a, b)| rat(a, b))
}

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = XMonomial> {
    let pairs: Vec<PairIndex> = PairIndex::all(n).collect();
    prop::collection::vec(0..=max_exp, pairs.len())
        .prop_map(move |es| XMonomial::from_exponents(n, pairs.iter().copied().zip(es)).unwrap())
}

fn xpoly(n: usize) -> impl Strategy<Value = XPoly> {
    xpoly_exp(n, 2)
}

fn xpoly_exp(n: usize, max_exp: u32) -> impl Strategy<Value = XPoly> {
    prop::collection::vec((monomial(n, max_exp), coeff()), 0..4).prop_map(move |terms| {
        let mut p = XPoly::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    })
}

fn tpoly(n: usize) -> impl Strategy<Value = TPoly> {
    prop::collection::vec((prop::collection::vec(0u32..2, n), coeff()), 0..3).prop_map(move |terms| {
        let mut p = TPoly::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn coefficient_ring_axioms(a in coeff(), b in coeff(), c in coeff()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &ParamCoeff::one(), a.clone());
    }

    #[test]
    fn specialization_is_a_homomorphism(a in coeff(), b in coeff(), b0 in rational(), a0 in rational()) {
        let s = |c: &ParamCoeff| c.specialize(&b0, &a0);
        prop_assert_eq!(s(&(&a + &b)), s(&a) + s(&b));
        prop_assert_eq!(s(&(&a * &b)), s(&a) * s(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn term_order_is_a_monomial_order(a in monomial(4, 3), b in monomial(4, 3), u in monomial(4, 2)) {
        prop_assert!(a >= XMonomial::one(4));
        prop_assert_eq!(a.cmp(&b), a.mul(&u).cmp(&b.mul(&u)));
        prop_assert_eq!(a.order_cmp(&b).unwrap(), b.order_cmp(&a).unwrap().reverse());
    }

    #[test]
    fn weights_are_additive(a in monomial(5, 3), b in monomial(5, 3)) {
        let ab = a.mul(&b);
        prop_assert_eq!(ab.weight_pathless(), a.weight_pathless() + b.weight_pathless());
        prop_assert_eq!(ab.weight_alt(), a.weight_alt() + b.weight_alt());
        prop_assert_eq!(ab.degree(), a.degree() + b.degree());
    }

    #[test]
    fn polynomial_ring_axioms(p in xpoly(3), q in xpoly(3), r in xpoly(3)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn d_is_a_homomorphism(p in xpoly(4), q in xpoly(4)) {
        prop_assert_eq!((&p * &q).d_image(), &p.d_image() * &q.d_image());
        prop_assert_eq!((&p + &q).d_image(), &p.d_image() + &q.d_image());
    }

    #[test]
    fn text_round_trip(p in xpoly(4)) {
        let text = p.to_string();
        prop_assert_eq!(parse_poly(&text, 4).unwrap(), p);
    }

    #[test]
    fn specialization_commutes_with_products(p in xpoly(3), q in xpoly(3), b0 in rational(), a0 in rational()) {
        let params = Params::specialized(b0, a0);
        prop_assert_eq!((&p * &q).apply_params(&params), &p.apply_params(&params) * &q.apply_params(&params));
    }

    #[test]
    fn symmetric_group_action(s in permutation(4), t in permutation(4), p in xpoly(4)) {
        let composed = apply_perm(&s.compose(&t), &p);
        prop_assert_eq!(composed, apply_perm(&s, &apply_perm(&t, &p)));
    }

    #[test]
    fn e_is_multiplicative(p in tpoly(3), q in tpoly(3)) {
        prop_assert_eq!(e_image(&(&p * &q), 2), e_image(&p, 2).mul(&e_image(&q, 2)));
    }

    #[test]
    fn r_coordinates_are_a_bijection(a in prop::collection::vec(-20i32..20, 1..8)) {
        prop_assert_eq!(r_to_q_exponent(&q_to_r_exponent(&a)), a.clone());
        prop_assert_eq!(q_to_r_exponent(&r_to_q_exponent(&a)), a);
    }

    #[test]
    fn reduction_is_deterministic_and_pathless(p in xpoly_exp(4, 1), seed in any::<u64>()) {
        let a = reduce_pathless(&p, &Params::generic(), &Game::Random(seed)).unwrap();
        let b = reduce_pathless(&p, &Params::generic(), &Game::Random(seed)).unwrap();
        prop_assert!(a.result.is_pathless());
        prop_assert_eq!(a.trace, b.trace);
    }
}
