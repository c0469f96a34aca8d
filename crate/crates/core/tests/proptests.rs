//! Property-based invariants over randomly generated inputs.

use proptest::prelude::*;

use uefact::grading::{positivity, Sign};
use uefact::linalg::QMatrix;
use uefact::uea::{pbw_normal_form, NCPoly};
use uefact::{k_invariant, rat, sl2, Scalar};

fn small_word() -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0u8..3, 0..5)
}

fn small_poly() -> impl Strategy<Value = NCPoly> {
    proptest::collection::vec((small_word(), -4i64..=4), 1..5).prop_map(|terms| {
        let mut p = NCPoly::zero(3);
        for (w, c) in terms {
            p.add_term(w, rat(c));
        }
        p
    })
}

fn small_matrix(n: usize) -> impl Strategy<Value = QMatrix> {
    proptest::collection::vec(-4i64..=4, n * n).prop_map(move |cells| {
        let mut m = QMatrix::zero(n, n);
        for (k, v) in cells.into_iter().enumerate() {
            m[(k / n, k % n)] = rat(v);
        }
        m
    })
}

proptest! {
    #[test]
    fn free_multiplication_is_associative(p in small_poly(), q in small_poly(), r in small_poly()) {
        let a = p.mul(&q).unwrap().mul(&r).unwrap();
        let b = p.mul(&q.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn free_multiplication_distributes(p in small_poly(), q in small_poly(), r in small_poly()) {
        let lhs = p.add(&q).unwrap().mul(&r).unwrap();
        let rhs = p.mul(&r).unwrap().add(&q.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_is_linear(p in small_poly(), q in small_poly(), c in -4i64..=4) {
        let l = sl2();
        let combined = p.scale(&rat(c)).add(&q).unwrap();
        let lhs = pbw_normal_form(&l, &combined).unwrap();
        let rhs = pbw_normal_form(&l, &p)
            .unwrap()
            .scale(&rat(c))
            .add(&pbw_normal_form(&l, &q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_is_idempotent(p in small_poly()) {
        let l = sl2();
        let once = pbw_normal_form(&l, &p).unwrap();
        let twice = pbw_normal_form(&l, &once.to_ncpoly()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn rref_solutions_really_solve(m in small_matrix(3), b in proptest::collection::vec(-4i64..=4, 3)) {
        let rhs: Vec<Scalar> = b.into_iter().map(rat).collect();
        if let Some(x) = m.solve(&rhs) {
            prop_assert_eq!(m.mul_vec(&x), rhs);
        }
    }

    #[test]
    fn inverses_invert(m in small_matrix(3)) {
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv), QMatrix::identity(3));
            prop_assert_eq!(inv.mul(&m), QMatrix::identity(3));
        }
    }

    #[test]
    fn positivity_is_odd(v in proptest::collection::vec(-5i64..=5, 1..4)) {
        let neg: Vec<i64> = v.iter().map(|c| -c).collect();
        let expected = match positivity(&v) {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
        };
        prop_assert_eq!(positivity(&neg), expected);
    }

    #[test]
    fn k_invariant_is_projective_and_symmetric(a in 1i64..=6, b in 1i64..=6, c in 1i64..=4) {
        prop_assume!(a != b);
        let cls = k_invariant(&rat(a), &rat(b)).unwrap();
        prop_assert_eq!(&cls, &k_invariant(&rat(b), &rat(a)).unwrap());
        prop_assert_eq!(&cls, &k_invariant(&rat(a * c), &rat(b * c)).unwrap());
        prop_assert_eq!(&cls, &k_invariant(&(rat(a) / rat(b)), &rat(1)).unwrap());
    }

    #[test]
    fn scalar_square_roots_round_trip(p in -20i64..=20, q in 1i64..=20) {
        let x = uefact::ratio(p, q);
        let sq = &x * &x;
        let root = uefact::scalar::rational_sqrt(&sq).unwrap();
        prop_assert_eq!(&root * &root, sq);
    }
}

proptest! {
    #[test]
    fn a_isomorphism_is_an_equivalence_relation(
        r in proptest::option::of(-5i64..=5),
        s in proptest::option::of(-5i64..=5),
        t in proptest::option::of(-5i64..=5),
    ) {
        use uefact::algebras::RClass;
        use uefact::a_isomorphic;
        let lift = |v: Option<i64>| match v {
            Some(n) => RClass::Finite(rat(n)),
            None => RClass::Infinity,
        };
        let (r, s, t) = (lift(r), lift(s), lift(t));
        prop_assert!(a_isomorphic(&r, &r));
        prop_assert_eq!(a_isomorphic(&r, &s), a_isomorphic(&s, &r));
        if a_isomorphic(&r, &s) && a_isomorphic(&s, &t) {
            prop_assert!(a_isomorphic(&r, &t));
        }
    }
}

proptest! {
    #[test]
    fn algebra_parser_never_panics(text in "[a-z0-9 \\[\\],=()+\\-/\n^#]{0,160}") {
        let _ = uefact::parse_algebra(&text);
    }

    #[test]
    fn expression_parser_never_panics(text in "[ehf0-9 */^+\\-]{0,60}") {
        let l = sl2();
        let _ = uefact::parse_expression(&text, &l);
    }
}
