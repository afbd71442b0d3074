//! Property tests for the exact polynomial ring and its transforms.

use num::{BigInt, BigRational};
use proptest::prelude::*;
use schubert::polynomial::{factorial, Alphabet, ExponentVector, Polynomial};

fn arb_coeff() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn arb_monomial() -> impl Strategy<Value = ExponentVector> {
    proptest::collection::vec(0u32..4, 0..4).prop_map(ExponentVector::new)
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((arb_monomial(), arb_coeff()), 0..6)
        .prop_map(|terms| Polynomial::from_terms(Alphabet::X, terms))
}

proptest! {
    #[test]
    fn addition_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn addition_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn subtraction_cancels(a in arb_poly()) {
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_parse_round_trip(a in arb_poly()) {
        let text = a.to_string();
        let parsed: Polynomial = text.parse().unwrap();
        prop_assert_eq!(&parsed, &a);
        prop_assert_eq!(parsed.to_string(), text);
    }

    #[test]
    fn inner_product_is_bilinear(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let lhs = a.inner_product(&(&b + &c));
        let rhs = a.inner_product(&b) + a.inner_product(&c);
        prop_assert_eq!(lhs, rhs);
        let lhs = (&a + &b).inner_product(&c);
        let rhs = a.inner_product(&c) + b.inner_product(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inner_product_is_symmetric(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.inner_product(&b), b.inner_product(&a));
    }

    #[test]
    fn projection_composes(a in arb_poly(), n in 0usize..5, m in 0usize..5) {
        prop_assert_eq!(a.project(n).project(m), a.project(n.min(m)));
    }

    #[test]
    fn bar_transform_is_linear(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(
            (&a + &b).bar_transform(),
            &a.bar_transform() + &b.bar_transform()
        );
    }

    #[test]
    fn bar_transform_preserves_degree_and_inverts(a in arb_poly()) {
        let barred = a.bar_transform();
        prop_assert_eq!(barred.degree(), a.degree());
        let unbarred = Polynomial::from_terms(
            Alphabet::X,
            barred.terms().map(|(ev, c)| {
                let ratio = BigRational::new(
                    ev.factorial(),
                    factorial(ev.total_degree() as usize),
                );
                (ev.clone(), c * ratio)
            }),
        );
        prop_assert_eq!(unbarred, a);
    }
}
