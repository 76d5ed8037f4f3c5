mod common;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use qpencil_core::poly::{factor_poly, poly_gcd, resultant, squarefree_part, IntPolynomial};

use common::has_rational_root;

fn poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1)
        .prop_map(|c| IntPolynomial::from_i64(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn squarefree_part_ignores_squares(a in poly(3, 9), b in poly(4, 9)) {
        let lhs = squarefree_part(&(&(&a * &a) * &b)).unwrap();
        prop_assert_eq!(lhs, squarefree_part(&b).unwrap());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(a in poly(4, 9), b in poly(4, 9), c in poly(2, 3)) {
        // half the cases share the factor c
        for (x, y) in [(a.clone(), b.clone()), (&a * &c, &b * &c)] {
            let r = resultant(&x, &y).unwrap();
            let g = poly_gcd(&x, &y).unwrap();
            prop_assert_eq!(num_traits::Zero::is_zero(&r), g.deg() > 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn factorization_round_trip(a in poly(8, 50)) {
        let f = factor_poly(&a).unwrap();
        prop_assert_eq!(f.expand(), a.to_qpoly());
        for (p, _) in &f.factors {
            prop_assert!(p.leading() > BigInt::from(0));
            let d = p.deg();
            if (2..=3).contains(&d) {
                let c: Vec<i64> = p.coeffs().iter().map(|x| x.to_i64().unwrap()).collect();
                prop_assert!(!has_rational_root(&c), "factor {} has a rational root", p);
            }
        }
    }
}
