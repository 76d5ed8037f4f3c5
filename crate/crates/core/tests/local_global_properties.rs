mod common;

use num_traits::{Signed, Zero};
use proptest::prelude::*;
use qpencil_core::arith::{rat, Rational};
use qpencil_core::form::{diagonalize_q, QuadraticFormQ};
use qpencil_core::global::{is_isometric_q, is_isotropic_q, witt_index_q, with_hyperbolic_plane};
use qpencil_core::local::{hilbert_symbol, is_isotropic_local, local_profile, relevant_places, witt_index_local, Place};

use common::*;

fn nz_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=1000).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| rat(n, d))
}

fn place() -> impl Strategy<Value = Place> {
    prop_oneof![
        Just(Place::Real),
        Just(Place::two()),
        prop::sample::select(vec![3i64, 5, 7, 11, 13, 17, 19, 23, 101, 997]).prop_map(|p| Place::prime(p).unwrap()),
    ]
}

fn diagonal(max_dim: usize, bound: i64) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-bound..=bound).prop_filter("nonzero", |x| *x != 0), 1..=max_dim)
        .prop_map(|v| v.into_iter().map(|x| rat(x, 1)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn hilbert_symbol_symmetric_and_bimultiplicative(a in nz_rational(), a2 in nz_rational(), b in nz_rational(), v in place()) {
        let ab = hilbert_symbol(&a, &b, &v).unwrap();
        prop_assert_eq!(ab, hilbert_symbol(&b, &a, &v).unwrap());
        let lhs = hilbert_symbol(&(&a * &a2), &b, &v).unwrap();
        prop_assert_eq!(lhs, ab * hilbert_symbol(&a2, &b, &v).unwrap());
    }

    #[test]
    fn product_formula(a in nz_rational(), b in nz_rational(), outside in prop::sample::select(vec![1009i64, 1013, 1019, 1021])) {
        let places = relevant_places(&[a.clone(), b.clone()]).unwrap();
        let prod: i8 = places.iter().map(|v| hilbert_symbol(&a, &b, v).unwrap()).product();
        prop_assert_eq!(prod, 1);
        // numerators and denominators are at most 1000
        prop_assert_eq!(hilbert_symbol(&a, &b, &Place::prime(outside).unwrap()).unwrap(), 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn local_isotropy_matches_search(e in prop::collection::vec((-20i64..=20).prop_filter("nonzero", |x| *x != 0), 1..=4)) {
        let entries: Vec<Rational> = e.iter().map(|&x| rat(x, 1)).collect();
        for p in [2, 3, 5, 7] {
            let engine = is_isotropic_local(&local_profile(&entries, &Place::prime(p).unwrap()).unwrap()).unwrap();
            prop_assert_eq!(Some(engine), padic_isotropic(&e, p), "{:?} at {}", e, p);
        }
        let engine = is_isotropic_local(&local_profile(&entries, &Place::Real).unwrap()).unwrap();
        prop_assert_eq!(engine, real_isotropic(&QuadraticFormQ::diagonal(&entries)));
    }

    #[test]
    fn adding_a_hyperbolic_plane_raises_witt_index(e in diagonal(5, 30), v in place()) {
        let h = with_hyperbolic_plane(&e);
        let before = witt_index_local(&local_profile(&e, &v).unwrap()).unwrap();
        let after = witt_index_local(&local_profile(&h, &v).unwrap()).unwrap();
        prop_assert_eq!(after, before + 1);
        prop_assert_eq!(witt_index_q(&h).unwrap(), witt_index_q(&e).unwrap() + 1);
    }

    #[test]
    fn isometry_is_an_equivalence(seed in any::<u64>(), m in 1usize..=4) {
        let mut rng = rng(seed);
        let q = loop {
            let q = random_form(&mut rng, m, 5);
            if !q.det().is_zero() {
                break q;
            }
        };
        let p1 = unimodular(&mut rng, m, 6);
        let p2 = unimodular(&mut rng, m, 6);
        let a = diagonalize_q(&q);
        let b = diagonalize_q(&transform(&q, &p1));
        let c = diagonalize_q(&transform(&q, &p2));
        prop_assert!(is_isometric_q(&a, &a).unwrap());
        prop_assert!(is_isometric_q(&a, &b).unwrap());
        prop_assert!(is_isometric_q(&b, &a).unwrap());
        prop_assert!(is_isometric_q(&b, &c).unwrap());
        let other = diagonalize_q(&loop {
            let o = random_form(&mut rng, m, 5);
            if !o.det().is_zero() {
                break o;
            }
        });
        prop_assert_eq!(is_isometric_q(&a, &other).unwrap(), is_isometric_q(&other, &a).unwrap());
        if is_isometric_q(&a, &other).unwrap() {
            prop_assert!(is_isometric_q(&b, &other).unwrap());
        }
    }

    #[test]
    fn indefinite_five_dimensional_forms_are_isotropic(e in diagonal(5, 50).prop_filter("dim 5", |v| v.len() == 5)) {
        let pos = e.iter().filter(|x| x.is_positive()).count();
        prop_assume!(pos > 0 && pos < 5);
        prop_assert!(is_isotropic_q(&e).unwrap());
    }
}

/// Smoke test: isotropic forms of dimension 3 usually have a zero in the
/// box `[-200, 200]^3`. Misses are reported, not fatal.
#[test]
fn isotropic_forms_have_small_zeros() {
    let mut rng = rng(11);
    let (mut isotropic, mut hits) = (0, 0);
    while isotropic < 100 {
        let c: Vec<Vec<i64>> = (0..3)
            .map(|i| (0..3).map(|j| if j >= i { rand::Rng::gen_range(&mut rng, -6..=6) } else { 0 }).collect())
            .collect();
        let q = form_from_coeffs(&c);
        if q.det().is_zero() || !is_isotropic_q(&diagonalize_q(&q)).unwrap() {
            continue;
        }
        isotropic += 1;
        match box_zero_ternary(&c, 200) {
            Some(_) => hits += 1,
            None => eprintln!("isotropic form without a box zero: {c:?}"),
        }
    }
    eprintln!("box search found zeros for {hits}/100 isotropic forms");
    if hits < 95 {
        eprintln!("warning: fewer than 95 hits");
    }
}
