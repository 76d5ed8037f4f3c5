mod common;

use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;
use qpencil_core::arith::rat;
use qpencil_core::form::{det_poly, diagonalize_q, Pencil};
use qpencil_core::global::witt_index_q;
use qpencil_core::pencil::{decide, Problem};
use qpencil_core::witt::{Outcome, WittOptions};

use common::*;

const SHAPES: [(usize, usize); 4] = [(0, 1), (0, 2), (1, 3), (1, 4)];

fn shape() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(SHAPES.to_vec())
}

/// Witt index of `f + t g` at the first few nonsingular integer points.
fn member_indices(p: &Pencil, count: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut t = 1;
    while out.len() < count {
        let m = p.member(&rat(t, 1));
        t += 1;
        if !m.det().is_zero() {
            out.push(witt_index_q(&diagonalize_q(&m)).unwrap());
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn definite_member_rules_out_yes(seed in any::<u64>(), (r, n) in shape()) {
        let mut rng = rng(seed);
        let f = positive_definite(&mut rng, n + 1);
        let g = random_form(&mut rng, n + 1, 6);
        let pencil = Pencil::new(f, g).unwrap();
        let v = decide(&Problem::new(pencil, n, r).unwrap(), &WittOptions::default()).unwrap();
        prop_assert_ne!(v.outcome, Outcome::Yes);
    }

    #[test]
    fn odd_gate_is_final(seed in any::<u64>(), r in 0usize..=2) {
        let mut rng = rng(seed);
        let n = 2 * r + 1;
        let pencil = loop {
            let p = Pencil::new(random_form(&mut rng, n + 1, 5), random_form(&mut rng, n + 1, 5)).unwrap();
            if !det_poly(&p).is_zero() {
                break p;
            }
        };
        let v = decide(&Problem::new(pencil, n, r).unwrap(), &WittOptions::default()).unwrap();
        if v.determinant_gate.is_some() {
            prop_assert_eq!(v.outcome, Outcome::No);
            prop_assert!(v.isometry.is_none());
        } else {
            prop_assert!(v.isometry.is_some());
        }
    }

    #[test]
    fn planted_subspace_in_general_position(seed in any::<u64>(), (r, n) in shape()) {
        let mut rng = rng(seed);
        let (p, _) = planted_pencil(&mut rng, r, n, 5);
        let u = unimodular(&mut rng, n + 1, 3 * (n + 1));
        let pencil = Pencil::new(transform(&p.f, &u), transform(&p.g, &u)).unwrap();
        let v = decide(&Problem::new(pencil.clone(), n, r).unwrap(), &WittOptions::default()).unwrap();
        prop_assert_ne!(v.outcome, Outcome::No);
        if v.outcome == Outcome::Yes {
            for w in member_indices(&pencil, 3) {
                prop_assert!(w >= r + 1);
            }
        }
    }
}

#[test]
fn swapping_the_forms_keeps_the_answer() {
    let mut rng = rng(21);
    let opts = WittOptions::default();
    let mut determinate = 0;
    for i in 0..20 {
        let (r, n) = SHAPES[i % SHAPES.len()];
        let pencil = if rng.gen_bool(0.5) {
            planted_pencil(&mut rng, r, n, 5).0
        } else {
            loop {
                let p = Pencil::new(random_form(&mut rng, n + 1, 5), random_form(&mut rng, n + 1, 5)).unwrap();
                if !det_poly(&p).is_zero() && !p.f.det().is_zero() && !p.g.det().is_zero() {
                    break p;
                }
            }
        };
        let swapped = Pencil::new(pencil.g.clone(), pencil.f.clone()).unwrap();
        let a = decide(&Problem::new(pencil, n, r).unwrap(), &opts).unwrap().outcome;
        let b = decide(&Problem::new(swapped, n, r).unwrap(), &opts).unwrap().outcome;
        if a != Outcome::Indeterminate && b != Outcome::Indeterminate {
            assert_eq!(a, b, "instance {i}");
            determinate += 1;
        }
    }
    assert!(determinate >= 15, "only {determinate} of 20 swaps were determinate on both sides");
}

#[test]
fn conics_through_a_planted_point() {
    let mut rng = rng(33);
    let opts = WittOptions::default();
    let mut yes = 0;
    for i in 0..25 {
        let (p, _) = planted_pencil(&mut rng, 0, 2, 8);
        let u = unimodular(&mut rng, 3, 6);
        let (f, g) = (transform(&p.f, &u), transform(&p.g, &u));
        let (cf, cg) = (coeffs_of(&f), coeffs_of(&g));
        assert!(conics_share_rational_point(&cf, &cg), "oracle misses planted point #{i}");
        let v = decide(&Problem::new(Pencil::new(f, g).unwrap(), 2, 0).unwrap(), &opts).unwrap();
        assert_ne!(v.outcome, Outcome::No, "#{i} {cf:?} {cg:?}");
        yes += usize::from(v.outcome == Outcome::Yes);
    }
    assert!(yes >= 20, "only {yes} of 25 planted conic pairs were decided");
}
