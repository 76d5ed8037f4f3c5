mod common;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use qpencil_core::form::{diagonalize_ff, orth_sum_ff, QuadraticFormFF};
use qpencil_core::poly::{IntPolynomial, RatFunc};
use qpencil_core::witt::{
    admissible_points, all_residue_sites, is_isometric_ff, is_witt_trivial_ff, residue_hyperbolic,
    specialization_at, Outcome, ResidueForm, ResidueSite, ResidueVerdict, WittOptions,
};

use common::*;

fn random_poly(rng: &mut ChaCha8Rng, deg: usize, bound: i64) -> IntPolynomial {
    let d = rng.gen_range(0..=deg);
    IntPolynomial::from_i64(&(0..=d).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>())
}

fn random_ff_form(rng: &mut ChaCha8Rng, m: usize) -> QuadraticFormFF {
    loop {
        let mut g = vec![vec![RatFunc::zero(); m]; m];
        for i in 0..m {
            for j in i..m {
                // mostly diagonal, so that diagonalization stays small
                let e = if i == j || rng.gen_bool(0.25) { random_poly(rng, 3, 4) } else { IntPolynomial::zero() };
                g[i][j] = RatFunc::from_poly(e.clone());
                g[j][i] = RatFunc::from_poly(e);
            }
        }
        let q = QuadraticFormFF::new(g).unwrap();
        if !q.det().is_zero() {
            return q;
        }
    }
}

#[test]
fn constant_forms_have_no_residue_sites() {
    let mut r = rng(5);
    for _ in 0..50 {
        let m = r.gen_range(1..=5);
        let q = random_form(&mut r, m, 9);
        if q.det().is_zero() {
            continue;
        }
        let d = diagonalize_ff(&q.to_ff()).unwrap();
        assert!(all_residue_sites(&d).is_empty());
    }
}

#[test]
fn odd_dimensional_residue_is_not_hyperbolic() {
    let rf = ResidueForm {
        site: ResidueSite::new(IntPolynomial::from_i64(&[-2, 0, 1])),
        entries: vec![IntPolynomial::from_i64(&[1]), IntPolynomial::from_i64(&[0, 1]), IntPolynomial::from_i64(&[3])],
    };
    assert!(matches!(residue_hyperbolic(&rf, 16), ResidueVerdict::HyperbolicNo(_)));
}

#[test]
fn residue_of_sum_of_squares_is_anisotropic() {
    // <1, 1> over Q(sqrt 2) has no zero: both embeddings are real.
    let rf = ResidueForm {
        site: ResidueSite::new(IntPolynomial::from_i64(&[-2, 0, 1])),
        entries: vec![IntPolynomial::from_i64(&[1]), IntPolynomial::from_i64(&[1])],
    };
    assert!(matches!(residue_hyperbolic(&rf, 16), ResidueVerdict::HyperbolicNo(_)));
    // <1, 1> over Q(i) is hyperbolic.
    let rf = ResidueForm { site: ResidueSite::new(IntPolynomial::from_i64(&[1, 0, 1])), ..rf };
    assert_eq!(residue_hyperbolic(&rf, 16), ResidueVerdict::HyperbolicYes);
}

#[test]
fn indefinite_line_is_not_trivial() {
    // <1, t> specializes to <1, t0>, which is never hyperbolic for t0 >= 0.
    let q = QuadraticFormFF::diagonal_poly(&[IntPolynomial::one(), IntPolynomial::from_i64(&[0, 1])]);
    assert_eq!(is_witt_trivial_ff(&q, &WittOptions::default()).unwrap().overall, Outcome::No);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn form_minus_itself_is_trivial(seed in any::<u64>(), m in 1usize..=3) {
        let mut r = rng(seed);
        let q = random_ff_form(&mut r, m);
        let opts = WittOptions::default();
        let sum = orth_sum_ff(&q, &q.neg());
        let cert = is_witt_trivial_ff(&sum, &opts).unwrap();
        prop_assert_eq!(cert.overall, Outcome::Yes, "{:?}", cert.sites);
        // the next specialization points are hyperbolic as well
        let t0 = cert.specialization.unwrap().t0;
        let start: u32 = (t0 + 1u32).try_into().unwrap();
        for t in admissible_points(&sum, &cert.diagonal, start, 5, 200) {
            prop_assert!(specialization_at(&sum, &cert.diagonal, &t).unwrap().hyperbolic);
        }
        prop_assert_eq!(is_isometric_ff(&q, &q, &opts).unwrap().outcome, Outcome::Yes);
    }

    #[test]
    fn scaling_one_entry_by_a_nonsquare_constant_breaks_isometry(seed in any::<u64>(), c in prop::sample::select(vec![2i64, 3, 5, -1, -3])) {
        let mut r = rng(seed);
        let q = random_ff_form(&mut r, 2);
        let d = diagonalize_ff(&q).unwrap();
        let mut e = d.entries.clone();
        e[0] = e[0].scale(&BigInt::from(c));
        let other = QuadraticFormFF::diagonal_poly(&e);
        // determinant classes differ by c, which is not a square in Q(t)
        let cert = is_isometric_ff(&q, &other, &WittOptions::default()).unwrap();
        prop_assert_eq!(cert.outcome, Outcome::No);
        prop_assert!(cert.mismatch.is_some());
    }
}
