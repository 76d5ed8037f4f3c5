//! Factorization of integer polynomials: squarefree decomposition, then
//! Berlekamp modulo a small prime, linear Hensel lifting and exhaustive
//! recombination of the lifted factors (Zassenhaus).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modp::{self, FpPoly};
use super::{poly_gcd_primitive, IntPolynomial};
use crate::arith::{mod_inverse, primes_up_to, symmetric_mod};

/// Splits a primitive nonconstant polynomial into `(P_i, i)` with
/// `f = prod P_i^i`, every `P_i` squarefree, primitive, positive leading
/// coefficient and pairwise coprime.
pub(crate) fn squarefree_decomposition(f: &IntPolynomial) -> Vec<(IntPolynomial, u32)> {
    let f = f.primitive_part();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let mut g = poly_gcd_primitive(&f, &f.derivative());
    let mut s = exact(&f, &g);
    let mut i = 1;
    while s.deg() > 0 {
        let y = poly_gcd_primitive(&s, &g);
        let z = exact(&s, &y);
        if z.deg() > 0 {
            out.push((z.primitive_part(), i));
        }
        g = exact(&g, &y);
        s = y;
        i += 1;
    }
    out
}

fn exact(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a.exact_div(b)
        .or_else(|| a.exact_div(&-b))
        .expect("primitive divisor must divide over Z")
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// squarefree primitive polynomial of positive degree.
pub(crate) fn factor_squarefree(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.primitive_part()];
    }
    let lc = f.leading();
    let p = choose_prime(f);
    let fbar = modp::monic(&modp::reduce(f, p), p);
    let local = modp::berlekamp(&fbar, p);
    if local.len() == 1 {
        return vec![f.primitive_part()];
    }

    // Any factor g of f satisfies |lc(f)/lc(g) * g|_inf <= |lc| 2^n |f|_2.
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1u32;
    let bound = num_traits::abs(lc.clone()) * (BigInt::one() << n) * norm2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= &bound * 2u32 + 1u32 {
        modulus *= &pb;
        k += 1;
    }

    let lifted = hensel_lift(f, &local, p, k);
    recombine(f, lifted, &modulus)
}

fn choose_prime(f: &IntPolynomial) -> u64 {
    let lc = f.leading();
    for p in primes_up_to(10_000).into_iter().skip(1) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fbar = modp::reduce(f, p);
        if modp::is_squarefree(&fbar, p) {
            return p;
        }
    }
    panic!("no admissible prime below 10^4 for a squarefree polynomial");
}

fn lift_fp(a: &FpPoly) -> IntPolynomial {
    IntPolynomial::new(a.iter().map(|&c| BigInt::from(c)).collect())
}

fn mod_poly(a: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(a.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Lifts `f = lc * prod g_i (mod p)` to monic factors modulo `p^k`.
fn hensel_lift(f: &IntPolynomial, local: &[FpPoly], p: u64, k: u32) -> Vec<IntPolynomial> {
    let pb = BigInt::from(p);
    let m = num_traits::pow(pb.clone(), k as usize);
    let mut out = Vec::with_capacity(local.len());
    let mut rest = mod_poly(f, &m);
    for i in 0..local.len() - 1 {
        let lc_bar = modp::reduce(&IntPolynomial::constant(rest.leading()), p);
        let mut h: FpPoly = lc_bar;
        for g in &local[i + 1..] {
            h = modp::mul(&h, g, p);
        }
        let (g_lift, h_lift) = lift_two(&rest, &local[i], &h, p, k);
        out.push(g_lift);
        rest = h_lift;
    }
    let inv = mod_inverse(&rest.leading(), &m).expect("leading coefficient is a unit mod p");
    out.push(mod_poly(&rest.scale(&inv), &m));
    out
}

/// Two-factor linear lifting: `f = g*h (mod p)` with `g` monic and
/// `gcd(g, h) = 1` becomes `f = G*H (mod p^k)`, `G` monic.
fn lift_two(
    f: &IntPolynomial,
    g: &FpPoly,
    h: &FpPoly,
    p: u64,
    k: u32,
) -> (IntPolynomial, IntPolynomial) {
    let pb = BigInt::from(p);
    let (one, s, t) = modp::ext_gcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let mut big_g = lift_fp(g);
    let mut big_h = lift_fp(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let err = mod_poly(&(f - &(&big_g * &big_h)), &next);
        let e: FpPoly = modp::trim(
            err.coeffs()
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(&pj);
                    debug_assert!(r.is_zero());
                    num_traits::ToPrimitive::to_u64(&q.mod_floor(&pb)).unwrap()
                })
                .collect(),
        );
        if !e.is_empty() {
            let te = modp::mul(&t, &e, p);
            let (q, sigma) = modp::divrem(&te, g, p);
            let tau = modp::add(&modp::mul(&s, &e, p), &modp::mul(&q, h, p), p);
            big_g = mod_poly(&(&big_g + &lift_fp(&sigma).scale(&pj)), &next);
            big_h = mod_poly(&(&big_h + &lift_fp(&tau).scale(&pj)), &next);
        }
        pj = next;
    }
    (big_g, big_h)
}

fn symmetric_poly(a: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(a.coeffs().iter().map(|c| symmetric_mod(c, m)).collect())
}

fn product_mod(factors: &[&IntPolynomial], scale: &BigInt, m: &BigInt) -> IntPolynomial {
    let mut acc = IntPolynomial::constant(scale.clone());
    for f in factors {
        acc = mod_poly(&(&acc * f), m);
    }
    symmetric_poly(&acc, m)
}

fn recombine(f: &IntPolynomial, mut lifted: Vec<IntPolynomial>, m: &BigInt) -> Vec<IntPolynomial> {
    let mut found = Vec::new();
    let mut current = f.clone();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let lc = current.leading();
            let chosen: Vec<&IntPolynomial> = subset.iter().map(|&i| &lifted[i]).collect();
            let g = product_mod(&chosen, &lc, m);
            let target = current.scale(&lc);
            let constant_ok = g.coeff(0).is_zero()
                || (target.coeff(0) % g.coeff(0)).is_zero();
            if constant_ok {
                let others: Vec<&IntPolynomial> = (0..lifted.len())
                    .filter(|i| !subset.contains(i))
                    .map(|i| &lifted[i])
                    .collect();
                let h = product_mod(&others, &lc, m);
                if &g * &h == target {
                    found.push(g.primitive_part());
                    current = h.primitive_part();
                    let mut i = 0;
                    lifted.retain(|_| {
                        let keep = !subset.contains(&i);
                        i += 1;
                        keep
                    });
                    continue 'outer;
                }
            }
            if !next_combination(&mut subset, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    found.push(current.primitive_part());
    found
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
