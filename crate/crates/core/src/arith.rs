//! Integer and rational helpers: square tests, valuations, primality,
//! factorization and square-class normalization.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rationals, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Whether `q` is the square of a rational number (zero counts).
pub fn is_square_rational(q: &Rational) -> bool {
    is_square_int(q.numer()) && is_square_int(q.denom())
}

/// Returns `(v, m)` with `n = p^v * m` and `p` not dividing `m`. `n` must be nonzero.
pub fn valuation(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    debug_assert!(!n.is_zero());
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

/// p-adic valuation of a nonzero rational.
pub fn valuation_rational(q: &Rational, p: &BigInt) -> i64 {
    let (a, _) = valuation(q.numer(), p);
    let (b, _) = valuation(q.denom(), p);
    a as i64 - b as i64
}

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Miller-Rabin with the first twelve prime bases: deterministic below
/// 3.3 * 10^24, a strong probable-prime test beyond.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &int(2) {
        return false;
    }
    for &p in SMALL_PRIMES.iter() {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let (s, d) = valuation(&n_minus_1, &int(2));
    'bases: for &a in SMALL_PRIMES.iter().take(12) {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    let mut sieve = alloc::vec![true; (limit + 1) as usize];
    let mut out = Vec::new();
    for i in 2..=limit as usize {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit as usize {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

fn pollard_brent(n: &BigInt) -> BigInt {
    // n is odd, composite and not a perfect power of a small prime.
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = int(2);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut g = BigInt::one();
        let mut q = BigInt::one();
        let mut r: u64 = 1;
        let m: u64 = 64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

fn factor_into(n: BigInt, out: &mut BTreeMap<BigInt, u32>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let r = n.sqrt();
    if &r * &r == n {
        factor_into(r.clone(), out);
        factor_into(r, out);
        return;
    }
    let d = pollard_brent(&n);
    let e = &n / &d;
    factor_into(d, out);
    factor_into(e, out);
}

/// Prime factorization of `|n|`; `n` must be nonzero.
pub fn factor_int(n: &BigInt) -> BTreeMap<BigInt, u32> {
    assert!(!n.is_zero(), "factor_int: zero");
    let mut out = BTreeMap::new();
    let mut m = n.abs();
    for p in primes_up_to(2000) {
        let pb = BigInt::from(p);
        if &pb * &pb > m {
            break;
        }
        let (v, rest) = valuation(&m, &pb);
        if v > 0 {
            out.insert(pb, v);
            m = rest;
        }
    }
    factor_into(m, &mut out);
    out
}

/// Signed squarefree representative of the square class of a nonzero integer.
pub fn squarefree_int(n: &BigInt) -> BigInt {
    let mut out = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    for (p, e) in factor_int(n) {
        if e % 2 == 1 {
            out *= p;
        }
    }
    out
}

/// Signed squarefree integer in the square class of a nonzero rational.
pub fn square_class(q: &Rational) -> BigInt {
    squarefree_int(&(q.numer() * q.denom()))
}

/// Square class of a nonzero rational relative to a known prime support:
/// keeps the primes of `primes` that occur to an odd power. Every prime
/// with odd valuation in `q` must be listed.
pub fn square_class_over(q: &Rational, primes: &[BigInt]) -> BigInt {
    let mut out = if q.is_negative() { -BigInt::one() } else { BigInt::one() };
    for p in primes {
        if valuation_rational(q, p).rem_euclid(2) == 1 {
            out *= p;
        }
    }
    out
}

/// Strips square factors found by trial division; the result lies in the
/// same square class but is only guaranteed squarefree for inputs whose
/// large prime factors occur once.
pub fn reduce_square_factors(n: &BigInt) -> BigInt {
    if n.is_zero() {
        return BigInt::zero();
    }
    let sign = n.sign();
    let mut m = n.abs();
    let mut keep = BigInt::one();
    for p in primes_up_to(1000) {
        let pb = BigInt::from(p);
        if &pb * &pb > m {
            break;
        }
        let (v, rest) = valuation(&m, &pb);
        if v % 2 == 1 {
            keep *= &pb;
        }
        m = rest;
    }
    let r = m.sqrt();
    if &r * &r == m {
        m = BigInt::one();
    }
    let out = keep * m;
    if sign == Sign::Minus {
        -out
    } else {
        out
    }
}

/// Distinct primes dividing the numerator or denominator of `q`.
pub fn prime_support(q: &Rational) -> Vec<BigInt> {
    let mut ps: Vec<BigInt> = factor_int(q.numer()).into_keys().collect();
    if !q.denom().is_one() {
        ps.extend(factor_int(q.denom()).into_keys());
    }
    ps.sort();
    ps.dedup();
    ps
}

/// Legendre symbol `(a/p)` for an odd prime `p`; returns 0 when `p | a`.
pub fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) >> 1;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Residue of a p-adic unit rational modulo `m` (`m` coprime to the denominator).
pub fn unit_mod(q: &Rational, m: &BigInt) -> BigInt {
    let inv = mod_inverse(q.denom(), m).expect("denominator must be a unit");
    (q.numer() * inv).mod_floor(m)
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Symmetric representative of `a mod m` in `(-m/2, m/2]`.
pub fn symmetric_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

pub fn biguint_to_u64(n: &BigUint) -> Option<u64> {
    n.to_u64()
}
