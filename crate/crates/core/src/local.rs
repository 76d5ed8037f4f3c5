//! Invariants over the completions of Q: Hilbert symbols, Hasse invariants,
//! local isotropy and local Witt index.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{is_prime, legendre, prime_support, square_class, valuation, Rational};
use crate::error::{Error, Result};

/// A completion of Q. The real place sorts first, then primes ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Prime(BigInt),
}

impl Place {
    pub fn prime(p: impl Into<BigInt>) -> Result<Self> {
        let p = p.into();
        if !is_prime(&p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        Ok(Place::Prime(p))
    }

    pub fn two() -> Self {
        Place::Prime(BigInt::from(2))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => f.write_str("inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// Complete local invariants of a nondegenerate form at one place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalProfile {
    pub place: Place,
    pub dim: usize,
    /// Signed squarefree integer; zero marks a degenerate form.
    pub det_class: BigInt,
    pub hasse: i8,
    /// `(pos, neg)`, only at the real place.
    pub signature: Option<(usize, usize)>,
}

fn int_class(q: &Rational) -> BigInt {
    q.numer() * q.denom()
}

fn unit_mod8(u: &BigInt) -> u32 {
    u.mod_floor(&BigInt::from(8)).to_u32().unwrap()
}

fn hilbert_nonzero(a: &BigInt, b: &BigInt, v: &Place) -> i8 {
    match v {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = valuation(a, p);
            let (beta, w) = valuation(b, p);
            if p == &BigInt::from(2) {
                let (u, w) = (unit_mod8(&u), unit_mod8(&w));
                let eps = |x: u32| ((x - 1) / 2) % 2;
                let omega = |x: u32| ((x * x - 1) / 8) % 2;
                let e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
                if e % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                let mut s: i32 = 1;
                let half = ((p - 1u32) / 2u32) % 2u32;
                if alpha % 2 == 1 && beta % 2 == 1 && half.is_one() {
                    s = -s;
                }
                if beta % 2 == 1 {
                    s *= legendre(&u, p);
                }
                if alpha % 2 == 1 {
                    s *= legendre(&w, p);
                }
                s as i8
            }
        }
    }
}

/// `(a, b)_v`: `+1` iff `z^2 = a x^2 + b y^2` has a nontrivial solution over
/// the completion at `v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: &Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::invalid("Hilbert symbol of zero"));
    }
    Ok(hilbert_nonzero(&int_class(a), &int_class(b), v))
}

/// `prod_{i<j} (a_i, a_j)_v`
pub fn hasse_invariant(entries: &[Rational], v: &Place) -> Result<i8> {
    if entries.iter().any(Zero::is_zero) {
        return Err(Error::invalid("zero entry in Hasse invariant"));
    }
    let ints: Vec<BigInt> = entries.iter().map(int_class).collect();
    Ok(hasse_of_ints(&ints, v))
}

pub(crate) fn hasse_of_ints(ints: &[BigInt], v: &Place) -> i8 {
    let mut h = 1;
    // (a, b) depends only on the classes; fold a_1 ... a_{j-1} into a running
    // product so each j costs one symbol.
    let mut prefix = BigInt::one();
    for (j, b) in ints.iter().enumerate() {
        if j > 0 {
            h *= hilbert_nonzero(&prefix, b, v);
        }
        prefix = strip_squares_at(&(prefix * b), v);
    }
    h
}

/// Keeps `n` in its class at `v` while discarding even powers of the prime,
/// so that running products stay small.
fn strip_squares_at(n: &BigInt, v: &Place) -> BigInt {
    match v {
        Place::Real => {
            if n.is_negative() {
                -BigInt::one()
            } else {
                BigInt::one()
            }
        }
        Place::Prime(p) => {
            let (k, u) = valuation(n, p);
            // u mod 8p determines the class of u at p (mod 8 suffices at 2)
            let m = BigInt::from(8) * p;
            let mut r = u.mod_floor(&m);
            if u.is_negative() && !r.is_zero() {
                r -= &m;
            }
            if k % 2 == 1 {
                r * p
            } else {
                r
            }
        }
    }
}

/// Whether a nonzero rational is a square in the completion at `v`.
pub fn is_local_square(a: &Rational, v: &Place) -> bool {
    let n = int_class(a);
    match v {
        Place::Real => n.is_positive(),
        Place::Prime(p) => {
            let (k, u) = valuation(&n, p);
            if k % 2 == 1 {
                return false;
            }
            if p == &BigInt::from(2) {
                unit_mod8(&u) == 1
            } else {
                legendre(&u, p) == 1
            }
        }
    }
}

fn signature_of(entries: &[Rational]) -> (usize, usize) {
    let pos = entries.iter().filter(|e| e.is_positive()).count();
    (pos, entries.len() - pos)
}

/// Profile of the diagonal form `<entries>` at `v`.
pub fn local_profile(entries: &[Rational], v: &Place) -> Result<LocalProfile> {
    if entries.iter().any(Zero::is_zero) {
        return Err(Error::DegenerateForm);
    }
    let det: Rational = entries.iter().product();
    Ok(LocalProfile {
        place: v.clone(),
        dim: entries.len(),
        det_class: square_class(&det),
        hasse: hasse_invariant(entries, v)?,
        signature: matches!(v, Place::Real).then(|| signature_of(entries)),
    })
}

fn check_profile(pr: &LocalProfile) -> Result<()> {
    if pr.det_class.is_zero() && pr.dim > 0 {
        return Err(Error::DegenerateForm);
    }
    if let (Place::Real, Some((a, b))) = (&pr.place, pr.signature) {
        if a + b != pr.dim {
            return Err(Error::DegenerateForm);
        }
    }
    if matches!(pr.place, Place::Real) && pr.signature.is_none() {
        return Err(Error::invalid("real profile without signature"));
    }
    Ok(())
}

pub(crate) fn isotropic_unchecked(pr: &LocalProfile) -> bool {
    let d = Rational::from_integer(pr.det_class.clone());
    match &pr.place {
        Place::Real => {
            let (a, b) = pr.signature.unwrap();
            a > 0 && b > 0
        }
        v => match pr.dim {
            0 | 1 => false,
            2 => is_local_square(&-d, v),
            3 => hilbert_nonzero(&BigInt::from(-1), &-&pr.det_class, v) == pr.hasse,
            4 => !is_local_square(&d, v) || pr.hasse == hilbert_nonzero(&BigInt::from(-1), &BigInt::from(-1), v),
            _ => true,
        },
    }
}

pub fn is_isotropic_local(profile: &LocalProfile) -> Result<bool> {
    check_profile(profile)?;
    Ok(isotropic_unchecked(profile))
}

/// Invariants of `q'` where `q = H + q'`: determinant `-d`, Hasse invariant
/// times `(-1, -d)`, signature reduced by `(1, 1)`.
pub fn peel_hyperbolic(pr: &LocalProfile) -> LocalProfile {
    let neg_d = -&pr.det_class;
    LocalProfile {
        place: pr.place.clone(),
        dim: pr.dim - 2,
        hasse: pr.hasse * hilbert_nonzero(&BigInt::from(-1), &neg_d, &pr.place),
        det_class: neg_d,
        signature: pr.signature.map(|(a, b)| (a - 1, b - 1)),
    }
}

pub fn witt_index_local(profile: &LocalProfile) -> Result<usize> {
    check_profile(profile)?;
    let mut pr = profile.clone();
    let mut k = 0;
    while isotropic_unchecked(&pr) {
        pr = peel_hyperbolic(&pr);
        k += 1;
    }
    Ok(k)
}

/// The real place, 2 and every prime dividing the squarefree class of some
/// entry, ascending.
pub fn relevant_places(entries: &[Rational]) -> Result<Vec<Place>> {
    if entries.iter().any(Zero::is_zero) {
        return Err(Error::invalid("zero entry"));
    }
    let mut primes: Vec<BigInt> = vec![BigInt::from(2)];
    for e in entries {
        let c = Rational::from_integer(square_class(e));
        primes.extend(prime_support(&c));
    }
    Ok(places_from_primes(primes))
}

pub(crate) fn places_from_primes(mut primes: Vec<BigInt>) -> Vec<Place> {
    primes.sort();
    primes.dedup();
    let mut out = Vec::with_capacity(primes.len() + 1);
    out.push(Place::Real);
    out.extend(primes.into_iter().map(Place::Prime));
    out
}
