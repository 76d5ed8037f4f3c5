//! Exact univariate polynomial arithmetic over Z and Q: gcds, square-class
//! reduction, irreducible factorization and resultants.

mod factor;
mod int;
pub(crate) mod modp;
mod rat;
mod ratfunc;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use int::IntPolynomial;
pub use rat::QPoly;
pub use ratfunc::RatFunc;

use crate::arith::{squarefree_int, Rational};
use crate::error::{Error, Result};

pub(crate) use factor::squarefree_decomposition;

/// `unit * prod factor^multiplicity`, factors irreducible over Q, primitive,
/// positive leading coefficient, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFactorization {
    pub unit: Rational,
    pub factors: Vec<(IntPolynomial, u32)>,
}

impl PolyFactorization {
    /// Multiplies the factorization back out (as a rational polynomial).
    pub fn expand(&self) -> QPoly {
        let mut acc = IntPolynomial::one();
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc.to_qpoly().scale(&self.unit)
    }
}

/// Primitive PRS gcd, primitive with positive leading coefficient. Zero
/// only when both inputs are zero.
pub(crate) fn poly_gcd_primitive(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    if a.deg() < b.deg() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.deg() == 0 {
            return IntPolynomial::one();
        }
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    a.primitive_part()
}

/// Greatest common divisor over Q, normalized primitive with positive
/// leading coefficient.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> Result<IntPolynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::invalid("gcd of two zero polynomials"));
    }
    Ok(poly_gcd_primitive(a, b))
}

/// Product of the irreducible factors occurring to an odd power, made
/// primitive: the representative of `a` modulo squares of Q(t)^*, up to a
/// rational constant.
pub fn squarefree_part(a: &IntPolynomial) -> Result<IntPolynomial> {
    if a.is_zero() {
        return Err(Error::invalid("squarefree part of the zero polynomial"));
    }
    let mut out = IntPolynomial::one();
    for (p, m) in squarefree_decomposition(a) {
        if m % 2 == 1 {
            out = &out * &p;
        }
    }
    Ok(out)
}

/// Canonical square-class representative of a nonzero element of Q(t)
/// given as `num/den`: a squarefree signed integer times a primitive
/// squarefree polynomial with positive leading coefficient.
pub fn square_class_of(num: &IntPolynomial, den: &IntPolynomial) -> IntPolynomial {
    let prod = num * den;
    assert!(!prod.is_zero(), "square class of zero");
    let mut c = prod.content();
    if prod.leading().is_negative() {
        c = -c;
    }
    let scalar = if c.bits() <= 128 { squarefree_int(&c) } else { crate::arith::reduce_square_factors(&c) };
    let poly = squarefree_part(&prod).expect("nonzero");
    poly.scale(&scalar)
}

/// Whether two nonzero polynomials agree modulo nonzero squares of Q(t).
pub fn same_square_class(a: &IntPolynomial, b: &IntPolynomial) -> bool {
    let pa = squarefree_part(a).expect("nonzero");
    let pb = squarefree_part(b).expect("nonzero");
    if pa != pb {
        return false;
    }
    // a = ca * pa * s^2, b = cb * pb * s'^2 with rational ca, cb; compare ca/cb.
    let qa = a.to_qpoly();
    let qb = b.to_qpoly();
    let ra = qa.divrem(&pa.to_qpoly()).0;
    let rb = qb.divrem(&pb.to_qpoly()).0;
    // ra, rb are rational multiples of squares; their primitive parts are
    // squares, so only the units need comparing.
    let (ua, _) = ra.to_primitive_int();
    let (ub, _) = rb.to_primitive_int();
    crate::arith::is_square_rational(&(ua / ub))
}

/// Complete factorization over Q with deterministic factor order.
pub fn factor_poly(a: &IntPolynomial) -> Result<PolyFactorization> {
    if a.is_zero() {
        return Err(Error::invalid("factorization of the zero polynomial"));
    }
    let mut factors: Vec<(IntPolynomial, u32)> = Vec::new();
    for (p, m) in squarefree_decomposition(a) {
        for f in factor::factor_squarefree(&p) {
            factors.push((f, m));
        }
    }
    factors.sort_by(|x, y| x.0.canonical_cmp(&y.0));
    let mut lc_prod = BigInt::one();
    for (f, m) in &factors {
        lc_prod *= num_traits::pow(f.leading(), *m as usize);
    }
    let unit = Rational::new(a.leading(), lc_prod);
    Ok(PolyFactorization { unit, factors })
}

/// Resultant of two nonzero polynomials, by the Euclidean remainder sequence over Q.
pub fn resultant(a: &IntPolynomial, b: &IntPolynomial) -> Result<Rational> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::invalid("resultant with a zero polynomial"));
    }
    Ok(resultant_q(&a.to_qpoly(), &b.to_qpoly()))
}

pub(crate) fn resultant_q(a: &QPoly, b: &QPoly) -> Rational {
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = Rational::one();
    loop {
        let (da, db) = (a.deg(), b.deg());
        if db == 0 {
            return acc * num_traits::pow(b.leading(), da);
        }
        if da == 0 {
            return acc * num_traits::pow(a.leading(), db);
        }
        if db > da {
            if da * db % 2 == 1 {
                acc = -acc;
            }
            core::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Rational::zero();
        }
        if da * db % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(b.leading(), da - r.deg());
        a = b;
        b = r;
    }
}

/// Rational roots of a nonzero polynomial, ascending, via its linear factors.
pub fn rational_roots(a: &IntPolynomial) -> Vec<Rational> {
    let mut roots: Vec<Rational> = factor_poly(a)
        .map(|f| {
            f.factors
                .iter()
                .filter(|(p, _)| p.deg() == 1)
                .map(|(p, _)| Rational::new(-p.coeff(0), p.coeff(1)))
                .collect()
        })
        .unwrap_or_default();
    roots.sort();
    roots
}
