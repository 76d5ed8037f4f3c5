use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{poly_gcd_primitive, IntPolynomial};
use crate::arith::Rational;

/// Element of Q(t) as a reduced quotient of integer polynomials. The
/// denominator has positive leading coefficient and shares no polynomial
/// or integer factor with the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RatFunc {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd_primitive(&num, &den);
        let (mut num, mut den) = if g.deg() > 0 {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        } else {
            (num, den)
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        if den.leading().is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc { num: IntPolynomial::zero(), den: IntPolynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RatFunc { num: p, den: IntPolynomial::one() }
    }

    pub fn from_rational(q: &Rational) -> Self {
        RatFunc {
            num: IntPolynomial::constant(q.numer().clone()),
            den: IntPolynomial::constant(q.denom().clone()),
        }
    }

    /// A polynomial with rational coefficients as an element of Q(t).
    pub fn from_qpoly(p: &super::QPoly) -> Self {
        let (unit, prim) = p.to_primitive_int();
        if unit.is_zero() {
            return Self::zero();
        }
        Self::new(prim.scale(unit.numer()), IntPolynomial::constant(unit.denom().clone()))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(IntPolynomial::constant(BigInt::from(n)))
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Total degree `deg num + deg den`, used to rank pivots.
    pub fn weight(&self) -> usize {
        self.num.deg() + self.den.deg()
    }

    /// Value at a rational point, or `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den.clone());
        }
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero in Q(t)");
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.coeff(0).is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}
