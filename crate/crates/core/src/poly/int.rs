use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::QPoly;
use crate::arith::Rational;

/// Univariate polynomial in `t` with integer coefficients, stored from the
/// constant term upwards. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `a*t + b`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64(&[b, a])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one() && self.leading().is_positive()
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// `p(t^2)`
    pub fn compose_square(&self) -> Self {
        let mut out = vec![BigInt::zero(); 2 * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[2 * i] = c.clone();
        }
        Self::new(out)
    }

    /// `p(-t)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Pseudo-division: returns `(q, r)` with `lc(b)^k * self = q*b + r`,
    /// `k = deg(self) - deg(b) + 1`, `deg r < deg b`.
    pub fn pseudo_divrem(&self, b: &Self) -> (Self, Self) {
        assert!(!b.is_zero(), "pseudo-division by zero polynomial");
        let db = b.deg();
        if self.is_zero() || self.deg() < db {
            return (Self::zero(), self.clone());
        }
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.deg() - db + 1];
        let mut k = self.deg() - db + 1;
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            let shift = dr - db;
            for c in q.iter_mut() {
                *c *= &lb;
            }
            q[shift] += &lr;
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[shift + i] -= &lr * bc;
            }
            while r.last().map_or(false, Zero::is_zero) {
                r.pop();
            }
            k -= 1;
        }
        if k > 0 {
            let f = num_traits::pow(lb, k);
            for c in q.iter_mut() {
                *c *= &f;
            }
            for c in r.iter_mut() {
                *c *= &f;
            }
        }
        (Self::new(q), Self::new(r))
    }

    pub fn pseudo_rem(&self, b: &Self) -> Self {
        self.pseudo_divrem(b).1
    }

    /// Exact quotient over Z, or `None` when `b` does not divide `self` in Z[t].
    pub fn exact_div(&self, b: &Self) -> Option<Self> {
        assert!(!b.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.deg() < b.deg() {
            return None;
        }
        let db = b.deg();
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.deg() - db + 1];
        for shift in (0..q.len()).rev() {
            let top = r[shift + db].clone();
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[shift + i] -= &c * bc;
            }
            q[shift] = c;
        }
        if r.iter().all(Zero::is_zero) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Whether `b` divides `self` over Q.
    pub fn divisible_by(&self, b: &Self) -> bool {
        self.pseudo_rem(b).is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// Ordering used for canonical factor lists: degree first, then the
    /// coefficient vector from the constant term upwards.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            first = false;
            let mag_one = mag.is_one();
            match i {
                0 => s.push_str(&alloc::format!("{}", mag)),
                _ => {
                    if !mag_one {
                        s.push_str(&alloc::format!("{}*", mag));
                    }
                    s.push_str(var);
                    if i > 1 {
                        s.push_str(&alloc::format!("^{}", i));
                    }
                }
            }
        }
        s
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self)
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_grammar() {
        assert_eq!(IntPolynomial::from_i64(&[-1, 0, 2]).to_string(), "2*t^2 - 1");
        assert_eq!(IntPolynomial::from_i64(&[-5, 2, 0, -1]).to_string(), "-t^3 + 2*t - 5");
        assert_eq!(IntPolynomial::from_i64(&[0, 1]).to_string(), "t");
        assert_eq!(IntPolynomial::from_i64(&[0, -3]).to_string(), "-3*t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[7]).to_string(), "7");
    }

    #[test]
    fn pseudo_division_identity() {
        let a = IntPolynomial::from_i64(&[3, -2, 5, 7]);
        let b = IntPolynomial::from_i64(&[1, 2, 3]);
        let (q, r) = a.pseudo_divrem(&b);
        let k = a.deg() - b.deg() + 1;
        let lhs = a.scale(&num_traits::pow(b.leading(), k));
        assert_eq!(&(&q * &b) + &r, lhs);
        assert!(r.deg() < b.deg());
    }

    #[test]
    fn exact_division() {
        let a = IntPolynomial::from_i64(&[1, 1]);
        let b = IntPolynomial::from_i64(&[1, 2]);
        let p = &a * &b;
        assert_eq!(p.exact_div(&a), Some(b.clone()));
        assert_eq!(IntPolynomial::from_i64(&[1, 0, 1]).exact_div(&a), None);
        // divisible over Q but not over Z
        assert_eq!(IntPolynomial::from_i64(&[1, 1]).exact_div(&IntPolynomial::from_i64(&[2, 2])), None);
    }
}
