//! Arithmetic in `K = Q[t]/(p)` for an irreducible `p` of degree at least 2:
//! characteristic polynomials, a square test that only needs factorization
//! over Q, and signs of elements at the real embeddings (Sturm-Tarski).

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{is_square_rational, Rational};
use crate::poly::{factor_poly, IntPolynomial, QPoly};

#[derive(Clone, Debug)]
pub struct ResidueField {
    modulus: QPoly,
    degree: usize,
}

impl ResidueField {
    /// `p` must be irreducible over Q of degree at least 2.
    pub fn new(p: &IntPolynomial) -> Self {
        assert!(p.deg() >= 2, "residue fields of degree 1 are handled over Q");
        ResidueField { modulus: p.to_qpoly().monic(), degree: p.deg() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn reduce(&self, a: &QPoly) -> QPoly {
        a.rem(&self.modulus)
    }

    pub fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.reduce(&(a * b))
    }

    /// Matrix of multiplication by `a` on the basis `1, t, ..., t^(d-1)`.
    fn mult_matrix(&self, a: &QPoly) -> Vec<Vec<Rational>> {
        let d = self.degree;
        let mut m = vec![vec![Rational::zero(); d]; d];
        let mut col = self.reduce(a);
        let t = QPoly::new(vec![Rational::zero(), Rational::one()]);
        for j in 0..d {
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = col.coeff(i);
            }
            col = self.mul(&col, &t);
        }
        m
    }

    /// Characteristic polynomial of multiplication by `a` (Faddeev-LeVerrier).
    pub fn charpoly(&self, a: &QPoly) -> QPoly {
        let d = self.degree;
        let a_mat = self.mult_matrix(a);
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = Rational::one();
        let mut m = vec![vec![Rational::zero(); d]; d];
        for k in 1..=d {
            // M_k = A M_{k-1} + c_{d-k+1} I
            let mut next = vec![vec![Rational::zero(); d]; d];
            for i in 0..d {
                for j in 0..d {
                    let mut acc = Rational::zero();
                    for l in 0..d {
                        if !a_mat[i][l].is_zero() && !m[l][j].is_zero() {
                            acc += &a_mat[i][l] * &m[l][j];
                        }
                    }
                    next[i][j] = acc;
                }
                next[i][i] += &coeffs[d - k + 1];
            }
            let mut tr = Rational::zero();
            for i in 0..d {
                for l in 0..d {
                    tr += &a_mat[i][l] * &next[l][i];
                }
            }
            coeffs[d - k] = -tr / Rational::from_integer((k as i64).into());
            m = next;
        }
        QPoly::new(coeffs)
    }

    pub fn norm(&self, a: &QPoly) -> Rational {
        let c = self.charpoly(a).coeff(0);
        if self.degree % 2 == 1 {
            -c
        } else {
            c
        }
    }

    /// Whether a nonzero `a` is a square in K. `b = a c^2` is tried for a few
    /// `c` until its characteristic polynomial is squarefree, so that `b`
    /// generates K; then `b` is a square iff `chi_b(X^2)` has an irreducible
    /// factor of degree `d`. `None` if no attempt gives a generator.
    pub fn is_square(&self, a: &QPoly) -> Option<bool> {
        let a = self.reduce(a);
        if a.is_zero() {
            return Some(true);
        }
        if !is_square_rational(&self.norm(&a)) {
            return Some(false);
        }
        for attempt in 0..8i64 {
            let c = if attempt == 0 {
                QPoly::constant(Rational::one())
            } else {
                QPoly::new(vec![Rational::from_integer((attempt - 1).into()), Rational::one()])
            };
            let b = self.mul(&a, &self.mul(&c, &c));
            let chi = self.charpoly(&b);
            if chi.gcd(&chi.derivative()).deg() > 0 {
                continue;
            }
            let lifted = chi.to_primitive_int().1.compose_square();
            let fac = factor_poly(&lifted).expect("nonzero");
            return Some(fac.factors.iter().any(|(f, _)| f.deg() == self.degree));
        }
        None
    }

    /// Isolating intervals `(a, b]` with rational endpoints, one per real
    /// root of the modulus, ascending. Endpoints are never roots since the
    /// modulus has no rational roots.
    pub fn real_roots(&self) -> Vec<(Rational, Rational)> {
        let p = &self.modulus;
        let chain = sturm_chain(p, &p.derivative());
        let lc = p.leading();
        let mut bound = Rational::zero();
        for c in p.coeffs() {
            let r = (c / &lc).abs();
            if r > bound {
                bound = r;
            }
        }
        bound += Rational::one();
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((a, b)) = stack.pop() {
            let n = variations(&chain, &a) - variations(&chain, &b);
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push((a, b));
                continue;
            }
            let mid = (&a + &b) / Rational::from_integer(2.into());
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
        out.sort();
        out
    }

    /// Sign of `u` at the unique root of the modulus in `(a, b]`, via the
    /// Tarski query of `u` on that interval. `u` must be nonzero in K.
    pub fn sign_at_root(&self, u: &QPoly, interval: &(Rational, Rational)) -> i32 {
        let p = &self.modulus;
        let chain = sturm_chain(p, &(&p.derivative() * u));
        let taq = variations(&chain, &interval.0) - variations(&chain, &interval.1);
        debug_assert!(taq == 1 || taq == -1);
        taq
    }
}

/// Signed remainder sequence of `(a, b)`.
fn sturm_chain(a: &QPoly, b: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![a.clone()];
    if b.is_zero() {
        return chain;
    }
    chain.push(b.clone());
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(-&r);
    }
}

fn variations(chain: &[QPoly], x: &Rational) -> i32 {
    let mut count = 0;
    let mut last = 0i32;
    for s in chain {
        let v = s.eval(x);
        let sign = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if sign != 0 {
            if last != 0 && sign != last {
                count += 1;
            }
            last = sign;
        }
    }
    count
}
