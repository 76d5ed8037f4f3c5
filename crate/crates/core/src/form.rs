//! Quadratic forms over Q and Q(t) as symmetric Gram matrices, with the
//! pencil `f + t g`, its determinant polynomial and the target forms
//! `(r+1)H + <(-1)^(r+1) delta>` and `(r+1)H`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::field::{congruence_diagonalize, determinant, kernel, Matrix};
use crate::poly::{square_class_of, IntPolynomial, QPoly, RatFunc};

fn check_symmetric<F: crate::field::Field>(gram: &Matrix<F>) -> Result<()> {
    let m = gram.len();
    for (i, row) in gram.iter().enumerate() {
        if row.len() != m {
            return Err(Error::invalid(format!("row {i} has length {}, expected {m}", row.len())));
        }
    }
    for i in 0..m {
        for j in 0..i {
            if gram[i][j] != gram[j][i] {
                return Err(Error::invalid(format!("Gram matrix not symmetric at ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// `q(x) = x^T G x` over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFormQ {
    gram: Matrix<Rational>,
}

impl QuadraticFormQ {
    pub fn new(gram: Matrix<Rational>) -> Result<Self> {
        check_symmetric(&gram)?;
        Ok(QuadraticFormQ { gram })
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let m = entries.len();
        let mut gram = vec![vec![Rational::zero(); m]; m];
        for (i, e) in entries.iter().enumerate() {
            gram[i][i] = e.clone();
        }
        QuadraticFormQ { gram }
    }

    pub fn zero(m: usize) -> Self {
        QuadraticFormQ { gram: vec![vec![Rational::zero(); m]; m] }
    }

    /// Hyperbolic plane with Gram `[[0, 1/2], [1/2, 0]]`, i.e. `x y`.
    pub fn hyperbolic_plane() -> Self {
        let h = Rational::new(1.into(), 2.into());
        QuadraticFormQ { gram: vec![vec![Rational::zero(), h.clone()], vec![h, Rational::zero()]] }
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &Matrix<Rational> {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.gram[i][j]
    }

    /// Sets the symmetric pair `(i, j)`, `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.gram[i][j] = v.clone();
        self.gram[j][i] = v;
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, row) in self.gram.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                if !g.is_zero() {
                    acc += g * &x[i] * &x[j];
                }
            }
        }
        acc
    }

    /// Bilinear form `x^T G y`.
    pub fn polar(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, row) in self.gram.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                if !g.is_zero() {
                    acc += g * &x[i] * &y[j];
                }
            }
        }
        acc
    }

    pub fn det(&self) -> Rational {
        determinant(&self.gram)
    }

    pub fn to_ff(&self) -> QuadraticFormFF {
        QuadraticFormFF {
            gram: self
                .gram
                .iter()
                .map(|row| row.iter().map(RatFunc::from_rational).collect())
                .collect(),
        }
    }
}

/// Symmetric Gram matrix over Q(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFormFF {
    gram: Matrix<RatFunc>,
}

impl QuadraticFormFF {
    pub fn new(gram: Matrix<RatFunc>) -> Result<Self> {
        check_symmetric(&gram)?;
        Ok(QuadraticFormFF { gram })
    }

    pub fn diagonal(entries: &[RatFunc]) -> Self {
        let m = entries.len();
        let mut gram = vec![vec![RatFunc::zero(); m]; m];
        for (i, e) in entries.iter().enumerate() {
            gram[i][i] = e.clone();
        }
        QuadraticFormFF { gram }
    }

    pub fn diagonal_poly(entries: &[IntPolynomial]) -> Self {
        let e: Vec<RatFunc> = entries.iter().cloned().map(RatFunc::from_poly).collect();
        Self::diagonal(&e)
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &Matrix<RatFunc> {
        &self.gram
    }

    pub fn det(&self) -> RatFunc {
        determinant(&self.gram)
    }

    /// Gram matrix at `t = t0`, or `None` if some entry has a pole there.
    pub fn eval(&self, t0: &Rational) -> Option<QuadraticFormQ> {
        let mut gram = Vec::with_capacity(self.dim());
        for row in &self.gram {
            let mut r = Vec::with_capacity(row.len());
            for e in row {
                r.push(e.eval(t0)?);
            }
            gram.push(r);
        }
        Some(QuadraticFormQ { gram })
    }

    pub fn neg(&self) -> Self {
        QuadraticFormFF {
            gram: self.gram.iter().map(|row| row.iter().map(RatFunc::neg).collect()).collect(),
        }
    }
}

/// Diagonal form over Q(t) whose entries are square-class representatives:
/// a squarefree integer times a squarefree primitive polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalFF {
    pub entries: Vec<IntPolynomial>,
}

impl DiagonalFF {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn to_form(&self) -> QuadraticFormFF {
        QuadraticFormFF::diagonal_poly(&self.entries)
    }
}

/// Two forms on the same `n + 1` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    pub f: QuadraticFormQ,
    pub g: QuadraticFormQ,
}

impl Pencil {
    pub fn new(f: QuadraticFormQ, g: QuadraticFormQ) -> Result<Self> {
        if f.dim() != g.dim() {
            return Err(Error::DimensionMismatch(format!(
                "f has dimension {}, g has dimension {}",
                f.dim(),
                g.dim()
            )));
        }
        Ok(Pencil { f, g })
    }

    pub fn dim(&self) -> usize {
        self.f.dim()
    }

    /// `f + t0 g` over Q.
    pub fn member(&self, t0: &Rational) -> QuadraticFormQ {
        let gram = self
            .f
            .gram
            .iter()
            .zip(&self.g.gram)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + t0 * y).collect())
            .collect();
        QuadraticFormQ { gram }
    }
}

/// `M_f + t M_g` over Q(t).
pub fn pencil_form(p: &Pencil) -> QuadraticFormFF {
    let gram = p
        .f
        .gram
        .iter()
        .zip(&p.g.gram)
        .map(|(a, b)| {
            a.iter()
                .zip(b)
                .map(|(x, y)| RatFunc::from_qpoly(&QPoly::new(vec![x.clone(), y.clone()])))
                .collect()
        })
        .collect();
    QuadraticFormFF { gram }
}

/// `D(t) = unit * poly` with `poly` primitive and positive leading
/// coefficient; the zero polynomial has unit 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetPoly {
    pub unit: Rational,
    pub poly: IntPolynomial,
}

impl DetPoly {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn to_qpoly(&self) -> QPoly {
        self.poly.to_qpoly().scale(&self.unit)
    }

    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }
}

/// `det(M_f + t M_g)`, by interpolation through `n + 2` integer points.
pub fn det_poly(p: &Pencil) -> DetPoly {
    let m = p.dim();
    let xs: Vec<Rational> = (0..=m as i64).map(|k| Rational::from_integer(k.into())).collect();
    let ys: Vec<Rational> = xs.iter().map(|x| p.member(x).det()).collect();
    let (unit, poly) = interpolate(&xs, &ys).to_primitive_int();
    DetPoly { unit, poly }
}

/// Lagrange interpolation through distinct nodes.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = QPoly::constant(Rational::one());
        let mut denom = Rational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = &basis * &QPoly::new(vec![-xj, Rational::one()]);
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}

/// Diagonal of a congruent diagonal form; zeros (one per radical
/// dimension) come last.
pub fn diagonalize_q(q: &QuadraticFormQ) -> Vec<Rational> {
    congruence_diagonalize(&q.gram).0
}

/// As [`diagonalize_q`], also returning `P` with `P^T G P = diag`.
pub fn diagonalize_q_with_basis(q: &QuadraticFormQ) -> (Vec<Rational>, Matrix<Rational>) {
    congruence_diagonalize(&q.gram)
}

/// Diagonal entries over Q(t) before square-class normalization.
pub fn diagonal_entries_ff(q: &QuadraticFormFF) -> Vec<RatFunc> {
    congruence_diagonalize(&q.gram).0
}

pub fn diagonalize_ff(q: &QuadraticFormFF) -> Result<DiagonalFF> {
    let diag = diagonal_entries_ff(q);
    if diag.iter().any(|e| e.is_zero()) {
        return Err(Error::DegenerateForm);
    }
    let entries = diag.iter().map(|e| square_class_of(e.num(), e.den())).collect();
    Ok(DiagonalFF { entries })
}

pub fn radical_q(q: &QuadraticFormQ) -> Vec<Vec<Rational>> {
    kernel(&q.gram)
}

pub fn radical_ff(q: &QuadraticFormFF) -> Vec<Vec<RatFunc>> {
    kernel(&q.gram)
}

/// `(r+1) H + <(-1)^(r+1) delta>`, diagonal with blocks `<1, -1>`.
pub fn target_even(r: usize, delta: &IntPolynomial) -> Result<QuadraticFormFF> {
    if delta.is_zero() {
        return Err(Error::invalid("delta must be nonzero"));
    }
    let mut entries = hyperbolic_entries(r + 1);
    let last = if (r + 1) % 2 == 0 { delta.clone() } else { -delta };
    entries.push(last);
    Ok(QuadraticFormFF::diagonal_poly(&entries))
}

/// `(r+1) H`.
pub fn target_odd(r: usize) -> QuadraticFormFF {
    QuadraticFormFF::diagonal_poly(&hyperbolic_entries(r + 1))
}

fn hyperbolic_entries(k: usize) -> Vec<IntPolynomial> {
    let mut out = Vec::with_capacity(2 * k + 1);
    for _ in 0..k {
        out.push(IntPolynomial::one());
        out.push(IntPolynomial::constant(BigInt::from(-1)));
    }
    out
}

fn block_sum<F: crate::field::Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let (m, k) = (a.len(), b.len());
    let mut out: Matrix<F> = (0..m + k).map(|_| (0..m + k).map(|_| F::zero()).collect()).collect();
    for i in 0..m {
        for j in 0..m {
            out[i][j] = a[i][j].clone();
        }
    }
    for i in 0..k {
        for j in 0..k {
            out[m + i][m + j] = b[i][j].clone();
        }
    }
    out
}

pub fn orth_sum_q(a: &QuadraticFormQ, b: &QuadraticFormQ) -> QuadraticFormQ {
    QuadraticFormQ { gram: block_sum(&a.gram, &b.gram) }
}

pub fn orth_sum_ff(a: &QuadraticFormFF, b: &QuadraticFormFF) -> QuadraticFormFF {
    QuadraticFormFF { gram: block_sum(&a.gram, &b.gram) }
}

pub fn scale_q(a: &QuadraticFormQ, c: &Rational) -> Result<QuadraticFormQ> {
    if c.is_zero() {
        return Err(Error::invalid("scaling by zero"));
    }
    Ok(QuadraticFormQ { gram: a.gram.iter().map(|r| r.iter().map(|x| x * c).collect()).collect() })
}

pub fn scale_ff(a: &QuadraticFormFF, c: &RatFunc) -> Result<QuadraticFormFF> {
    if c.is_zero() {
        return Err(Error::invalid("scaling by zero"));
    }
    Ok(QuadraticFormFF { gram: a.gram.iter().map(|r| r.iter().map(|x| x.mul(c)).collect()).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::poly::squarefree_part;

    fn diag_q(v: &[i64]) -> QuadraticFormQ {
        QuadraticFormQ::diagonal(&v.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>())
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn pencil_of_diagonal_forms() {
        let pen = Pencil::new(diag_q(&[1, 1, 1]), diag_q(&[1, 2, 3])).unwrap();
        let q = pencil_form(&pen);
        assert_eq!(q.gram()[1][1], RatFunc::from_poly(p(&[1, 2])));
        assert!(q.gram()[0][1].is_zero());
        let d = det_poly(&pen);
        let expect = &(&p(&[1, 1]) * &p(&[1, 2])) * &p(&[1, 3]);
        assert_eq!(d.unit, Rational::one());
        assert_eq!(d.poly, expect);
    }

    #[test]
    fn scaled_hyperbolic_determinant() {
        let h = QuadraticFormQ::hyperbolic_plane();
        let d = det_poly(&Pencil::new(h.clone(), h).unwrap());
        assert_eq!(d.unit, rat(-1, 4));
        assert_eq!(d.poly, p(&[1, 2, 1]));
    }

    #[test]
    fn zero_g_gives_constant_matrix() {
        let f = diag_q(&[2, -3]);
        let q = pencil_form(&Pencil::new(f.clone(), QuadraticFormQ::zero(2)).unwrap());
        assert_eq!(q, f.to_ff());
    }

    #[test]
    fn diagonalize_examples() {
        let d = diagonalize_q(&QuadraticFormQ::hyperbolic_plane());
        assert_eq!(d.len(), 2);
        assert!(&d[0] * &d[1] < Rational::zero());
        let ones = QuadraticFormQ::new(vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(1, 1)]]).unwrap();
        assert_eq!(diagonalize_q(&ones), vec![rat(1, 1), rat(0, 1)]);
        assert_eq!(radical_q(&ones), vec![vec![rat(-1, 1), rat(1, 1)]]);
        assert!(radical_q(&diag_q(&[1, 1])).is_empty());
        assert_eq!(radical_q(&QuadraticFormQ::zero(3)).len(), 3);
    }

    #[test]
    fn diagonalize_ff_examples() {
        let q = QuadraticFormFF::diagonal_poly(&[p(&[0, 0, 1]), p(&[0, 0, 0, 1])]);
        assert_eq!(diagonalize_ff(&q).unwrap().entries, vec![p(&[1]), p(&[0, 1])]);
        let s = RatFunc::new(p(&[1, 1]), p(&[2]));
        let h = QuadraticFormFF::new(vec![vec![RatFunc::zero(), s.clone()], vec![s, RatFunc::zero()]]).unwrap();
        let d = diagonalize_ff(&h).unwrap();
        assert_eq!(d.entries.len(), 2);
        let prod = &d.entries[0] * &d.entries[1];
        // product is -(t+1)^2 up to squares, i.e. -1
        assert_eq!(square_class_of(&prod, &IntPolynomial::one()), p(&[-1]));
        let degenerate = QuadraticFormFF::diagonal_poly(&[p(&[1]), IntPolynomial::zero()]);
        assert_eq!(diagonalize_ff(&degenerate), Err(Error::DegenerateForm));
    }

    #[test]
    fn targets() {
        let d = p(&[1, 1]);
        let t = target_even(0, &d).unwrap();
        assert_eq!(t, QuadraticFormFF::diagonal_poly(&[p(&[1]), p(&[-1]), p(&[-1, -1])]));
        assert_eq!(target_even(1, &p(&[1])).unwrap().dim(), 5);
        assert_eq!(target_odd(2).dim(), 6);
        assert!(target_even(0, &IntPolynomial::zero()).is_err());
        let det = target_even(3, &d).unwrap().det();
        assert_eq!(squarefree_part(&(det.num() * &d)).unwrap(), p(&[1]));
    }

    #[test]
    fn sums_and_scaling() {
        let a = orth_sum_q(&diag_q(&[1]), &diag_q(&[-1]));
        assert_eq!(a, diag_q(&[1, -1]));
        assert_eq!(scale_q(&a, &rat_int(5.into())).unwrap(), diag_q(&[5, -5]));
        assert!(scale_q(&a, &rat(0, 1)).is_err());
    }
}
