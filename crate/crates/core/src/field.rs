//! Minimal field interface shared by rational and rational-function matrices,
//! with the elimination routines built on it.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::poly::RatFunc;

pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Size measure used to prefer small pivots.
    fn weight(&self) -> usize;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn weight(&self) -> usize {
        0
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        RatFunc::div(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn weight(&self) -> usize {
        RatFunc::weight(self)
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect()
}

pub fn determinant<F: Field>(m: &Matrix<F>) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut det = F::one();
    for col in 0..n {
        let Some(piv) = (col..n).filter(|&r| !a[r][col].is_zero()).min_by_key(|&r| a[r][col].weight())
        else {
            return F::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = det.neg();
        }
        det = det.mul(&a[col][col]);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let c = a[r][col].div(&a[col][col]);
            for k in col..n {
                let v = a[r][k].sub(&c.mul(&a[col][k]));
                a[r][k] = v;
            }
        }
    }
    det
}

/// Basis of `{x : m x = 0}` from the reduced row echelon form.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(piv) = (row..rows).filter(|&r| !a[r][col].is_zero()).min_by_key(|&r| a[r][col].weight())
        else {
            continue;
        };
        a.swap(piv, row);
        let inv = F::one().div(&a[row][col]);
        for k in 0..cols {
            a[row][k] = a[row][k].mul(&inv);
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                for k in 0..cols {
                    let v = a[r][k].sub(&c.mul(&a[row][k]));
                    a[r][k] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v: Vec<F> = (0..cols).map(|_| F::zero()).collect();
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = a[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Congruence diagonalization of a symmetric matrix. Returns the diagonal
/// (nonzero entries first, then the zeros of the radical) and a matrix `P`
/// whose columns are the new basis vectors, so that `P^T G P = diag`.
pub fn congruence_diagonalize<F: Field>(g: &Matrix<F>) -> (Vec<F>, Matrix<F>) {
    let n = g.len();
    let mut a = g.clone();
    let mut p: Matrix<F> = identity(n);
    let mut active: Vec<usize> = (0..n).collect();
    let mut diag = Vec::with_capacity(n);
    let mut order = Vec::with_capacity(n);
    loop {
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !a[i][i].is_zero())
            .min_by_key(|&i| (a[i][i].weight(), i));
        let i = match pivot {
            Some(i) => i,
            None => {
                let pair = active.iter().find_map(|&i| {
                    active.iter().find(|&&j| j != i && !a[i][j].is_zero()).map(|&j| (i, j))
                });
                let Some((i, j)) = pair else { break };
                // e_i <- e_i + e_j makes the (i, i) entry 2 a_ij.
                for k in 0..n {
                    let v = a[i][k].add(&a[j][k]);
                    a[i][k] = v;
                }
                for k in 0..n {
                    let v = a[k][i].add(&a[k][j]);
                    a[k][i] = v;
                }
                for row in p.iter_mut() {
                    let v = row[i].add(&row[j]);
                    row[i] = v;
                }
                i
            }
        };
        active.retain(|&k| k != i);
        for &j in &active {
            if a[j][i].is_zero() {
                continue;
            }
            let c = a[j][i].div(&a[i][i]);
            for k in 0..n {
                let v = a[j][k].sub(&c.mul(&a[i][k]));
                a[j][k] = v;
            }
            for k in 0..n {
                let v = a[k][j].sub(&c.mul(&a[k][i]));
                a[k][j] = v;
            }
            for row in p.iter_mut() {
                let v = row[j].sub(&c.mul(&row[i]));
                row[j] = v;
            }
        }
        diag.push(a[i][i].clone());
        order.push(i);
    }
    for &i in &active {
        diag.push(F::zero());
        order.push(i);
    }
    let p = p.iter().map(|row| order.iter().map(|&c| row[c].clone()).collect()).collect();
    (diag, p)
}

pub fn transpose<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = F::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = acc.add(&row[k].mul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}
