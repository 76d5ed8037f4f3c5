//! Dense polynomials over a small prime field `F_p`, constant term first,
//! with Berlekamp's factorization for squarefree monic inputs.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::IntPolynomial;

pub(crate) type FpPoly = Vec<u64>;

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

pub(crate) fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn reduce(f: &IntPolynomial, p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    trim(f.coeffs().iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

pub(crate) fn add(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect())
}

pub(crate) fn sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect())
}

pub(crate) fn mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(x, y, p)) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &FpPoly, c: u64, p: u64) -> FpPoly {
    trim(a.iter().map(|&x| mulm(x, c, p)).collect())
}

pub(crate) fn monic(a: &FpPoly, p: u64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => scale(a, invm(l, p), p),
    }
}

pub(crate) fn divrem(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    assert!(!b.is_empty());
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let inv = invm(*b.last().unwrap(), p);
    let db = b.len() - 1;
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - db];
    for shift in (0..q.len()).rev() {
        let top = mulm(r[shift + db], inv, p);
        if top == 0 {
            continue;
        }
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mulm(top, bc, p)) % p;
        }
        q[shift] = top;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    divrem(a, b, p).1
}

pub(crate) fn gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub(crate) fn ext_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let inv = invm(*r0.last().unwrap(), p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

pub(crate) fn derivative(a: &FpPoly, p: u64) -> FpPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| mulm(c, i as u64 % p, p)).collect())
}

pub(crate) fn is_squarefree(a: &FpPoly, p: u64) -> bool {
    let d = derivative(a, p);
    if d.is_empty() {
        return a.len() <= 1;
    }
    gcd(a, &d, p).len() == 1
}

/// Kernel basis of a square matrix over `F_p` (row-major).
fn nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    let mut is_pivot = vec![false; n];
    for col in 0..n {
        let Some(pr) = (row..n).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, pr);
        let inv = invm(m[row][col], p);
        for c in 0..n {
            m[row][c] = mulm(m[row][c], inv, p);
        }
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..n {
                    m[r][c] = (m[r][c] + p - mulm(f, m[row][c], p)) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        is_pivot[col] = true;
        row += 1;
        if row == n {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = (p - m[r][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Irreducible monic factors of a monic squarefree polynomial over `F_p`.
pub(crate) fn berlekamp(f: &FpPoly, p: u64) -> Vec<FpPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    // Row i of Q holds t^(i*p) mod f.
    let xp = powmod_x(p, f, p);
    let mut q = Vec::with_capacity(n);
    let mut cur: FpPoly = vec![1];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        q.push(row);
        cur = rem(&mul(&cur, &xp, p), f, p);
    }
    // v Q = v  <=>  (Q - I)^T v^T = 0
    let mut m = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut val = q[j][i];
            if i == j {
                val = (val + p - 1) % p;
            }
            m[i][j] = val;
        }
    }
    let basis = nullspace(m, p);
    let k = basis.len();
    let mut factors = vec![f.clone()];
    if k == 1 {
        return factors;
    }
    for v in basis.iter() {
        let v = trim(v.clone());
        if v.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for h in factors.into_iter() {
            if h.len() <= 2 {
                next.push(h);
                continue;
            }
            let mut rest = h;
            for s in 0..p {
                if rest.len() <= 2 {
                    break;
                }
                let vs = sub(&v, &vec![s], p);
                let g = gcd(&rest, &vs, p);
                if g.len() > 1 && g.len() < rest.len() {
                    rest = divrem(&rest, &g, p).0;
                    next.push(g);
                }
            }
            next.push(monic(&rest, p));
        }
        factors = next;
        if factors.len() == k {
            break;
        }
    }
    factors
}

/// `t^e mod f`
fn powmod_x(e: u64, f: &FpPoly, p: u64) -> FpPoly {
    let mut result: FpPoly = vec![1];
    let mut base = rem(&vec![0, 1], f, p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &base, p), f, p);
        }
        base = rem(&mul(&base, &base, p), f, p);
        e >>= 1;
    }
    result
}
