//! Instance generators and brute-force oracles shared by the integration
//! suites. Nothing here calls the decision machinery; the oracles search
//! for points directly.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use qpencil_core::arith::{rat, Rational};
use qpencil_core::form::{det_poly, Pencil, QuadraticFormQ};
use qpencil_core::poly::{rational_roots, IntPolynomial, QPoly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

pub fn rand_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    rat(nonzero(rng, bound), rng.gen_range(1..=bound))
}

/// Form from polynomial coefficients: `c[i][j]` (i <= j) multiplies
/// `x_i x_j`; cross terms are halved into the Gram matrix.
pub fn form_from_coeffs(c: &[Vec<i64>]) -> QuadraticFormQ {
    let m = c.len();
    let mut q = QuadraticFormQ::zero(m);
    for i in 0..m {
        q.set(i, i, rat(c[i][i], 1));
        for j in i + 1..m {
            q.set(i, j, rat(c[i][j], 2));
        }
    }
    q
}

pub fn permute(q: &QuadraticFormQ, perm: &[usize]) -> QuadraticFormQ {
    let m = q.dim();
    let mut out = QuadraticFormQ::zero(m);
    for i in 0..m {
        for j in 0..m {
            out.set(perm[i], perm[j], q.entry(i, j).clone());
        }
    }
    out
}

/// A pencil on `n + 1` variables whose forms both vanish on the span of
/// `r + 1` coordinate vectors (chosen by a random permutation).
/// Coefficients are in `[-bound, bound]`; `D` is not identically zero.
pub fn planted_pencil(rng: &mut ChaCha8Rng, r: usize, n: usize, bound: i64) -> (Pencil, Vec<usize>) {
    let m = n + 1;
    let k = r + 1;
    loop {
        let make = |rng: &mut ChaCha8Rng| {
            let mut c = vec![vec![0i64; m]; m];
            for i in 0..m {
                for j in i..m {
                    if j >= k {
                        c[i][j] = rng.gen_range(-bound..=bound);
                    }
                }
            }
            form_from_coeffs(&c)
        };
        let f = make(rng);
        let g = make(rng);
        let mut perm: Vec<usize> = (0..m).collect();
        perm.shuffle(rng);
        let pencil = Pencil::new(permute(&f, &perm), permute(&g, &perm)).unwrap();
        if !det_poly(&pencil).is_zero() {
            let planted = perm[..k].to_vec();
            return (pencil, planted);
        }
    }
}

/// Random symmetric integer-coefficient form (coefficients of monomials).
pub fn random_form(rng: &mut ChaCha8Rng, m: usize, bound: i64) -> QuadraticFormQ {
    let mut c = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in i..m {
            c[i][j] = rng.gen_range(-bound..=bound);
        }
    }
    form_from_coeffs(&c)
}

/// Positive definite form `sum a_i x_i^2 + sum_{i<j} c_ij x_i x_j` with
/// `|c_ij|` small relative to the diagonal (diagonally dominant).
pub fn positive_definite(rng: &mut ChaCha8Rng, m: usize) -> QuadraticFormQ {
    let mut c = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            c[i][j] = rng.gen_range(-2..=2);
        }
    }
    for i in 0..m {
        c[i][i] = 2 * m as i64 + rng.gen_range(0..=5);
    }
    form_from_coeffs(&c)
}

// ---------------------------------------------------------------------------
// p-adic and real isotropy of diagonal integer forms

fn vp(mut a: i128, p: i128) -> u32 {
    if a == 0 {
        return u32::MAX;
    }
    let mut v = 0;
    while a % p == 0 {
        a /= p;
        v += 1;
    }
    v
}

/// Isotropy of `sum a_i x_i^2` over `Q_p` by lifting primitive zeros
/// modulo `p^k`, `k <= 6`. A branch is certified once
/// `q(x) = 0 mod p^(2 mu + 1)` with `mu = min v(2 a_i x_i)` (Hensel); the
/// form is anisotropic when no primitive zero survives to some level.
/// `None` if neither happens by `p^6`.
pub fn padic_isotropic(entries: &[i64], p: i64) -> Option<bool> {
    let p = p as i128;
    // strip p^2 factors: a p^2 x^2 = a (p x)^2
    let a: Vec<i128> = entries
        .iter()
        .map(|&e| {
            let mut e = e as i128;
            while e % (p * p) == 0 {
                e /= p * p;
            }
            e
        })
        .collect();
    let n = a.len();
    let q = |x: &[i128]| -> i128 { a.iter().zip(x).map(|(ai, xi)| ai * xi * xi).sum() };
    let mut undecided = false;

    fn rec(
        x: &[i128],
        j: u32,
        p: i128,
        a: &[i128],
        q: &dyn Fn(&[i128]) -> i128,
        undecided: &mut bool,
    ) -> bool {
        let mu = (0..a.len()).map(|i| vp(2 * a[i] * x[i], p)).min().unwrap();
        if mu != u32::MAX && j >= 2 * mu + 1 {
            return true;
        }
        if j >= 6 {
            *undecided = true;
            return false;
        }
        let pj = p.pow(j);
        let pj1 = pj * p;
        let n = x.len();
        let mut y = vec![0i128; n];
        loop {
            let child: Vec<i128> = x.iter().zip(&y).map(|(a, b)| a + pj * b).collect();
            if q(&child) % pj1 == 0 && rec(&child, j + 1, p, a, q, undecided) {
                return true;
            }
            let mut k = 0;
            while k < n {
                y[k] += 1;
                if y[k] < p {
                    break;
                }
                y[k] = 0;
                k += 1;
            }
            if k == n {
                return false;
            }
        }
    }

    let mut x = vec![0i128; n];
    loop {
        let mut k = 0;
        while k < n {
            x[k] += 1;
            if x[k] < p {
                break;
            }
            x[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        if q(&x) % p == 0 && rec(&x, 1, p, &a, &q, &mut undecided) {
            return Some(true);
        }
    }
    if undecided {
        None
    } else {
        Some(false)
    }
}

/// Real isotropy by a sign search over the grid `[-2, 2]^n`: isotropic iff
/// some grid vector is a nonzero zero or two independent grid vectors give
/// opposite signs (the segment between them avoids the origin).
pub fn real_isotropic(q: &QuadraticFormQ) -> bool {
    let n = q.dim();
    let mut pos = None;
    let mut neg = None;
    let mut y = vec![-2i64; n];
    loop {
        if y.iter().any(|&c| c != 0) {
            let v: Vec<Rational> = y.iter().map(|&c| rat(c, 1)).collect();
            let s = q.eval(&v);
            if s.is_zero() {
                return true;
            }
            let slot = if s.is_positive() { &mut pos } else { &mut neg };
            slot.get_or_insert(v);
            // q(c u) = c^2 q(u), so vectors of opposite sign are independent
            // and the segment joining them misses the origin
            if pos.is_some() && neg.is_some() {
                return true;
            }
        }
        let mut k = 0;
        while k < n {
            y[k] += 1;
            if y[k] <= 2 {
                break;
            }
            y[k] = -2;
            k += 1;
        }
        if k == n {
            return false;
        }
    }
}

// ---------------------------------------------------------------------------
// box searches over Z

fn isqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// Nontrivial zero of a ternary integer form with `|x|, |y|, |z| <= b`.
/// `c` holds monomial coefficients as in [`form_from_coeffs`].
pub fn box_zero_ternary(c: &[Vec<i64>], b: i64) -> Option<[i64; 3]> {
    let (a, cxz, cyz) = (c[2][2] as i128, c[0][2] as i128, c[1][2] as i128);
    for x in -b..=b {
        for y in -b..=b {
            let (xi, yi) = (x as i128, y as i128);
            let bl = cxz * xi + cyz * yi;
            let cc = c[0][0] as i128 * xi * xi + c[0][1] as i128 * xi * yi + c[1][1] as i128 * yi * yi;
            let mut roots = Vec::new();
            if a == 0 {
                if bl != 0 && cc % bl == 0 {
                    roots.push(-cc / bl);
                } else if bl == 0 && cc == 0 {
                    roots.push(if x == 0 && y == 0 { 1 } else { 0 });
                }
            } else if let Some(s) = isqrt(bl * bl - 4 * a * cc) {
                for num in [-bl + s, -bl - s] {
                    if num % (2 * a) == 0 {
                        roots.push(num / (2 * a));
                    }
                }
            }
            for z in roots {
                if z.abs() <= b as i128 && (x != 0 || y != 0 || z != 0) {
                    return Some([x, y, z as i64]);
                }
            }
        }
    }
    None
}

/// Nontrivial zero of `a x^2 + b y^2 + c z^2 + d w^2` with coordinates in
/// `[-bound, bound]`, by meeting in the middle on `a x^2 + b y^2`.
pub fn box_zero_diag4(e: &[i64; 4], bound: i64) -> bool {
    // value -> whether some (x, y) != (0, 0) attains it
    let mut left: HashMap<i128, bool> = HashMap::new();
    for x in 0..=bound as i128 {
        for y in 0..=bound as i128 {
            let v = e[0] as i128 * x * x + e[1] as i128 * y * y;
            let nz = x != 0 || y != 0;
            let slot = left.entry(v).or_insert(false);
            *slot |= nz;
        }
    }
    for z in 0..=bound as i128 {
        for w in 0..=bound as i128 {
            let v = -(e[2] as i128 * z * z + e[3] as i128 * w * w);
            if let Some(&nz) = left.get(&v) {
                if nz || z != 0 || w != 0 {
                    return true;
                }
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// rational intersection points of two conics

/// Binary-form coefficients of a ternary form in `z`:
/// `q = a2 z^2 + a1(x, y) z + a0(x, y)`, each evaluated on the line `y = 1`
/// (or `x = 1, y = 0` when `at_infinity`), as polynomials in `x`.
fn z_coeffs(c: &[Vec<i64>], at_infinity: bool) -> [IntPolynomial; 3] {
    let p = IntPolynomial::from_i64;
    if at_infinity {
        // x = 1, y = 0
        [p(&[c[0][0]]), p(&[c[0][2]]), p(&[c[2][2]])]
    } else {
        // a0 = c00 x^2 + c01 x + c11, a1 = c02 x + c12, a2 = c22
        [p(&[c[1][1], c[0][1], c[0][0]]), p(&[c[1][2], c[0][2]]), p(&[c[2][2]])]
    }
}

fn qpoly_in_z(c: &[Vec<i64>], x: &Rational, y: &Rational) -> QPoly {
    let a0 = rat(c[0][0], 1) * x * x + rat(c[0][1], 1) * x * y + rat(c[1][1], 1) * y * y;
    let a1 = rat(c[0][2], 1) * x + rat(c[1][2], 1) * y;
    let a2 = rat(c[2][2], 1);
    QPoly::new(vec![a0, a1, a2])
}

fn common_rational_root(a: &QPoly, b: &QPoly) -> bool {
    if a.is_zero() && b.is_zero() {
        return true;
    }
    let g = if a.is_zero() {
        b.clone()
    } else if b.is_zero() {
        a.clone()
    } else {
        a.gcd(b)
    };
    if g.deg() == 0 {
        return false;
    }
    let (_, prim) = g.to_primitive_int();
    !rational_roots(&prim).is_empty()
}

/// Whether the conics `f = g = 0` in `P^2` share a rational point, by
/// projecting from `[0:0:1]`: the `x/y`-coordinates of common points are
/// roots of `Res_z(f, g)`, and each candidate line is checked exactly.
pub fn conics_share_rational_point(cf: &[Vec<i64>], cg: &[Vec<i64>]) -> bool {
    if cf[2][2] == 0 && cg[2][2] == 0 {
        return true; // [0:0:1]
    }
    let res = |a: &[IntPolynomial; 3], b: &[IntPolynomial; 3]| -> IntPolynomial {
        let u = &(&a[2] * &b[0]) - &(&a[0] * &b[2]);
        let v = &(&a[2] * &b[1]) - &(&a[1] * &b[2]);
        let w = &(&a[1] * &b[0]) - &(&a[0] * &b[1]);
        &(&u * &u) - &(&v * &w)
    };
    let r = res(&z_coeffs(cf, false), &z_coeffs(cg, false));
    assert!(!r.is_zero(), "conics with a common component");
    let mut lines: Vec<(Rational, Rational)> =
        rational_roots(&r).into_iter().map(|x0| (x0, Rational::one())).collect();
    let r_inf = res(&z_coeffs(cf, true), &z_coeffs(cg, true));
    if r_inf.is_zero() {
        lines.push((Rational::one(), Rational::zero()));
    }
    lines.iter().any(|(x, y)| common_rational_root(&qpoly_in_z(cf, x, y), &qpoly_in_z(cg, x, y)))
}

pub fn coeffs_of(q: &QuadraticFormQ) -> Vec<Vec<i64>> {
    let m = q.dim();
    let mut c = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in i..m {
            let v = if i == j { q.entry(i, i).clone() } else { q.entry(i, j) * rat(2, 1) };
            assert!(v.is_integer());
            c[i][j] = i64::try_from(v.to_integer()).unwrap();
        }
    }
    c
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for k in 0..cols {
                    let v = &a[r][k] * &f;
                    a[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Random integer matrix of determinant +-1: a product of elementary
/// column operations with small multipliers.
pub fn unimodular(rng: &mut ChaCha8Rng, m: usize, steps: usize) -> Vec<Vec<Rational>> {
    let mut p: Vec<Vec<Rational>> =
        (0..m).map(|i| (0..m).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    if m < 2 {
        return p;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..m);
        let mut j = rng.gen_range(0..m);
        while j == i {
            j = rng.gen_range(0..m);
        }
        let c = rat(nonzero(rng, 2), 1);
        // column i += c * column j
        for row in p.iter_mut() {
            let v = &row[j] * &c;
            row[i] += v;
        }
    }
    p
}

/// `P^T G P` for a form `G`.
pub fn transform(q: &QuadraticFormQ, p: &[Vec<Rational>]) -> QuadraticFormQ {
    let m = q.dim();
    let mut out = QuadraticFormQ::zero(m);
    for i in 0..m {
        for j in i..m {
            let mut s = Rational::zero();
            for a in 0..m {
                for b in 0..m {
                    s += &p[a][i] * q.entry(a, b) * &p[b][j];
                }
            }
            out.set(i, j, s);
        }
    }
    out
}

/// Rational roots of an integer polynomial by the rational root theorem.
pub fn has_rational_root(c: &[i64]) -> bool {
    if c[0] == 0 {
        return true;
    }
    let divisors = |n: i64| -> Vec<i64> { (1..=n.abs()).filter(|d| n % d == 0).collect() };
    let lead = *c.last().unwrap();
    for num in divisors(c[0]) {
        for den in divisors(lead) {
            for s in [1, -1] {
                let x = rat(s * num, den);
                let v: Rational = c.iter().rev().fold(Rational::zero(), |acc, &a| acc * &x + rat(a, 1));
                if v.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}
