//! Pencils whose members are all singular but whose base locus still has
//! points everywhere locally: `Q1 = q1 + x5 x6`, `Q2 = q2 + x5 x7` (and the
//! 10-variable variant with `x8 x9`, `x8 x10`), built from a pair `(q1, q2)`
//! of quaternary forms cutting out a genus-1 curve with no rational point.
//! The common zeros `(a, 0, 0, 0, *, *, *)` with `x5 = 0` span a
//! 3-dimensional totally isotropic space whenever `a` is a common zero.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{int, mod_inverse, rat, rat_int, valuation, Rational};
use crate::error::{Error, Result};
use crate::form::{diagonalize_q, Pencil, QuadraticFormQ};
use crate::local::Place;

pub const DEFAULT_PRECISION: u32 = 6;
pub const DEFAULT_SEARCH_BOUND: u64 = 200_000;
/// Largest absolute coordinate tried by the real-place grid.
pub const REAL_GRID_RADIUS: i64 = 10;

const MAX_DEPTH: u32 = 24;
const MAX_DEEP_CANDIDATES: usize = 32;
const BISECTION_STEPS: u32 = 48;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusOneInput {
    pub q1: QuadraticFormQ,
    pub q2: QuadraticFormQ,
    pub documentation: String,
}

impl GenusOneInput {
    pub fn new(q1: QuadraticFormQ, q2: QuadraticFormQ, documentation: impl Into<String>) -> Result<Self> {
        if q1.dim() != 4 || q2.dim() != 4 {
            return Err(Error::DimensionMismatch(alloc::format!(
                "genus-1 input needs two quaternary forms, got dimensions {} and {}",
                q1.dim(),
                q2.dim()
            )));
        }
        Ok(GenusOneInput { q1, q2, documentation: documentation.into() })
    }

    /// `XY - Z^2 = 0`, `X^2 - 17 Y^2 - 2 W^2 = 0`: the curve
    /// `2 w^2 = u^4 - 17 v^4` under `X = u^2, Y = v^2, Z = uv`.
    pub fn demo() -> Self {
        let mut q1 = QuadraticFormQ::zero(4);
        q1.set(0, 1, rat(1, 2));
        q1.set(2, 2, rat(-1, 1));
        let q2 = QuadraticFormQ::diagonal(&[rat(1, 1), rat(-17, 1), rat(0, 1), rat(-2, 1)]);
        GenusOneInput::new(q1, q2, DEMO_DOCUMENTATION).expect("dimension 4")
    }
}

pub const DEMO_DOCUMENTATION: &str = "Lind-Reichardt curve 2w^2 = u^4 - 17v^4, written as the \
intersection XY = Z^2, X^2 - 17Y^2 = 2W^2 in P^3 (X = u^2, Y = v^2, Z = uv). It has points over R \
and over every Q_p, and no rational point (C.-E. Lind 1940, H. Reichardt 1942). The absence of \
rational points is quoted from the literature; this tool only verifies local solvability and \
runs a bounded search.";

fn embed(q: &QuadraticFormQ, m: usize) -> QuadraticFormQ {
    let mut out = QuadraticFormQ::zero(m);
    for i in 0..q.dim() {
        for j in 0..q.dim() {
            out.set(i, j, q.entry(i, j).clone());
        }
    }
    out
}

/// `x_i x_j` contributes `1/2` at `(i, j)` and `(j, i)`.
fn add_cross(q: &mut QuadraticFormQ, i: usize, j: usize) {
    q.set(i, j, rat(1, 2));
}

/// `Q1 = q1(x1..x4) + x5 x6`, `Q2 = q2(x1..x4) + x5 x7`.
pub fn build_seven_variable_pair(input: &GenusOneInput) -> Pencil {
    let mut f = embed(&input.q1, 7);
    let mut g = embed(&input.q2, 7);
    add_cross(&mut f, 4, 5);
    add_cross(&mut g, 4, 6);
    Pencil::new(f, g).expect("same dimension")
}

/// The 7-variable pair plus `x8 x9` in `Q1` and `x8 x10` in `Q2`; the case
/// `r = 4`, `n = 9`.
pub fn build_ten_variable_pair(input: &GenusOneInput) -> Pencil {
    let mut f = embed(&input.q1, 10);
    let mut g = embed(&input.q2, 10);
    add_cross(&mut f, 4, 5);
    add_cross(&mut g, 4, 6);
    add_cross(&mut f, 7, 8);
    add_cross(&mut g, 7, 9);
    Pencil::new(f, g).expect("same dimension")
}

/// Common zero of both forms of a pair over a completion of Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalWitness {
    Adic(AdicWitness),
    Real(RealWitness),
}

/// A primitive integer vector with `F_i(x) = 0 mod p^precision` for the
/// integral primitive rescalings `F_i` of both forms, and a 2x2 minor of
/// the Jacobian of valuation `minor_valuation = mu` with
/// `2 mu + 1 <= precision`. Hensel's lemma then gives a true zero over
/// `Z_p` congruent to `point` modulo `p^(precision - mu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdicWitness {
    pub p: BigInt,
    pub point: Vec<BigInt>,
    pub precision: u32,
    pub minor: (usize, usize),
    pub minor_valuation: u32,
}

/// Real zero certificate. Solving `f = 0` for coordinate `solved` on
/// `branch` (the sign in front of the square root) gives a continuous
/// curve over the segment from `lower` to `upper` (the other coordinates);
/// the discriminant is positive on the whole segment and `g` takes opposite
/// signs (or vanishes) at the two ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealWitness {
    pub solved: usize,
    pub branch: i8,
    pub lower: Vec<Rational>,
    pub upper: Vec<Rational>,
    /// Rational approximation of a common zero inside the bracket.
    pub approx: Vec<Rational>,
}

impl LocalWitness {
    pub fn place(&self) -> Place {
        match self {
            LocalWitness::Adic(w) => Place::Prime(w.p.clone()),
            LocalWitness::Real(_) => Place::Real,
        }
    }
}

/// Searches for a common zero of `pair.f` and `pair.g` over the completion
/// at `v`, with the default precision `p^6`.
pub fn local_common_zero(pair: &Pencil, v: &Place, search_bound: u64) -> Option<LocalWitness> {
    local_common_zero_with(pair, v, search_bound, DEFAULT_PRECISION)
}

pub fn local_common_zero_with(pair: &Pencil, v: &Place, search_bound: u64, precision: u32) -> Option<LocalWitness> {
    match v {
        Place::Real => real_common_zero(&pair.f, &pair.g, search_bound).map(LocalWitness::Real),
        Place::Prime(p) => adic_common_zero(&pair.f, &pair.g, p, search_bound, precision.max(1)).map(LocalWitness::Adic),
    }
}

/// Rechecks a witness from scratch against the pair.
pub fn verify_witness(pair: &Pencil, w: &LocalWitness) -> bool {
    match w {
        LocalWitness::Adic(a) => verify_adic(pair, a),
        LocalWitness::Real(r) => verify_real(pair, r),
    }
}

// ---------------------------------------------------------------------------
// p-adic search

/// Primitive integral rescaling: `F(x) = x^T S x / 2`, `S` symmetric with
/// even diagonal.
#[derive(Clone, Debug)]
struct IntForm {
    s: Vec<Vec<BigInt>>,
}

impl IntForm {
    fn from_gram(q: &QuadraticFormQ) -> Self {
        let n = q.dim();
        let mut l = BigInt::one();
        for i in 0..n {
            for j in 0..n {
                l = l.lcm(q.entry(i, j).denom());
            }
        }
        let mut s: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| (q.entry(i, j) * rat_int(&l * 2)).to_integer()).collect())
            .collect();
        let mut c = BigInt::zero();
        for i in 0..n {
            c = c.gcd(&(&s[i][i] / 2));
            for j in i + 1..n {
                c = c.gcd(&s[i][j]);
            }
        }
        if !c.is_zero() && !c.is_one() {
            for row in s.iter_mut() {
                for e in row.iter_mut() {
                    *e /= &c;
                }
            }
        }
        IntForm { s }
    }

    fn eval(&self, x: &[BigInt]) -> BigInt {
        let n = x.len();
        let mut acc = BigInt::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            let mut row = BigInt::zero();
            for j in 0..n {
                row += &self.s[i][j] * &x[j];
            }
            acc += &x[i] * row;
        }
        acc / 2
    }

    fn grad(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.s.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    /// Coefficients of the polynomial `F` (squares then cross terms) mod `p`.
    fn coeffs_mod(&self, p: i128) -> (Vec<i128>, Vec<Vec<i128>>) {
        let pb = BigInt::from(p);
        let n = self.s.len();
        let red = |b: &BigInt| b.mod_floor(&pb).to_i128().unwrap();
        let sq = (0..n).map(|i| red(&(&self.s[i][i] / 2))).collect();
        let full = (0..n).map(|i| (0..n).map(|j| red(&self.s[i][j])).collect()).collect();
        (sq, full)
    }
}

fn val(a: &BigInt, p: &BigInt) -> Option<u32> {
    if a.is_zero() {
        None
    } else {
        Some(valuation(a, p).0)
    }
}

/// `min(v(a), v(b))`, `None` for infinity.
fn min_val(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Smallest valuation of a 2x2 minor of the rows `j1`, `j2`, with its columns.
fn best_minor(j1: &[BigInt], j2: &[BigInt], p: &BigInt) -> Option<(u32, usize, usize)> {
    let n = j1.len();
    let mut best: Option<(u32, usize, usize)> = None;
    for a in 0..n {
        for b in a + 1..n {
            let m = &j1[a] * &j2[b] - &j1[b] * &j2[a];
            if let Some(v) = val(&m, p) {
                if best.map_or(true, |(bv, _, _)| v < bv) {
                    best = Some((v, a, b));
                    if v == 0 {
                        return best;
                    }
                }
            }
        }
    }
    best
}

struct AdicSearch<'a> {
    f1: &'a IntForm,
    f2: &'a IntForm,
    p: BigInt,
    pi: i128,
    budget: u64,
    precision: u32,
}

impl AdicSearch<'_> {
    fn certify(&self, x: &[BigInt]) -> Option<AdicWitness> {
        let vf = min_val(val(&self.f1.eval(x), &self.p), val(&self.f2.eval(x), &self.p));
        let (mu, a, b) = best_minor(&self.f1.grad(x), &self.f2.grad(x), &self.p)?;
        if vf.map_or(true, |v| v >= 2 * mu + 1) {
            self.newton(x, mu, a, b)
        } else {
            None
        }
    }

    /// Newton iteration on the coordinates `a`, `b` until both values
    /// vanish modulo `p^T`, `T = max(precision, 2 mu + 1)`.
    fn newton(&self, x: &[BigInt], mu: u32, a: usize, b: usize) -> Option<AdicWitness> {
        let t = self.precision.max(2 * mu + 1);
        let m = num_traits::pow(self.p.clone(), t as usize);
        let pmu = num_traits::pow(self.p.clone(), mu as usize);
        let mut x: Vec<BigInt> = x.iter().map(|c| c.mod_floor(&m)).collect();
        for _ in 0..64 {
            let v1 = self.f1.eval(&x);
            let v2 = self.f2.eval(&x);
            if (&v1 % &m).is_zero() && (&v2 % &m).is_zero() {
                let (mu2, a2, b2) = best_minor(&self.f1.grad(&x), &self.f2.grad(&x), &self.p)?;
                if mu2 != mu {
                    return None;
                }
                return Some(AdicWitness {
                    p: self.p.clone(),
                    point: x,
                    precision: t,
                    minor: (a2, b2),
                    minor_valuation: mu,
                });
            }
            let j1 = self.f1.grad(&x);
            let j2 = self.f2.grad(&x);
            let det = &j1[a] * &j2[b] - &j1[b] * &j2[a];
            let unit = &det / &pmu;
            let inv = mod_inverse(&unit, &m)?;
            let na = &j2[b] * &v1 - &j1[b] * &v2;
            let nb = &j1[a] * &v2 - &j2[a] * &v1;
            if !(&na % &pmu).is_zero() || !(&nb % &pmu).is_zero() {
                return None;
            }
            x[a] = (&x[a] - &na / &pmu * &inv).mod_floor(&m);
            x[b] = (&x[b] - &nb / &pmu * &inv).mod_floor(&m);
        }
        None
    }

    /// Projective points modulo `p` (first nonzero coordinate 1, sparse
    /// points first). Returns a certified witness or collects singular
    /// candidates for the deeper search.
    fn scan(&mut self, deep: &mut Vec<Vec<BigInt>>) -> Option<AdicWitness> {
        let n = self.f1.s.len();
        let p = self.pi;
        let (sq1, full1) = self.f1.coeffs_mod(p);
        let (sq2, full2) = self.f2.coeffs_mod(p);
        let eval = |sq: &[i128], full: &[Vec<i128>], x: &[i128]| -> i128 {
            let mut acc = 0i128;
            for i in 0..n {
                if x[i] == 0 {
                    continue;
                }
                acc = (acc + sq[i] * x[i] % p * x[i]) % p;
                for j in i + 1..n {
                    acc = (acc + full[i][j] * x[i] % p * x[j]) % p;
                }
            }
            acc
        };
        let grad = |full: &[Vec<i128>], x: &[i128]| -> Vec<i128> {
            (0..n).map(|i| (0..n).fold(0i128, |acc, j| (acc + full[i][j] * x[j]) % p)).collect()
        };
        for lead in (0..n).rev() {
            let mut x = vec![0i128; n];
            x[lead] = 1;
            loop {
                if self.budget == 0 {
                    return None;
                }
                self.budget -= 1;
                if eval(&sq1, &full1, &x) == 0 && eval(&sq2, &full2, &x) == 0 {
                    let g1 = grad(&full1, &x);
                    let g2 = grad(&full2, &x);
                    let smooth = (0..n).any(|a| (a + 1..n).any(|b| (g1[a] * g2[b] - g1[b] * g2[a]) % p != 0));
                    let xb: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
                    if smooth {
                        if let Some(w) = self.certify(&xb) {
                            return Some(w);
                        }
                    } else if deep.len() < MAX_DEEP_CANDIDATES {
                        deep.push(xb);
                    }
                }
                // odometer over the coordinates after `lead`
                let mut k = n;
                let advanced = loop {
                    if k == lead + 1 {
                        break false;
                    }
                    k -= 1;
                    x[k] += 1;
                    if x[k] < p {
                        break true;
                    }
                    x[k] = 0;
                };
                if !advanced {
                    break;
                }
            }
        }
        None
    }

    /// Depth-first lifting of `x` (a zero modulo `p^m`) to zeros modulo
    /// `p^(m+1)`; children solve the linearized congruences.
    fn lift(&mut self, x: &[BigInt], m: u32) -> Option<AdicWitness> {
        if self.budget == 0 {
            return None;
        }
        self.budget -= 1;
        if let Some(w) = self.certify(x) {
            return Some(w);
        }
        if m >= MAX_DEPTH {
            return None;
        }
        let n = x.len();
        let p = self.pi;
        let pm = num_traits::pow(self.p.clone(), m as usize);
        let red = |b: &BigInt| b.mod_floor(&self.p).to_i128().unwrap();
        let rows = [
            (self.f1.grad(x), &self.f1.eval(x) / &pm),
            (self.f2.grad(x), &self.f2.eval(x) / &pm),
        ];
        // augmented 2 x (n+1) system over F_p
        let mut sys: Vec<Vec<i128>> = rows
            .iter()
            .map(|(g, c)| {
                let mut r: Vec<i128> = g.iter().map(red).collect();
                r.push((p - red(c)) % p);
                r
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            if row == 2 {
                break;
            }
            let Some(pr) = (row..2).find(|&r| sys[r][col] != 0) else { continue };
            sys.swap(row, pr);
            let inv = mod_inverse(&BigInt::from(sys[row][col]), &self.p).unwrap().to_i128().unwrap();
            for c in 0..=n {
                sys[row][c] = sys[row][c] * inv % p;
            }
            for r in 0..2 {
                if r != row && sys[r][col] != 0 {
                    let f = sys[r][col];
                    for c in 0..=n {
                        sys[r][c] = ((sys[r][c] - f * sys[row][c]) % p + p) % p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if (row..2).any(|r| sys[r][n] != 0) {
            return None;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut choice = vec![0i128; free.len()];
        loop {
            let mut y = vec![0i128; n];
            for (k, &c) in free.iter().enumerate() {
                y[c] = choice[k];
            }
            for (r, &pc) in pivots.iter().enumerate() {
                let mut v = sys[r][n];
                for &c in &free {
                    v = ((v - sys[r][c] * y[c]) % p + p) % p;
                }
                y[pc] = v;
            }
            let child: Vec<BigInt> = x.iter().zip(&y).map(|(a, &b)| a + &pm * b).collect();
            if let Some(w) = self.lift(&child, m + 1) {
                return Some(w);
            }
            if self.budget == 0 {
                return None;
            }
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < p {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                return None;
            }
        }
    }
}

fn adic_common_zero(f: &QuadraticFormQ, g: &QuadraticFormQ, p: &BigInt, search_bound: u64, precision: u32) -> Option<AdicWitness> {
    // modular arithmetic below is carried in i128
    let pi = p.to_i128().filter(|&v| v < (1i128 << 31))?;
    let f1 = IntForm::from_gram(f);
    let f2 = IntForm::from_gram(g);
    let mut search = AdicSearch { f1: &f1, f2: &f2, p: p.clone(), pi, budget: search_bound, precision };
    let mut deep = Vec::new();
    if let Some(w) = search.scan(&mut deep) {
        return Some(w);
    }
    for x in deep {
        if let Some(w) = search.lift(&x, 1) {
            return Some(w);
        }
    }
    None
}

fn verify_adic(pair: &Pencil, w: &AdicWitness) -> bool {
    let f1 = IntForm::from_gram(&pair.f);
    let f2 = IntForm::from_gram(&pair.g);
    if w.point.len() != pair.dim() || w.point.iter().all(|c| (c % &w.p).is_zero()) {
        return false;
    }
    let m = num_traits::pow(w.p.clone(), w.precision as usize);
    if !(f1.eval(&w.point) % &m).is_zero() || !(f2.eval(&w.point) % &m).is_zero() {
        return false;
    }
    let (a, b) = w.minor;
    let j1 = f1.grad(&w.point);
    let j2 = f2.grad(&w.point);
    let minor = &j1[a] * &j2[b] - &j1[b] * &j2[a];
    val(&minor, &w.p) == Some(w.minor_valuation) && 2 * w.minor_valuation + 1 <= w.precision
}

// ---------------------------------------------------------------------------
// real search

/// `sign(alpha + beta * sqrt(d))` for `d > 0`.
fn sign_surd(alpha: &Rational, beta: &Rational, d: &Rational) -> i8 {
    let sa = sgn(alpha);
    let sb = sgn(beta);
    if sb == 0 || sa == sb {
        return if sa == 0 { sb } else { sa };
    }
    if sa == 0 {
        return sb;
    }
    let lhs = alpha * alpha;
    let rhs = beta * beta * d;
    match lhs.cmp(&rhs) {
        core::cmp::Ordering::Greater => sa,
        core::cmp::Ordering::Less => sb,
        core::cmp::Ordering::Equal => 0,
    }
}

fn sgn(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// `f` solved for coordinate `k`: `a x_k^2 + 2 b x_k + c = 0`.
struct Solver<'a> {
    f: &'a QuadraticFormQ,
    g: &'a QuadraticFormQ,
    k: usize,
}

impl Solver<'_> {
    fn full(&self, y: &[Rational], xk: Rational) -> Vec<Rational> {
        let mut x = y.to_vec();
        x.insert(self.k, xk);
        x
    }

    fn parts(&self, q: &QuadraticFormQ, y: &[Rational]) -> (Rational, Rational, Rational) {
        let x = self.full(y, Rational::zero());
        let a = q.entry(self.k, self.k).clone();
        let b: Rational = (0..x.len()).map(|j| q.entry(self.k, j) * &x[j]).sum();
        (a, b, q.eval(&x))
    }

    fn disc(&self, y: &[Rational]) -> Rational {
        let (a, b, c) = self.parts(self.f, y);
        &b * &b - a * c
    }

    /// Sign of `g` at the branch point over `y`; needs `disc(y) >= 0`.
    fn g_sign(&self, y: &[Rational], branch: i8) -> i8 {
        let (a, b, _) = self.parts(self.f, y);
        let d = &b * &b - &a * self.parts(self.f, y).2;
        // x_k = u + v sqrt(d)
        let u = -&b / &a;
        let v = rat(branch as i64, 1) / &a;
        let (ga, gb, gc) = self.parts(self.g, y);
        let alpha = &ga * (&u * &u + &v * &v * &d) + rat(2, 1) * &gb * &u + gc;
        let beta = rat(2, 1) * (&ga * &u * &v + &gb * &v);
        if d.is_zero() {
            return sgn(&alpha);
        }
        sign_surd(&alpha, &beta, &d)
    }

    fn segment_positive(&self, y0: &[Rational], y1: &[Rational]) -> bool {
        let at = |s: &Rational| -> Rational {
            let y: Vec<Rational> = y0.iter().zip(y1).map(|(a, b)| a + (b - a) * s).collect();
            self.disc(&y)
        };
        let d0 = at(&Rational::zero());
        let dh = at(&rat(1, 2));
        let d1 = at(&Rational::one());
        if !d0.is_positive() || !d1.is_positive() {
            return false;
        }
        // D(s) = d0 + c1 s + c2 s^2
        let c2 = rat(2, 1) * (&d1 + &d0 - rat(2, 1) * &dh);
        let c1 = &d1 - &d0 - &c2;
        if !c2.is_positive() {
            return true;
        }
        let s = -&c1 / (rat(2, 1) * &c2);
        if s <= Rational::zero() || s >= Rational::one() {
            return true;
        }
        (&d0 + &c1 * &s + &c2 * &s * &s).is_positive()
    }

    fn approx(&self, y: &[Rational], branch: i8) -> Vec<Rational> {
        let (a, b, _) = self.parts(self.f, y);
        let d = self.disc(y);
        let scale = BigInt::one() << 48u32;
        let root = (d.numer() * d.denom() * &scale * &scale).sqrt();
        let sq = Rational::new(root, d.denom() * &scale);
        let xk = (-b + rat(branch as i64, 1) * sq) / a;
        self.full(y, xk)
    }
}

fn is_definite(q: &QuadraticFormQ) -> bool {
    let d = diagonalize_q(q);
    d.iter().all(|e| e.is_positive()) || d.iter().all(|e| e.is_negative())
}

fn unit_vector(n: usize, k: usize) -> Vec<Rational> {
    (0..n).map(|i| if i == k { Rational::one() } else { Rational::zero() }).collect()
}

fn real_common_zero(f: &QuadraticFormQ, g: &QuadraticFormQ, search_bound: u64) -> Option<RealWitness> {
    let n = f.dim();
    if n < 2 || is_definite(f) || is_definite(g) {
        return None;
    }
    for k in 0..n {
        if f.entry(k, k).is_zero() && g.entry(k, k).is_zero() {
            return Some(exact_real(k, unit_vector(n, k)));
        }
    }
    let (f, g) = if (0..n).any(|k| !f.entry(k, k).is_zero()) { (f, g) } else { (g, f) };
    let k = (0..n).find(|&k| !f.entry(k, k).is_zero())?;
    let solver = Solver { f, g, k };
    let mut budget = search_bound;
    // (y, branch, sign of g) for points with positive discriminant
    let mut seen: [Vec<Vec<Rational>>; 4] = Default::default();
    for radius in 1..=REAL_GRID_RADIUS {
        let mut y = vec![-radius; n - 1];
        loop {
            if y.iter().any(|c| c.abs() == radius) {
                if budget == 0 {
                    return None;
                }
                budget -= 1;
                let yr: Vec<Rational> = y.iter().map(|&c| rat(c, 1)).collect();
                let d = solver.disc(&yr);
                if !d.is_negative() {
                    for (bi, branch) in [1i8, -1].into_iter().enumerate() {
                        let s = solver.g_sign(&yr, branch);
                        if s == 0 {
                            return Some(RealWitness {
                                solved: k,
                                branch,
                                lower: yr.clone(),
                                upper: yr.clone(),
                                approx: solver.approx(&yr, branch),
                            });
                        }
                        if d.is_zero() {
                            continue;
                        }
                        let own = 2 * bi + usize::from(s < 0);
                        let other = 2 * bi + usize::from(s > 0);
                        for z in seen[other].iter().take(64) {
                            if solver.segment_positive(z, &yr) {
                                return Some(refine(&solver, z.clone(), yr, branch));
                            }
                        }
                        seen[own].push(yr.clone());
                    }
                }
            }
            let mut i = 0;
            while i < y.len() {
                y[i] += 1;
                if y[i] <= radius {
                    break;
                }
                y[i] = -radius;
                i += 1;
            }
            if i == y.len() {
                break;
            }
        }
    }
    None
}

/// Both forms vanish at the rational point `e_k`.
fn exact_real(k: usize, point: Vec<Rational>) -> RealWitness {
    let solved = if k == 0 { 1 } else { 0 };
    let mut y = point.clone();
    y.remove(solved);
    RealWitness { solved, branch: 0, lower: y.clone(), upper: y, approx: point }
}

fn refine(solver: &Solver<'_>, mut lo: Vec<Rational>, mut hi: Vec<Rational>, branch: i8) -> RealWitness {
    let (lower, upper) = (lo.clone(), hi.clone());
    let slo = solver.g_sign(&lo, branch);
    for _ in 0..BISECTION_STEPS {
        let mid: Vec<Rational> = lo.iter().zip(&hi).map(|(a, b)| (a + b) / rat(2, 1)).collect();
        let s = solver.g_sign(&mid, branch);
        if s == 0 {
            lo = mid;
            break;
        }
        if s == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RealWitness { solved: solver.k, branch, lower, upper, approx: solver.approx(&lo, branch) }
}

fn verify_real(pair: &Pencil, w: &RealWitness) -> bool {
    let n = pair.dim();
    if w.lower.len() + 1 != n || w.upper.len() + 1 != n || w.solved >= n {
        return false;
    }
    if w.branch == 0 {
        // exact rational common zero
        return w.lower == w.upper
            && w.approx.iter().any(|c| !c.is_zero())
            && pair.f.eval(&w.approx).is_zero()
            && pair.g.eval(&w.approx).is_zero();
    }
    for (f, g) in [(&pair.f, &pair.g), (&pair.g, &pair.f)] {
        if f.entry(w.solved, w.solved).is_zero() {
            continue;
        }
        let s = Solver { f, g, k: w.solved };
        if w.lower == w.upper {
            if !s.disc(&w.lower).is_negative() && s.g_sign(&w.lower, w.branch) == 0 {
                return true;
            }
            continue;
        }
        if s.segment_positive(&w.lower, &w.upper) && s.g_sign(&w.lower, w.branch) * s.g_sign(&w.upper, w.branch) < 0 {
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// isotropic subspace and point search

/// How to check that a point is a common zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroCheck {
    Exact,
    /// Values and restricted Gram entries need valuation `>= precision` at `p`.
    Adic { p: BigInt, precision: u32 },
}

fn vanishes(q: &Rational, check: &ZeroCheck) -> bool {
    match check {
        ZeroCheck::Exact => q.is_zero(),
        ZeroCheck::Adic { p, precision } => {
            q.is_zero() || crate::arith::valuation_rational(q, p) >= *precision as i64
        }
    }
}

/// Basis `{(a, 0, 0, 0), e6, e7}` of a common totally isotropic subspace of
/// the 7-variable pair, given a common zero `a` of `(q1, q2)`. The
/// restricted Gram matrices of both forms are recomputed and checked.
pub fn lift_to_3space(input: &GenusOneInput, a: &[Rational], check: &ZeroCheck) -> Result<Vec<Vec<Rational>>> {
    if a.len() != 4 {
        return Err(Error::invalid("point must have 4 coordinates"));
    }
    if a.iter().all(|c| c.is_zero()) {
        return Err(Error::invalid("zero vector is not a projective point"));
    }
    if !vanishes(&input.q1.eval(a), check) || !vanishes(&input.q2.eval(a), check) {
        return Err(Error::invalid("point is not a common zero of q1 and q2"));
    }
    let mut first = a.to_vec();
    first.extend(core::iter::repeat(Rational::zero()).take(3));
    let basis = vec![first, unit_vector(7, 5), unit_vector(7, 6)];
    let pair = build_seven_variable_pair(input);
    for q in [&pair.f, &pair.g] {
        for u in &basis {
            for w in &basis {
                if !vanishes(&q.polar(u, w), check) {
                    return Err(Error::invalid("restricted form does not vanish"));
                }
            }
        }
    }
    Ok(basis)
}

/// Exhaustive search for rational points of height at most `height` on the
/// built-in curve. Coprime solutions of `XY = Z^2` are `(u^2, v^2, uv)` up
/// to sign, so it suffices to test `u^4 - 17 v^4 = 2 w^2` for
/// `0 <= u, v <= sqrt(height)`.
pub fn demo_point_search(height: u64) -> Option<[BigInt; 4]> {
    let bound: u64 = Roots::sqrt(&height);
    for u in 0..=bound {
        for v in 0..=bound {
            if (u == 0 && v == 0) || u.gcd(&v) != 1 {
                continue;
            }
            let lhs: BigInt = num_traits::pow(int(u as i64), 4) - int(17) * num_traits::pow(int(v as i64), 4);
            if lhs.is_negative() || lhs.is_odd() {
                continue;
            }
            let half: BigInt = lhs / 2;
            let w = half.sqrt();
            if &w * &w == half {
                return Some([int((u * u) as i64), int((v * v) as i64), int((u * v) as i64), w]);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::{det_poly, pencil_form, radical_ff};
    use crate::poly::RatFunc;

    #[test]
    fn builders_are_degenerate_and_restrict() {
        let input = GenusOneInput::demo();
        let p7 = build_seven_variable_pair(&input);
        let p10 = build_ten_variable_pair(&input);
        assert_eq!(p7.dim(), 7);
        assert_eq!(p10.dim(), 10);
        assert!(det_poly(&p7).is_zero());
        assert!(det_poly(&p10).is_zero());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(p7.f.entry(i, j), input.q1.entry(i, j));
                assert_eq!(p10.g.entry(i, j), input.q2.entry(i, j));
            }
        }
        // (0,0,0,0,0,-t,1) spans the radical
        let rad = radical_ff(&pencil_form(&p7));
        assert_eq!(rad.len(), 1);
        let v = &rad[0];
        let t = RatFunc::from_poly(crate::poly::IntPolynomial::t());
        assert!(v[..5].iter().all(|c| c.is_zero()));
        assert!(v[5].add(&t.mul(&v[6])).is_zero());
    }

    #[test]
    fn demo_local_points() {
        let input = GenusOneInput::demo();
        let pair = Pencil::new(input.q1.clone(), input.q2.clone()).unwrap();
        for p in [2, 3, 5, 7, 17] {
            let w = local_common_zero(&pair, &Place::prime(p).unwrap(), DEFAULT_SEARCH_BOUND)
                .unwrap_or_else(|| panic!("no point at {p}"));
            assert!(verify_witness(&pair, &w), "{p}");
        }
        let w = local_common_zero(&pair, &Place::Real, DEFAULT_SEARCH_BOUND).unwrap();
        assert!(verify_witness(&pair, &w));
    }

    #[test]
    fn definite_has_no_real_zero() {
        let f = QuadraticFormQ::diagonal(&[rat(1, 1), rat(1, 1), rat(1, 1)]);
        let g = QuadraticFormQ::diagonal(&[rat(1, 1), rat(-1, 1), rat(0, 1)]);
        let pair = Pencil::new(f, g).unwrap();
        assert!(local_common_zero(&pair, &Place::Real, 10_000).is_none());
    }

    #[test]
    fn lift_checks() {
        let input = GenusOneInput::demo();
        let zero = vec![Rational::zero(); 4];
        assert!(lift_to_3space(&input, &zero, &ZeroCheck::Exact).is_err());
        let bad = vec![rat(1, 1), rat(1, 1), rat(0, 1), rat(0, 1)];
        assert!(lift_to_3space(&input, &bad, &ZeroCheck::Exact).is_err());
        let pair = Pencil::new(input.q1.clone(), input.q2.clone()).unwrap();
        let Some(LocalWitness::Adic(w)) = local_common_zero(&pair, &Place::prime(7).unwrap(), DEFAULT_SEARCH_BOUND) else {
            panic!("no 7-adic point")
        };
        let a: Vec<Rational> = w.point.iter().map(|c| rat_int(c.clone())).collect();
        let basis = lift_to_3space(&input, &a, &ZeroCheck::Adic { p: int(7), precision: 6 }).unwrap();
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn no_small_points() {
        assert!(demo_point_search(10_000).is_none());
    }
}
