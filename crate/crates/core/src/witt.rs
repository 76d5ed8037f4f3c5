//! Witt classes over Q(t). A class vanishes iff all its second residues
//! vanish and its value at an unramified rational point is hyperbolic over
//! Q. Residues at degree-1 sites are decided over Q; at higher degree only
//! necessary conditions and a few sufficient ones are available.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{is_square_rational, prime_support, reduce_square_factors, Rational};
use crate::error::{Error, Result};
use crate::form::{diagonalize_ff, orth_sum_ff, DiagonalFF, QuadraticFormFF, QuadraticFormQ};
use crate::global::{hyperbolic_with, invariants_at, is_hyperbolic_q, GlobalInvariants};
use crate::numfield::ResidueField;
use crate::poly::{factor_poly, square_class_of, IntPolynomial, QPoly};

/// A monic-normalized irreducible polynomial: primitive, positive leading
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSite {
    pub p: IntPolynomial,
    pub degree: usize,
}

impl ResidueSite {
    pub fn new(p: IntPolynomial) -> Self {
        let degree = p.deg();
        ResidueSite { p, degree }
    }
}

/// Diagonal form over `Q[t]/(p)`; entries are reduced modulo `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueForm {
    pub site: ResidueSite,
    pub entries: Vec<IntPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResidueVerdict {
    HyperbolicYes,
    HyperbolicNo(String),
    Inconclusive(String),
}

impl ResidueVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            ResidueVerdict::HyperbolicYes => "hyperbolic",
            ResidueVerdict::HyperbolicNo(_) => "not-hyperbolic",
            ResidueVerdict::Inconclusive(_) => "inconclusive",
        }
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            ResidueVerdict::HyperbolicYes => None,
            ResidueVerdict::HyperbolicNo(r) | ResidueVerdict::Inconclusive(r) => Some(r),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Yes,
    No,
    Indeterminate,
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::Yes => "yes",
            Outcome::No => "no",
            Outcome::Indeterminate => "indeterminate",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WittOptions {
    /// Residue fields of larger degree are not examined beyond parity.
    pub residue_degree_limit: usize,
    /// Specialization points are searched in `0..specialization_attempts`.
    pub specialization_attempts: u32,
}

impl Default for WittOptions {
    fn default() -> Self {
        WittOptions { residue_degree_limit: 16, specialization_attempts: 1000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiteCheck {
    pub residue: ResidueForm,
    pub verdict: ResidueVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub t0: BigInt,
    /// Diagonal entries evaluated at `t0`.
    pub values: Vec<Rational>,
    pub invariants: GlobalInvariants,
    pub hyperbolic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialityCertificate {
    pub diagonal: DiagonalFF,
    pub sites: Vec<SiteCheck>,
    pub specialization: Option<Specialization>,
    pub overall: Outcome,
}

/// Distinct irreducible factors of the entries, in canonical order.
pub fn all_residue_sites(d: &DiagonalFF) -> Vec<ResidueSite> {
    let mut ps: Vec<IntPolynomial> = Vec::new();
    for e in &d.entries {
        if e.deg() == 0 {
            continue;
        }
        for (f, _) in factor_poly(e).expect("entries are nonzero").factors {
            if !ps.contains(&f) {
                ps.push(f);
            }
        }
    }
    ps.sort_by(|a, b| a.canonical_cmp(b));
    ps.into_iter().map(ResidueSite::new).collect()
}

/// Second residue at `s`: entries `p u` contribute `<u mod p>`, entries prime
/// to `p` contribute nothing.
pub fn second_residue_at(d: &DiagonalFF, s: &ResidueSite) -> Result<ResidueForm> {
    let mut entries = Vec::new();
    for e in &d.entries {
        let Some(u) = e.exact_div(&s.p) else { continue };
        if u.divisible_by(&s.p) {
            return Err(Error::invalid(format!("entry {e} is not squarefree at {}", s.p)));
        }
        let r = u.to_qpoly().rem(&s.p.to_qpoly()).to_int_square_scaled();
        entries.push(shrink(&r));
    }
    Ok(ResidueForm { site: s.clone(), entries })
}

/// Divides out square factors of the content that trial division finds.
fn shrink(r: &IntPolynomial) -> IntPolynomial {
    let c = r.content();
    let keep = reduce_square_factors(&c);
    let sq = &c / &keep;
    r.div_scalar(&sq)
}

pub fn residue_hyperbolic(rf: &ResidueForm, limit: usize) -> ResidueVerdict {
    use ResidueVerdict::*;
    let m = rf.entries.len();
    if m == 0 {
        return HyperbolicYes;
    }
    let p = &rf.site.p;
    if rf.site.degree == 1 {
        let root = Rational::new(-p.coeff(0), p.coeff(1));
        let values: Vec<Rational> = rf.entries.iter().map(|e| e.eval(&root)).collect();
        return match is_hyperbolic_q(&values) {
            Ok(true) => HyperbolicYes,
            _ => HyperbolicNo(format!("residue form over Q at t = {root} is not hyperbolic")),
        };
    }
    if m % 2 == 1 {
        return HyperbolicNo(format!("residue form has odd dimension {m}"));
    }
    let k = ResidueField::new(p);
    let entries: Vec<_> = rf.entries.iter().map(|e| k.reduce(&e.to_qpoly())).collect();
    if cancel_pairs(entries.clone(), |a, b| rational_pair(a, b)).is_empty() {
        return HyperbolicYes;
    }
    if rf.site.degree > limit {
        return Inconclusive(format!("residue field degree {} exceeds the limit {limit}", rf.site.degree));
    }
    for (idx, root) in k.real_roots().iter().enumerate() {
        let pos = entries.iter().filter(|e| k.sign_at_root(e, root) > 0).count();
        if 2 * pos != m {
            return HyperbolicNo(format!(
                "signature ({pos}, {}) at real embedding {} of the residue field",
                m - pos,
                idx + 1
            ));
        }
    }
    let mut disc = entries.iter().fold(QPoly::constant(Rational::one()), |acc, e| {
        k.mul(&acc, e)
    });
    if (m / 2) % 2 == 1 {
        disc = -&disc;
    }
    match k.is_square(&disc) {
        Some(true) => {}
        Some(false) => return HyperbolicNo(String::from("discriminant is not a square in the residue field")),
        None => return Inconclusive(String::from("square test on the discriminant did not find a generator")),
    }
    let rest = cancel_pairs(entries, |a, b| k.is_square(&-&k.mul(a, b)) == Some(true));
    if rest.is_empty() {
        return HyperbolicYes;
    }
    Inconclusive(format!(
        "residue of dimension {m} over a degree-{} field passes the signature and discriminant tests; \
         {} entries do not cancel in pairs",
        rf.site.degree,
        rest.len()
    ))
}

/// Greedily removes pairs `<a, b>` with `hyperbolic(a, b)`; returns the rest.
fn cancel_pairs(mut rest: Vec<QPoly>, hyperbolic: impl Fn(&QPoly, &QPoly) -> bool) -> Vec<QPoly> {
    let mut i = 0;
    while i < rest.len() {
        match (i + 1..rest.len()).find(|&j| hyperbolic(&rest[i], &rest[j])) {
            Some(j) => {
                rest.remove(j);
                rest.remove(i);
            }
            None => i += 1,
        }
    }
    rest
}

/// `b = -c^2 a` for a rational `c`, so that `<a, b>` is hyperbolic.
fn rational_pair(a: &QPoly, b: &QPoly) -> bool {
    if a.is_zero() || a.deg() != b.deg() {
        return false;
    }
    let lambda = b.leading() / a.leading();
    is_square_rational(&-&lambda) && &a.scale(&lambda) == b
}

pub fn specialize(d: &DiagonalFF, t0: &BigInt) -> Result<Vec<Rational>> {
    let x = Rational::from_integer(t0.clone());
    let mut out = Vec::with_capacity(d.dim());
    for e in &d.entries {
        let v = e.eval(&x);
        if v.is_zero() {
            return Err(Error::BadSpecializationPoint(t0.clone()));
        }
        out.push(v);
    }
    Ok(out)
}

/// Primes at which a nondegenerate rational Gram matrix can fail to be
/// unimodular: 2, denominators of the entries and the determinants of its
/// connected blocks. `None` if the matrix is singular.
pub fn gram_primes(g: &QuadraticFormQ) -> Option<Vec<BigInt>> {
    let n = g.dim();
    let mut seen = alloc::vec![false; n];
    let mut primes = alloc::vec![BigInt::from(2)];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut block = alloc::vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < block.len() {
            let i = block[k];
            for j in 0..n {
                if !seen[j] && !g.entry(i, j).is_zero() {
                    seen[j] = true;
                    block.push(j);
                }
            }
            k += 1;
        }
        block.sort();
        let sub: Vec<Vec<Rational>> =
            block.iter().map(|&i| block.iter().map(|&j| g.entry(i, j).clone()).collect()).collect();
        for row in &sub {
            for e in row {
                if !e.denom().is_one() {
                    primes.extend(prime_support(&Rational::from_integer(e.denom().clone())));
                }
            }
        }
        let det = crate::field::determinant(&sub);
        if det.is_zero() {
            return None;
        }
        primes.extend(prime_support(&det));
    }
    primes.sort();
    primes.dedup();
    Some(primes)
}

/// Value of the class of `q` at `t0`, where `d` is a diagonalization of `q`.
/// Requires `t0` to be a point where both are unimodular: entries of `d`
/// nonzero, Gram matrix of `q` defined and nonsingular.
pub fn specialization_at(q: &QuadraticFormFF, d: &DiagonalFF, t0: &BigInt) -> Result<Specialization> {
    let values = specialize(d, t0)?;
    let bad = || Error::BadSpecializationPoint(t0.clone());
    let g = q.eval(&Rational::from_integer(t0.clone())).ok_or_else(bad)?;
    let primes = gram_primes(&g).ok_or_else(bad)?;
    let invariants = invariants_at(&values, &primes)?;
    let hyperbolic = hyperbolic_with(&values, Some(&primes))?;
    Ok(Specialization { t0: t0.clone(), values, invariants, hyperbolic })
}

/// The first `count` admissible specialization points `t0 >= start`.
pub fn admissible_points(
    q: &QuadraticFormFF,
    d: &DiagonalFF,
    start: u32,
    count: usize,
    attempts: u32,
) -> Vec<BigInt> {
    let mut out = Vec::new();
    for t in start..start.saturating_add(attempts) {
        if out.len() == count {
            break;
        }
        let t0 = BigInt::from(t);
        if point_is_admissible(q, d, &t0) {
            out.push(t0);
        }
    }
    out
}

fn point_is_admissible(q: &QuadraticFormFF, d: &DiagonalFF, t0: &BigInt) -> bool {
    let x = Rational::from_integer(t0.clone());
    if d.entries.iter().any(|e| e.eval(&x).is_zero()) {
        return false;
    }
    match q.eval(&x) {
        Some(g) => !g.det().is_zero(),
        None => false,
    }
}

pub fn is_witt_trivial_ff(q: &QuadraticFormFF, opts: &WittOptions) -> Result<TrivialityCertificate> {
    let d = diagonalize_ff(q)?;
    let mut sites = Vec::new();
    for s in all_residue_sites(&d) {
        let residue = second_residue_at(&d, &s)?;
        let verdict = residue_hyperbolic(&residue, opts.residue_degree_limit);
        sites.push(SiteCheck { residue, verdict });
    }
    let specialization = match admissible_points(q, &d, 0, 1, opts.specialization_attempts).first() {
        Some(t0) => Some(specialization_at(q, &d, t0)?),
        None => None,
    };
    let any_no = sites.iter().any(|s| matches!(s.verdict, ResidueVerdict::HyperbolicNo(_)));
    let spec_fails = specialization.as_ref().map_or(false, |s| !s.hyperbolic);
    let all_yes = sites.iter().all(|s| s.verdict == ResidueVerdict::HyperbolicYes);
    let overall = if any_no || spec_fails {
        Outcome::No
    } else if all_yes && specialization.is_some() {
        Outcome::Yes
    } else {
        Outcome::Indeterminate
    };
    Ok(TrivialityCertificate { diagonal: d, sites, specialization, overall })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometryCertificate {
    pub outcome: Outcome,
    /// Set when a dimension or determinant mismatch settles the question.
    pub mismatch: Option<String>,
    pub triviality: Option<TrivialityCertificate>,
}

/// Equal dimension and determinant class, then Witt-triviality of `a - b`.
pub fn is_isometric_ff(a: &QuadraticFormFF, b: &QuadraticFormFF, opts: &WittOptions) -> Result<IsometryCertificate> {
    let (da, db) = (a.det(), b.det());
    if da.is_zero() || db.is_zero() {
        return Err(Error::DegenerateForm);
    }
    if a.dim() != b.dim() {
        return Ok(IsometryCertificate {
            outcome: Outcome::No,
            mismatch: Some(format!("dimensions differ ({} vs {})", a.dim(), b.dim())),
            triviality: None,
        });
    }
    let ratio = square_class_of(&(da.num() * db.num()), &(da.den() * db.den()));
    if ratio != IntPolynomial::one() {
        return Ok(IsometryCertificate {
            outcome: Outcome::No,
            mismatch: Some(format!("determinant classes differ by {ratio}")),
            triviality: None,
        });
    }
    let cert = is_witt_trivial_ff(&orth_sum_ff(a, &b.neg()), opts)?;
    Ok(IsometryCertificate { outcome: cert.overall, mismatch: None, triviality: Some(cert) })
}
