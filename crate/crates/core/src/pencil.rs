//! Rational r-planes on `{f = g = 0}` in `P^n` for `n = 2r + 2` or
//! `n = 2r + 1`. With `D(t) = det(M_f + t M_g)` not identically zero, such a
//! plane exists iff `q(t) = f + t g` is isometric over Q(t) to
//! `(r+1)H + <(-1)^(r+1) delta>` (even case) or to `(r+1)H` (odd case),
//! where `delta` is the determinant class of `q(t)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::form::{det_poly, pencil_form, radical_ff, target_even, target_odd, DetPoly, Pencil};
use crate::poly::{factor_poly, poly_gcd, square_class_of, IntPolynomial, PolyFactorization, RatFunc};
use crate::witt::{is_isometric_ff, IsometryCertificate, Outcome, WittOptions};

pub const VERDICT_SCOPE: &str =
    "the answer is the same for rational r-planes and for r-planes over every completion of Q";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// `n = 2r + 2`
    Even,
    /// `n = 2r + 1`
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub pencil: Pencil,
    pub n: usize,
    pub r: usize,
    pub case: Case,
}

impl Problem {
    pub fn new(pencil: Pencil, n: usize, r: usize) -> Result<Self> {
        let case = if n == 2 * r + 2 {
            Case::Even
        } else if n == 2 * r + 1 {
            Case::Odd
        } else {
            return Err(Error::DimensionMismatch(format!("n = {n} is neither 2r+1 nor 2r+2 for r = {r}")));
        };
        if pencil.dim() != n + 1 {
            return Err(Error::DimensionMismatch(format!(
                "forms have {} variables, expected n + 1 = {}",
                pencil.dim(),
                n + 1
            )));
        }
        Ok(Problem { pencil, n, r, case })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub holds: bool,
    pub det: DetPoly,
    /// When `D = 0`: a vector in the radical of `f + t g` over Q(t), which
    /// is a singular vector of every member of the pencil.
    pub radical_witness: Option<Vec<RatFunc>>,
}

pub fn check_hypothesis(p: &Pencil) -> HypothesisReport {
    let det = det_poly(p);
    if !det.is_zero() {
        return HypothesisReport { holds: true, det, radical_witness: None };
    }
    let witness = radical_ff(&pencil_form(p)).into_iter().next();
    HypothesisReport { holds: false, det, radical_witness: witness }
}

fn delta_of(det: &DetPoly) -> IntPolynomial {
    let num = det.poly.scale(det.unit.numer());
    square_class_of(&num, &IntPolynomial::constant(det.unit.denom().clone()))
}

/// Square-class representative of `D(t)`: squarefree integer times a
/// squarefree primitive polynomial.
pub fn compute_delta(p: &Pencil) -> Result<IntPolynomial> {
    let det = det_poly(p);
    if det.is_zero() {
        return Err(Error::HypothesisViolation(String::from("det(f + t g) vanishes identically")));
    }
    Ok(delta_of(&det))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub hypothesis: HypothesisReport,
    pub delta: IntPolynomial,
    /// Factorization of `D(t)`.
    pub det_factorization: PolyFactorization,
    /// Odd case: set when the determinant class is not `(-1)^(r+1)`.
    pub determinant_gate: Option<String>,
    pub isometry: Option<IsometryCertificate>,
    pub warnings: Vec<String>,
}

/// In the odd case a smooth `X` (`D` squarefree of degree `n + 1`) contains
/// no `r`-plane, so a `Yes` cannot occur for it.
pub fn smoothness_diagnostic(problem: &Problem) -> Option<String> {
    if problem.case != Case::Odd {
        return None;
    }
    let det = det_poly(&problem.pencil);
    if det.degree() != Some(problem.n + 1) {
        return None;
    }
    let g = poly_gcd(&det.poly, &det.poly.derivative()).ok()?;
    if g.deg() > 0 {
        return None;
    }
    Some(format!(
        "X is smooth (D(t) is squarefree of degree {}); for n = 2r + 1 a smooth X contains linear \
         subspaces of dimension at most r - 1, so the verdict can only be no",
        problem.n + 1
    ))
}

pub fn decide(problem: &Problem, opts: &WittOptions) -> Result<Verdict> {
    let hypothesis = check_hypothesis(&problem.pencil);
    if !hypothesis.holds {
        return Err(Error::HypothesisViolation(String::from(
            "every member of the pencil is singular (det(f + t g) = 0)",
        )));
    }
    let delta = delta_of(&hypothesis.det);
    let mut det_factorization = factor_poly(&hypothesis.det.poly)?;
    det_factorization.unit *= &hypothesis.det.unit;
    let q = pencil_form(&problem.pencil);
    let warnings: Vec<String> = smoothness_diagnostic(problem).into_iter().collect();
    let r = problem.r;

    let (outcome, determinant_gate, isometry) = match problem.case {
        Case::Even => {
            let cert = is_isometric_ff(&q, &target_even(r, &delta)?, opts)?;
            (cert.outcome, None, Some(cert))
        }
        Case::Odd => {
            let expected = IntPolynomial::constant(BigInt::from(if (r + 1) % 2 == 0 { 1 } else { -1 }));
            if delta != expected {
                let msg = format!("determinant class {delta} differs from (-1)^(r+1) = {expected}");
                (Outcome::No, Some(msg), None)
            } else {
                let cert = is_isometric_ff(&q, &target_odd(r), opts)?;
                (cert.outcome, None, Some(cert))
            }
        }
    };
    Ok(Verdict { outcome, hypothesis, delta, det_factorization, determinant_gate, isometry, warnings })
}
