//! Task dispatch. Each entry point returns the report text and the exit
//! code: 0 for a determinate answer, 2 for an indeterminate one.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use qpencil_core::arith::Rational;
use qpencil_core::counterexample::{
    build_seven_variable_pair, build_ten_variable_pair, demo_point_search, lift_to_3space, local_common_zero,
    GenusOneInput, LocalWitness, ZeroCheck,
};
use qpencil_core::form::{diagonalize_q, pencil_form, DetPoly, Pencil, QuadraticFormQ};
use qpencil_core::global::{invariants_of, is_isotropic_q, witt_index_q};
use qpencil_core::local::{is_isotropic_local, local_profile, witt_index_local, Place};
use qpencil_core::pencil::{check_hypothesis, decide, Case, Problem, VERDICT_SCOPE};
use qpencil_core::poly::factor_poly;
use qpencil_core::witt::{is_witt_trivial_ff, Outcome};
use serde::Serialize;

use crate::error::CliError;
use crate::problem::{FormBlock, Options, ProblemFile, Task};
use crate::report::*;

/// Bound on the height of rational points tried on the built-in curve.
pub const DEMO_SEARCH_HEIGHT: u64 = 10_000;

/// Primes at which the demo checks local solvability (with the real place).
pub const DEMO_MAX_PRIME: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub document: String,
    pub exit_code: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DemoPair {
    Seven,
    Ten,
}

impl DemoPair {
    pub fn n(self) -> usize {
        match self {
            DemoPair::Seven => 6,
            DemoPair::Ten => 9,
        }
    }
}

fn emit<T: Serialize>(report: &T, outcome: Outcome) -> RunOutput {
    let mut document = serde_json::to_string_pretty(report).expect("report serializes");
    document.push('\n');
    let exit_code = if outcome == Outcome::Indeterminate { 2 } else { 0 };
    RunOutput { document, exit_code }
}

fn timing(start: Instant) -> Timing {
    Timing { elapsed_seconds: start.elapsed().as_secs_f64() }
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn det_factorization(det: &DetPoly) -> Result<Factorization, CliError> {
    if det.is_zero() {
        return Ok(Factorization { unit: "0".into(), factors: Vec::new() });
    }
    let mut f = factor_poly(&det.poly)?;
    f.unit *= &det.unit;
    Ok((&f).into())
}

fn pencil_of(p: &ProblemFile) -> Result<Pencil, CliError> {
    let f = p.f.as_ref().expect("validated").to_form();
    let g = p.g.as_ref().expect("validated").to_form();
    Ok(Pencil::new(f, g)?)
}

pub fn run_problem(p: &ProblemFile) -> Result<RunOutput, CliError> {
    match p.task {
        Task::DecideRPlane => run_decide(p),
        Task::WittTrivial => run_witt_trivial(p),
        Task::Invariants => run_invariants(p),
        Task::Demo => {
            let pair = if p.n == Some(6) { DemoPair::Seven } else { DemoPair::Ten };
            let input = match (&p.f, &p.g) {
                (Some(f), Some(g)) => Some(GenusOneInput::new(f.to_form(), g.to_form(), "user-supplied curve")?),
                _ => None,
            };
            run_demo(pair, input, &p.options)
        }
    }
}

fn run_decide(p: &ProblemFile) -> Result<RunOutput, CliError> {
    let start = Instant::now();
    let (n, r) = (p.n.expect("validated"), p.r.expect("validated"));
    let problem = Problem::new(pencil_of(p)?, n, r)?;
    let v = decide(&problem, &p.options.witt())?;
    let (mismatch, triviality) = match &v.isometry {
        Some(c) => (c.mismatch.clone(), c.triviality.as_ref().map(TrivialityReport::from)),
        None => (None, None),
    };
    let triviality = triviality.unwrap_or(TrivialityReport { diagonal: Vec::new(), residue_checks: Vec::new(), specialization: None });
    let report = DecideReport {
        task: Task::DecideRPlane.name(),
        n,
        r,
        case: match problem.case {
            Case::Even => "even",
            Case::Odd => "odd",
        },
        decision: v.outcome.label(),
        scope: VERDICT_SCOPE,
        hypothesis: Hypothesis { status: "holds", det: det_factorization(&v.hypothesis.det)? },
        delta: Delta { polynomial: v.delta.to_string(), factorization: (&factor_poly(&v.delta)?).into() },
        determinant_gate: v.determinant_gate.clone(),
        mismatch,
        diagonal: triviality.diagonal,
        residue_checks: triviality.residue_checks,
        specialization: triviality.specialization,
        warnings: v.warnings.clone(),
        timing: timing(start),
    };
    Ok(emit(&report, v.outcome))
}

fn run_witt_trivial(p: &ProblemFile) -> Result<RunOutput, CliError> {
    let start = Instant::now();
    let q = pencil_form(&pencil_of(p)?);
    let cert = is_witt_trivial_ff(&q, &p.options.witt())?;
    let report = WittTrivialReport {
        task: Task::WittTrivial.name(),
        dim: q.dim(),
        decision: cert.overall.label(),
        certificate: (&cert).into(),
        timing: timing(start),
    };
    Ok(emit(&report, cert.overall))
}

/// Diagonal entries split into the nondegenerate part and the radical dimension.
fn split_radical(q: &QuadraticFormQ) -> (Vec<Rational>, Vec<Rational>, usize) {
    let diag = diagonalize_q(q);
    let nondeg: Vec<Rational> = diag.iter().filter(|e| !e.is_zero()).cloned().collect();
    let radical = diag.len() - nondeg.len();
    (diag, nondeg, radical)
}

fn form_invariants(name: &'static str, b: &FormBlock) -> Result<FormInvariants, CliError> {
    let q = b.to_form();
    let (diag, nondeg, radical_dim) = split_radical(&q);
    let inv = invariants_of(&nondeg)?;
    Ok(FormInvariants {
        name,
        dim: b.dim,
        radical_dim,
        diagonal: strings(&diag),
        invariants: (&inv).into(),
        isotropic: radical_dim > 0 || is_isotropic_q(&nondeg)?,
        witt_index: witt_index_q(&nondeg)?,
    })
}

fn run_invariants(p: &ProblemFile) -> Result<RunOutput, CliError> {
    let start = Instant::now();
    let mut forms = vec![form_invariants("f", p.f.as_ref().expect("validated"))?];
    if let Some(g) = &p.g {
        forms.push(form_invariants("g", g)?);
    }
    let report = InvariantsReport { task: Task::Invariants.name(), forms, timing: timing(start) };
    Ok(emit(&report, Outcome::Yes))
}

/// Parses `inf` or a prime.
pub fn parse_place(s: &str) -> Result<Place, CliError> {
    let s = s.trim();
    if s == "inf" {
        return Ok(Place::Real);
    }
    let p: BigInt = s.parse().map_err(|_| CliError::input("place", format!("expected a prime or inf, got {s:?}")))?;
    Place::prime(p).map_err(|e| CliError::input("place", e.to_string()))
}

/// Local invariants of a single form at one place.
pub fn run_local_invariants(b: &FormBlock, v: &Place) -> Result<RunOutput, CliError> {
    let start = Instant::now();
    let (diag, nondeg, radical_dim) = split_radical(&b.to_form());
    let profile = local_profile(&nondeg, v)?;
    let report = LocalInvariantsReport {
        place: v.to_string(),
        dim: b.dim,
        radical_dim,
        diagonal: strings(&diag),
        det_class: profile.det_class.to_string(),
        hasse: profile.hasse,
        signature: profile.signature.map(|(a, b)| [a, b]),
        isotropic: radical_dim > 0 || is_isotropic_local(&profile)?,
        witt_index: witt_index_local(&profile)?,
        timing: timing(start),
    };
    Ok(emit(&report, Outcome::Yes))
}

fn witness_report(w: &LocalWitness) -> WitnessReport {
    match w {
        LocalWitness::Adic(a) => WitnessReport::Adic {
            point: strings(&a.point),
            precision: a.precision,
            minor: [a.minor.0, a.minor.1],
            minor_valuation: a.minor_valuation,
        },
        LocalWitness::Real(r) => WitnessReport::Real {
            solved: r.solved,
            branch: r.branch,
            lower: strings(&r.lower),
            upper: strings(&r.upper),
            approx: strings(&r.approx),
        },
    }
}

/// The all-singular pair built from a genus-one curve: hypothesis check,
/// local solvability of the curve at the real place and every prime up to
/// 100, and (for the built-in curve) a bounded search for rational points.
pub fn run_demo(pair: DemoPair, input: Option<GenusOneInput>, opts: &Options) -> Result<RunOutput, CliError> {
    let start = Instant::now();
    let builtin = input.is_none();
    let input = input.unwrap_or_else(GenusOneInput::demo);
    let (pencil, r) = match pair {
        DemoPair::Seven => (build_seven_variable_pair(&input), 2),
        DemoPair::Ten => (build_ten_variable_pair(&input), 4),
    };
    let n = pair.n();
    let hyp = check_hypothesis(&pencil);
    let decide_result = match decide(&Problem::new(pencil.clone(), n, r)?, &opts.witt()) {
        Ok(v) => v.outcome.label().to_string(),
        Err(e) => format!("{}: {e}", e.kind()),
    };

    let curve = Pencil::new(input.q1.clone(), input.q2.clone())?;
    let mut places = vec![Place::Real];
    places.extend(
        (2..=DEMO_MAX_PRIME)
            .filter(|&p| qpencil_core::arith::is_prime(&BigInt::from(p)))
            .map(|p| Place::prime(p).expect("prime")),
    );
    let local_solvability = places
        .iter()
        .map(|v| {
            let w = local_common_zero(&curve, v, opts.search_bound);
            let lift = match &w {
                Some(LocalWitness::Adic(a)) => {
                    let point: Vec<Rational> = a.point.iter().map(|c| Rational::from_integer(c.clone())).collect();
                    let check = ZeroCheck::Adic { p: a.p.clone(), precision: a.precision };
                    Some(lift_to_3space(&input, &point, &check).is_ok())
                }
                _ => None,
            };
            LocalRow { place: v.to_string(), solvable: w.is_some(), witness: w.as_ref().map(witness_report), lift_to_3space: lift }
        })
        .collect();
    let global_search = builtin.then(|| GlobalSearch {
        height: DEMO_SEARCH_HEIGHT,
        point: demo_point_search(DEMO_SEARCH_HEIGHT).map(|p| strings(&p)),
    });

    let report = DemoReport {
        task: Task::Demo.name(),
        variables: n + 1,
        n,
        r,
        curve: input.documentation.clone(),
        hypothesis: Hypothesis {
            status: if hyp.holds { "holds" } else { "violated" },
            det: det_factorization(&hyp.det)?,
        },
        radical_witness: hyp.radical_witness.as_ref().map(|v| strings(v)),
        decide: decide_result,
        local_solvability,
        global_search,
        timing: timing(start),
    };
    Ok(emit(&report, Outcome::Yes))
}
