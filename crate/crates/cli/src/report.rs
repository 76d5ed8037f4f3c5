//! Report documents. Every rational and polynomial is an exact string.
//! `timing` is the only field that varies between runs.

use qpencil_core::global::GlobalInvariants;
use qpencil_core::poly::PolyFactorization;
use qpencil_core::witt::{SiteCheck, Specialization, TrivialityCertificate};
use serde::Serialize;

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Timing {
    pub elapsed_seconds: f64,
}

#[derive(Serialize, Debug, Clone)]
pub struct FactorEntry {
    pub factor: String,
    pub multiplicity: u32,
}

#[derive(Serialize, Debug, Clone)]
pub struct Factorization {
    pub unit: String,
    pub factors: Vec<FactorEntry>,
}

impl From<&PolyFactorization> for Factorization {
    fn from(f: &PolyFactorization) -> Self {
        Factorization {
            unit: f.unit.to_string(),
            factors: f
                .factors
                .iter()
                .map(|(p, m)| FactorEntry { factor: p.to_string(), multiplicity: *m })
                .collect(),
        }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct HasseEntry {
    pub place: String,
    pub hasse: i8,
}

#[derive(Serialize, Debug, Clone)]
pub struct Invariants {
    pub dim: usize,
    pub det_class: String,
    pub signature: [usize; 2],
    /// Places not listed have Hasse invariant +1.
    pub hasse: Vec<HasseEntry>,
}

impl From<&GlobalInvariants> for Invariants {
    fn from(g: &GlobalInvariants) -> Self {
        Invariants {
            dim: g.dim,
            det_class: g.det_class.to_string(),
            signature: [g.signature.0, g.signature.1],
            hasse: g.places().map(|v| HasseEntry { place: v.to_string(), hasse: g.hasse_at(v) }).collect(),
        }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct ResidueCheck {
    pub site: String,
    pub degree: usize,
    pub residue: Vec<String>,
    pub verdict: &'static str,
    pub reason: Option<String>,
}

impl From<&SiteCheck> for ResidueCheck {
    fn from(s: &SiteCheck) -> Self {
        ResidueCheck {
            site: s.residue.site.p.to_string(),
            degree: s.residue.site.degree,
            residue: s.residue.entries.iter().map(|e| e.to_string()).collect(),
            verdict: s.verdict.label(),
            reason: s.verdict.reason().map(str::to_string),
        }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct SpecializationReport {
    pub t0: String,
    pub values: Vec<String>,
    pub invariants: Invariants,
    pub hyperbolic: bool,
}

impl From<&Specialization> for SpecializationReport {
    fn from(s: &Specialization) -> Self {
        SpecializationReport {
            t0: s.t0.to_string(),
            values: s.values.iter().map(|v| v.to_string()).collect(),
            invariants: (&s.invariants).into(),
            hyperbolic: s.hyperbolic,
        }
    }
}

/// Diagonalization, residue checks and specialization of one
/// Witt-triviality test.
#[derive(Serialize, Debug, Clone)]
pub struct TrivialityReport {
    pub diagonal: Vec<String>,
    pub residue_checks: Vec<ResidueCheck>,
    pub specialization: Option<SpecializationReport>,
}

impl From<&TrivialityCertificate> for TrivialityReport {
    fn from(c: &TrivialityCertificate) -> Self {
        TrivialityReport {
            diagonal: c.diagonal.entries.iter().map(|e| e.to_string()).collect(),
            residue_checks: c.sites.iter().map(ResidueCheck::from).collect(),
            specialization: c.specialization.as_ref().map(SpecializationReport::from),
        }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct Hypothesis {
    pub status: &'static str,
    pub det: Factorization,
}

#[derive(Serialize, Debug, Clone)]
pub struct Delta {
    pub polynomial: String,
    pub factorization: Factorization,
}

#[derive(Serialize, Debug, Clone)]
pub struct DecideReport {
    pub task: &'static str,
    pub n: usize,
    pub r: usize,
    pub case: &'static str,
    pub decision: &'static str,
    pub scope: &'static str,
    pub hypothesis: Hypothesis,
    pub delta: Delta,
    pub determinant_gate: Option<String>,
    pub mismatch: Option<String>,
    pub diagonal: Vec<String>,
    pub residue_checks: Vec<ResidueCheck>,
    pub specialization: Option<SpecializationReport>,
    pub warnings: Vec<String>,
    pub timing: Timing,
}

#[derive(Serialize, Debug, Clone)]
pub struct WittTrivialReport {
    pub task: &'static str,
    pub dim: usize,
    pub decision: &'static str,
    #[serde(flatten)]
    pub certificate: TrivialityReport,
    pub timing: Timing,
}

#[derive(Serialize, Debug, Clone)]
pub struct FormInvariants {
    pub name: &'static str,
    pub dim: usize,
    pub radical_dim: usize,
    pub diagonal: Vec<String>,
    /// Invariants of the nondegenerate part.
    pub invariants: Invariants,
    pub isotropic: bool,
    pub witt_index: usize,
}

#[derive(Serialize, Debug, Clone)]
pub struct InvariantsReport {
    pub task: &'static str,
    pub forms: Vec<FormInvariants>,
    pub timing: Timing,
}

#[derive(Serialize, Debug, Clone)]
pub struct LocalInvariantsReport {
    pub place: String,
    pub dim: usize,
    pub radical_dim: usize,
    pub diagonal: Vec<String>,
    pub det_class: String,
    pub hasse: i8,
    pub signature: Option<[usize; 2]>,
    pub isotropic: bool,
    pub witt_index: usize,
    pub timing: Timing,
}

#[derive(Serialize, Debug, Clone)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessReport {
    Adic {
        point: Vec<String>,
        precision: u32,
        minor: [usize; 2],
        minor_valuation: u32,
    },
    Real {
        solved: usize,
        branch: i8,
        lower: Vec<String>,
        upper: Vec<String>,
        approx: Vec<String>,
    },
}

#[derive(Serialize, Debug, Clone)]
pub struct LocalRow {
    pub place: String,
    pub solvable: bool,
    pub witness: Option<WitnessReport>,
    /// Whether the witness point spans an isotropic 3-space of the
    /// 7-variable pair modulo the witness precision (p-adic rows only).
    pub lift_to_3space: Option<bool>,
}

#[derive(Serialize, Debug, Clone)]
pub struct GlobalSearch {
    pub height: u64,
    pub point: Option<Vec<String>>,
}

#[derive(Serialize, Debug, Clone)]
pub struct DemoReport {
    pub task: &'static str,
    pub variables: usize,
    pub n: usize,
    pub r: usize,
    pub curve: String,
    pub hypothesis: Hypothesis,
    pub radical_witness: Option<Vec<String>>,
    pub decide: String,
    pub local_solvability: Vec<LocalRow>,
    pub global_search: Option<GlobalSearch>,
    pub timing: Timing,
}
