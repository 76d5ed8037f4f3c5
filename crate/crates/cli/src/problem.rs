//! Problem files: JSON documents naming a task, the dimensions `n, r`, two
//! forms and engine options.
//!
//! A form block lists the coefficients of the monomials `x_i x_j`, `i <= j`,
//! row by row, as exact rational strings:
//!
//! ```json
//! {"dim": 2, "entries": ["1", "3", "-1/2"]}
//! ```
//!
//! is `x_0^2 + 3 x_0 x_1 - x_1^2 / 2`. Cross coefficients are halved when
//! the Gram matrix is built.

use std::str::FromStr;

use num_traits::Zero;
use qpencil_core::arith::Rational;
use qpencil_core::counterexample::DEFAULT_SEARCH_BOUND;
use qpencil_core::form::QuadraticFormQ;
use qpencil_core::witt::WittOptions;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    DecideRPlane,
    Invariants,
    WittTrivial,
    Demo,
}

impl Task {
    pub const ALL: [Task; 4] = [Task::DecideRPlane, Task::Invariants, Task::WittTrivial, Task::Demo];

    pub fn name(self) -> &'static str {
        match self {
            Task::DecideRPlane => "decide-rplane",
            Task::Invariants => "invariants",
            Task::WittTrivial => "witt-trivial",
            Task::Demo => "demo-remark3",
        }
    }
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Task::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<_> = Task::ALL.iter().map(|t| t.name()).collect();
            format!("unknown task {s:?}, expected one of {}", names.join(", "))
        })
    }
}

/// Upper-triangular monomial coefficients of a form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormBlock {
    pub dim: usize,
    pub coeffs: Vec<Rational>,
}

impl FormBlock {
    pub fn to_form(&self) -> QuadraticFormQ {
        let m = self.dim;
        let mut q = QuadraticFormQ::zero(m);
        let two = Rational::from_integer(2.into());
        let mut k = 0;
        for i in 0..m {
            for j in i..m {
                let c = &self.coeffs[k];
                q.set(i, j, if i == j { c.clone() } else { c / &two });
                k += 1;
            }
        }
        q
    }

    pub fn from_form(q: &QuadraticFormQ) -> Self {
        let m = q.dim();
        let mut coeffs = Vec::with_capacity(m * (m + 1) / 2);
        for i in 0..m {
            for j in i..m {
                let e = q.entry(i, j).clone();
                coeffs.push(if i == j { e } else { e * Rational::from_integer(2.into()) });
            }
        }
        FormBlock { dim: m, coeffs }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Node budget of the local point searches.
    pub search_bound: u64,
    pub residue_degree_limit: usize,
    pub specialization_attempts: u32,
}

impl Default for Options {
    fn default() -> Self {
        let w = WittOptions::default();
        Options {
            search_bound: DEFAULT_SEARCH_BOUND,
            residue_degree_limit: w.residue_degree_limit,
            specialization_attempts: w.specialization_attempts,
        }
    }
}

impl Options {
    pub fn witt(&self) -> WittOptions {
        WittOptions {
            residue_degree_limit: self.residue_degree_limit,
            specialization_attempts: self.specialization_attempts,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub task: Task,
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub f: Option<FormBlock>,
    pub g: Option<FormBlock>,
    pub options: Options,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawForm {
    dim: usize,
    entries: Vec<String>,
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    search_bound: Option<u64>,
    residue_degree_limit: Option<usize>,
    specialization_attempts: Option<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    task: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<RawForm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<RawForm>,
    #[serde(default)]
    options: RawOptions,
}

/// Parses `"p/q"` or `"p"`; zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((_, d)) = s.split_once('/') {
        if d.trim().parse::<num_bigint::BigInt>().map_or(false, |d| d.is_zero()) {
            return Err(format!("zero denominator in {s:?}"));
        }
    }
    Rational::from_str(s).map_err(|_| format!("not a rational number: {s:?}"))
}

fn json_error(e: serde_json::Error) -> CliError {
    // serde_json appends " at line L column C" to its messages.
    let msg = e.to_string();
    let msg = msg.split(" at line ").next().unwrap_or(&msg).to_string();
    CliError::input(format!("{}:{}", e.line(), e.column()), msg)
}

fn parse_form(raw: &RawForm, name: &str) -> Result<FormBlock, CliError> {
    let m = raw.dim;
    if m == 0 {
        return Err(CliError::input(format!("{name}.dim"), "dimension must be positive"));
    }
    let want = m * (m + 1) / 2;
    if raw.entries.len() != want {
        return Err(CliError::input(
            format!("{name}.entries"),
            format!("a form of dimension {m} needs {want} entries, found {}", raw.entries.len()),
        ));
    }
    let coeffs = raw
        .entries
        .iter()
        .enumerate()
        .map(|(k, s)| parse_rational(s).map_err(|m| CliError::input(format!("{name}.entries[{k}]"), m)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FormBlock { dim: m, coeffs })
}

fn require<T>(v: Option<T>, field: &str, task: Task) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::input(field, format!("task {} requires field {field:?}", task.name())))
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, CliError> {
    let raw: RawProblem = serde_json::from_str(text).map_err(json_error)?;
    let task = Task::from_str(&raw.task).map_err(|m| CliError::input("task", m))?;
    let f = raw.f.as_ref().map(|b| parse_form(b, "f")).transpose()?;
    let g = raw.g.as_ref().map(|b| parse_form(b, "g")).transpose()?;
    let defaults = Options::default();
    let options = Options {
        search_bound: raw.options.search_bound.unwrap_or(defaults.search_bound),
        residue_degree_limit: raw.options.residue_degree_limit.unwrap_or(defaults.residue_degree_limit),
        specialization_attempts: raw.options.specialization_attempts.unwrap_or(defaults.specialization_attempts),
    };
    let p = ProblemFile { task, n: raw.n, r: raw.r, f, g, options };
    validate(&p)?;
    Ok(p)
}

fn validate(p: &ProblemFile) -> Result<(), CliError> {
    match p.task {
        Task::DecideRPlane => {
            let n = require(p.n, "n", p.task)?;
            require(p.r, "r", p.task)?;
            for (name, block) in [("f", &p.f), ("g", &p.g)] {
                let b = require(block.as_ref(), name, p.task)?;
                if b.dim != n + 1 {
                    return Err(CliError::input(format!("{name}.dim"), format!("expected n + 1 = {}, found {}", n + 1, b.dim)));
                }
            }
        }
        Task::Invariants => {
            require(p.f.as_ref(), "f", p.task)?;
        }
        Task::WittTrivial => {
            let f = require(p.f.as_ref(), "f", p.task)?;
            let g = require(p.g.as_ref(), "g", p.task)?;
            if f.dim != g.dim {
                return Err(CliError::input("g.dim", format!("f has dimension {}, g has {}", f.dim, g.dim)));
            }
        }
        Task::Demo => {
            let n = require(p.n, "n", p.task)?;
            if n != 6 && n != 9 {
                return Err(CliError::input("n", "the demo pairs have n = 6 (7 variables) or n = 9 (10 variables)"));
            }
            match (&p.f, &p.g) {
                (None, None) => {}
                (Some(f), Some(g)) if f.dim == 4 && g.dim == 4 => {}
                (Some(_), Some(_)) => return Err(CliError::input("f.dim", "a custom curve needs two forms in 4 variables")),
                (Some(_), None) => return Err(CliError::input("g", "a custom curve needs both f and g")),
                (None, Some(_)) => return Err(CliError::input("f", "a custom curve needs both f and g")),
            }
        }
    }
    Ok(())
}

fn raw_form(b: &FormBlock) -> RawForm {
    RawForm { dim: b.dim, entries: b.coeffs.iter().map(|c| c.to_string()).collect() }
}

/// Canonical JSON text; `parse_problem` of the result gives back `p`.
pub fn to_json(p: &ProblemFile) -> String {
    let raw = RawProblem {
        task: p.task.name().to_string(),
        n: p.n,
        r: p.r,
        f: p.f.as_ref().map(raw_form),
        g: p.g.as_ref().map(raw_form),
        options: RawOptions {
            search_bound: Some(p.options.search_bound),
            residue_degree_limit: Some(p.options.residue_degree_limit),
            specialization_attempts: Some(p.options.specialization_attempts),
        },
    };
    serde_json::to_string_pretty(&raw).expect("problem serializes")
}

/// Reads a bare form block (`{"dim": .., "entries": [..]}`).
pub fn parse_form_block(text: &str) -> Result<FormBlock, CliError> {
    let raw: RawForm = serde_json::from_str(text).map_err(json_error)?;
    parse_form(&raw, "form")
}
