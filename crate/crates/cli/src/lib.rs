//! File formats, reports and task dispatch behind the `qpencil` binary.

pub mod error;
pub mod polystr;
pub mod problem;
pub mod report;
pub mod run;

pub use error::CliError;
pub use problem::{parse_problem, ProblemFile, Task};
pub use run::{run_problem, RunOutput};
