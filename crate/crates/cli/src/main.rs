use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qpencil_cli::problem::{parse_form_block, Options};
use qpencil_cli::run::{parse_place, run_demo, run_local_invariants, DemoPair};
use qpencil_cli::{parse_problem, run_problem, CliError, RunOutput};

/// Decide whether a pencil of quadrics over Q contains a rational r-plane,
/// and related computations on rational quadratic forms.
#[derive(Parser)]
#[command(name = "qpencil", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the task named in a problem file.
    Decide {
        #[arg(long)]
        input: PathBuf,
        /// Report destination; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        residue_degree_limit: Option<usize>,
        #[arg(long)]
        search_bound: Option<u64>,
    },
    /// Everywhere-singular pairs built from a genus-one curve with local
    /// points everywhere.
    Demo {
        which: Demo,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        search_bound: Option<u64>,
    },
    /// Local invariants of one form (a `{"dim", "entries"}` block).
    Invariants {
        #[arg(long)]
        form: PathBuf,
        /// A prime, or `inf` for the real place.
        #[arg(long)]
        place: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Demo {
    /// 7 variables, r = 2
    #[value(name = "remark3-7")]
    Seven,
    /// 10 variables, r = 4
    #[value(name = "remark3-10")]
    Ten,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn execute(command: &Command) -> Result<RunOutput, CliError> {
    match command {
        Command::Decide { input, residue_degree_limit, search_bound, .. } => {
            let mut problem = parse_problem(&read(input)?)?;
            if let Some(l) = residue_degree_limit {
                problem.options.residue_degree_limit = *l;
            }
            if let Some(b) = search_bound {
                problem.options.search_bound = *b;
            }
            run_problem(&problem)
        }
        Command::Demo { which, search_bound, .. } => {
            let mut opts = Options::default();
            if let Some(b) = search_bound {
                opts.search_bound = *b;
            }
            let pair = match which {
                Demo::Seven => DemoPair::Seven,
                Demo::Ten => DemoPair::Ten,
            };
            run_demo(pair, None, &opts)
        }
        Command::Invariants { form, place, .. } => {
            let block = parse_form_block(&read(form)?)?;
            run_local_invariants(&block, &parse_place(place)?)
        }
    }
}

fn write(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let output = match &cli.command {
        Command::Decide { output, .. } | Command::Demo { output, .. } | Command::Invariants { output, .. } => output.as_deref(),
    };
    let result = execute(&cli.command).and_then(|out| write(output, &out.document).map(|_| out.exit_code));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("qpencil: {e}");
            let mut doc = e.to_json();
            doc.push('\n');
            if write(output, &doc).is_err() {
                print!("{doc}");
            }
            ExitCode::from(1)
        }
    }
}
