use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use symlie_core::conjecture::{check_generation_in, quotient_report_in, Interpretation};
use symlie_core::rep::{conjugation_character, multiplicities};
use symlie_core::{Error, DEFAULT_MAX_DEGREE};

use crate::json::{
    BasisJson, DecompositionJson, DimJson, GenerationJson, OrderedMap, QuotientJson, SuiteJson,
    TableRowJson, VerifyJson,
};
use crate::session::Session;
use crate::suites::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment override for `--limit`.
pub const LIMIT_ENV: &str = "SYMLIE_MAX_N";

const DEFAULT_SEED: u64 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "symlie",
    version,
    about = "Lie elements of the rational group algebra of S_n"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the primary output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Largest degree any command may compute.
    #[arg(long, global = true, env = LIMIT_ENV, value_parser = clap::value_parser!(u32).range(1..))]
    limit: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print dim L_n.
    Dim(Degree),
    /// Print the canonical (RREF) basis of L_n.
    Basis(Degree),
    /// Run property suites.
    Verify {
        #[command(flatten)]
        degree: Degree,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
        samples: u32,
    },
    /// Conjugation character of L_n and its irreducible multiplicities.
    Decompose(Degree),
    #[command(subcommand)]
    Conjecture(ConjectureCommand),
    /// Summary for n = 1..=max-n.
    Table {
        #[arg(long = "max-n", default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
}

#[derive(Subcommand, Debug)]
enum ConjectureCommand {
    /// Is L_n generated by the elements 1 - (i j)?
    Generation(Degree),
    /// Kernel of the action on Q^n and the repeated-commutator family.
    Quotient {
        #[command(flatten)]
        degree: Degree,
        #[arg(long, value_enum)]
        interpretation: InterpretationArg,
    },
}

#[derive(clap::Args, Debug)]
struct Degree {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InterpretationArg {
    Perm,
    Standard,
    Exterior,
}

impl From<InterpretationArg> for Interpretation {
    fn from(a: InterpretationArg) -> Self {
        match a {
            InterpretationArg::Perm => Interpretation::Perm,
            InterpretationArg::Standard => Interpretation::Standard,
            InterpretationArg::Exterior => Interpretation::Exterior,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceGuard { .. } => EXIT_RESOURCE,
            Error::Parse(_) | Error::InvalidPermutation(_) | Error::InvalidPartition(_) => {
                EXIT_USAGE
            }
            _ => EXIT_CLAIM_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced: the primary output, lines for stderr, and
/// whether every checked claim held.
struct Output {
    body: String,
    notes: Vec<String>,
    holds: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output {
            body,
            notes: Vec::new(),
            holds: true,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

/// Runs the command line `args` (including the program name) and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let session = Session::new();
    match execute(&cli, &session) {
        Ok(output) => {
            for note in &output.notes {
                let _ = writeln!(stderr, "{note}");
            }
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &output.body),
                None => stdout.write_all(output.body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            if output.holds {
                EXIT_OK
            } else {
                EXIT_CLAIM_FAILED
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn guard(n: u32, cli: &Cli) -> Result<usize, Failure> {
    let max = cli.limit.unwrap_or(DEFAULT_MAX_DEGREE as u32);
    if n > max {
        return Err(Failure {
            code: EXIT_RESOURCE,
            message: format!("n = {n} exceeds the limit {max} (raise with --limit or {LIMIT_ENV})"),
        });
    }
    Ok(n as usize)
}

fn execute(cli: &Cli, session: &Session) -> Result<Output, Failure> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Dim(d) => {
            let n = guard(d.n, cli)?;
            let dim = session.lie_basis(n)?.dim();
            Ok(Output::ok(if json {
                to_json(&DimJson { n, dim })
            } else {
                format!("{dim}\n")
            }))
        }
        Command::Basis(d) => {
            let n = guard(d.n, cli)?;
            let lie = session.lie_basis(n)?;
            if json {
                return Ok(Output::ok(to_json(&BasisJson::from(&*lie))));
            }
            let mut body = format!("# n = {n}, dim = {}, one-line lex ordering\n", lie.dim());
            for u in lie.basis_elements() {
                let _ = writeln!(body, "{u}");
            }
            Ok(Output::ok(body))
        }
        Command::Verify {
            degree,
            suite,
            seed,
            samples,
        } => {
            let n = guard(degree.n, cli)?;
            let seed = seed.unwrap_or(DEFAULT_SEED);
            let lie = session.lie_basis(n)?;
            let outcomes = run_suite(*suite, &lie, seed, *samples as usize)?;
            let notes: Vec<String> = outcomes
                .iter()
                .filter_map(|o| {
                    o.witness
                        .as_ref()
                        .map(|w| format!("witness ({}): {w}", o.suite.name()))
                })
                .collect();
            let holds = notes.is_empty();
            let body = if json {
                to_json(&VerifyJson {
                    n,
                    seed,
                    samples: *samples as usize,
                    passed: holds,
                    suites: outcomes
                        .iter()
                        .map(|o| SuiteJson {
                            suite: o.suite.name().into(),
                            checks: o.checks,
                            passed: o.passed(),
                            witness: o.witness.clone(),
                        })
                        .collect(),
                })
            } else {
                let mut body = format!("seed {seed}\n");
                for o in &outcomes {
                    let status = if o.passed() { "ok" } else { "FAILED" };
                    let _ = writeln!(body, "{}: {} checks, {status}", o.suite.name(), o.checks);
                }
                body
            };
            Ok(Output { body, notes, holds })
        }
        Command::Decompose(d) => {
            let n = guard(d.n, cli)?;
            let lie = session.lie_basis(n)?;
            let table = session.character_table(n)?;
            let chi = conjugation_character(&lie)?;
            let report = multiplicities(&chi, &table)?;
            if json {
                return Ok(Output::ok(to_json(&DecompositionJson::new(&chi, &report))));
            }
            let mut body = format!("character of L_{n} under conjugation\n");
            for (mu, v) in chi.iter() {
                let _ = writeln!(body, "  {mu}: {v}");
            }
            body.push_str("multiplicities\n");
            for (lambda, a) in &report.multiplicities {
                let _ = writeln!(body, "  {lambda}: {a}");
            }
            let _ = writeln!(body, "{}", report.frobenius_text());
            let _ = writeln!(body, "dim {}", report.total_dim);
            Ok(Output::ok(body))
        }
        Command::Conjecture(ConjectureCommand::Generation(d)) => {
            let n = guard(d.n, cli)?;
            let lie = session.lie_basis(n)?;
            let report = check_generation_in(&lie)?;
            let mut notes = Vec::new();
            if let Some(i) = report.missing {
                notes.push(format!(
                    "witness: basis vector {i} of L_{n} is not in the subalgebra generated by the 1 - (i j): {}",
                    lie.basis_element(i)
                ));
            }
            let body = if json {
                to_json(&GenerationJson::from(&report))
            } else {
                format!(
                    "n {}\nclosure_dim {}\nlie_dim {}\nholds {}\nsweeps {}\n",
                    report.n, report.closure_dim, report.lie_dim, report.holds, report.sweeps
                )
            };
            Ok(Output {
                body,
                notes,
                holds: report.holds,
            })
        }
        Command::Conjecture(ConjectureCommand::Quotient {
            degree,
            interpretation,
        }) => {
            let n = guard(degree.n, cli)?;
            let lie = session.lie_basis(n)?;
            let report = quotient_report_in(&lie, (*interpretation).into())?;
            let mut notes = Vec::new();
            if !report.matches {
                notes.push(format!(
                    "witness: dim L_{n}/K_{n} = {} but (n-1)! = {}",
                    report.quotient_dim, report.predicted
                ));
            }
            if let Some(idx) = &report.dependent_commutator {
                notes.push(format!(
                    "witness: commutator with indices {idx:?} is dependent on earlier ones modulo K_{n}"
                ));
            } else if !report.commutators_form_basis {
                notes.push(format!(
                    "witness: {} independent commutators modulo K_{n}, quotient has dim {}",
                    report.commutator_rank_mod_kernel, report.quotient_dim
                ));
            }
            let body = if json {
                to_json(&QuotientJson::from(&report))
            } else {
                let j = QuotientJson::from(&report);
                format!(
                    "n {}\ninterpretation {}\nlie_dim {}\nkernel_dim {}\nquotient_dim {}\npredicted {}\nmatches {}\n\
                     commutator_count {}\ncommutator_rank_mod_kernel {}\ncommutators_form_basis {}\n",
                    j.n,
                    j.interpretation,
                    j.lie_dim,
                    j.kernel_dim,
                    j.quotient_dim,
                    j.predicted,
                    j.matches,
                    j.commutator_count,
                    j.commutator_rank_mod_kernel,
                    j.commutators_form_basis
                )
            };
            Ok(Output {
                body,
                notes,
                holds: report.consistent_with_prediction(),
            })
        }
        Command::Table { max_n } => {
            let max_n = guard(*max_n, cli)?;
            let mut rows = Vec::new();
            for n in 1..=max_n {
                let lie = session.lie_basis(n)?;
                let generation = check_generation_in(&lie)?;
                let mut quotients = Vec::new();
                for interp in Interpretation::ALL {
                    let q = quotient_report_in(&lie, interp)?;
                    quotients.push((interp.as_str().to_string(), q.quotient_dim));
                }
                rows.push(TableRowJson {
                    n,
                    lie_dim: lie.dim(),
                    closure_dim: generation.closure_dim,
                    generation_holds: generation.holds,
                    quotient_dim: OrderedMap(quotients),
                });
            }
            if json {
                return Ok(Output::ok(to_json(&rows)));
            }
            let mut body = String::from("n  dim  closure  generated  quotient(perm)  quotient(standard)  quotient(exterior)\n");
            for r in &rows {
                let q = &r.quotient_dim.0;
                let _ = writeln!(
                    body,
                    "{:<2} {:<4} {:<8} {:<10} {:<15} {:<19} {}",
                    r.n, r.lie_dim, r.closure_dim, r.generation_holds, q[0].1, q[1].1, q[2].1
                );
            }
            Ok(Output::ok(body))
        }
    }
}
