//! Command-line driver: file formats, solver dispatch, reductions and
//! verification. [`run`] does all the work so tests can call it directly.

pub mod formats;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use maxlin2::baseline::{brute_force_min_falsified, conditional_expectation_assignment, DEFAULT_VAR_LIMIT};
use maxlin2::bipartize::{edge_bipartization, min_edge_bipartization, Bipartition, Graph};
use maxlin2::fpt::solve_below_w;
use maxlin2::gadgets::{
    expand_arity_to_3, normalize_max_degree3, oddset_to_lin2, to_eq3_eq3, ReductionTrace,
};
use maxlin2::occ2::solve_occ2;
use maxlin2::LinSystem;

use formats::{emit_lin2, parse_assignment, parse_graph, parse_lin2, parse_oddset, ParseError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_MALFORMED: u8 = 65;

#[derive(Debug, Parser)]
#[command(name = "maxlin2", version, about = "Weighted GF(2) linear systems: solvers and reductions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimize the falsified weight of a lin2 instance
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        /// Budget for the two-variable decision procedure
        #[arg(short)]
        k: Option<u64>,
        /// Largest variable count the exact solver will accept
        #[arg(long, default_value_t = DEFAULT_VAR_LIMIT)]
        oracle_limit: usize,
    },
    /// Rewrite a lin2 instance into a normal form with the same optimum
    Reduce {
        file: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
        /// Write the instance here instead of stdout
        #[arg(short)]
        o: Option<PathBuf>,
        /// Write the reduction trace (JSON) here
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Encode an Odd Set instance as a lin2 instance
    FromOddset {
        file: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Evaluate an assignment and check a claimed optimum
    Verify {
        file: PathBuf,
        assignment: PathBuf,
        /// Expected falsified weight; overrides an `s OPTIMUM` line
        #[arg(long)]
        claim: Option<u64>,
    },
    /// Print the instance profile
    Stats { file: PathBuf },
    /// Delete as few edges as possible (or at most k) to make a graph bipartite
    Bipartize {
        file: PathBuf,
        #[arg(short)]
        k: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Auto,
    Exact,
    Occ2,
    TwoVar,
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Deg3,
    Arity3,
    Eq3eq3,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Malformed { path: String, source: ParseError },
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Malformed { .. } | CliError::Invalid(_) => EXIT_MALFORMED,
        }
    }
}

/// What a command prints and how it exits. `emitted` is an instance file
/// that goes to stdout unless an output path was given.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommandOutcome {
    pub lines: Vec<String>,
    pub emitted: Option<String>,
    pub exit_code: u8,
}

impl CommandOutcome {
    fn lines(lines: Vec<String>) -> Self {
        Self {
            lines,
            ..Self::default()
        }
    }
}

type CmdResult = Result<CommandOutcome, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: fn(&str) -> Result<T, ParseError>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Malformed {
        path: path.display().to_string(),
        source,
    })
}

fn incompatible(e: maxlin2::Error) -> CliError {
    match e {
        maxlin2::Error::InstanceClass(_) | maxlin2::Error::Capacity { .. } => {
            CliError::Usage(e.to_string())
        }
        other => CliError::Invalid(other.to_string()),
    }
}

fn solve(system: &LinSystem, mode: Mode, k: Option<u64>, oracle_limit: usize) -> CmdResult {
    let p = system.profile();
    let mode = match mode {
        Mode::Auto if p.max_occurrence <= 2 => Mode::Occ2,
        Mode::Auto if p.max_arity <= 2 && k.is_some() => Mode::TwoVar,
        Mode::Auto if system.n() <= oracle_limit => Mode::Exact,
        Mode::Auto => {
            return Err(CliError::Usage(format!(
                "no polynomial solver applies and n = {} exceeds the oracle limit {oracle_limit}; \
                 pass -k for two-variable instances or raise --oracle-limit",
                system.n()
            )))
        }
        m => m,
    };
    let optimum = |r: maxlin2::SolveResult| {
        CommandOutcome::lines(vec![
            format!("s OPTIMUM {}", r.falsified_weight),
            format!("v {}", r.assignment),
        ])
    };
    match mode {
        Mode::Exact => {
            if system.n() > oracle_limit {
                return Err(CliError::Usage(format!(
                    "exact mode: n = {} exceeds the oracle limit {oracle_limit}",
                    system.n()
                )));
            }
            brute_force_min_falsified(system, oracle_limit)
                .map(optimum)
                .map_err(incompatible)
        }
        Mode::Occ2 => solve_occ2(system).map(optimum).map_err(incompatible),
        Mode::TwoVar => {
            let k = k.ok_or_else(|| CliError::Usage("two-var mode needs -k".into()))?;
            Ok(match solve_below_w(system, k).map_err(incompatible)? {
                Some(r) => CommandOutcome::lines(vec![
                    "s YES".into(),
                    format!("o {}", r.falsified_weight),
                    format!("v {}", r.assignment),
                ]),
                None => CommandOutcome::lines(vec!["s NO".into()]),
            })
        }
        Mode::Approx => {
            let r = conditional_expectation_assignment(system);
            Ok(CommandOutcome::lines(vec![
                format!("s APPROX {}", r.satisfied_weight(system)),
                format!("v {}", r.assignment),
            ]))
        }
        Mode::Auto => unreachable!(),
    }
}

fn reduce(system: &LinSystem, target: Target) -> Result<(LinSystem, ReductionTrace), CliError> {
    let unit = system.expand_unit_weights();
    let run = || -> maxlin2::Result<(LinSystem, ReductionTrace)> {
        match target {
            Target::Deg3 => normalize_max_degree3(&unit),
            Target::Arity3 => {
                let (s, mut trace) = normalize_max_degree3(&unit)?;
                let (s, t) = expand_arity_to_3(&s)?;
                trace.append(t)?;
                Ok((s, trace))
            }
            Target::Eq3eq3 => to_eq3_eq3(system),
        }
    };
    run().map_err(incompatible)
}

fn emit(text: String, out: Option<&Path>, status: Vec<String>) -> CmdResult {
    match out {
        Some(path) => {
            write(path, &text)?;
            Ok(CommandOutcome::lines(status))
        }
        // stdout carries the instance only, so it stays parseable
        None => Ok(CommandOutcome {
            emitted: Some(text),
            ..CommandOutcome::default()
        }),
    }
}

fn bipartize(g: &Graph, k: Option<usize>) -> CmdResult {
    let found: Option<Bipartition> = match k {
        Some(k) => edge_bipartization(g, k).map_err(incompatible)?,
        None => Some(min_edge_bipartization(g).map_err(incompatible)?),
    };
    let Some(b) = found else {
        return Ok(CommandOutcome::lines(vec!["s NONE".into()]));
    };
    let mut lines = vec![format!("s DELETE {}", b.deleted_edges.len())];
    for &id in &b.deleted_edges {
        let e = g.edges()[id];
        lines.push(format!("e {} {}", e.u + 1, e.v + 1));
    }
    Ok(CommandOutcome::lines(lines))
}

pub fn execute(command: Command) -> CmdResult {
    match command {
        Command::Solve {
            file,
            mode,
            k,
            oracle_limit,
        } => solve(&load(&file, parse_lin2)?, mode, k, oracle_limit),

        Command::Reduce {
            file,
            target,
            o,
            trace,
        } => {
            let system = load(&file, parse_lin2)?;
            let (reduced, t) = reduce(&system, target)?;
            if let Some(path) = trace {
                let json = serde_json::to_string_pretty(&t)
                    .map_err(|e| CliError::Invalid(e.to_string()))?;
                write(&path, &json)?;
            }
            let name = format!("{target:?}").to_lowercase();
            let text = emit_lin2(&reduced, &[format!("reduced to {name} from {}", file.display())]);
            emit(
                text,
                o.as_deref(),
                vec![format!("s REDUCED {} {}", reduced.n(), reduced.m())],
            )
        }

        Command::FromOddset { file, o } => {
            let inst = load(&file, parse_oddset)?;
            let red = oddset_to_lin2(&inst);
            let text = emit_lin2(&red.system, &[format!("k {}", red.k)]);
            emit(
                text,
                o.as_deref(),
                vec![
                    format!("s REDUCED {} {}", red.system.n(), red.system.m()),
                    format!("k {}", red.k),
                ],
            )
        }

        Command::Verify {
            file,
            assignment,
            claim,
        } => {
            let system = load(&file, parse_lin2)?;
            let a = load(&assignment, parse_assignment)?;
            let eval = system
                .evaluate(&a.assignment)
                .map_err(|e| CliError::Invalid(format!("{}: {e}", assignment.display())))?;
            let mut lines = vec![
                format!("o {}", eval.falsified),
                format!("c satisfied {}", eval.satisfied),
            ];
            let claimed = claim.or(a.claimed_falsified);
            let exit_code = match claimed {
                Some(c) if c != eval.falsified => {
                    lines.push(format!("s MISMATCH claimed {c} actual {}", eval.falsified));
                    EXIT_MISMATCH
                }
                Some(_) => {
                    lines.push("s MATCH".into());
                    EXIT_OK
                }
                None => {
                    lines.push("s EVALUATED".into());
                    EXIT_OK
                }
            };
            Ok(CommandOutcome {
                lines,
                emitted: None,
                exit_code,
            })
        }

        Command::Stats { file } => {
            let p = load(&file, parse_lin2)?.profile();
            Ok(CommandOutcome::lines(vec![
                format!("n {}", p.n),
                format!("m {}", p.m),
                format!("r {}", p.max_arity),
                format!("s {}", p.max_occurrence),
                format!("W {}", p.total_weight),
                format!("forced {}", p.forced_falsified),
                format!("unit_weights {}", p.unit_weights),
                format!("distinct_lhs {}", p.distinct_lhs),
            ]))
        }

        Command::Bipartize { file, k } => bipartize(&load(&file, parse_graph)?, k),
    }
}

/// Parses `args` (program name first), runs the command and writes its
/// output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            for line in &outcome.lines {
                let _ = writeln!(out, "{line}");
            }
            if let Some(text) = &outcome.emitted {
                let _ = write!(out, "{text}");
            }
            outcome.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
