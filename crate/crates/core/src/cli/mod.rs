//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a well-formed request has no answer
//! (for instance `pl(A) = 0` under rule `c2`), 2 for usage errors and
//! malformed input documents.

pub mod demo;
pub mod render;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::combination::{conjunctive, dempster_combine};
use crate::conditioning::{
    apply_specialization, condition_closed, condition_geometric, condition_open,
    condition_yager_kohlas, image_general, transfer_matrix_for, ConditioningOutcome,
    TransferRule,
};
use crate::credal::{fh_conditional, oracle_conditional};
use crate::error::BeliefError;
use crate::frame::{Frame, SubsetKey};
use crate::io::{parse_bba, parse_closest, parse_matrix, MatrixSpec};
use crate::lattice::belief;
use crate::mass::{MassFunction, World};
use crate::pignistic::pignistic;

pub use demo::{demo_voting, TableSelector};
pub use render::{percent, to_json, to_tsv, RenderedTable, RowValues, TableRow};

#[derive(Debug, Parser)]
#[command(name = "belief", version, about = "Belief functions on finite frames")]
pub struct CommandRequest {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WorldArg {
    Open,
    Closed,
}

impl From<WorldArg> for World {
    fn from(w: WorldArg) -> Self {
        match w {
            WorldArg::Open => World::Open,
            WorldArg::Closed => World::Closed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    /// Unnormalized Dempster conditioning.
    C1,
    /// Normalized Dempster conditioning.
    C2,
    /// Yager-Kohlas conditioning.
    C3,
    /// Geometric conditioning; `--world` picks the variant.
    #[value(alias = "c4")]
    Geometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fh,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoScenario {
    Voting,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Mass-function document.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Override the document's world assumption.
    #[arg(long, value_enum)]
    pub world: Option<WorldArg>,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Set to report (repeatable, e.g. `--query c,d`). Defaults to every
    /// non-empty subset.
    #[arg(long)]
    pub query: Vec<String>,
    /// Print the resulting masses instead of bel/pl.
    #[arg(long)]
    pub masses: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Belief and plausibility of the input.
    Bel {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// Condition on learning the answer is in the retained set.
    Condition {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        rule: Rule,
        /// Retained set, e.g. `c,d,e`.
        #[arg(long)]
        retain: String,
        #[command(flatten)]
        output: Output,
    },
    /// Apply a specialization matrix.
    Specialize {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Apply a transfer matrix or a closest-world map.
    Image {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "FILE", conflicts_with = "closest", required_unless_present = "closest")]
        matrix: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        closest: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Conjunctive combination with a second mass function.
    Combine {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "FILE")]
        in2: PathBuf,
        /// Normalize the result (Dempster's rule).
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Pignistic probabilities.
    Betp {
        #[command(flatten)]
        common: Common,
        /// Set to report (repeatable). Defaults to the singletons.
        #[arg(long)]
        query: Vec<String>,
    },
    /// Upper and lower conditional probability of the query given the retained set.
    Credal {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        retain: String,
        #[arg(long)]
        query: String,
    },
    /// Reproduce the voting scenario tables.
    Demo {
        #[arg(value_enum)]
        scenario: DemoScenario,
        #[arg(long, value_enum, default_value = "all")]
        table: TableSelector,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<BeliefError> for Failure {
    fn from(e: BeliefError) -> Self {
        if e.is_domain() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// Parses `args` (including the program name) and executes the request.
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let request = match CommandRequest::try_parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            let status = e.exit_code();
            let text = e.render().to_string();
            let (stdout, stderr) = if status == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return RunOutput {
                status,
                stdout,
                stderr,
            };
        }
    };
    match execute(&request) {
        Ok(stdout) => RunOutput {
            status: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Domain(msg)) => RunOutput {
            status: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Usage(msg)) => RunOutput {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn in_context(path: &Path, e: BeliefError) -> Failure {
    match Failure::from(e) {
        Failure::Usage(msg) => Failure::Usage(format!("{}: {msg}", path.display())),
        other => other,
    }
}

fn load(common: &Common) -> Result<MassFunction, Failure> {
    let m = parse_bba(&read(&common.input)?).map_err(|e| in_context(&common.input, e))?;
    match common.world {
        Some(w) => m
            .with_world(w.into())
            .map_err(|e| in_context(&common.input, e)),
        None => Ok(m),
    }
}

fn parse_set(frame: &Frame, flag: &str, literal: &str) -> Result<SubsetKey, Failure> {
    frame
        .parse_subset(literal)
        .map_err(|e| Failure::Usage(format!("--{flag} {literal:?}: {e}")))
}

fn query_sets(frame: &Frame, queries: &[String]) -> Result<Vec<SubsetKey>, Failure> {
    let mut keys = if queries.is_empty() {
        frame
            .subsets_by_size()
            .into_iter()
            .filter(|k| !k.is_empty())
            .collect()
    } else {
        queries
            .iter()
            .map(|q| parse_set(frame, "query", q))
            .collect::<Result<Vec<_>, _>>()?
    };
    keys.sort_by_key(|k| k.display_order());
    keys.dedup();
    Ok(keys)
}

fn result_table(m: &MassFunction, output: &Output) -> Result<RenderedTable, Failure> {
    let frame = m.frame();
    let rows = if output.masses {
        let mut focal: Vec<_> = m.focal().collect();
        focal.sort_by_key(|(k, _)| k.display_order());
        focal
            .into_iter()
            .map(|(k, v)| TableRow::mass(frame, k, v))
            .collect()
    } else {
        let view = belief(m);
        query_sets(frame, &output.query)?
            .into_iter()
            .map(|k| TableRow::interval(frame, k, view.bel(k), view.pl(k)))
            .collect()
    };
    Ok(RenderedTable {
        rows,
        result: Some(m.clone()),
        ..Default::default()
    })
}

fn outcome_table(out: &ConditioningOutcome, output: &Output) -> Result<RenderedTable, Failure> {
    Ok(result_table(&out.result, output)?
        .extra("conflict", out.conflict, true)
        .extra("normalization", out.normalization, false))
}

fn render(format: Format, tables: &[RenderedTable]) -> String {
    match format {
        Format::Tsv => to_tsv(tables),
        Format::Json => to_json(tables),
    }
}

fn execute(request: &CommandRequest) -> Result<String, Failure> {
    let (format, table) = match &request.command {
        Command::Bel { common, output } => {
            let m = load(common)?;
            let mut table = result_table(&m, output)?;
            if m.empty_mass() > 0.0 {
                table = table.extra("empty", m.empty_mass(), true);
            }
            (common.format, table)
        }
        Command::Condition {
            common,
            rule,
            retain,
            output,
        } => {
            let m = load(common)?;
            let retained = parse_set(m.frame(), "retain", retain)?;
            let normalized = match rule {
                Rule::C1 => false,
                Rule::C2 | Rule::C3 => true,
                Rule::Geometric => m.world() == World::Closed,
            };
            if normalized && retained.is_empty() {
                let name = rule.to_possible_value().expect("no skipped variants");
                return Err(Failure::Usage(format!(
                    "--retain must be non-empty for rule {}",
                    name.get_name()
                )));
            }
            let out = match rule {
                Rule::C1 => condition_open(&m, retained)?,
                Rule::C2 => condition_closed(&m, retained)?,
                Rule::C3 => condition_yager_kohlas(&m, retained)?,
                Rule::Geometric => condition_geometric(&m, retained, m.world())?,
            };
            (common.format, outcome_table(&out, output)?)
        }
        Command::Specialize {
            common,
            matrix,
            output,
        } => {
            let m = load(common)?;
            let spec = match parse_matrix(&read(matrix)?).map_err(|e| in_context(matrix, e))? {
                MatrixSpec::Specialization(s) => s,
                MatrixSpec::Transfer(_) => {
                    return Err(Failure::Usage(format!(
                        "{}: a transfer matrix is not a specialization; use `image --matrix`",
                        matrix.display()
                    )))
                }
            };
            let out = apply_specialization(&m, &spec)?;
            let empty = out.empty_mass();
            (common.format, result_table(&out, output)?.extra("empty", empty, true))
        }
        Command::Image {
            common,
            matrix,
            closest,
            output,
        } => {
            let m = load(common)?;
            let transfer = match (matrix, closest) {
                (Some(path), _) => parse_matrix(&read(path)?)
                    .map_err(|e| in_context(path, e))?
                    .into_transfer(),
                (None, Some(path)) => {
                    let map = parse_closest(&read(path)?, m.frame())
                        .map_err(|e| in_context(path, e))?;
                    transfer_matrix_for(&TransferRule::Closest(map.clone()), map.retained(), m.frame())?
                }
                (None, None) => unreachable!("clap requires one of --matrix/--closest"),
            };
            let out = image_general(&m, &transfer)?;
            let empty = out.empty_mass();
            (common.format, result_table(&out, output)?.extra("empty", empty, true))
        }
        Command::Combine {
            common,
            in2,
            normalize,
            output,
        } => {
            let m1 = load(common)?;
            let m2 = parse_bba(&read(in2)?).map_err(|e| in_context(in2, e))?;
            let table = if *normalize {
                outcome_table(&dempster_combine(&m1, &m2)?, output)?
            } else {
                let out = conjunctive(&m1, &m2)?;
                let conflict = out.empty_mass();
                result_table(&out, output)?.extra("conflict", conflict, true)
            };
            (common.format, table)
        }
        Command::Betp { common, query } => {
            let m = load(common)?;
            let p = pignistic(&m)?;
            let frame = m.frame();
            let sets = if query.is_empty() {
                (0..frame.len()).map(SubsetKey::singleton).collect()
            } else {
                query_sets(frame, query)?
            };
            let rows = sets
                .into_iter()
                .map(|k| {
                    let v = p.prob(k);
                    TableRow::interval(frame, k, v, v)
                })
                .collect();
            (
                common.format,
                RenderedTable {
                    rows,
                    ..Default::default()
                },
            )
        }
        Command::Credal {
            common,
            method,
            retain,
            query,
        } => {
            let m = load(common)?;
            let given = parse_set(m.frame(), "retain", retain)?;
            let event = parse_set(m.frame(), "query", query)?;
            let b = match method {
                Method::Fh => fh_conditional(&m, given, event)?,
                Method::Oracle => oracle_conditional(&m, given, event)?,
            };
            (
                common.format,
                RenderedTable {
                    rows: vec![TableRow::interval(m.frame(), event, b.lower, b.upper)],
                    ..Default::default()
                },
            )
        }
        Command::Demo {
            scenario: DemoScenario::Voting,
            table,
            format,
        } => return Ok(render(*format, &demo_voting(*table)?)),
    };
    Ok(render(format, &[table]))
}
