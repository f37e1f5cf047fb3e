//! The `skewdet` command line. Every subcommand produces a [`CommandResult`]
//! that is printed as JSON (the default) or as plain text.
//!
//! Exit codes: 0 when the status is `ok`, 1 for a `violation` (an invalid
//! decomposition, an identity that fails, a failed acceptance criterion),
//! 2 for an `error` (bad input, unreadable files, usage mistakes).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{Value, json};

use crate::decomp::{Decomposition, is_nested, peel_rim, peel_thick_rim, validate_decomposition};
use crate::error::{Error, Result};
use crate::mstrip::{MStripSpec, andre_numbers, build_mstrip, closed_forms, count_mstrip_thm_record};
use crate::nested_det::{IdentityReport, verify_identity};
use crate::paths::tableau_tuple_to_path_tuple;
use crate::reproduce::{criterion_ids, run_criterion};
use crate::shapes::SkewShape;
use crate::tableaux::{Tableau, count_syt_aitken, count_syt_bruteforce, schur_direct, schur_jacobi_trudi};

#[derive(Parser, Debug)]
#[command(
    name = "skewdet",
    version,
    about = "Nested strip decompositions of skew shapes and their determinants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count standard tableaux of a skew shape.
    Count {
        /// Shape as a JSON file or inline JSON: {"lambda":[..],"mu":[..]}.
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = CountMethod::Aitken)]
        method: CountMethod,
    },
    /// Schur polynomial of a skew shape in K variables.
    Schur {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, default_value_t = SchurMethod::Jt)]
        method: SchurMethod,
    },
    /// Peel a shape into an outside nested decomposition.
    Decompose {
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = Strategy::Rim)]
        strategy: Strategy,
    },
    /// Check a decomposition and report its shared cells and nestedness.
    Validate {
        /// Decomposition as a JSON file or inline JSON.
        #[arg(long)]
        decomp: String,
    },
    /// Compare both sides of the Schur determinant identity.
    Verify {
        #[arg(long)]
        decomp: String,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        /// Use as many variables as the degree of the identity.
        #[arg(long)]
        full_degree: bool,
    },
    /// Map a tableau of the whole shape to its tuple of lattice paths.
    Path {
        #[arg(long)]
        decomp: String,
        /// Tableau as JSON: {"entries":[[row,col,value],..]}.
        #[arg(long)]
        tableau: String,
    },
    /// Count standard tableaux of an m-strip diagram.
    Mstrip {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Head partition, comma separated.
        #[arg(long, default_value = "")]
        head: String,
        /// Tail partition, comma separated.
        #[arg(long, default_value = "")]
        tail: String,
        #[arg(long, value_enum, default_value_t = MStripMethod::Thm)]
        method: MStripMethod,
    },
    /// Andre numbers and the sequences derived from them.
    Sequences {
        #[arg(long, default_value_t = 12)]
        limit: usize,
    },
    /// Run the acceptance criteria and print a pass/fail table.
    Reproduce {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Aitken,
    Brute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchurMethod {
    Direct,
    Jt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Rim,
    ThickRim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MStripMethod {
    Thm,
    Closed,
    Brute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub provenance: Value,
    #[serde(skip)]
    pub text: String,
}

impl CommandResult {
    fn ok(payload: Value, provenance: Value, text: String) -> Self {
        CommandResult {
            status: Status::Ok,
            payload,
            provenance,
            text,
        }
    }

    fn error(e: &Error) -> Self {
        CommandResult {
            status: Status::Error,
            payload: json!({ "error": e.to_string() }),
            provenance: Value::Null,
            text: format!("error: {e}"),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("plain JSON values"),
            Format::Text => self.text.clone(),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Read a JSON document from a file, or take the argument itself when it
/// is inline JSON.
fn load<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::Parse(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<u32>()
                .map_err(|e| Error::Parse(format!("partition part {p:?}: {e}")))
        })
        .collect()
}

pub fn run(cli: &Cli) -> CommandResult {
    execute(&cli.command).unwrap_or_else(|e| CommandResult::error(&e))
}

fn execute(cmd: &Command) -> Result<CommandResult> {
    match cmd {
        Command::Count { shape, method } => {
            let s: SkewShape = load(shape)?;
            let count = match method {
                CountMethod::Aitken => count_syt_aitken(&s)?,
                CountMethod::Brute => count_syt_bruteforce(&s.cells()),
            };
            Ok(CommandResult::ok(
                json!({ "shape": s, "boxes": s.size(), "count": count.to_string() }),
                json!({ "method": format!("{method:?}").to_lowercase() }),
                count.to_string(),
            ))
        }
        Command::Schur { shape, vars, method } => {
            let s: SkewShape = load(shape)?;
            if *vars == 0 {
                return Err(Error::OutOfRange("at least one variable is needed".into()));
            }
            let p = match method {
                SchurMethod::Direct => schur_direct(&s, *vars),
                SchurMethod::Jt => schur_jacobi_trudi(&s, *vars),
            };
            Ok(CommandResult::ok(
                json!({ "shape": s, "nvars": vars, "terms": p.to_json_terms() }),
                json!({ "method": match method { SchurMethod::Direct => "tableau sum", SchurMethod::Jt => "Jacobi-Trudi determinant" } }),
                p.to_string(),
            ))
        }
        Command::Decompose { shape, strategy } => {
            let s: SkewShape = load(shape)?;
            let d = match strategy {
                Strategy::Rim => peel_rim(&s)?,
                Strategy::ThickRim => peel_thick_rim(&s)?,
            };
            let text = describe(&d);
            Ok(CommandResult::ok(
                json!({ "decomposition": d, "g": d.len(), "r": d.r(), "shared_corners": d.shared_corners(), "nested": is_nested(&d) }),
                json!({ "strategy": format!("{strategy:?}").to_lowercase() }),
                text,
            ))
        }
        Command::Validate { decomp } => {
            let d: Decomposition = load(decomp)?;
            let verdict = validate_decomposition(&d);
            let nested = verdict.is_ok() && is_nested(&d);
            let payload = json!({
                "valid": verdict.is_ok(),
                "violation": verdict.as_ref().err(),
                "nested": nested,
                "g": d.len(),
                "r": d.r(),
                "shared_corners": d.shared_corners(),
            });
            let text = match &verdict {
                Ok(()) => format!("valid, {}nested\n{}", if nested { "" } else { "not " }, describe(&d)),
                Err(v) => format!("invalid: {v}"),
            };
            let status = if nested { Status::Ok } else { Status::Violation };
            Ok(CommandResult {
                status,
                payload,
                provenance: Value::Null,
                text,
            })
        }
        Command::Verify {
            decomp,
            vars,
            full_degree,
        } => {
            let d: Decomposition = load(decomp)?;
            let nvars = if *full_degree {
                (d.shape().size() as i64 + d.r().max(0)) as usize
            } else {
                *vars
            };
            let rep: IdentityReport = verify_identity(&d, nvars)?;
            let text = format!(
                "equal: {}\nr = {}, g = {}, {} variables, degree {} ({})\nlhs: {}\nrhs: {}",
                rep.equal,
                rep.r,
                rep.g,
                rep.nvars,
                rep.degree,
                rep.label,
                rep.lhs,
                rep.rhs
                    .as_ref()
                    .map(ToString::to_string)
                    .or(rep.defect.clone())
                    .unwrap_or_default()
            );
            let status = if rep.equal { Status::Ok } else { Status::Violation };
            Ok(CommandResult {
                status,
                payload: to_value(&rep),
                provenance: json!({ "label": rep.label }),
                text,
            })
        }
        Command::Path { decomp, tableau } => {
            let d: Decomposition = load(decomp)?;
            let t: Tableau = load(tableau)?;
            if !t.is_semistandard() {
                return Err(Error::Tableau("entries are not semistandard".into()));
            }
            let tuple = tableau_tuple_to_path_tuple(&t, &d)?;
            let mut text = String::new();
            for (i, p) in tuple.paths.iter().enumerate() {
                let _ = writeln!(
                    text,
                    "path {}: {} -> {}, {} steps",
                    i + 1,
                    p.start,
                    p.end,
                    p.upper.len() + p.lower.len()
                );
            }
            let _ = write!(
                text,
                "non-crossing: {}, touchpoints: {:?}",
                tuple.noncrossing, tuple.touchpoints
            );
            Ok(CommandResult::ok(to_value(&tuple), Value::Null, text))
        }
        Command::Mstrip {
            m,
            n,
            head,
            tail,
            method,
        } => {
            let spec = MStripSpec::new(*m, *n, &parse_parts(head)?, &parse_parts(tail)?)?;
            let shape = build_mstrip(&spec)?;
            let (count, provenance) = match method {
                MStripMethod::Thm => {
                    let rec = count_mstrip_thm_record(&spec)?;
                    let count = rec.count.clone();
                    (count, to_value(&rec))
                }
                MStripMethod::Brute => (
                    count_syt_bruteforce(&shape.cells()),
                    json!({ "method": "brute force over linear extensions" }),
                ),
                MStripMethod::Closed => closed_value(&spec)?,
            };
            Ok(CommandResult::ok(
                json!({ "spec": spec, "shape": shape, "boxes": shape.size(), "count": count.to_string() }),
                provenance,
                count.to_string(),
            ))
        }
        Command::Sequences { limit } => {
            let s = andre_numbers(*limit);
            let mut rows = Vec::new();
            let mut text = String::from("n\tA\tE\tT\tA_bar\tA_tilde\tA_hat\n");
            for k in 0..=*limit {
                let tangent = if k >= 1 && 2 * k - 1 <= *limit {
                    Some(s.tangent(k)?.to_string())
                } else {
                    None
                };
                let row = json!({
                    "n": k,
                    "a": s.a(k)?.to_string(),
                    "e": s.euler(k)?.to_string(),
                    "t": tangent,
                    "a_bar": s.a_bar(k)?.to_string(),
                    "a_tilde": s.a_tilde(k)?.to_string(),
                    "a_hat": s.a_hat(k)?.to_string(),
                });
                let _ = writeln!(
                    text,
                    "{k}\t{}\t{}\t{}\t{}\t{}\t{}",
                    s.a(k)?,
                    s.euler(k)?,
                    tangent.as_deref().unwrap_or("-"),
                    s.a_bar(k)?,
                    s.a_tilde(k)?,
                    s.a_hat(k)?
                );
                rows.push(row);
            }
            Ok(CommandResult::ok(
                json!({ "rows": rows }),
                json!({ "method": "boustrophedon triangle" }),
                text,
            ))
        }
        Command::Reproduce { only } => {
            let ids: Vec<u8> = if only.is_empty() {
                criterion_ids().collect()
            } else {
                only.clone()
            };
            let mut outcomes = Vec::new();
            for id in ids {
                outcomes.push(run_criterion(id).ok_or_else(|| Error::OutOfRange(format!("no criterion {id}")))?);
            }
            let pass = outcomes.iter().all(|o| o.pass);
            let text = outcomes.iter().map(|o| o.line()).collect::<Vec<_>>().join("\n");
            Ok(CommandResult {
                status: if pass { Status::Ok } else { Status::Violation },
                payload: json!({ "pass": pass, "criteria": outcomes }),
                provenance: Value::Null,
                text,
            })
        }
    }
}

/// The closed form covering this spec, if there is one.
fn closed_value(spec: &MStripSpec) -> Result<(num_bigint::BigInt, Value)> {
    let c = closed_forms(spec.n)?;
    let (h, t) = (spec.head.parts(), spec.tail.parts());
    let (value, formula) = match (spec.m, h, t) {
        (3, [], []) => (c.three_plain, "(3n-2)! T_n / ((2n-1)! 2^(2n-2))"),
        (3, [1], []) | (3, [], [1]) => (c.three_head, "(3n-1)! T_n / ((2n-1)! 2^(2n-1))"),
        (3, [1], [1]) => (c.three_both, "(3n)! A_hat(2n-1)"),
        (4, [], []) => (c.four_plain, "C(4n-2,2n-1) T_n^2 + C(4n-2,2n-2) E_(2n-2) E_(2n)"),
        (4, [1], [1]) => (c.four_both, "C(4n,2n) E_(2n)^2 - C(4n,2n-2) E_(2n-2) E_(2n+2)"),
        (5, [], []) => (
            c.five_plain
                .ok_or_else(|| Error::MStrip("the 5-strip closed form needs n >= 2".into()))?,
            "(5n-6)! T_(n-1)^2 / ((2n-3)!^2 2^(4n-6) (2^(2n-2)-1))",
        ),
        _ => return Err(Error::MStrip("no closed form for this m, head and tail".into())),
    };
    Ok((value, json!({ "method": "closed form", "formula": formula })))
}

fn describe(d: &Decomposition) -> String {
    let mut out = format!("shape {}, g = {}, r = {}", d.shape(), d.len(), d.r());
    for (i, s) in d.strips().iter().enumerate() {
        let cells: Vec<String> = s.cells().iter().map(|c| c.to_string()).collect();
        let _ = write!(out, "\nstrip {}: {}", i + 1, cells.join(" "));
    }
    let shared: Vec<String> = d.shared_corners().iter().map(|s| s.cell.to_string()).collect();
    if !shared.is_empty() {
        let _ = write!(out, "\nshared: {}", shared.join(" "));
    }
    out
}

/// Parse arguments, run, print or write the result, and return the exit
/// code. Usage errors print clap's message and return 2.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = run(&cli);
    let rendered = result.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered + "\n") {
                eprintln!("cannot write {}: {e}", path.display());
                return Status::Error.exit_code();
            }
        }
        None => println!("{rendered}"),
    }
    result.status.exit_code()
}
