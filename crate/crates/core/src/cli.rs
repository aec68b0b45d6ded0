//! The `opgroup` command line.
//!
//! Every command produces one or more [`OutputRecord`]s. Results go to the
//! output stream, diagnostics to the error stream, and with `--json` each
//! record is a single JSON line on the output stream. The exit code is 0 iff
//! every record has status `ok`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::Assignment;
use crate::differential::{d, eval_diff, DiffTarget, DiffWord, TargetError};
use crate::finite::{
    catalog, check_identity, enumerate_operators, load_group_file, projection_operator, CheckOutcome, FiniteGroup,
    FiniteOperatedGroup, GroupAction, IdentityKind, LoadedGroup, OperatorMap, DEFAULT_BUDGET,
};
use crate::operated::eval_operated;
use crate::rota_baxter::{diamond, eval_rb, rb_op, RbTarget, RbTargetError, RbWord};
use crate::syntax::{parse_diff_word, parse_word};
use crate::words::{Symbol, Word};

#[derive(Parser, Debug)]
#[command(name = "opgroup", version, about = "Compute in free operated, differential and Rota-Baxter groups")]
pub struct Cli {
    /// Which free object words belong to.
    #[arg(long, global = true, value_enum, default_value_t = Theory::Operated)]
    pub theory: Theory,
    /// Group file (TOML), or `catalog:NAME` for a built-in group such as `catalog:s3`.
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Generator images, `x=name,y=name`.
    #[arg(long, global = true)]
    pub map: Option<String>,
    /// Operator law: endo, diff1, diff-1, rb1, rb-1 or crossed.
    #[arg(long, global = true)]
    pub kind: Option<String>,
    /// identity, inversion, trivial, file, or projection:G1:G2 with subgroup
    /// names from the group file. Defaults to the file's operator.
    #[arg(long, global = true)]
    pub operator: Option<String>,
    /// Candidate budget for enumeration.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Print one JSON record per line.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the canonical form of a word.
    Normalize { expr: String },
    /// Multiply two words.
    Mul { lhs: String, rhs: String },
    /// Apply the operator of the free object.
    Apply { expr: String },
    /// Evaluate a word in a finite operated group.
    Eval { expr: String },
    /// Check an operator against a law over all pairs.
    Check,
    /// List every operator satisfying a law.
    Enumerate,
    /// Maximal bracket nesting.
    Depth { expr: String },
    /// Number of factors in the standard factorization.
    Breadth { expr: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theory {
    Operated,
    Diff,
    Rb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub status: Status,
    pub result: String,
    pub diagnostics: String,
}

impl OutputRecord {
    fn ok(result: impl Into<String>) -> Self {
        OutputRecord { status: Status::Ok, result: result.into(), diagnostics: String::new() }
    }

    fn error(result: impl Into<String>, diagnostics: impl Into<String>) -> Self {
        OutputRecord { status: Status::Error, result: result.into(), diagnostics: diagnostics.into() }
    }
}

type Outcome = Result<Vec<OutputRecord>, OutputRecord>;

fn fail(diagnostics: impl ToString) -> OutputRecord {
    OutputRecord::error("", diagnostics.to_string())
}

/// Parses `args` (including the program name), runs the command and writes
/// to the given streams. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let records = match execute(&cli) {
        Ok(records) => records,
        Err(record) => vec![record],
    };
    let mut code = 0;
    for r in &records {
        if r.status == Status::Error {
            code = 1;
        }
        let written = if cli.json {
            writeln!(out, "{}", serde_json::to_string(r).expect("records serialize"))
        } else {
            write_plain(r, out, err)
        };
        if written.is_err() {
            return 1;
        }
    }
    code
}

fn write_plain(r: &OutputRecord, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<()> {
    if !r.result.is_empty() {
        writeln!(out, "{}", r.result)?;
    }
    if !r.diagnostics.is_empty() {
        writeln!(err, "error: {}", r.diagnostics)?;
    }
    Ok(())
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Normalize { expr } => single(match cli.theory {
            Theory::Diff => diff_word(expr)?.to_string(),
            Theory::Operated => operated_word(expr)?.to_string(),
            Theory::Rb => rb_word(expr)?.to_string(),
        }),
        Command::Mul { lhs, rhs } => single(match cli.theory {
            Theory::Diff => diff_word(lhs)?.mul(&diff_word(rhs)?).to_string(),
            Theory::Operated => operated_word(lhs)?.mul(&operated_word(rhs)?).to_string(),
            Theory::Rb => diamond(&rb_word(lhs)?, &rb_word(rhs)?).map_err(fail)?.to_string(),
        }),
        Command::Apply { expr } => single(match cli.theory {
            Theory::Diff => d(&diff_word(expr)?).to_string(),
            Theory::Operated => operated_word(expr)?.bracket().to_string(),
            Theory::Rb => rb_op(&rb_word(expr)?).to_string(),
        }),
        Command::Depth { expr } => single(match cli.theory {
            Theory::Diff => return Err(fail("depth is defined for bracketed words; diff words have no brackets")),
            Theory::Operated => operated_word(expr)?.depth().to_string(),
            Theory::Rb => rb_word(expr)?.as_word().depth().to_string(),
        }),
        Command::Breadth { expr } => single(match cli.theory {
            Theory::Diff => diff_word(expr)?.len().to_string(),
            Theory::Operated => operated_word(expr)?.breadth().to_string(),
            Theory::Rb => rb_word(expr)?.as_word().breadth().to_string(),
        }),
        Command::Eval { expr } => cmd_eval(cli, expr),
        Command::Check => cmd_check(cli),
        Command::Enumerate => cmd_enumerate(cli),
    }
}

fn single(result: String) -> Outcome {
    Ok(vec![OutputRecord::ok(result)])
}

fn operated_word(text: &str) -> Result<Word, OutputRecord> {
    parse_word(text).map_err(|e| fail(format!("cannot parse {text:?}: {e}")))
}

fn rb_word(text: &str) -> Result<RbWord, OutputRecord> {
    RbWord::new(operated_word(text)?).map_err(|v| fail(format!("not a Rota-Baxter word: {v}")))
}

fn diff_word(text: &str) -> Result<DiffWord, OutputRecord> {
    parse_diff_word(text).map_err(|e| fail(format!("cannot parse {text:?}: {e}")))
}

fn load_group(cli: &Cli) -> Result<LoadedGroup, OutputRecord> {
    let spec = cli.group.as_deref().ok_or_else(|| fail("--group is required"))?;
    if let Some(name) = spec.strip_prefix("catalog:") {
        let group = catalog::by_name(name).ok_or_else(|| fail(format!("no catalog group named {name:?}")))?;
        return Ok(LoadedGroup { group, operator: None, action: None, subgroups: Default::default() });
    }
    load_group_file(&PathBuf::from(spec)).map_err(|e| fail(format!("{spec}: {e}")))
}

fn resolve_operator(cli: &Cli, loaded: &LoadedGroup) -> Result<OperatorMap, OutputRecord> {
    let g = &loaded.group;
    let from_file = || loaded.operator.clone().ok_or_else(|| fail("the group file has no operator; pass --operator"));
    match cli.operator.as_deref() {
        None | Some("file") => from_file(),
        Some("identity") => Ok(OperatorMap::identity(g)),
        Some("inversion") => Ok(OperatorMap::inversion(g)),
        Some("trivial") => Ok(OperatorMap::constant_identity(g)),
        Some(other) => {
            let Some(rest) = other.strip_prefix("projection:") else {
                return Err(fail(format!("unknown operator {other:?}")));
            };
            let (a, b) = rest.split_once(':').ok_or_else(|| fail("projection needs two subgroup names, G1:G2"))?;
            let lookup = |name: &str| {
                loaded.subgroups.get(name).ok_or_else(|| fail(format!("the group file has no subgroup {name:?}")))
            };
            projection_operator(g, lookup(a)?, lookup(b)?).map_err(fail)
        }
    }
}

fn resolve_kind(cli: &Cli, loaded: &LoadedGroup) -> Result<IdentityKind, OutputRecord> {
    let tag = cli.kind.as_deref().ok_or_else(|| fail("--kind is required"))?;
    if tag == "crossed" {
        let action = loaded.action.clone().ok_or_else(|| fail("--kind crossed needs an action in the group file"))?;
        return Ok(IdentityKind::Crossed(action));
    }
    if tag == "crossed-adjoint" {
        return Ok(IdentityKind::Crossed(GroupAction::adjoint(&loaded.group)));
    }
    tag.parse().map_err(fail)
}

/// Splits `x=a,y=b` at top-level commas so names like `(a,e)` survive.
fn parse_map(g: &FiniteGroup, text: &str) -> Result<Assignment<usize>, OutputRecord> {
    let mut pairs = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                pairs.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pairs.push(&text[start..]);
    let mut f = Assignment::new();
    for pair in pairs.into_iter().filter(|p| !p.trim().is_empty()) {
        let (sym, name) = pair.split_once('=').ok_or_else(|| fail(format!("map entry {pair:?} is not gen=element")))?;
        let sym = Symbol::new(sym.trim()).map_err(fail)?;
        let name = name.trim();
        let idx = g.index_of(name).ok_or_else(|| fail(format!("{name:?} is not an element of the group")))?;
        f.insert(sym, idx);
    }
    Ok(f)
}

fn pair_names(g: &FiniteGroup, a: usize, b: usize) -> String {
    format!("({}, {})", g.name(a), g.name(b))
}

fn cmd_eval(cli: &Cli, expr: &str) -> Outcome {
    let loaded = load_group(cli)?;
    let g = loaded.group.clone();
    let op = resolve_operator(cli, &loaded)?;
    let f = parse_map(&g, cli.map.as_deref().unwrap_or(""))?;
    let target = FiniteOperatedGroup::new(g.clone(), op);
    let value = match cli.theory {
        Theory::Operated => eval_operated(&operated_word(expr)?, &f, &target),
        Theory::Diff => {
            let w = diff_word(expr)?;
            let t = DiffTarget::validate(target).map_err(|TargetError::Differential(v)| {
                OutputRecord::error(pair_names(&g, v.left, v.right), "operator violates the differential law (diff1)")
            })?;
            eval_diff(&w, &f, &t)
        }
        Theory::Rb => {
            let w = rb_word(expr)?;
            let t = RbTarget::validate(target).map_err(|RbTargetError::RotaBaxter(v)| {
                OutputRecord::error(pair_names(&g, v.left, v.right), "operator violates the Rota-Baxter law (rb1)")
            })?;
            eval_rb(&w, &f, &t)
        }
    };
    single(g.name(value.map_err(fail)?).to_string())
}

fn cmd_check(cli: &Cli) -> Outcome {
    let loaded = load_group(cli)?;
    let op = resolve_operator(cli, &loaded)?;
    let kind = resolve_kind(cli, &loaded)?;
    let g = &loaded.group;
    match check_identity(g, &op, &kind).map_err(fail)? {
        CheckOutcome::Pass => single("pass".into()),
        CheckOutcome::Counterexample(a, b) => Err(OutputRecord::error(
            format!("counterexample {}", pair_names(g, a, b)),
            format!("operator fails {kind} at {}", pair_names(g, a, b)),
        )),
    }
}

fn cmd_enumerate(cli: &Cli) -> Outcome {
    let loaded = load_group(cli)?;
    let kind = resolve_kind(cli, &loaded)?;
    let g = &loaded.group;
    let found = enumerate_operators(g, &kind, cli.budget.unwrap_or(DEFAULT_BUDGET)).map_err(fail)?;
    let mut records: Vec<OutputRecord> = found.iter().map(|p| OutputRecord::ok(p.describe(g))).collect();
    records.push(OutputRecord::ok(format!("count {}", found.len())));
    Ok(records)
}
