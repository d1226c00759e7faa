//! Command-line front end: the expression language, presentations, normal
//! forms, verification suites and JSON reports.

pub mod parse;
pub mod render;
pub mod suites;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use qpbw_core::presentations::{Flavor, PresentationSpec};
use qpbw_core::rewrite::set_default_step_budget;
use qpbw_core::specialize::poisson_bracket;
use qpbw_core::structmaps::{derived_generators, quantum_root_vectors, JimboGenerators, LOperators, RootVectors};
use qpbw_core::{FreeElement, Generator, LaurentElement};

pub use parse::{parse_expression, ParseError};
pub use suites::{run_suite, Suite, SuiteParams};

/// Version of the JSON output documents.
pub const SCHEMA: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Compute(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Compute(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "qpbw", version, about = "PBW normal forms and identity checks for FRT presentations of quantum gl_n and sl_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Rank of the matrices.
    #[arg(long)]
    pub n: usize,
    /// gl or sl.
    #[arg(long, default_value = "gl")]
    pub flavor: Flavor,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Report duration_ms as 0 so that reports are byte-identical.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Print the presentation: generators, order and rewrite rules.
    Present(Common),
    /// Normal form of an expression.
    Nf {
        #[command(flatten)]
        common: Common,
        /// Expression, e.g. "b[1,2]*g[2,1]".
        expression: Option<String>,
        /// Read the expression from a file.
        #[arg(long, conflicts_with = "expression")]
        input: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Root of unity order for the frobenius suite.
        #[arg(long)]
        ell: Option<u32>,
        /// Accept even ell; its checks are then advisory.
        #[arg(long)]
        allow_even: bool,
    },
    /// Semiclassical brackets of all generator pairs.
    Poisson(Common),
    /// Quantum Frobenius checks at a primitive ell-th root of unity.
    Frobenius {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        allow_even: bool,
    },
    /// Export a table of derived elements as JSON.
    Export {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        table: Table,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Presentation,
    Derived,
    Rootvectors,
    Loperators,
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Present(c) | Command::Poisson(c) => c,
            Command::Nf { common, .. }
            | Command::Verify { common, .. }
            | Command::Frobenius { common, .. }
            | Command::Export { common, .. } => common,
        }
    }
}

/// Result of a command: exit code and the rendered output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { code: 0, output }
    }
}

/// Captured result of a full invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments, applies `QPBW_STEP_BUDGET`, runs the command and
/// writes `--output` if given. Nothing is printed.
pub fn execute<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Execution { code, stdout: text, stderr: String::new() }
            } else {
                Execution { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if let Err(e) = apply_step_budget() {
        return failure(e);
    }
    let outcome = match run_command(&cli.command) {
        Ok(o) => o,
        Err(e) => return failure(e),
    };
    match &cli.command.common().output {
        Some(path) => match std::fs::write(path, &outcome.output) {
            Ok(()) => Execution { code: outcome.code, stdout: String::new(), stderr: String::new() },
            Err(e) => failure(e.into()),
        },
        None => Execution { code: outcome.code, stdout: outcome.output, stderr: String::new() },
    }
}

fn failure(e: CliError) -> Execution {
    Execution {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

fn apply_step_budget() -> Result<(), CliError> {
    match std::env::var("QPBW_STEP_BUDGET") {
        Ok(v) => {
            let budget: usize = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("QPBW_STEP_BUDGET must be a non-negative integer, got '{v}'")))?;
            set_default_step_budget(budget);
            Ok(())
        }
        Err(_) => Ok(()),
    }
}

fn duration_ms(start: Instant, common: &Common) -> u64 {
    if common.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    }
}

fn presentation(common: &Common) -> Result<std::sync::Arc<PresentationSpec>, CliError> {
    if common.n < 1 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    Ok(PresentationSpec::cached(common.n, common.flavor)?)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Runs a parsed command.
pub fn run_command(cmd: &Command) -> Result<Outcome, CliError> {
    let start = Instant::now();
    match cmd {
        Command::Present(common) => {
            let p = presentation(common)?;
            Ok(Outcome::ok(match common.format {
                Format::Json => to_json(&render::Versioned::new(p.to_document())),
                Format::Text => render::presentation_text(&p),
            }))
        }
        Command::Nf { common, expression, input } => {
            let text = match (expression, input) {
                (Some(e), _) => e.clone(),
                (None, Some(path)) => std::fs::read_to_string(path)?,
                (None, None) => return Err(CliError::Usage("nf needs an expression or --input".into())),
            };
            let p = presentation(common)?;
            let e = parse_expression(text.trim(), common.n)?;
            let nf = p.normal_form(&e).map_err(|e| CliError::Compute(e.to_string()))?;
            Ok(Outcome::ok(match common.format {
                Format::Json => to_json(&render::NfDocument {
                    schema: SCHEMA,
                    n: common.n,
                    flavor: common.flavor,
                    input: text.trim().to_string(),
                    normal_form: nf.to_string(),
                }),
                Format::Text => format!("{nf}\n"),
            }))
        }
        Command::Verify { common, suite, ell, allow_even } => {
            let params = SuiteParams {
                n: common.n,
                flavor: common.flavor,
                ell: *ell,
                allow_even: *allow_even,
            };
            let report = run_suite(*suite, &params)?;
            let ms = duration_ms(start, common);
            Ok(render::report_outcome(suite.name(), &params, &report, ms, common.format))
        }
        Command::Frobenius { common, ell, allow_even } => {
            let params = SuiteParams {
                n: common.n,
                flavor: common.flavor,
                ell: Some(*ell),
                allow_even: *allow_even,
            };
            let report = run_suite(Suite::Frobenius, &params)?;
            let ms = duration_ms(start, common);
            Ok(render::report_outcome("frobenius", &params, &report, ms, common.format))
        }
        Command::Poisson(common) => {
            let p = presentation(common)?;
            let gens = Generator::all(common.n);
            let mut rows = Vec::new();
            for (a, &x) in gens.iter().enumerate() {
                for &y in &gens[a + 1..] {
                    let lx: LaurentElement = FreeElement::letter(x);
                    let ly: LaurentElement = FreeElement::letter(y);
                    let v = poisson_bracket(&p, &lx, &ly).map_err(|e| CliError::Compute(e.to_string()))?;
                    rows.push(render::BracketRow {
                        left: x.to_string(),
                        right: y.to_string(),
                        value: v.to_string(),
                    });
                }
            }
            Ok(Outcome::ok(match common.format {
                Format::Json => to_json(&render::BracketDocument {
                    schema: SCHEMA,
                    n: common.n,
                    flavor: common.flavor,
                    brackets: rows,
                }),
                Format::Text => rows
                    .iter()
                    .map(|r| format!("{{{}, {}}} = {}\n", r.left, r.right, r.value))
                    .collect(),
            }))
        }
        Command::Export { common, table } => {
            if *table != Table::Presentation && common.flavor == Flavor::SL {
                return Err(CliError::Usage("derived tables are only defined for the gl flavor".into()));
            }
            let doc = match table {
                Table::Presentation => {
                    let p = presentation(common)?;
                    return Ok(Outcome::ok(to_json(&render::Versioned::new(p.to_document()))));
                }
                Table::Derived => derived_generators(common.n)?,
                Table::Rootvectors => quantum_root_vectors(common.n)?,
                Table::Loperators => {
                    let jg = JimboGenerators::new(common.n)?;
                    let rv = RootVectors::new(&jg)?;
                    LOperators::new(&jg, &rv)?.table()
                }
            };
            Ok(Outcome::ok(match common.format {
                Format::Json => to_json(&render::Versioned::new(doc)),
                Format::Text => doc
                    .generators
                    .iter()
                    .map(|g| format!("{} = {}\n", g.name, g.definition))
                    .collect(),
            }))
        }
    }
}
