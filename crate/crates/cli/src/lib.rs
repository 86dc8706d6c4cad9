//! Command-line front end. [`run`] parses an argument vector, executes one
//! command and returns the exit status with the JSON report.
//!
//! Exit statuses: 0 success, 1 verification failure, 2 usage or parse
//! error, 3 size-guard refusal.

mod commands;
mod context;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use domtie::cascade::DEFAULT_MAX_RETRIES;
use serde_json::{json, Map, Value};

use context::Context;
pub use context::Failure;

#[derive(Debug, Parser)]
#[command(
    name = "domtie",
    version,
    about = "Exact domination and 2-independence certificates for small graphs"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Seed for randomised steps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Resampling budget for the sparsification step.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RETRIES)]
    max_retries: usize,
    /// Largest vertex count the exact solvers accept.
    #[arg(long, global = true)]
    size_guard: Option<usize>,
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set)]
    deterministic: bool,
    /// Add wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural summary plus exact parameters when within the size guard.
    Analyze { graph: PathBuf },
    /// Compute one parameter with a witness.
    Solve(SolveArgs),
    /// Check a supplied certificate against a graph.
    Certify(CertifyArgs),
    /// Validate and measure cascades.
    #[command(subcommand)]
    Cascade(CascadeCmd),
    /// Write a graph from a named family.
    Generate(GenerateArgs),
    /// Large 2-independent set or m-cascade of prescribed slope.
    Dichotomy(DichotomyArgs),
    /// gamma/alpha2 ratios across a family.
    Survey(SurveyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    Gamma,
    Alpha,
    Alpha2,
    GammaStar,
    Nearly,
    Orientation,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    param: Param,
    /// Neighbourhood budget for `nearly`.
    #[arg(long)]
    k: Option<usize>,
    /// Outdegree bound for `orientation`.
    #[arg(long)]
    d: Option<usize>,
    /// Certificate file: witness set, domination assignment or orientation.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Packing assignment file for `gamma-star`.
    #[arg(long)]
    packing_out: Option<PathBuf>,
    graph: PathBuf,
}

#[derive(Debug, Args)]
struct CertifyArgs {
    #[arg(long, value_enum)]
    param: Param,
    /// Vertex-set certificate.
    #[arg(long)]
    set: Option<PathBuf>,
    /// Domination assignment for `gamma-star`.
    #[arg(long)]
    assignment: Option<PathBuf>,
    /// Packing assignment for `gamma-star`.
    #[arg(long)]
    packing: Option<PathBuf>,
    /// Orientation file for `orientation`.
    #[arg(long)]
    orientation: Option<PathBuf>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Claimed value the certificate must attain.
    #[arg(long)]
    expect: Option<String>,
    /// Also recompute the optimum exactly and compare.
    #[arg(long)]
    optimal: bool,
    graph: PathBuf,
}

#[derive(Debug, Subcommand)]
enum CascadeCmd {
    /// Check the colouring axioms.
    Validate {
        graph: PathBuf,
        coloring: PathBuf,
        /// Validate as an m-cascade instead of a cascade.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Exact slope.
    Slope {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Exact checks of the cascade inequalities.
    Check { graph: PathBuf, coloring: PathBuf },
    /// Turn an m-cascade into a cascade of slope at least c.
    Relax {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        m: usize,
        /// Target slope, integer or p/q.
        #[arg(long)]
        c: String,
        /// Prefix for the output .graph, .col and .map files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFamily {
    Kprime,
    Path,
    Cycle,
    Star,
    Complete,
    Gnp,
    Sparse,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: GenFamily,
    #[arg(long)]
    n: usize,
    /// Edge probability for `gnp`.
    #[arg(long)]
    p: Option<f64>,
    /// Outdegree bound for `sparse`.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    out: PathBuf,
    /// Colouring file, `kprime` only.
    #[arg(long)]
    coloring: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DichotomyArgs {
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    d: usize,
    /// Custom constants `m,s,c`; results are not backed by the theorem.
    #[arg(long, value_name = "M,S,C")]
    r#override: Option<String>,
    /// Prefix for certificate files.
    #[arg(long)]
    out: Option<PathBuf>,
    graph: PathBuf,
}

#[derive(Debug, Args)]
struct SurveyArgs {
    /// kprime, path, cycle, star, complete or all.
    #[arg(long)]
    family: String,
    /// Comma-separated size parameters.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze { .. } => "analyze",
        Command::Solve(_) => "solve",
        Command::Certify(_) => "certify",
        Command::Cascade(CascadeCmd::Validate { .. }) => "cascade validate",
        Command::Cascade(CascadeCmd::Slope { .. }) => "cascade slope",
        Command::Cascade(CascadeCmd::Check { .. }) => "cascade check",
        Command::Cascade(CascadeCmd::Relax { .. }) => "cascade relax",
        Command::Generate(_) => "generate",
        Command::Dichotomy(_) => "dichotomy",
        Command::Survey(_) => "survey",
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialises");
    s.push('\n');
    s
}

/// `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let echo: Vec<Value> = argv
        .iter()
        .skip(1)
        .map(|a| Value::String(a.to_string_lossy().into_owned()))
        .collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Execution {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                };
            }
            let report = json!({
                "command": Value::Null,
                "args": echo,
                "status": "error",
                "error": {"kind": "usage", "message": text.trim_end()},
            });
            return Execution {
                code: 2,
                stdout: render(&report),
                stderr: text,
            };
        }
    };

    let started = Instant::now();
    let mut ctx = Context::new(
        cli.global.seed,
        cli.global.max_retries,
        cli.global.size_guard,
        cli.global.deterministic,
    );
    let name = command_name(&cli.command);
    let outcome = commands::dispatch(&cli.command, &mut ctx);

    let mut report = Map::new();
    report.insert("command".into(), name.into());
    report.insert("args".into(), Value::Array(echo));
    report.insert("seed".into(), cli.global.seed.into());
    report.insert("inputs".into(), ctx.inputs_json());
    let (code, stderr) = match outcome {
        Ok(out) => {
            report.insert("status".into(), if out.verified { "ok" } else { "failed" }.into());
            report.insert("result".into(), out.result);
            if out.verified {
                (0, String::new())
            } else {
                (1, format!("{name}: verification failed\n"))
            }
        }
        Err(f) => {
            report.insert("status".into(), "error".into());
            report.insert("error".into(), json!({"kind": f.kind(), "message": f.to_string()}));
            if let Some(detail) = f.detail() {
                report.insert("result".into(), detail.clone());
            }
            (f.exit_code(), format!("{name}: {f}\n"))
        }
    };
    report.insert("outputs".into(), ctx.outputs_json());
    if cli.global.timing {
        report.insert("timing_ms".into(), json!(started.elapsed().as_secs_f64() * 1000.0));
    }
    Execution {
        code,
        stdout: render(&Value::Object(report)),
        stderr,
    }
}
