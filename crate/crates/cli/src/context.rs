use std::fmt;
use std::path::Path;

use domtie::exact::DEFAULT_SIZE_GUARD;
use domtie::graph::parse_graph;
use domtie::lp::DEFAULT_LP_SIZE_GUARD;
use domtie::{ExactSolver, Graph, SolverError};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// A command that could not produce a result.
#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    Usage(String),
    Parse {
        path: String,
        message: String,
    },
    Io {
        path: String,
        message: String,
    },
    SizeGuard(String),
    /// A precondition or a produced certificate failed its check.
    Verification {
        message: String,
        detail: Option<Value>,
    },
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Verification { .. } => 1,
            Failure::Usage(_) | Failure::Parse { .. } | Failure::Io { .. } => 2,
            Failure::SizeGuard(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Parse { .. } => "parse",
            Failure::Io { .. } => "io",
            Failure::SizeGuard(_) => "size-guard",
            Failure::Verification { .. } => "verification",
        }
    }

    pub fn detail(&self) -> Option<&Value> {
        match self {
            Failure::Verification { detail, .. } => detail.as_ref(),
            _ => None,
        }
    }

    pub fn verification(message: impl fmt::Display) -> Self {
        Failure::Verification {
            message: message.to_string(),
            detail: None,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::SizeGuard(m) => f.write_str(m),
            Failure::Parse { path, message } => write!(f, "{path}: {message}"),
            Failure::Io { path, message } => write!(f, "{path}: {message}"),
            Failure::Verification { message, .. } => f.write_str(message),
        }
    }
}

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::SizeGuard { .. } => Failure::SizeGuard(e.to_string()),
            SolverError::EmptyGraph | SolverError::InvalidK => Failure::Usage(e.to_string()),
        }
    }
}

/// Successful command output; `verified = false` maps to exit status 1.
pub struct Outcome {
    pub result: Value,
    pub verified: bool,
}

impl Outcome {
    pub fn ok(result: Value) -> Self {
        Outcome { result, verified: true }
    }
}

pub struct Context {
    pub seed: u64,
    pub max_retries: usize,
    pub solver: ExactSolver,
    pub lp_guard: usize,
    inputs: Vec<(String, String)>,
    outputs: Vec<String>,
}

impl Context {
    pub fn new(seed: u64, max_retries: usize, size_guard: Option<usize>, deterministic: bool) -> Self {
        let mut solver = ExactSolver::with_size_guard(size_guard.unwrap_or(DEFAULT_SIZE_GUARD));
        solver.deterministic = deterministic;
        Context {
            seed,
            max_retries,
            solver,
            lp_guard: size_guard.unwrap_or(DEFAULT_LP_SIZE_GUARD),
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    pub fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let shown = path.display().to_string();
        let bytes = std::fs::read(path).map_err(|e| Failure::Io {
            path: shown.clone(),
            message: e.to_string(),
        })?;
        self.inputs.push((shown.clone(), hex::encode(Sha256::digest(&bytes))));
        String::from_utf8(bytes).map_err(|_| Failure::Parse {
            path: shown,
            message: "file is not valid UTF-8".into(),
        })
    }

    pub fn graph(&mut self, path: &Path) -> Result<Graph, Failure> {
        let text = self.read(path)?;
        parse_graph(&text).map_err(|e| parse_failure(path, e))
    }

    pub fn write(&mut self, path: &Path, contents: &str) -> Result<(), Failure> {
        let shown = path.display().to_string();
        std::fs::write(path, contents).map_err(|e| Failure::Io {
            path: shown.clone(),
            message: e.to_string(),
        })?;
        self.outputs.push(shown);
        Ok(())
    }

    pub fn inputs_json(&self) -> Value {
        self.inputs
            .iter()
            .map(|(p, h)| json!({"path": p, "sha256": h}))
            .collect()
    }

    pub fn outputs_json(&self) -> Value {
        self.outputs.iter().map(|p| Value::String(p.clone())).collect()
    }
}

pub fn parse_failure(path: &Path, e: impl fmt::Display) -> Failure {
    Failure::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}
