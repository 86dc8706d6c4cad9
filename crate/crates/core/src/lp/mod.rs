//! Fractional domination and fractional 2-independence.
//!
//! The packing program `max Σ g(v)  s.t.  Σ_{v∈N[u]} g(v) ≤ 1` and the
//! covering program `min Σ f(v)  s.t.  Σ_{v∈N[u]} f(v) ≥ 1` are LP duals of
//! each other (the closed-neighbourhood matrix is symmetric). One exact
//! simplex solve of the packing program produces an optimal point of each,
//! and their sums coincide as rationals.

pub mod simplex;

use std::fmt;

use crate::exact::{ExactSolver, Optimum, SolverError, VertexSet};
use crate::graph::Graph;
use crate::rational::{ParseRationalError, Rational};

pub use simplex::{LpError, LpOptimum};

pub const DEFAULT_LP_SIZE_GUARD: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AssignmentKind {
    /// Every closed neighbourhood has weight at least one.
    Domination,
    /// Every closed neighbourhood has weight at most one.
    Packing,
}

impl fmt::Display for AssignmentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AssignmentKind::Domination => "domination",
            AssignmentKind::Packing => "packing",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AssignmentViolation {
    #[error("assignment has {found} weights for a graph on {n} vertices")]
    Length { found: usize, n: usize },
    #[error("weight of vertex {0} is negative")]
    Negative(usize),
    #[error("closed neighbourhood of vertex {vertex} has weight {weight}, violating the {kind} constraint")]
    Constraint {
        vertex: usize,
        weight: Rational,
        kind: AssignmentKind,
    },
}

/// Nonnegative rational vertex weights claimed feasible for one of the two
/// programs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalAssignment {
    pub weights: Vec<Rational>,
    pub kind: AssignmentKind,
}

impl FractionalAssignment {
    /// The 0/1 indicator of `set`.
    pub fn characteristic(g: &Graph, set: &VertexSet, kind: AssignmentKind) -> Self {
        let mut weights = vec![Rational::zero(); g.n()];
        for v in set.iter() {
            weights[v] = Rational::one();
        }
        FractionalAssignment { weights, kind }
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().sum()
    }

    pub fn neighborhood_weight(&self, g: &Graph, u: usize) -> Rational {
        g.closed_neighborhood(u).into_iter().map(|v| &self.weights[v]).sum()
    }

    /// Checks nonnegativity and every closed-neighbourhood constraint.
    pub fn verify(&self, g: &Graph) -> Result<(), AssignmentViolation> {
        if self.weights.len() != g.n() {
            return Err(AssignmentViolation::Length {
                found: self.weights.len(),
                n: g.n(),
            });
        }
        if let Some(v) = self.weights.iter().position(Rational::is_negative) {
            return Err(AssignmentViolation::Negative(v));
        }
        for u in 0..g.n() {
            let weight = self.neighborhood_weight(g, u);
            let ok = match self.kind {
                AssignmentKind::Domination => weight >= 1,
                AssignmentKind::Packing => weight <= 1,
            };
            if !ok {
                return Err(AssignmentViolation::Constraint {
                    vertex: u,
                    weight,
                    kind: self.kind,
                });
            }
        }
        Ok(())
    }

    /// Lines `vertex numerator/denominator`, one per vertex.
    pub fn to_text(&self) -> String {
        self.weights
            .iter()
            .enumerate()
            .map(|(v, w)| format!("{v} {w}\n"))
            .collect()
    }

    /// Parses assignment lines; vertices not listed get weight zero.
    pub fn parse(text: &str, n: usize, kind: AssignmentKind) -> Result<Self, AssignmentParseError> {
        let mut weights = vec![None; n];
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            let err = |msg: String| AssignmentParseError {
                line: line_no,
                message: msg,
            };
            let (v, w) = t
                .split_once(char::is_whitespace)
                .ok_or_else(|| err(format!("expected \"vertex p/q\", got {t:?}")))?;
            let v: usize = v.parse().map_err(|_| err(format!("bad vertex {v:?}")))?;
            if v >= n {
                return Err(err(format!("vertex {v} out of range 0..{n}")));
            }
            let w: Rational = w.parse().map_err(|e: ParseRationalError| err(e.to_string()))?;
            if weights[v].replace(w).is_some() {
                return Err(err(format!("vertex {v} listed twice")));
            }
        }
        Ok(FractionalAssignment {
            weights: weights.into_iter().map(Option::unwrap_or_default).collect(),
            kind,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct AssignmentParseError {
    pub line: usize,
    pub message: String,
}

/// An optimal packing/covering pair with equal objective values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityCertificate {
    pub primal: FractionalAssignment,
    pub dual: FractionalAssignment,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("certificate must pair a packing with a domination assignment")]
    Kinds,
    #[error("packing side: {0}")]
    Primal(AssignmentViolation),
    #[error("covering side: {0}")]
    Dual(AssignmentViolation),
    #[error("sums differ: packing {primal}, covering {dual}, claimed {value}")]
    Gap {
        primal: Rational,
        dual: Rational,
        value: Rational,
    },
}

impl DualityCertificate {
    /// Feasibility of both sides plus exact equality of the three values,
    /// which by weak duality proves both optimal.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        if self.primal.kind != AssignmentKind::Packing || self.dual.kind != AssignmentKind::Domination {
            return Err(CertificateError::Kinds);
        }
        self.primal.verify(g).map_err(CertificateError::Primal)?;
        self.dual.verify(g).map_err(CertificateError::Dual)?;
        let p = self.primal.total();
        let d = self.dual.total();
        if p != d || p != self.value {
            return Err(CertificateError::Gap {
                primal: p,
                dual: d,
                value: self.value.clone(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FractionalError {
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("solver produced an invalid certificate: {0}")]
    Certificate(#[from] CertificateError),
}

/// `γ*(G) = α₂*(G)` with an optimal point of each program.
pub fn fractional_domination(g: &Graph) -> Result<DualityCertificate, FractionalError> {
    fractional_domination_with_guard(g, DEFAULT_LP_SIZE_GUARD)
}

pub fn fractional_domination_with_guard(g: &Graph, guard: usize) -> Result<DualityCertificate, FractionalError> {
    let n = g.n();
    if n == 0 {
        return Err(SolverError::EmptyGraph.into());
    }
    if n > guard {
        return Err(SolverError::SizeGuard { n, limit: guard }.into());
    }
    let a: Vec<Vec<Rational>> = (0..n)
        .map(|u| {
            let mut row = vec![Rational::zero(); n];
            for v in g.closed_neighborhood(u) {
                row[v] = Rational::one();
            }
            row
        })
        .collect();
    let ones = vec![Rational::one(); n];
    let opt = simplex::maximize(&a, &ones, &ones)?;
    let cert = DualityCertificate {
        primal: FractionalAssignment {
            weights: opt.primal,
            kind: AssignmentKind::Packing,
        },
        dual: FractionalAssignment {
            weights: opt.dual,
            kind: AssignmentKind::Domination,
        },
        value: opt.value,
    };
    cert.verify(g)?;
    Ok(cert)
}

/// `α₂(G) ≤ γ*(G) = α₂*(G) ≤ γ(G)`, all exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    pub alpha2: Optimum,
    pub fractional: DualityCertificate,
    pub gamma: Optimum,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        let v = &self.fractional.value;
        Rational::from_usize(self.alpha2.value) <= *v && *v <= Rational::from_usize(self.gamma.value)
    }
}

pub fn verify_sandwich(g: &Graph, solver: &ExactSolver) -> Result<SandwichReport, FractionalError> {
    let alpha2 = solver.two_independence_number(g)?;
    let gamma = solver.domination_number(g)?;
    let fractional = fractional_domination(g)?;
    Ok(SandwichReport {
        alpha2,
        fractional,
        gamma,
    })
}
