//! Cascades and m-cascades: `{v, e, d}`-coloured certificates, their
//! foundations and slopes.

mod checks;
mod generate;
mod sparsify;

use std::fmt;
use std::str::FromStr;

use crate::exact::{ExactSolver, SolverError};
use crate::graph::Graph;
use crate::rational::Rational;

pub use checks::{
    check_avg_degree_bound, check_elarge, check_noincr, check_obs_casc, AvgDegreeReport, CheckError, ElargeReport,
    NoIncrReport, ObsCascReport,
};
pub use generate::{
    generate_cascade_from, generate_kprime, random_mcascade_with_foundation, subdivide_and_dominate, GenerateError,
};
pub use sparsify::{
    relax_threshold, relax_to_cascade, sample_compatible, sparsify_b, sparsify_system, CompatibilityViolation,
    CompatibilityWitness, RelaxError, RelaxOutcome, SetSystem, SetSystemError, SparsifyError, SparsifyOutcome,
    DEFAULT_MAX_RETRIES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    V,
    E,
    D,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::V => "v",
            Color::E => "e",
            Color::D => "d",
        })
    }
}

impl FromStr for Color {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "v" => Ok(Color::V),
            "e" => Ok(Color::E),
            "d" => Ok(Color::D),
            other => Err(format!("unknown colour {other:?}")),
        }
    }
}

/// A colour for every vertex of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<Color>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ColoringParseError {
    pub line: usize,
    pub message: String,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring(colors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn color(&self, v: usize) -> Color {
        self.0[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn class(&self, c: Color) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] == c).collect()
    }

    pub fn count(&self, c: Color) -> usize {
        self.0.iter().filter(|&&x| x == c).count()
    }

    /// One colour letter per line, line `i` for vertex `i`.
    pub fn to_text(&self) -> String {
        self.0.iter().map(|c| format!("{c}\n")).collect()
    }

    /// Blank lines are skipped; the count must match `n`.
    pub fn parse(text: &str, n: usize) -> Result<Self, ColoringParseError> {
        let mut colors = Vec::with_capacity(n);
        let mut last = 0;
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            last = i + 1;
            colors.push(
                t.parse()
                    .map_err(|message| ColoringParseError { line: i + 1, message })?,
            );
        }
        if colors.len() != n {
            return Err(ColoringParseError {
                line: last,
                message: format!("expected {n} colours, found {}", colors.len()),
            });
        }
        Ok(Coloring(colors))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CascadeViolation {
    #[error("colouring has {found} entries for a graph on {n} vertices")]
    ColoringLength { found: usize, n: usize },
    #[error("m = {0} is below 2")]
    InvalidM(usize),
    #[error("edge {{{u}, {v}}} joins two vertices of colour {color}")]
    Monochromatic { u: usize, v: usize, color: Color },
    #[error("edge {{{u}, {v}}} joins colours v and d")]
    VDEdge { u: usize, v: usize },
    #[error("e-vertex {vertex} has {found} v-neighbours, expected exactly 2")]
    VNeighbors { vertex: usize, found: usize },
    #[error("e-vertex {vertex} has {found} v-neighbours, more than m = {m}")]
    TooManyVNeighbors { vertex: usize, found: usize, m: usize },
    #[error("e-vertex {vertex} has {found} d-neighbours, expected exactly 1")]
    DNeighbors { vertex: usize, found: usize },
}

/// A validated m-cascade: every e-vertex has at most `m` v-neighbours and
/// exactly one d-neighbour, and every edge has exactly one e-endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MCascade {
    graph: Graph,
    coloring: Coloring,
    m: usize,
}

/// A validated cascade: an m-cascade in which every e-vertex has exactly two
/// v-neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cascade(MCascade);

impl std::ops::Deref for Cascade {
    type Target = MCascade;

    fn deref(&self) -> &MCascade {
        &self.0
    }
}

/// Outcome of [`validate_cascade`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Cascade(Cascade),
    MCascade(MCascade),
}

fn validate(g: &Graph, psi: &Coloring, m: Option<usize>) -> Result<(), CascadeViolation> {
    if psi.len() != g.n() {
        return Err(CascadeViolation::ColoringLength {
            found: psi.len(),
            n: g.n(),
        });
    }
    if let Some(m) = m {
        if m < 2 {
            return Err(CascadeViolation::InvalidM(m));
        }
    }
    for &(u, v) in g.edges() {
        let (cu, cv) = (psi.color(u), psi.color(v));
        if cu == cv {
            return Err(CascadeViolation::Monochromatic { u, v, color: cu });
        }
        if cu != Color::E && cv != Color::E {
            return Err(CascadeViolation::VDEdge { u, v });
        }
    }
    for x in psi.class(Color::E) {
        let vs = g.neighbors(x).iter().filter(|&&w| psi.color(w) == Color::V).count();
        let ds = g.degree(x) - vs;
        match m {
            None if vs != 2 => return Err(CascadeViolation::VNeighbors { vertex: x, found: vs }),
            Some(m) if vs > m => {
                return Err(CascadeViolation::TooManyVNeighbors {
                    vertex: x,
                    found: vs,
                    m,
                })
            }
            _ => {}
        }
        if ds != 1 {
            return Err(CascadeViolation::DNeighbors { vertex: x, found: ds });
        }
    }
    Ok(())
}

/// Validates `(g, psi)` as a cascade (`m = None`) or an m-cascade. Reports
/// the first violation found, edges before e-vertices.
pub fn validate_cascade(g: &Graph, psi: &Coloring, m: Option<usize>) -> Result<Certificate, CascadeViolation> {
    match m {
        None => Cascade::new(g.clone(), psi.clone()).map(Certificate::Cascade),
        Some(m) => MCascade::new(g.clone(), psi.clone(), m).map(Certificate::MCascade),
    }
}

impl Cascade {
    pub fn new(graph: Graph, coloring: Coloring) -> Result<Self, CascadeViolation> {
        validate(&graph, &coloring, None)?;
        Ok(Cascade(MCascade { graph, coloring, m: 2 }))
    }

    pub fn as_mcascade(&self) -> &MCascade {
        &self.0
    }

    pub fn into_mcascade(self) -> MCascade {
        self.0
    }

    /// `|ψ⁻¹(v)| / max(α(F), |ψ⁻¹(d)|)`.
    pub fn slope(&self, solver: &ExactSolver) -> Result<Rational, SlopeError> {
        self.0.slope(solver)
    }
}

/// The foundation graph on the v-vertices, relabelled `0..k` in ascending
/// host order; `host_vertices[i]` is the host label of foundation vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Foundation {
    pub graph: Graph,
    pub host_vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SlopeError {
    #[error("slope is undefined without v-vertices")]
    NoVVertices,
    #[error(transparent)]
    Solver(#[from] SolverError),
}

impl MCascade {
    pub fn new(graph: Graph, coloring: Coloring, m: usize) -> Result<Self, CascadeViolation> {
        validate(&graph, &coloring, Some(m))?;
        Ok(MCascade { graph, coloring, m })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn v_count(&self) -> usize {
        self.coloring.count(Color::V)
    }

    pub fn e_count(&self) -> usize {
        self.coloring.count(Color::E)
    }

    pub fn d_count(&self) -> usize {
        self.coloring.count(Color::D)
    }

    /// Whether every e-vertex has exactly two v-neighbours.
    pub fn as_cascade(&self) -> Option<Cascade> {
        Cascade::new(self.graph.clone(), self.coloring.clone()).ok()
    }

    /// v-vertices adjacent iff they share an e-neighbour.
    pub fn foundation(&self) -> Foundation {
        let host_vertices = self.coloring.class(Color::V);
        let mut index = vec![usize::MAX; self.graph.n()];
        for (i, &v) in host_vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for x in self.coloring.class(Color::E) {
            let vs: Vec<usize> = self
                .graph
                .neighbors(x)
                .iter()
                .filter(|&&w| self.coloring.color(w) == Color::V)
                .map(|&w| index[w])
                .collect();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    edges.push((a, b));
                }
            }
        }
        let graph = Graph::new_merging(host_vertices.len(), edges).expect("foundation edges are valid");
        Foundation { graph, host_vertices }
    }

    fn foundation_alpha(&self, solver: &ExactSolver) -> Result<usize, SolverError> {
        let f = self.foundation().graph;
        if f.n() == 0 {
            return Ok(0);
        }
        Ok(solver.independence_number(&f)?.value)
    }

    pub fn slope(&self, solver: &ExactSolver) -> Result<Rational, SlopeError> {
        let v = self.v_count();
        if v == 0 {
            return Err(SlopeError::NoVVertices);
        }
        let alpha = self.foundation_alpha(solver)?;
        Ok(Rational::from_usize(v) / Rational::from_usize(alpha.max(self.d_count())))
    }

    /// `α(F) ≤ |ψ⁻¹(v)|/s1` and `|ψ⁻¹(d)| ≤ |ψ⁻¹(v)|/s2`. Uses the decision
    /// version of the independence search, so large foundations with small
    /// `α` stay cheap.
    pub fn slope_at_least(&self, s1: &Rational, s2: &Rational, solver: &ExactSolver) -> Result<bool, SolverError> {
        assert!(
            s1.is_positive() && s2.is_positive(),
            "slope thresholds must be positive"
        );
        let v = Rational::from_usize(self.v_count());
        if Rational::from_usize(self.d_count()) * s2 > v {
            return Ok(false);
        }
        let bound = (&v / s1).floor();
        let bound = usize::try_from(bound).unwrap_or(0);
        solver.independence_at_most(&self.foundation().graph, bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn kprime_is_a_cascade() {
        let c = generate_kprime(4).unwrap();
        assert_eq!(c.graph().n(), 11);
        assert_eq!(c.graph().m(), 18);
        let f = c.foundation();
        assert_eq!(f.graph, generators::complete(4));
        assert_eq!(c.slope(&ExactSolver::default()).unwrap(), Rational::from_integer(4));
    }

    #[test]
    fn recolouring_breaks_validation() {
        let c = generate_kprime(4).unwrap();
        let mut colors = c.coloring().colors().to_vec();
        colors[4] = Color::V;
        let err = validate_cascade(c.graph(), &Coloring::new(colors), None).unwrap_err();
        assert!(matches!(err, CascadeViolation::Monochromatic { color: Color::V, .. }));
    }

    #[test]
    fn distinct_violations() {
        // path v - e - d plus an extra v - d edge
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let psi = Coloring::new(vec![Color::V, Color::E, Color::D]);
        assert_eq!(
            validate_cascade(&g, &psi, None),
            Err(CascadeViolation::VDEdge { u: 0, v: 2 })
        );
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            validate_cascade(&g, &psi, None),
            Err(CascadeViolation::VNeighbors { vertex: 1, found: 1 })
        );
        assert!(matches!(
            validate_cascade(&g, &psi, Some(2)),
            Ok(Certificate::MCascade(_))
        ));
        let psi = Coloring::new(vec![Color::V, Color::E, Color::V]);
        assert_eq!(
            validate_cascade(&g, &psi, None),
            Err(CascadeViolation::DNeighbors { vertex: 1, found: 0 })
        );
        let g = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let psi = Coloring::new(vec![Color::V, Color::E, Color::V, Color::V]);
        assert_eq!(
            validate_cascade(&g, &psi, Some(2)),
            Err(CascadeViolation::TooManyVNeighbors {
                vertex: 1,
                found: 3,
                m: 2
            })
        );
        assert_eq!(validate_cascade(&g, &psi, Some(1)), Err(CascadeViolation::InvalidM(1)));
        assert!(matches!(
            validate_cascade(&g, &Coloring::new(vec![Color::V]), None),
            Err(CascadeViolation::ColoringLength { found: 1, n: 4 })
        ));
    }

    #[test]
    fn edgeless_all_v() {
        let g = Graph::empty(5);
        let psi = Coloring::new(vec![Color::V; 5]);
        let Certificate::Cascade(c) = validate_cascade(&g, &psi, None).unwrap() else {
            panic!()
        };
        assert_eq!(c.foundation().graph, Graph::empty(5));
        assert_eq!(c.slope(&ExactSolver::default()).unwrap(), Rational::one());
        assert!(c
            .slope_at_least(&Rational::one(), &Rational::one(), &ExactSolver::default())
            .unwrap());
    }

    #[test]
    fn slopes() {
        let solver = ExactSolver::default();
        let c = generate_cascade_from(&generators::cycle(5), 2).unwrap();
        assert_eq!(c.slope(&solver).unwrap(), Rational::new(5, 2));
        let c = generate_cascade_from(&Graph::empty(3), 1).unwrap();
        assert_eq!(c.slope(&solver).unwrap(), Rational::one());
        let k4 = generate_kprime(4).unwrap();
        let four = Rational::from_integer(4);
        assert!(k4.slope_at_least(&four, &four, &solver).unwrap());
        assert!(!k4
            .slope_at_least(&Rational::from_integer(5), &Rational::one(), &solver)
            .unwrap());
        let empty = Cascade::new(Graph::empty(1), Coloring::new(vec![Color::D])).unwrap();
        assert_eq!(empty.slope(&solver), Err(SlopeError::NoVVertices));
    }

    #[test]
    fn coloring_text() {
        let psi = Coloring::new(vec![Color::V, Color::E, Color::D]);
        assert_eq!(psi.to_text(), "v\ne\nd\n");
        assert_eq!(Coloring::parse("v\ne\nd\n", 3).unwrap(), psi);
        assert!(Coloring::parse("v\nx\n", 2).is_err());
        assert!(Coloring::parse("v\n", 2).is_err());
    }
}
