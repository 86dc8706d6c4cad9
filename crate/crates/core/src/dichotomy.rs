//! Either a large 2-independent set or an m-cascade of prescribed slope
//! appearing in the input graph.
//!
//! The engine computes a maximum `m`-nearly 2-independent set `B` (size `b`)
//! and a maximum 2-independent set. When `α₂ ≥ b/(48m²s²)` the latter is
//! returned. Otherwise an m-cascade is assembled from `B`, the layered
//! decomposition of the remaining vertices, and the common neighbours of
//! pairs in `B`.

use std::fmt;

use num_bigint::BigInt;

use crate::cascade::{relax_threshold, Color, Coloring, MCascade};
use crate::exact::{is_two_independent, ExactSolver, SolverError, VertexSet};
use crate::graph::{DenseSubgraph, Graph};
use crate::logbound::binomial2;
use crate::orientation::{orient_bounded_outdegree, outdom_decompose, OrientOutcome};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("{0} must be a positive integer")]
    NotPositive(&'static str),
    #[error("override needs m >= 2, got {0}")]
    SmallM(usize),
    #[error("override needs m > d, got m = {m}, d = {d}")]
    MNotAboveD { m: usize, d: usize },
    #[error("derived m overflows")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamMode {
    /// `m` and `s` derived from `(c, d)`.
    Theorem,
    /// Caller-supplied `(m, s, c)`; results are not backed by the theorem.
    Override,
}

impl fmt::Display for ParamMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParamMode::Theorem => "theorem",
            ParamMode::Override => "override",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DichotomyParams {
    c: usize,
    d: usize,
    m: usize,
    s: BigInt,
    mode: ParamMode,
}

impl DichotomyParams {
    /// `m = (2c+1)d + 2c`, `s = ⌈m⁴·c·ln(e·c)⌉`.
    pub fn theorem(c: usize, d: usize) -> Result<Self, ParamError> {
        if c == 0 {
            return Err(ParamError::NotPositive("c"));
        }
        if d == 0 {
            return Err(ParamError::NotPositive("d"));
        }
        let m = (2 * c)
            .checked_add(1)
            .and_then(|x| x.checked_mul(d))
            .and_then(|x| x.checked_add(2 * c))
            .ok_or(ParamError::Overflow)?;
        let s = relax_threshold(m, &Rational::from_usize(c));
        Ok(DichotomyParams {
            c,
            d,
            m,
            s,
            mode: ParamMode::Theorem,
        })
    }

    pub fn with_override(m: usize, s: usize, c: usize, d: usize) -> Result<Self, ParamError> {
        if m < 2 {
            return Err(ParamError::SmallM(m));
        }
        for (name, v) in [("s", s), ("c", c), ("d", d)] {
            if v == 0 {
                return Err(ParamError::NotPositive(name));
            }
        }
        if m <= d {
            return Err(ParamError::MNotAboveD { m, d });
        }
        Ok(DichotomyParams {
            c,
            d,
            m,
            s: BigInt::from(s),
            mode: ParamMode::Override,
        })
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    pub fn mode(&self) -> ParamMode {
        self.mode
    }

    /// `48·m²·s²`.
    pub fn threshold_denominator(&self) -> BigInt {
        let m = BigInt::from(self.m);
        BigInt::from(48) * &m * &m * &self.s * &self.s
    }

    /// `48·(4d+2)·m²·s²`.
    pub fn ratio_bound(&self) -> BigInt {
        BigInt::from(4 * self.d + 2) * self.threshold_denominator()
    }
}

/// Sets and counts from one run of the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DichotomyTrace {
    pub b: usize,
    pub base: VertexSet,
    pub x: VertexSet,
    pub d: VertexSet,
    pub s_v: VertexSet,
    pub s_e: VertexSet,
    pub s_d: VertexSet,
    pub alpha2: usize,
    /// `α(F)` for the common-neighbour graph on `B`, when within the guard.
    pub alpha_f: Option<usize>,
    pub f_edges: usize,
    pub f_prime_edges: usize,
    /// `C(m,2)·|B ∪ X ∪ D|`.
    pub removed_bound: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DichotomyOutcome {
    TwoIndependent {
        set: VertexSet,
        /// `b/(48m²s²)`.
        threshold: Rational,
    },
    Cascade {
        mcascade: MCascade,
        /// Vertex of the input graph for each m-cascade vertex.
        embedding: Vec<usize>,
        s1: Rational,
        s2: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DichotomyResult {
    pub outcome: DichotomyOutcome,
    pub trace: DichotomyTrace,
    pub mode: ParamMode,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DichotomyError {
    #[error("maximum average degree exceeds 2d = {}: {} vertices induce {} edges", 2 * .d, .witness.vertices.len(), .witness.edges)]
    Mad { d: usize, witness: DenseSubgraph },
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("override constants yield neither certificate")]
    NoCertificate { trace: Box<DichotomyTrace> },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResultViolation {
    #[error("set is not 2-independent")]
    NotTwoIndependent,
    #[error("set of size {size} is below the threshold {threshold}")]
    BelowThreshold { size: usize, threshold: Rational },
    #[error("witness is not a valid m-cascade: {0}")]
    InvalidCascade(String),
    #[error("embedding is not injective or leaves the graph")]
    Embedding,
    #[error("witness edge {{{0}, {1}}} is not an edge of the graph")]
    MissingEdge(usize, usize),
    #[error("witness does not have slope at least ({s1}, {s2})")]
    Slope { s1: Rational, s2: Rational },
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Re-checks a result against `g` from scratch.
pub fn verify_result(g: &Graph, result: &DichotomyResult, solver: &ExactSolver) -> Result<(), ResultViolation> {
    match &result.outcome {
        DichotomyOutcome::TwoIndependent { set, threshold } => {
            if set.check_host(g).is_err() || !is_two_independent(g, set) {
                return Err(ResultViolation::NotTwoIndependent);
            }
            if Rational::from_usize(set.len()) < *threshold {
                return Err(ResultViolation::BelowThreshold {
                    size: set.len(),
                    threshold: threshold.clone(),
                });
            }
        }
        DichotomyOutcome::Cascade {
            mcascade,
            embedding,
            s1,
            s2,
        } => {
            let h = mcascade.graph();
            MCascade::new(h.clone(), mcascade.coloring().clone(), mcascade.m())
                .map_err(|e| ResultViolation::InvalidCascade(e.to_string()))?;
            if embedding.len() != h.n() || embedding.iter().any(|&v| v >= g.n()) {
                return Err(ResultViolation::Embedding);
            }
            let mut seen = vec![false; g.n()];
            if embedding.iter().any(|&v| std::mem::replace(&mut seen[v], true)) {
                return Err(ResultViolation::Embedding);
            }
            for &(u, v) in h.edges() {
                if !g.has_edge(embedding[u], embedding[v]) {
                    return Err(ResultViolation::MissingEdge(embedding[u], embedding[v]));
                }
            }
            if mcascade.v_count() == 0 || !mcascade.slope_at_least(s1, s2, solver)? {
                return Err(ResultViolation::Slope {
                    s1: s1.clone(),
                    s2: s2.clone(),
                });
            }
        }
    }
    Ok(())
}

struct Assembly {
    trace: DichotomyTrace,
    mcascade: MCascade,
    embedding: Vec<usize>,
}

fn assemble(
    g: &Graph,
    params: &DichotomyParams,
    base: VertexSet,
    alpha2: usize,
    solver: &ExactSolver,
) -> Result<Assembly, DichotomyError> {
    let n = g.n();
    let m = params.m;
    let orientation = match orient_bounded_outdegree(g, params.d) {
        OrientOutcome::Oriented(o) => o,
        OrientOutcome::Dense(witness) => return Err(DichotomyError::Mad { d: params.d, witness }),
    };
    let dec = outdom_decompose(g, &orientation, &base, params.d, m)
        .map_err(|e| DichotomyError::Invariant(format!("decomposition: {e}")))?;
    let in_base = base.mask(n);
    let in_x = dec.x.mask(n);
    let in_d = dec.d.mask(n);
    let rest: Vec<bool> = (0..n).map(|v| !(in_base[v] || in_x[v] || in_d[v])).collect();

    // common neighbours of pairs in B, split by whether the witness is in the rest
    let members = base.members();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in members.iter().enumerate() {
        pos[v] = i;
    }
    let mut f_edges = Vec::new();
    let mut f_prime_edges = Vec::new();
    let k = members.len();
    let mut outside_only = vec![vec![false; k]; k];
    let mut inside = vec![vec![false; k]; k];
    for w in 0..n {
        let nb: Vec<usize> = g
            .neighbors(w)
            .iter()
            .filter(|&&u| in_base[u])
            .map(|&u| pos[u])
            .collect();
        for (i, &a) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                let (a, c) = (a.min(c), a.max(c));
                if rest[w] {
                    inside[a][c] = true;
                } else {
                    outside_only[a][c] = true;
                }
            }
        }
    }
    for a in 0..k {
        for c in a + 1..k {
            if inside[a][c] || outside_only[a][c] {
                f_edges.push((a, c));
            }
            if inside[a][c] {
                f_prime_edges.push((a, c));
            }
        }
    }
    let f = Graph::new(k, f_edges).expect("pairs are distinct");
    let alpha_f = if k == 0 {
        Some(0)
    } else if k <= solver.size_guard {
        Some(solver.independence_number(&f)?.value)
    } else {
        None
    };
    if let Some(af) = alpha_f {
        if af > 2 * alpha2 {
            return Err(DichotomyError::Invariant(format!(
                "alpha(F) = {af} exceeds 2*alpha2 = {}",
                2 * alpha2
            )));
        }
    }
    let covered = n - rest.iter().filter(|&&r| r).count();
    let removed_bound = binomial2(m) * BigInt::from(covered);
    let removed = f.m() - f_prime_edges.len();
    if BigInt::from(removed) > removed_bound {
        return Err(DichotomyError::Invariant(format!(
            "|E(F) \\ E(F')| = {removed} exceeds C(m,2)|B u X u D| = {removed_bound}"
        )));
    }

    let s_v: VertexSet = base.iter().filter(|&v| !in_d[v]).collect();
    let s_e: VertexSet = (0..n).filter(|&v| rest[v]).collect();
    let s_d = dec.d.clone();
    let in_sv = s_v.mask(n);

    let mut keep = vec![false; n];
    let mut color = vec![Color::V; n];
    for v in s_v.iter() {
        keep[v] = true;
    }
    for v in s_d.iter() {
        keep[v] = true;
        color[v] = Color::D;
    }
    let mut edges = Vec::new();
    for x in s_e.iter() {
        keep[x] = true;
        color[x] = Color::E;
        let dn = g
            .neighbors(x)
            .iter()
            .copied()
            .find(|&w| in_d[w])
            .ok_or_else(|| DichotomyError::Invariant(format!("vertex {x} has no neighbour in D")))?;
        edges.push((x, dn));
        edges.extend(g.neighbors(x).iter().filter(|&&w| in_sv[w]).map(|&w| (x, w)));
    }
    let embedding: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
    let mut label = vec![usize::MAX; n];
    for (i, &v) in embedding.iter().enumerate() {
        label[v] = i;
    }
    let h = Graph::new(embedding.len(), edges.iter().map(|&(u, v)| (label[u], label[v])))
        .map_err(|e| DichotomyError::Invariant(format!("assembled graph: {e}")))?;
    let psi = Coloring::new(embedding.iter().map(|&v| color[v]).collect());
    let mcascade =
        MCascade::new(h, psi, m).map_err(|e| DichotomyError::Invariant(format!("assembled m-cascade: {e}")))?;

    let trace = DichotomyTrace {
        b: base.len(),
        base,
        x: dec.x,
        d: dec.d,
        s_v,
        s_e,
        s_d,
        alpha2,
        alpha_f,
        f_edges: f.m(),
        f_prime_edges: f_prime_edges.len(),
        removed_bound,
    };
    Ok(Assembly {
        trace,
        mcascade,
        embedding,
    })
}

/// Runs the construction and checks the returned certificate with
/// [`verify_result`] before handing it out.
pub fn two_ind_or_steep(
    g: &Graph,
    params: &DichotomyParams,
    solver: &ExactSolver,
) -> Result<DichotomyResult, DichotomyError> {
    solver.check(g)?;
    if let OrientOutcome::Dense(witness) = orient_bounded_outdegree(g, params.d) {
        return Err(DichotomyError::Mad { d: params.d, witness });
    }
    let base = solver.max_nearly_two_independent(g, params.m)?.witness;
    let two = solver.two_independence_number(g)?;
    let b = base.len();
    let denominator = params.threshold_denominator();
    let threshold = Rational::from_bigints(BigInt::from(b), denominator.clone());
    let large = BigInt::from(two.value) * &denominator >= BigInt::from(b);
    let assembly = assemble(g, params, base, two.value, solver)?;
    let s1 = Rational::from_bigint(params.s.clone());
    let s2 = Rational::from_usize(params.c);

    let cascade = DichotomyOutcome::Cascade {
        mcascade: assembly.mcascade.clone(),
        embedding: assembly.embedding.clone(),
        s1,
        s2,
    };
    let two_ind = DichotomyOutcome::TwoIndependent {
        set: two.witness,
        threshold,
    };
    // override constants carry no guarantee, so try both
    let mut candidates = match params.mode {
        ParamMode::Theorem if large => vec![two_ind],
        ParamMode::Theorem => vec![cascade],
        ParamMode::Override => vec![cascade, two_ind],
    };
    let mut trace = Some(assembly.trace);
    for outcome in candidates.drain(..) {
        let result = DichotomyResult {
            outcome,
            trace: trace.take().expect("trace available"),
            mode: params.mode,
        };
        match verify_result(g, &result, solver) {
            Ok(()) => return Ok(result),
            Err(ResultViolation::Solver(e)) => return Err(e.into()),
            Err(v) if params.mode == ParamMode::Theorem => {
                return Err(DichotomyError::Invariant(format!("certificate failed validation: {v}")))
            }
            Err(_) => trace = Some(result.trace),
        }
    }
    Err(DichotomyError::NoCertificate {
        trace: Box::new(trace.expect("trace returned")),
    })
}

/// `γ(G) ≤ 48(4d+2)m²s²·α₂(G)` with the achieved ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioReport {
    pub gamma: usize,
    pub alpha2: usize,
    pub ratio: Rational,
    pub bound: BigInt,
}

impl RatioReport {
    pub fn holds(&self) -> bool {
        BigInt::from(self.gamma) <= &self.bound * BigInt::from(self.alpha2)
    }
}

pub fn theorem_main_ratio(
    g: &Graph,
    params: &DichotomyParams,
    solver: &ExactSolver,
) -> Result<RatioReport, SolverError> {
    let gamma = solver.domination_number(g)?.value;
    let alpha2 = solver.two_independence_number(g)?.value;
    Ok(RatioReport {
        gamma,
        alpha2,
        ratio: Rational::from_usize(gamma) / Rational::from_usize(alpha2),
        bound: params.ratio_bound(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    KPrime,
    Path,
    Cycle,
    Star,
    Complete,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::KPrime,
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::KPrime => "kprime",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    /// The member of size parameter `n`, if defined.
    pub fn build(&self, n: usize) -> Option<Graph> {
        use crate::graph::generators;
        match self {
            Family::KPrime => crate::cascade::generate_kprime(n).ok().map(|c| c.graph().clone()),
            Family::Path if n >= 1 => Some(generators::path(n)),
            Family::Cycle if n >= 3 => Some(generators::cycle(n)),
            Family::Star if n >= 1 => Some(generators::star(n)),
            Family::Complete if n >= 1 => Some(generators::complete(n)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyValues {
    pub n: usize,
    pub gamma: usize,
    pub alpha2: usize,
    pub gamma_star: Rational,
    pub ratio: Rational,
    pub mad: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub family: Family,
    pub size: usize,
    /// Per-instance refusals are recorded and the survey continues.
    pub values: Result<SurveyValues, String>,
}

pub fn ratio_survey(family: Family, sizes: &[usize], solver: &ExactSolver) -> Vec<SurveyRow> {
    sizes
        .iter()
        .map(|&size| {
            let values = family
                .build(size)
                .ok_or_else(|| format!("{family} is undefined for size {size}"))
                .and_then(|g| survey_instance(&g, solver));
            SurveyRow { family, size, values }
        })
        .collect()
}

fn survey_instance(g: &Graph, solver: &ExactSolver) -> Result<SurveyValues, String> {
    let gamma = solver.domination_number(g).map_err(|e| e.to_string())?.value;
    let alpha2 = solver.two_independence_number(g).map_err(|e| e.to_string())?.value;
    let gamma_star = crate::lp::fractional_domination(g).map_err(|e| e.to_string())?.value;
    let mad = g.maximum_average_degree().map_err(|e| e.to_string())?;
    Ok(SurveyValues {
        n: g.n(),
        gamma,
        alpha2,
        gamma_star,
        ratio: Rational::from_usize(gamma) / Rational::from_usize(alpha2),
        mad,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade::generate_kprime;
    use crate::graph::generators;

    #[test]
    fn theorem_constants() {
        let p = DichotomyParams::theorem(1, 1).unwrap();
        assert_eq!(p.m(), 5);
        assert_eq!(p.s(), &BigInt::from(625));
        assert_eq!(p.threshold_denominator(), BigInt::from(48u64 * 25 * 390625));
        assert_eq!(p.ratio_bound(), BigInt::from(6u64 * 48 * 25 * 390625));
        let p = DichotomyParams::theorem(1, 2).unwrap();
        assert_eq!(p.m(), 8);
        assert_eq!(p.s(), &BigInt::from(4096));
        assert!(DichotomyParams::theorem(0, 1).is_err());
        assert!(DichotomyParams::with_override(1, 1, 1, 1).is_err());
    }

    #[test]
    fn small_graphs_take_the_two_independent_branch() {
        let solver = ExactSolver::default();
        let p = DichotomyParams::theorem(1, 1).unwrap();
        for g in [generators::cycle(4), generators::path(7), generators::star(6)] {
            let r = two_ind_or_steep(&g, &p, &solver).unwrap();
            let DichotomyOutcome::TwoIndependent { set, threshold } = &r.outcome else {
                panic!("expected the 2-independent variant");
            };
            assert!(*threshold < 1);
            assert_eq!(set.len(), solver.two_independence_number(&g).unwrap().value);
        }
        let r = two_ind_or_steep(&Graph::empty(6), &p, &solver).unwrap();
        assert_eq!(r.trace.b, 6);
        assert!(matches!(r.outcome, DichotomyOutcome::TwoIndependent { ref set, .. } if set.len() == 6));
    }

    #[test]
    fn mad_violation_is_reported() {
        let p = DichotomyParams::theorem(1, 1).unwrap();
        assert!(matches!(
            two_ind_or_steep(&generators::complete(5), &p, &ExactSolver::default()),
            Err(DichotomyError::Mad { .. })
        ));
    }

    #[test]
    fn override_builds_a_cascade() {
        let solver = ExactSolver::default();
        let g = generate_kprime(6).unwrap().graph().clone();
        let p = DichotomyParams::with_override(4, 1, 1, 3).unwrap();
        let r = two_ind_or_steep(&g, &p, &solver).unwrap();
        assert_eq!(r.mode, ParamMode::Override);
        verify_result(&g, &r, &solver).unwrap();
        assert!(matches!(r.outcome, DichotomyOutcome::Cascade { .. }));
        assert!(DichotomyParams::with_override(3, 1, 1, 3).is_err());
    }

    #[test]
    fn ratio_reports() {
        let solver = ExactSolver::default();
        let p = DichotomyParams::theorem(1, 1).unwrap();
        let r = theorem_main_ratio(&generators::cycle(4), &p, &solver).unwrap();
        assert_eq!(r.ratio, Rational::from_integer(2));
        assert!(r.holds());
        let p = DichotomyParams::theorem(1, 2).unwrap();
        let r = theorem_main_ratio(&generate_kprime(4).unwrap().graph().clone(), &p, &solver).unwrap();
        assert_eq!(r.ratio, Rational::new(3, 2));
        let r = theorem_main_ratio(&generators::star(5), &p, &solver).unwrap();
        assert_eq!(r.ratio, Rational::one());
    }

    #[test]
    fn survey_rows() {
        let solver = ExactSolver::default();
        let rows = ratio_survey(Family::KPrime, &[4, 5, 6, 7], &solver);
        let ratios: Vec<Rational> = rows.iter().map(|r| r.values.as_ref().unwrap().ratio.clone()).collect();
        assert_eq!(ratios[0], Rational::new(3, 2));
        assert!(ratios.windows(2).all(|w| w[0] <= w[1]));
        for (row, n) in rows.iter().zip(4..) {
            let v = row.values.as_ref().unwrap();
            assert_eq!(v.alpha2, 2);
            assert!(v.ratio >= Rational::new(n, 4));
            assert!(v.mad < 6);
        }
        assert!(ratio_survey(Family::Path, &[], &solver).is_empty());
        assert!(ratio_survey(Family::Cycle, &[2], &solver)[0].values.is_err());
    }
}
