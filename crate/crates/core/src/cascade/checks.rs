//! Exact checks of the inequalities satisfied by cascades.

use super::{Cascade, SlopeError};
use crate::exact::{ExactSolver, SolverError};
use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Slope(#[from] SlopeError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("slope {slope} does not satisfy the precondition {required}")]
    SlopePrecondition { slope: Rational, required: &'static str },
    #[error("F' is not a spanning subgraph of F")]
    NotSubgraph,
    #[error("r = {0} is below 1")]
    RBelowOne(Rational),
    #[error("{removed} removed edges exceed r|V(F)| = {bound}")]
    TooManyRemoved { removed: usize, bound: Rational },
}

/// `γ(H) ≥ |v|/2`, `α₂(H) ≤ (2/s)|v|` and `γ(H) ≥ (s/4)·α₂(H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObsCascReport {
    pub slope: Rational,
    pub gamma: usize,
    pub alpha2: usize,
    pub v_count: usize,
    pub gamma_half_v: bool,
    pub alpha2_bound: bool,
    pub ratio_bound: bool,
}

impl ObsCascReport {
    pub fn holds(&self) -> bool {
        self.gamma_half_v && self.alpha2_bound && self.ratio_bound
    }
}

pub fn check_obs_casc(c: &Cascade, solver: &ExactSolver) -> Result<ObsCascReport, CheckError> {
    let slope = c.slope(solver)?;
    let h = c.graph();
    let gamma = solver.domination_number(h)?.value;
    let alpha2 = solver.two_independence_number(h)?.value;
    let v_count = c.v_count();
    let g = Rational::from_usize(gamma);
    let a2 = Rational::from_usize(alpha2);
    let v = Rational::from_usize(v_count);
    let two = Rational::from_integer(2);
    let four = Rational::from_integer(4);
    Ok(ObsCascReport {
        gamma_half_v: &two * &g >= v,
        alpha2_bound: &a2 * &slope <= &two * &v,
        ratio_bound: &four * &g >= &slope * &a2,
        slope,
        gamma,
        alpha2,
        v_count,
    })
}

/// Foundation average degree `≥ s − 1` and
/// `|e| ≥ ((s−1)/2)|v| ≥ ((s−1)/4)|V(H) ∖ e|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElargeReport {
    pub slope: Rational,
    pub foundation_average_degree: Rational,
    pub e_count: usize,
    pub v_count: usize,
    pub non_e_count: usize,
    pub degree_bound: bool,
    pub e_vs_v: bool,
    pub e_vs_rest: bool,
}

impl ElargeReport {
    pub fn holds(&self) -> bool {
        self.degree_bound && self.e_vs_v && self.e_vs_rest
    }
}

pub fn check_elarge(c: &Cascade, solver: &ExactSolver) -> Result<ElargeReport, CheckError> {
    let slope = c.slope(solver)?;
    if slope < 1 {
        return Err(CheckError::SlopePrecondition {
            slope,
            required: "s >= 1",
        });
    }
    let f = c.foundation().graph;
    let avg = f.average_degree().expect("slope implies v-vertices");
    let s1 = &slope - &Rational::one();
    let e_count = c.e_count();
    let v_count = c.v_count();
    let non_e_count = c.graph().n() - e_count;
    let e = Rational::from_usize(e_count);
    Ok(ElargeReport {
        degree_bound: avg >= s1,
        e_vs_v: &e * &Rational::from_integer(2) >= &s1 * &Rational::from_usize(v_count),
        e_vs_rest: &e * &Rational::from_integer(4) >= &s1 * &Rational::from_usize(non_e_count),
        foundation_average_degree: avg,
        slope,
        e_count,
        v_count,
        non_e_count,
    })
}

/// `average_degree(H) ≥ 6(s−1)/(s+3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvgDegreeReport {
    pub slope: Rational,
    pub average_degree: Rational,
    pub bound: Rational,
}

impl AvgDegreeReport {
    pub fn holds(&self) -> bool {
        self.average_degree >= self.bound
    }
}

pub fn check_avg_degree_bound(c: &Cascade, solver: &ExactSolver) -> Result<AvgDegreeReport, CheckError> {
    let slope = c.slope(solver)?;
    if slope <= 1 {
        return Err(CheckError::SlopePrecondition {
            slope,
            required: "s > 1",
        });
    }
    let bound = Rational::from_integer(6) * (&slope - &Rational::one()) / (&slope + &Rational::from_integer(3));
    Ok(AvgDegreeReport {
        average_degree: c.graph().average_degree().expect("cascade is nonempty"),
        slope,
        bound,
    })
}

/// `α(F′)² ≤ 4·r·a·|V(F)|²` with `a = α(F)/|V(F)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoIncrReport {
    pub n: usize,
    pub removed: usize,
    pub r: Rational,
    pub alpha: usize,
    pub alpha_sub: usize,
    /// `4·r·α(F)·|V(F)|`, the square of the right-hand side.
    pub bound_squared: Rational,
}

impl NoIncrReport {
    pub fn holds(&self) -> bool {
        let a = Rational::from_usize(self.alpha_sub);
        &a * &a <= self.bound_squared
    }
}

pub fn check_noincr(f: &Graph, sub: &Graph, r: &Rational, solver: &ExactSolver) -> Result<NoIncrReport, CheckError> {
    if !sub.is_spanning_subgraph_of(f) {
        return Err(CheckError::NotSubgraph);
    }
    if *r < 1 {
        return Err(CheckError::RBelowOne(r.clone()));
    }
    let n = f.n();
    let removed = f.m() - sub.m();
    let allowed = r * &Rational::from_usize(n);
    if Rational::from_usize(removed) > allowed {
        return Err(CheckError::TooManyRemoved {
            removed,
            bound: allowed,
        });
    }
    let alpha = solver.independence_number(f)?.value;
    let alpha_sub = solver.independence_number(sub)?.value;
    let bound_squared = Rational::from_integer(4) * r * Rational::from_usize(alpha) * Rational::from_usize(n);
    Ok(NoIncrReport {
        n,
        removed,
        r: r.clone(),
        alpha,
        alpha_sub,
        bound_squared,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{generate_cascade_from, generate_kprime};
    use super::*;
    use crate::graph::generators;

    #[test]
    fn kprime_reports() {
        let solver = ExactSolver::default();
        let c = generate_kprime(4).unwrap();
        let r = check_obs_casc(&c, &solver).unwrap();
        assert_eq!((r.gamma, r.alpha2), (3, 2));
        assert!(r.holds());
        let r = check_obs_casc(&generate_kprime(5).unwrap(), &solver).unwrap();
        assert!(r.holds() && 4 * r.gamma >= 10);
        let r = check_avg_degree_bound(&c, &solver).unwrap();
        assert_eq!(r.average_degree, Rational::new(36, 11));
        assert_eq!(r.bound, Rational::new(18, 7));
        assert!(r.holds());
        let r = check_avg_degree_bound(&generate_kprime(6).unwrap(), &solver).unwrap();
        assert!(r.bound == Rational::new(10, 3) && r.holds());
        let r = check_elarge(&c, &solver).unwrap();
        assert_eq!(r.foundation_average_degree, Rational::from_integer(3));
        assert!(r.holds());
    }

    #[test]
    fn cycle_foundation() {
        let solver = ExactSolver::default();
        let c = generate_cascade_from(&generators::cycle(5), 2).unwrap();
        let r = check_elarge(&c, &solver).unwrap();
        assert_eq!(r.slope, Rational::new(5, 2));
        assert_eq!(r.foundation_average_degree, Rational::from_integer(2));
        assert!(r.holds());
    }

    #[test]
    fn preconditions() {
        let solver = ExactSolver::default();
        let flat = generate_cascade_from(&Graph::empty(3), 1).unwrap();
        assert!(matches!(
            check_avg_degree_bound(&flat, &solver),
            Err(CheckError::SlopePrecondition { .. })
        ));
        let c = generate_cascade_from(&Graph::empty(1), 0).unwrap();
        let r = check_obs_casc(&c, &solver).unwrap();
        assert_eq!((r.gamma, r.alpha2), (1, 1));
        assert!(r.holds());
    }

    #[test]
    fn noincr_examples() {
        let solver = ExactSolver::default();
        let k8 = generators::complete(8);
        let r = check_noincr(&k8, &k8, &Rational::one(), &solver).unwrap();
        assert!(r.holds());
        let mut sub = k8.clone();
        for i in 0..4 {
            sub = sub.without_edge(2 * i, 2 * i + 1);
        }
        let r = check_noincr(&k8, &sub, &Rational::one(), &solver).unwrap();
        assert_eq!((r.alpha, r.alpha_sub), (1, 2));
        assert!(r.holds());
        assert!(matches!(
            check_noincr(&sub, &k8, &Rational::one(), &solver),
            Err(CheckError::NotSubgraph)
        ));
        assert!(matches!(
            check_noincr(&k8, &Graph::empty(8), &Rational::one(), &solver),
            Err(CheckError::TooManyRemoved { .. })
        ));
    }
}
