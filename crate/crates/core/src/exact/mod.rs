//! Exact domination, independence, 2-independence and k-nearly
//! 2-independence numbers, with certificate predicates.
//!
//! All searches are sequential branch-and-bound over vertex bitsets and are
//! deterministic: the same graph always yields the same witness. Graphs
//! larger than the solver's size guard are refused instead of being solved
//! heuristically.

pub mod brute;
mod domination;
mod independence;
mod nearly;

use std::fmt;

use crate::graph::Graph;

pub const DEFAULT_SIZE_GUARD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error("graph has {n} vertices, above the exact-solver limit of {limit}")]
    SizeGuard { n: usize, limit: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("k must be at least 1")]
    InvalidK,
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VertexSetError {
    #[error("line {line}: malformed vertex index {text:?}")]
    Malformed { line: usize, text: String },
    #[error("vertex {0} listed twice")]
    Duplicate(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
}

impl VertexSet {
    /// Builds a set from members, rejecting repeats.
    pub fn from_members(mut members: Vec<usize>) -> Result<Self, VertexSetError> {
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(VertexSetError::Duplicate(w[0]));
        }
        Ok(VertexSet(members))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn check_host(&self, g: &Graph) -> Result<(), VertexSetError> {
        match self.0.last() {
            Some(&v) if v >= g.n() => Err(VertexSetError::OutOfRange { vertex: v, n: g.n() }),
            _ => Ok(()),
        }
    }

    pub(crate) fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            m[v] = true;
        }
        m
    }

    /// Reads one vertex index per line; blank lines are skipped.
    pub fn parse_certificate(text: &str) -> Result<Self, VertexSetError> {
        let mut members = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            members.push(t.parse().map_err(|_| VertexSetError::Malformed {
                line: i + 1,
                text: t.to_string(),
            })?);
        }
        Self::from_members(members)
    }

    /// One vertex index per line.
    pub fn to_certificate(&self) -> String {
        self.0.iter().map(|v| format!("{v}\n")).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

/// An optimal value together with a witness set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum {
    pub value: usize,
    pub witness: VertexSet,
}

impl Optimum {
    fn from_witness(witness: Vec<usize>) -> Self {
        let witness: VertexSet = witness.into_iter().collect();
        Optimum {
            value: witness.len(),
            witness,
        }
    }
}

/// Every vertex is in `d` or adjacent to a member of `d`.
pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    if d.check_host(g).is_err() {
        return false;
    }
    let inside = d.mask(g.n());
    (0..g.n()).all(|u| inside[u] || g.neighbors(u).iter().any(|&w| inside[w]))
}

/// No edge of `g` joins two members of `a`.
pub fn is_independent(g: &Graph, a: &VertexSet) -> bool {
    if a.check_host(g).is_err() {
        return false;
    }
    let inside = a.mask(g.n());
    g.edges().iter().all(|&(u, v)| !(inside[u] && inside[v]))
}

/// Distinct members are pairwise at distance greater than two: never
/// adjacent and never sharing a neighbour.
pub fn is_two_independent(g: &Graph, a: &VertexSet) -> bool {
    if a.check_host(g).is_err() {
        return false;
    }
    let m = a.members();
    for (i, &u) in m.iter().enumerate() {
        for &v in &m[i + 1..] {
            if g.has_edge(u, v) {
                return false;
            }
            if g.neighbors(u).iter().any(|&w| g.has_edge(w, v)) {
                return false;
            }
        }
    }
    true
}

/// Every closed neighbourhood meets `s` in at most `k` vertices.
pub fn is_nearly_two_independent(g: &Graph, s: &VertexSet, k: usize) -> bool {
    if s.check_host(g).is_err() {
        return false;
    }
    let inside = s.mask(g.n());
    (0..g.n()).all(|u| {
        let count = usize::from(inside[u]) + g.neighbors(u).iter().filter(|&&w| inside[w]).count();
        count <= k
    })
}

/// Configuration shared by the exact searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactSolver {
    pub size_guard: usize,
    /// Searches are sequential, so results are deterministic either way; the
    /// flag is carried for callers that record it.
    pub deterministic: bool,
}

impl Default for ExactSolver {
    fn default() -> Self {
        ExactSolver {
            size_guard: DEFAULT_SIZE_GUARD,
            deterministic: true,
        }
    }
}

impl ExactSolver {
    pub fn with_size_guard(size_guard: usize) -> Self {
        ExactSolver {
            size_guard,
            ..Self::default()
        }
    }

    pub fn check(&self, g: &Graph) -> Result<(), SolverError> {
        if g.n() == 0 {
            return Err(SolverError::EmptyGraph);
        }
        if g.n() > self.size_guard {
            return Err(SolverError::SizeGuard {
                n: g.n(),
                limit: self.size_guard,
            });
        }
        Ok(())
    }

    /// `γ(G)` with a minimum dominating set.
    pub fn domination_number(&self, g: &Graph) -> Result<Optimum, SolverError> {
        self.check(g)?;
        Ok(Optimum::from_witness(domination::minimum_dominating_set(g)))
    }

    /// `α(G)` with a maximum independent set.
    pub fn independence_number(&self, g: &Graph) -> Result<Optimum, SolverError> {
        self.check(g)?;
        Ok(Optimum::from_witness(independence::maximum_independent_set(g)))
    }

    /// Decides `α(G) ≤ bound` without computing `α(G)` when a large enough
    /// independent set shows up early. The empty graph has `α = 0`.
    pub fn independence_at_most(&self, g: &Graph, bound: usize) -> Result<bool, SolverError> {
        if g.n() == 0 {
            return Ok(true);
        }
        if bound >= g.n() {
            return Ok(true);
        }
        self.check(g)?;
        Ok(!independence::has_independent_set_larger_than(g, bound))
    }

    /// `α₂(G)`, computed as `α` of the square of `G`.
    pub fn two_independence_number(&self, g: &Graph) -> Result<Optimum, SolverError> {
        self.check(g)?;
        Ok(Optimum::from_witness(independence::maximum_independent_set(
            &g.square(),
        )))
    }

    /// Maximum size of a `k`-nearly 2-independent set.
    pub fn max_nearly_two_independent(&self, g: &Graph, k: usize) -> Result<Optimum, SolverError> {
        if k == 0 {
            return Err(SolverError::InvalidK);
        }
        self.check(g)?;
        Ok(Optimum::from_witness(nearly::maximum_nearly_two_independent(g, k)))
    }
}

pub fn domination_number(g: &Graph) -> Result<Optimum, SolverError> {
    ExactSolver::default().domination_number(g)
}

pub fn independence_number(g: &Graph) -> Result<Optimum, SolverError> {
    ExactSolver::default().independence_number(g)
}

pub fn two_independence_number(g: &Graph) -> Result<Optimum, SolverError> {
    ExactSolver::default().two_independence_number(g)
}

pub fn max_nearly_two_independent(g: &Graph, k: usize) -> Result<Optimum, SolverError> {
    ExactSolver::default().max_nearly_two_independent(g, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn certificate_round_trip() {
        let s = VertexSet::from_members(vec![4, 0, 2]).unwrap();
        assert_eq!(VertexSet::parse_certificate(&s.to_certificate()).unwrap(), s);
        assert_eq!(VertexSet::parse_certificate("\n1\n\n3\n").unwrap().members(), &[1, 3]);
        assert_eq!(
            VertexSet::parse_certificate("1\nx\n"),
            Err(VertexSetError::Malformed {
                line: 2,
                text: "x".into()
            })
        );
        assert_eq!(
            VertexSet::parse_certificate("2\n2\n"),
            Err(VertexSetError::Duplicate(2))
        );
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn domination_predicate() {
        assert!(is_dominating(&generators::star(6), &set(&[0])));
        assert!(!is_dominating(&generators::cycle(4), &set(&[0])));
        assert!(!is_dominating(&generators::cycle(4), &set(&[9])));
    }

    #[test]
    fn two_independence_predicate() {
        let p4 = generators::path(4);
        let c4 = generators::cycle(4);
        assert!(is_two_independent(&p4, &set(&[2])));
        assert!(is_two_independent(&p4, &set(&[0, 3])));
        for u in 0..4 {
            for v in u + 1..4 {
                assert!(!is_two_independent(&c4, &set(&[u, v])));
            }
        }
    }

    #[test]
    fn nearly_predicate() {
        let p4 = generators::path(4);
        assert!(is_nearly_two_independent(&p4, &set(&[0, 1, 3]), 2));
        assert!(!is_nearly_two_independent(&p4, &set(&[0, 1, 2]), 2));
        let all = set(&[0, 1, 2, 3]);
        assert!(is_nearly_two_independent(&p4, &all, 3));
    }

    #[test]
    fn small_optima() {
        assert_eq!(domination_number(&generators::star(6)).unwrap().value, 1);
        assert_eq!(domination_number(&generators::cycle(4)).unwrap().value, 2);
        assert_eq!(independence_number(&generators::complete(5)).unwrap().value, 1);
        assert_eq!(independence_number(&generators::cycle(4)).unwrap().value, 2);
        assert_eq!(two_independence_number(&generators::path(4)).unwrap().value, 2);
        assert_eq!(two_independence_number(&generators::cycle(4)).unwrap().value, 1);
        assert_eq!(max_nearly_two_independent(&generators::path(4), 2).unwrap().value, 3);
        assert_eq!(max_nearly_two_independent(&generators::cycle(5), 3).unwrap().value, 5);
    }

    #[test]
    fn refuses_beyond_guard() {
        let g = generators::path(70);
        assert_eq!(domination_number(&g), Err(SolverError::SizeGuard { n: 70, limit: 64 }));
        assert!(ExactSolver::with_size_guard(80).domination_number(&g).is_ok());
        assert_eq!(domination_number(&Graph::empty(0)), Err(SolverError::EmptyGraph));
        assert_eq!(max_nearly_two_independent(&g, 0), Err(SolverError::InvalidK));
    }

    #[test]
    fn large_guard_paths() {
        let solver = ExactSolver::with_size_guard(200);
        let g = generators::path(100);
        assert_eq!(solver.domination_number(&g).unwrap().value, 34);
        assert_eq!(solver.independence_number(&g).unwrap().value, 50);
        assert_eq!(solver.two_independence_number(&g).unwrap().value, 34);
    }

    #[test]
    fn certificate_text() {
        assert_eq!(set(&[3, 1]).to_certificate(), "1\n3\n");
        assert_eq!(VertexSet::from_members(vec![1, 1]), Err(VertexSetError::Duplicate(1)));
    }
}
