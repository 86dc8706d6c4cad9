//! Random sparsification of set systems, and its use for turning m-cascades
//! into cascades.
//!
//! Every member of size at least two contributes one uniformly random pair
//! of its elements. The resulting graph is compatible with the system by
//! construction; whether its independence number is small enough is checked
//! exactly and the draw is retried with seed `seed ^ k` on attempt `k`.

use num_bigint::BigInt;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Cascade, Color, Coloring, MCascade};
use crate::exact::{ExactSolver, SolverError};
use crate::graph::Graph;
use crate::logbound::{binomial2, ceil_mul_ln_ec, floor_div_mul_ln_ec};
use crate::rational::Rational;

pub const DEFAULT_MAX_RETRIES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetSystemError {
    #[error("member {member} contains {element}, outside the ground set 0..{n}")]
    OutOfRange { member: usize, element: usize, n: usize },
    #[error("member {member} repeats element {element}")]
    Repeated { member: usize, element: usize },
}

/// Subsets `S_e` of the ground set `0..n`, indexed by `e`; repeats allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    n: usize,
    members: Vec<Vec<usize>>,
}

impl SetSystem {
    pub fn new(n: usize, members: Vec<Vec<usize>>) -> Result<Self, SetSystemError> {
        let mut members = members;
        for (i, s) in members.iter_mut().enumerate() {
            s.sort_unstable();
            if let Some(&x) = s.iter().find(|&&x| x >= n) {
                return Err(SetSystemError::OutOfRange {
                    member: i,
                    element: x,
                    n,
                });
            }
            if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
                return Err(SetSystemError::Repeated {
                    member: i,
                    element: w[0],
                });
            }
        }
        Ok(SetSystem { n, members })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn max_member_size(&self) -> usize {
        self.members.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Distinct `u, v` adjacent iff some member contains both.
    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        for s in &self.members {
            for (i, &u) in s.iter().enumerate() {
                for &v in &s[i + 1..] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new_merging(self.n, edges).expect("members lie in the ground set")
    }
}

/// A graph on the ground set with an injective map from its edges to
/// members containing both endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityWitness {
    pub subgraph: Graph,
    /// Member index for each subgraph edge, in subgraph edge order.
    pub assignment: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompatibilityViolation {
    #[error("subgraph has {found} vertices, ground set has {n}")]
    Ground { found: usize, n: usize },
    #[error("{found} assignments for {edges} edges")]
    Length { found: usize, edges: usize },
    #[error("edge {{{u}, {v}}} is assigned to member {member}, which does not exist")]
    NoMember { u: usize, v: usize, member: usize },
    #[error("edge {{{u}, {v}}} is not contained in member {member}")]
    NotContained { u: usize, v: usize, member: usize },
    #[error("member {0} is assigned to two edges")]
    NotInjective(usize),
}

impl CompatibilityWitness {
    pub fn verify(&self, system: &SetSystem) -> Result<(), CompatibilityViolation> {
        if self.subgraph.n() != system.n {
            return Err(CompatibilityViolation::Ground {
                found: self.subgraph.n(),
                n: system.n,
            });
        }
        if self.assignment.len() != self.subgraph.m() {
            return Err(CompatibilityViolation::Length {
                found: self.assignment.len(),
                edges: self.subgraph.m(),
            });
        }
        let mut used = vec![false; system.members.len()];
        for (&(u, v), &member) in self.subgraph.edges().iter().zip(&self.assignment) {
            let s = system
                .members
                .get(member)
                .ok_or(CompatibilityViolation::NoMember { u, v, member })?;
            if s.binary_search(&u).is_err() || s.binary_search(&v).is_err() {
                return Err(CompatibilityViolation::NotContained { u, v, member });
            }
            if std::mem::replace(&mut used[member], true) {
                return Err(CompatibilityViolation::NotInjective(member));
            }
        }
        Ok(())
    }
}

/// One random draw: each member of size ≥ 2 picks a uniform pair; a pair
/// drawn by several members keeps the first one as its assignment.
pub fn sample_compatible<R: Rng>(system: &SetSystem, rng: &mut R) -> CompatibilityWitness {
    let mut chosen: Vec<((usize, usize), usize)> = Vec::new();
    for (e, s) in system.members.iter().enumerate() {
        if s.len() < 2 {
            continue;
        }
        let pick = index::sample(rng, s.len(), 2);
        let (a, b) = (s[pick.index(0)], s[pick.index(1)]);
        chosen.push(((a.min(b), a.max(b)), e));
    }
    chosen.sort_unstable();
    chosen.dedup_by_key(|(pair, _)| *pair);
    let subgraph = Graph::new(system.n, chosen.iter().map(|&(p, _)| p)).expect("deduplicated pairs");
    let assignment = chosen.into_iter().map(|(_, e)| e).collect();
    CompatibilityWitness { subgraph, assignment }
}

/// `⌈2·C(m,2)²·ln(e·c)⌉ + 2`, never below the real threshold.
pub fn sparsify_b(m: usize, c: &Rational) -> BigInt {
    let c2 = binomial2(m);
    let a = Rational::from_bigint(BigInt::from(2) * &c2 * &c2);
    ceil_mul_ln_ec(&a, c) + BigInt::from(2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsifyOutcome {
    pub witness: CompatibilityWitness,
    pub b: BigInt,
    /// Number of draws made, including the successful one.
    pub attempts: usize,
    /// Seed of the successful draw.
    pub seed: u64,
    /// Whether `α(G_{V,E}) ≤ n/(bc)` was checked exactly (rather than assumed).
    pub precondition_checked: bool,
    /// Whether `α(G′) ≤ n/c` was checked exactly.
    pub target_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SparsifyError {
    #[error("c = {0} is below 1")]
    CBelowOne(Rational),
    #[error("m = {0} is below 2")]
    InvalidM(usize),
    #[error("a member has {size} elements, more than m = {m}")]
    MemberTooLarge { size: usize, m: usize },
    #[error("precondition fails: alpha(G_VE) exceeds n/(bc) = {n}/({b}*{c})")]
    Precondition { n: usize, b: BigInt, c: Rational },
    #[error("no draw reached alpha <= n/c within {attempts} attempts")]
    RetriesExhausted {
        attempts: usize,
        precondition_checked: bool,
    },
    #[error(transparent)]
    Solver(#[from] SolverError),
}

fn floor_to_usize(x: &Rational) -> usize {
    usize::try_from(x.floor()).unwrap_or(0)
}

pub fn sparsify_system(
    system: &SetSystem,
    c: &Rational,
    m: usize,
    seed: u64,
    max_retries: usize,
    solver: &ExactSolver,
) -> Result<SparsifyOutcome, SparsifyError> {
    if *c < 1 {
        return Err(SparsifyError::CBelowOne(c.clone()));
    }
    if m < 2 {
        return Err(SparsifyError::InvalidM(m));
    }
    let size = system.max_member_size();
    if size > m {
        return Err(SparsifyError::MemberTooLarge { size, m });
    }
    let n = system.n;
    let b = sparsify_b(m, c);
    let nr = Rational::from_usize(n);
    let checkable = n <= solver.size_guard;
    if checkable {
        let bound = floor_to_usize(&(&nr / &(Rational::from_bigint(b.clone()) * c)));
        if !solver.independence_at_most(&system.graph(), bound)? {
            return Err(SparsifyError::Precondition { n, b, c: c.clone() });
        }
    }
    let target = floor_to_usize(&(&nr / c));
    for k in 0..max_retries {
        let draw_seed = seed ^ k as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(draw_seed);
        let witness = sample_compatible(system, &mut rng);
        let target_checked = witness.subgraph.n() <= solver.size_guard || target >= n;
        if target_checked && !solver.independence_at_most(&witness.subgraph, target)? {
            continue;
        }
        return Ok(SparsifyOutcome {
            witness,
            b,
            attempts: k + 1,
            seed: draw_seed,
            precondition_checked: checkable,
            target_checked,
        });
    }
    Err(SparsifyError::RetriesExhausted {
        attempts: max_retries,
        precondition_checked: checkable,
    })
}

/// `⌈m⁴·c·ln(e·c)⌉`.
pub fn relax_threshold(m: usize, c: &Rational) -> BigInt {
    let m4 = BigInt::from(m).pow(4);
    ceil_mul_ln_ec(&(Rational::from_bigint(m4) * c), c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelaxOutcome {
    pub cascade: Cascade,
    /// Vertex of the input m-cascade for each cascade vertex.
    pub embedding: Vec<usize>,
    pub sparsify: SparsifyOutcome,
    /// Whether `α(F) ≤ |v|/(m⁴·c·ln(ec))` was checked exactly.
    pub precondition_checked: bool,
    /// Whether the output slope `≥ c` was checked exactly.
    pub slope_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelaxError {
    #[error("c = {0} is below 1")]
    CBelowOne(Rational),
    #[error("input does not have slope at least (m^4 c ln(ec), c)")]
    Precondition,
    #[error(transparent)]
    Sparsify(#[from] SparsifyError),
    #[error("output cascade misses slope {0}")]
    TargetMissed(Rational),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Keeps one e-vertex per edge of a sparsified foundation, attached to that
/// edge's two ends and to its own d-neighbour; all v- and d-vertices stay.
pub fn relax_to_cascade(
    mc: &MCascade,
    c: &Rational,
    seed: u64,
    max_retries: usize,
    solver: &ExactSolver,
) -> Result<RelaxOutcome, RelaxError> {
    if *c < 1 {
        return Err(RelaxError::CBelowOne(c.clone()));
    }
    let g = mc.graph();
    let psi = mc.coloring();
    let m = mc.m();
    let v_count = mc.v_count();
    let vr = Rational::from_usize(v_count);
    if Rational::from_usize(mc.d_count()) * c > vr {
        return Err(RelaxError::Precondition);
    }
    let foundation = mc.foundation();
    let m4c = Rational::from_bigint(BigInt::from(m).pow(4)) * c;
    let alpha_bound = usize::try_from(floor_div_mul_ln_ec(&vr, &m4c, c)).unwrap_or(0);
    let precondition_checked = match solver.independence_at_most(&foundation.graph, alpha_bound) {
        Ok(true) => true,
        Ok(false) => return Err(RelaxError::Precondition),
        Err(SolverError::SizeGuard { .. }) => false,
        Err(e) => return Err(e.into()),
    };

    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in foundation.host_vertices.iter().enumerate() {
        local[v] = i;
    }
    let e_vertices = psi.class(Color::E);
    let members: Vec<Vec<usize>> = e_vertices
        .iter()
        .map(|&x| {
            g.neighbors(x)
                .iter()
                .filter(|&&w| psi.color(w) == Color::V)
                .map(|&w| local[w])
                .collect()
        })
        .collect();
    let system = SetSystem::new(v_count, members).expect("neighbourhoods are sets");
    let sparsify = sparsify_system(&system, c, m.max(2), seed, max_retries, solver)?;

    let mut keep = vec![false; g.n()];
    for v in 0..g.n() {
        keep[v] = psi.color(v) != Color::E;
    }
    let mut host_edges = Vec::new();
    for (&(a, b), &member) in sparsify
        .witness
        .subgraph
        .edges()
        .iter()
        .zip(&sparsify.witness.assignment)
    {
        let x = e_vertices[member];
        keep[x] = true;
        let d = *g
            .neighbors(x)
            .iter()
            .find(|&&w| psi.color(w) == Color::D)
            .expect("e-vertex has a d-neighbour");
        host_edges.extend([
            (foundation.host_vertices[a], x),
            (foundation.host_vertices[b], x),
            (x, d),
        ]);
    }
    let embedding: Vec<usize> = (0..g.n()).filter(|&v| keep[v]).collect();
    let mut new_label = vec![usize::MAX; g.n()];
    for (i, &v) in embedding.iter().enumerate() {
        new_label[v] = i;
    }
    let h = Graph::new(
        embedding.len(),
        host_edges.iter().map(|&(u, v)| (new_label[u], new_label[v])),
    )
    .expect("edges are distinct");
    let colors = Coloring::new(embedding.iter().map(|&v| psi.color(v)).collect());
    let cascade = Cascade::new(h, colors).expect("pruned m-cascade is a cascade");
    let slope_checked = match cascade.slope_at_least(c, c, solver) {
        Ok(true) => true,
        Ok(false) => return Err(RelaxError::TargetMissed(c.clone())),
        Err(SolverError::SizeGuard { .. }) => false,
        Err(e) => return Err(e.into()),
    };
    Ok(RelaxOutcome {
        cascade,
        embedding,
        sparsify,
        precondition_checked,
        slope_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{generate_cascade_from, random_mcascade_with_foundation};
    use super::*;
    use crate::graph::generators;

    #[test]
    fn b_constant() {
        assert_eq!(sparsify_b(2, &Rational::one()), BigInt::from(4));
        assert_eq!(sparsify_b(3, &Rational::one()), BigInt::from(20));
        // 2·9·ln(2e) = 30.47..., so 31 + 2
        assert_eq!(sparsify_b(3, &Rational::from_integer(2)), BigInt::from(33));
        assert_eq!(relax_threshold(5, &Rational::one()), BigInt::from(625));
        // 16·2·ln(2e) = 54.18...
        assert_eq!(relax_threshold(2, &Rational::from_integer(2)), BigInt::from(55));
    }

    #[test]
    fn pairs_are_forced() {
        let g = generators::complete(6);
        let system = SetSystem::new(6, g.edges().iter().map(|&(u, v)| vec![u, v]).collect()).unwrap();
        let out = sparsify_system(&system, &Rational::one(), 2, 7, 4, &ExactSolver::default()).unwrap();
        assert_eq!(out.witness.subgraph, g);
        assert_eq!(out.attempts, 1);
        out.witness.verify(&system).unwrap();
    }

    #[test]
    fn rejects_violated_precondition() {
        // edgeless derived graph: alpha = n > n/(bc)
        let system = SetSystem::new(5, vec![vec![0], vec![1, 2]]).unwrap();
        assert!(matches!(
            sparsify_system(&system, &Rational::from_integer(2), 2, 0, 4, &ExactSolver::default()),
            Err(SparsifyError::Precondition { .. })
        ));
        assert!(matches!(
            sparsify_system(&system, &Rational::one(), 1, 0, 4, &ExactSolver::default()),
            Err(SparsifyError::InvalidM(1))
        ));
    }

    #[test]
    fn compatibility_violations() {
        let system = SetSystem::new(3, vec![vec![0, 1, 2]]).unwrap();
        let w = CompatibilityWitness {
            subgraph: generators::path(3),
            assignment: vec![0, 0],
        };
        assert_eq!(w.verify(&system), Err(CompatibilityViolation::NotInjective(0)));
        let w = CompatibilityWitness {
            subgraph: generators::path(3),
            assignment: vec![0],
        };
        assert!(matches!(w.verify(&system), Err(CompatibilityViolation::Length { .. })));
        assert!(SetSystem::new(2, vec![vec![0, 2]]).is_err());
        assert!(SetSystem::new(2, vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn relaxing_a_cascade_keeps_it() {
        let solver = ExactSolver::with_size_guard(200);
        let c = generate_cascade_from(&generators::complete(16), 1).unwrap();
        let out = relax_to_cascade(c.as_mcascade(), &Rational::one(), 0, 8, &solver).unwrap();
        assert_eq!(out.cascade.graph().n(), c.graph().n());
        assert!(out.precondition_checked && out.slope_checked);
    }

    #[test]
    fn relaxing_a_dense_mcascade() {
        let solver = ExactSolver::with_size_guard(1000);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = generators::complete(16);
        let mc = random_mcascade_with_foundation(&f, 2, 3, &mut rng).unwrap();
        let out = relax_to_cascade(&mc, &Rational::one(), 5, 8, &solver).unwrap();
        let h = out.cascade.graph();
        for &(u, v) in h.edges() {
            assert!(mc.graph().has_edge(out.embedding[u], out.embedding[v]));
        }
        assert!(out
            .cascade
            .slope_at_least(&Rational::one(), &Rational::one(), &solver)
            .unwrap());

        let mc = random_mcascade_with_foundation(&generators::cycle(16), 2, 1, &mut rng).unwrap();
        assert_eq!(
            relax_to_cascade(&mc, &Rational::one(), 0, 8, &solver),
            Err(RelaxError::Precondition)
        );
    }
}
