//! Exhaustive subset enumeration, used as an oracle for the branch-and-bound
//! searches. Shares no code with them: membership is tested with plain
//! masks and 2-independence with breadth-first distances.

use super::{Optimum, SolverError, VertexSet};
use crate::graph::{Distance, Graph};

/// Largest graph the oracle accepts.
pub const BRUTE_LIMIT: usize = 24;

fn check(g: &Graph) -> Result<(), SolverError> {
    if g.n() == 0 {
        return Err(SolverError::EmptyGraph);
    }
    if g.n() > BRUTE_LIMIT {
        return Err(SolverError::SizeGuard {
            n: g.n(),
            limit: BRUTE_LIMIT,
        });
    }
    Ok(())
}

fn closed_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &w| m | 1 << w))
        .collect()
}

fn to_optimum(mask: u32, n: usize) -> Optimum {
    let witness: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
    Optimum {
        value: witness.len(),
        witness,
    }
}

/// First mask of minimum (or maximum) popcount among the feasible ones.
fn scan<F: Fn(u32) -> bool>(n: usize, feasible: F, minimize: bool) -> u32 {
    let mut best: Option<u32> = None;
    for mask in 0..(1u32 << n) {
        if !feasible(mask) {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) if minimize => mask.count_ones() < b.count_ones(),
            Some(b) => mask.count_ones() > b.count_ones(),
        };
        if better {
            best = Some(mask);
        }
    }
    best.expect("some subset is feasible")
}

pub fn domination_number(g: &Graph) -> Result<Optimum, SolverError> {
    check(g)?;
    let n = g.n();
    let closed = closed_masks(g);
    let full = (1u32 << n) - 1;
    let mask = scan(
        n,
        |mask| {
            let covered = (0..n).filter(|&v| mask >> v & 1 == 1).fold(0u32, |c, v| c | closed[v]);
            covered == full
        },
        true,
    );
    Ok(to_optimum(mask, n))
}

pub fn independence_number(g: &Graph) -> Result<Optimum, SolverError> {
    check(g)?;
    let n = g.n();
    let edges: Vec<u32> = g.edges().iter().map(|&(u, v)| 1 << u | 1 << v).collect();
    let mask = scan(n, |mask| edges.iter().all(|&e| mask & e != e), false);
    Ok(to_optimum(mask, n))
}

pub fn two_independence_number(g: &Graph) -> Result<Optimum, SolverError> {
    check(g)?;
    let n = g.n();
    let far: Vec<u32> = (0..n)
        .map(|u| {
            g.bfs(u)
                .iter()
                .enumerate()
                .filter(|(v, d)| *v != u && matches!(d, Distance::Finite(x) if *x <= 2))
                .fold(0u32, |m, (v, _)| m | 1 << v)
        })
        .collect();
    let mask = scan(
        n,
        |mask| (0..n).filter(|&u| mask >> u & 1 == 1).all(|u| mask & far[u] == 0),
        false,
    );
    Ok(to_optimum(mask, n))
}

pub fn max_nearly_two_independent(g: &Graph, k: usize) -> Result<Optimum, SolverError> {
    if k == 0 {
        return Err(SolverError::InvalidK);
    }
    check(g)?;
    let n = g.n();
    let closed = closed_masks(g);
    let mask = scan(
        n,
        |mask| closed.iter().all(|&c| (c & mask).count_ones() as usize <= k),
        false,
    );
    Ok(to_optimum(mask, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn hand_checked_values() {
        assert_eq!(domination_number(&generators::cycle(4)).unwrap().value, 2);
        assert_eq!(two_independence_number(&generators::path(4)).unwrap().value, 2);
        assert_eq!(two_independence_number(&generators::cycle(4)).unwrap().value, 1);
        assert_eq!(max_nearly_two_independent(&generators::path(4), 2).unwrap().value, 3);
        assert_eq!(independence_number(&generators::cycle(5)).unwrap().value, 2);
    }
}
