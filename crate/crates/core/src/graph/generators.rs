//! Standard graph families and random models.

use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("clique is simple")
}

/// Star on `n` vertices with centre 0.
pub fn star(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (0, v))).expect("star is simple")
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::new(a + b, edges).expect("biclique is simple")
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("gnp is simple")
}

/// Random graph in which every vertex chooses at most `d` neighbours, so the
/// result has an orientation of outdegree at most `d` and hence maximum
/// average degree at most `2d`.
pub fn bounded_outdegree<R: Rng>(n: usize, d: usize, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    let mut others: Vec<usize> = Vec::with_capacity(n);
    for u in 0..n {
        others.clear();
        others.extend((0..n).filter(|&v| v != u));
        others.shuffle(rng);
        let k = rng.gen_range(0..=d.min(others.len()));
        edges.extend(others[..k].iter().map(|&v| (u, v)));
    }
    Graph::new_merging(n, edges).expect("endpoints in range")
}

/// Random graph with exactly `m` edges (capped at the number of pairs).
pub fn gnm<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::new(n, pairs).expect("distinct pairs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn family_sizes() {
        assert_eq!(path(4).m(), 3);
        assert_eq!(cycle(5).m(), 5);
        assert_eq!(complete(6).m(), 15);
        assert_eq!(star(6).m(), 5);
        assert_eq!(complete_bipartite(2, 3).m(), 6);
        assert_eq!(path(1).m(), 0);
    }

    #[test]
    fn bounded_outdegree_respects_density() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for d in 1..=3 {
            let g = bounded_outdegree(15, d, &mut rng);
            let mad = g.maximum_average_degree().unwrap();
            assert!(mad <= (2 * d) as i64);
        }
    }
}
