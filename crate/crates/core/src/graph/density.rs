//! Average degree, maximum average degree and degeneracy.

use num_traits::ToPrimitive;

use super::{Graph, GraphError};
use crate::flow::FlowNetwork;
use crate::rational::Rational;

/// A vertex subset together with the number of edges it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSubgraph {
    pub vertices: Vec<usize>,
    pub edges: usize,
}

impl DenseSubgraph {
    /// `2|E(H)| / |V(H)|`.
    pub fn average_degree(&self) -> Rational {
        Rational::from_usize(2 * self.edges) / Rational::from_usize(self.vertices.len())
    }
}

impl Graph {
    /// `2|E| / |V|`.
    pub fn average_degree(&self) -> Result<Rational, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Rational::from_usize(2 * self.m()) / Rational::from_usize(self.n))
    }

    /// Exact maximum over nonempty subgraphs of `2|E(H)|/|V(H)|`.
    pub fn maximum_average_degree(&self) -> Result<Rational, GraphError> {
        Ok(densest_subgraph(self)?.average_degree())
    }

    /// Smallest `k` such that every subgraph has a vertex of degree at most
    /// `k`, by repeatedly deleting a minimum-degree vertex.
    pub fn degeneracy(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut best = 0;
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .expect("vertex remains");
            best = best.max(deg[v]);
            removed[v] = true;
            for &w in self.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        Ok(best)
    }
}

/// Vertex set of a subgraph with edge density `|E(H)|/|V(H)|` strictly above
/// `num/den`, if one exists (Goldberg's min-cut construction).
fn denser_than(g: &Graph, num: i64, den: i64) -> Option<Vec<usize>> {
    let n = g.n();
    let m = g.m() as i64;
    let source = n;
    let sink = n + 1;
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        net.add_arc(source, v, m * den);
        net.add_arc(v, sink, m * den + 2 * num - g.degree(v) as i64 * den);
    }
    for &(u, v) in g.edges() {
        net.add_arc(u, v, den);
        net.add_arc(v, u, den);
    }
    let cut = net.max_flow(source, sink);
    if cut < m * n as i64 * den {
        let side = net.residual_reachable(source);
        let vertices: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
        debug_assert!(!vertices.is_empty());
        Some(vertices)
    } else {
        None
    }
}

fn as_i64_pair(r: &Rational) -> (i64, i64) {
    (
        r.numer().to_i64().expect("search bound fits i64"),
        r.denom().to_i64().expect("search bound fits i64"),
    )
}

fn induced_edges(g: &Graph, vertices: &[usize]) -> usize {
    g.induced_subgraph(vertices).m()
}

/// A maximum-density subgraph. Binary search over edge density with a
/// flow-based test; the search stops once the bracket is narrower than
/// `1/n²`, where at most one fraction with denominator `≤ n` remains, and the
/// last subgraph found realises it.
pub fn densest_subgraph(g: &Graph) -> Result<DenseSubgraph, GraphError> {
    let n = g.n();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if g.m() == 0 {
        return Ok(DenseSubgraph {
            vertices: vec![0],
            edges: 0,
        });
    }
    let gap = Rational::new(1, (n * n) as i64);
    let mut lo = Rational::zero();
    let mut hi = Rational::from_usize(n);
    let mut best: Vec<usize> = (0..n).collect();
    let two = Rational::from_integer(2);
    while &hi - &lo >= gap {
        let mid = (&lo + &hi) / &two;
        let (p, q) = as_i64_pair(&mid);
        match denser_than(g, p, q) {
            Some(vs) => {
                best = vs;
                lo = mid;
            }
            None => hi = mid,
        }
    }
    let edges = induced_edges(g, &best);
    Ok(DenseSubgraph { vertices: best, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn brute_mad(g: &Graph) -> Rational {
        let n = g.n();
        let mut best = Rational::zero();
        for mask in 1u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let e = induced_edges(g, &vs);
            let d = Rational::new(2 * e as i64, vs.len() as i64);
            best = best.max(d);
        }
        best
    }

    #[test]
    fn regular_graphs() {
        assert_eq!(
            generators::cycle(4).average_degree().unwrap(),
            Rational::from_integer(2)
        );
        assert_eq!(
            generators::complete(4).average_degree().unwrap(),
            Rational::from_integer(3)
        );
        assert_eq!(
            generators::cycle(6).maximum_average_degree().unwrap(),
            Rational::from_integer(2)
        );
        assert!(Graph::empty(0).average_degree().is_err());
    }

    #[test]
    fn tree_mad() {
        let t = generators::star(6);
        assert_eq!(t.maximum_average_degree().unwrap(), Rational::new(2 * 5, 6));
        let p = generators::path(5);
        assert_eq!(p.maximum_average_degree().unwrap(), Rational::new(8, 5));
    }

    #[test]
    fn dense_core_beats_whole_graph() {
        // K4 with a pendant path attached.
        let g = Graph::new(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]).unwrap();
        let h = densest_subgraph(&g).unwrap();
        assert_eq!(h.vertices, vec![0, 1, 2, 3]);
        assert_eq!(h.average_degree(), Rational::from_integer(3));
        assert_eq!(brute_mad(&g), Rational::from_integer(3));
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            let g = generators::gnp(n, p, &mut rng);
            assert_eq!(g.maximum_average_degree().unwrap(), brute_mad(&g), "{g:?}");
        }
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(generators::path(6).degeneracy().unwrap(), 1);
        assert_eq!(generators::cycle(4).degeneracy().unwrap(), 2);
        assert_eq!(generators::complete(5).degeneracy().unwrap(), 4);
        assert_eq!(Graph::empty(3).degeneracy().unwrap(), 0);
    }
}
