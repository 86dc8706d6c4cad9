//! Simple undirected graphs on dense `0..n` vertex labels.

mod density;
pub mod generators;
mod io;

use std::collections::VecDeque;
use std::fmt;

pub use density::{densest_subgraph, DenseSubgraph};
pub use io::{parse_graph, ParseError, ParseErrorKind};

use crate::bitset::Bits;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph has no vertices")]
    Empty,
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Shortest-path length, with a distinguished value for disconnected pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// repeated pairs (in either orientation).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Like [`Graph::new`] but silently merges repeated pairs.
    pub fn new_merging(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut list: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        list.dedup();
        Self::new(n, list)
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Vertices of `N[v]` in ascending order.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let pos = self.adj[v].partition_point(|&w| w < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    pub(crate) fn closed_bits(&self) -> Vec<Bits> {
        (0..self.n)
            .map(|v| {
                let mut b = Bits::from_iter(self.n, self.adj[v].iter().copied());
                b.insert(v);
                b
            })
            .collect()
    }

    pub(crate) fn open_bits(&self) -> Vec<Bits> {
        (0..self.n)
            .map(|v| Bits::from_iter(self.n, self.adj[v].iter().copied()))
            .collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs(u)[v])
    }

    /// Distances from `source` to every vertex.
    pub fn bfs(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Distance::Finite(0);
        queue.push_back((source, 0));
        while let Some((x, d)) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == Distance::Infinite {
                    dist[y] = Distance::Finite(d + 1);
                    queue.push_back((y, d + 1));
                }
            }
        }
        dist
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        Self::from_sorted(vertices.len(), edges)
    }

    /// The graph on the same vertices with `u`–`v` adjacent iff their
    /// distance is 1 or 2.
    pub fn square(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            let mut reach = Bits::empty(self.n);
            for &w in &self.adj[u] {
                reach.insert(w);
                for &x in &self.adj[w] {
                    reach.insert(x);
                }
            }
            edges.extend(reach.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        Self::from_sorted(self.n, edges)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let key = (u.min(v), u.max(v));
        let edges = self.edges.iter().copied().filter(|&e| e != key).collect();
        Self::from_sorted(self.n, edges)
    }

    /// Whether every edge of `self` is an edge of `other` (same vertex set).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v]));
        Graph::new(self.n, edges).expect("permutation preserves simplicity")
    }

    /// Edge-list text: header `n m` then one `u v` line per edge in
    /// lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
