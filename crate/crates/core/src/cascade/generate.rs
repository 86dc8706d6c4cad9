//! Cascade generators.

use rand::seq::index;
use rand::Rng;

use super::{Cascade, Color, Coloring, MCascade};
use crate::graph::{generators, Graph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("K'n needs n >= 4, got {0}")]
    TooSmall(usize),
    #[error("a foundation with edges needs at least one d-vertex")]
    NoDVertices,
    #[error("graph has no edges")]
    Edgeless,
    #[error("m = {0} is below 2")]
    InvalidM(usize),
}

/// Labels: foundation vertices `0..k` coloured v, then one e-vertex per
/// foundation edge in edge order, then `num_d` d-vertices. E-vertex `i` is
/// attached to d-vertex `i mod num_d`.
pub fn generate_cascade_from(f: &Graph, num_d: usize) -> Result<Cascade, GenerateError> {
    if num_d == 0 && f.m() > 0 {
        return Err(GenerateError::NoDVertices);
    }
    let k = f.n();
    let m = f.m();
    let mut edges = Vec::with_capacity(3 * m);
    for (i, &(u, v)) in f.edges().iter().enumerate() {
        edges.push((u, k + i));
        edges.push((v, k + i));
        edges.push((k + i, k + m + i % num_d));
    }
    let mut colors = vec![Color::V; k];
    colors.extend(std::iter::repeat_n(Color::E, m));
    colors.extend(std::iter::repeat_n(Color::D, num_d));
    let g = Graph::new(k + m + num_d, edges).expect("subdivision edges are distinct");
    Ok(Cascade::new(g, Coloring::new(colors)).expect("construction is a cascade"))
}

/// The 1-subdivision of `K_n` plus an apex on every subdivision vertex.
pub fn generate_kprime(n: usize) -> Result<Cascade, GenerateError> {
    if n < 4 {
        return Err(GenerateError::TooSmall(n));
    }
    generate_cascade_from(&generators::complete(n), 1)
}

/// Subdivide every edge once and add one vertex adjacent to all subdivision
/// vertices. Original vertices keep their labels.
pub fn subdivide_and_dominate(g: &Graph) -> Result<Graph, GenerateError> {
    if g.m() == 0 {
        return Err(GenerateError::Edgeless);
    }
    Ok(generate_cascade_from(g, 1)?.graph().clone())
}

/// A random m-cascade whose e-vertices cover every edge of `f`: each edge of
/// `f` gets its own e-vertex, which also picks up to `m - 2` further random
/// v-neighbours. D-vertices are chosen uniformly per e-vertex. The
/// foundation contains `f` as a spanning subgraph.
pub fn random_mcascade_with_foundation<R: Rng>(
    f: &Graph,
    m: usize,
    num_d: usize,
    rng: &mut R,
) -> Result<MCascade, GenerateError> {
    if m < 2 {
        return Err(GenerateError::InvalidM(m));
    }
    if num_d == 0 && f.m() > 0 {
        return Err(GenerateError::NoDVertices);
    }
    let k = f.n();
    let e = f.m();
    let mut edges = Vec::new();
    for (i, &(u, v)) in f.edges().iter().enumerate() {
        let x = k + i;
        edges.push((u, x));
        edges.push((v, x));
        let extra = rng.gen_range(0..=m - 2).min(k - 2);
        let others: Vec<usize> = (0..k).filter(|&w| w != u && w != v).collect();
        for j in index::sample(rng, others.len(), extra) {
            edges.push((others[j], x));
        }
        edges.push((x, k + e + rng.gen_range(0..num_d)));
    }
    let mut colors = vec![Color::V; k];
    colors.extend(std::iter::repeat_n(Color::E, e));
    colors.extend(std::iter::repeat_n(Color::D, num_d));
    let g = Graph::new(k + e + num_d, edges).expect("distinct edges");
    Ok(MCascade::new(g, Coloring::new(colors), m).expect("construction is an m-cascade"))
}
