//! Bounded-outdegree orientations and the layered out-2-independent
//! decomposition built on top of them.

use std::fmt;

use crate::exact::{is_nearly_two_independent, ExactSolver, SolverError, VertexSet, VertexSetError};
use crate::flow::FlowNetwork;
use crate::graph::{DenseSubgraph, Graph};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrientationError {
    #[error("arc {tail} -> {head} is not an edge of the host graph")]
    NotAnEdge { tail: usize, head: usize },
    #[error("edge {{{0}, {1}}} is directed more than once")]
    Repeated(usize, usize),
    #[error("edge {{{0}, {1}}} is not directed")]
    Missing(usize, usize),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// A direction for every edge of a host graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Orientation {
    host: Graph,
    /// `(tail, head)` for each host edge, in host edge order.
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Orientation")
            .field("n", &self.host.n())
            .field("arcs", &self.arcs)
            .finish()
    }
}

impl Orientation {
    /// Validates that `arcs` directs every host edge exactly once.
    pub fn from_arcs(host: &Graph, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, OrientationError> {
        let mut slot: Vec<Option<(usize, usize)>> = vec![None; host.m()];
        for (tail, head) in arcs {
            let key = (tail.min(head), tail.max(head));
            let idx = host
                .edges()
                .binary_search(&key)
                .map_err(|_| OrientationError::NotAnEdge { tail, head })?;
            if slot[idx].replace((tail, head)).is_some() {
                return Err(OrientationError::Repeated(key.0, key.1));
            }
        }
        let mut directed = Vec::with_capacity(host.m());
        for (idx, s) in slot.into_iter().enumerate() {
            let (u, v) = host.edges()[idx];
            directed.push(s.ok_or(OrientationError::Missing(u, v))?);
        }
        Ok(Self::build(host.clone(), directed))
    }

    fn build(host: Graph, arcs: Vec<(usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); host.n()];
        let mut inn = vec![Vec::new(); host.n()];
        for &(t, h) in &arcs {
            out[t].push(h);
            inn[h].push(t);
        }
        for l in out.iter_mut().chain(inn.iter_mut()) {
            l.sort_unstable();
        }
        Orientation { host, arcs, out, inn }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn max_outdegree(&self) -> usize {
        self.out.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// One `tail head` line per edge, in host edge order.
    pub fn to_text(&self) -> String {
        self.arcs.iter().map(|(t, h)| format!("{t} {h}\n")).collect()
    }

    pub fn parse(host: &Graph, text: &str) -> Result<Self, OrientationError> {
        let mut arcs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            let malformed = |message: String| OrientationError::Malformed { line: i + 1, message };
            let mut parts = t.split_whitespace();
            let mut next = || -> Result<usize, OrientationError> {
                let tok = parts
                    .next()
                    .ok_or_else(|| malformed(format!("expected \"tail head\", got {t:?}")))?;
                tok.parse().map_err(|_| malformed(format!("bad vertex {tok:?}")))
            };
            let tail = next()?;
            let head = next()?;
            if parts.next().is_some() {
                return Err(malformed(format!("trailing tokens in {t:?}")));
            }
            arcs.push((tail, head));
        }
        Self::from_arcs(host, arcs)
    }
}

/// Result of asking for an outdegree-`d` orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrientOutcome {
    Oriented(Orientation),
    /// A subgraph with more than `d` edges per vertex, so average degree
    /// above `2d`; no outdegree-`d` orientation can exist.
    Dense(DenseSubgraph),
}

impl OrientOutcome {
    pub fn orientation(self) -> Option<Orientation> {
        match self {
            OrientOutcome::Oriented(o) => Some(o),
            OrientOutcome::Dense(_) => None,
        }
    }
}

/// Each edge sends one unit to the endpoint that becomes its tail; each
/// vertex accepts at most `d`. A short flow leaves a source side whose
/// vertex part induces more than `d·|V(H)|` edges.
pub fn orient_bounded_outdegree(g: &Graph, d: usize) -> OrientOutcome {
    let (n, m) = (g.n(), g.m());
    let source = 0;
    let sink = 1;
    let edge_node = |e: usize| 2 + e;
    let vertex_node = |v: usize| 2 + m + v;
    let mut net = FlowNetwork::new(2 + m + n);
    let mut choice = Vec::with_capacity(m);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        net.add_arc(source, edge_node(e), 1);
        let to_u = net.add_arc(edge_node(e), vertex_node(u), 1);
        net.add_arc(edge_node(e), vertex_node(v), 1);
        choice.push(to_u);
    }
    for v in 0..n {
        net.add_arc(vertex_node(v), sink, d as i64);
    }
    let value = net.max_flow(source, sink);
    if value as usize == m {
        let arcs = g
            .edges()
            .iter()
            .zip(&choice)
            .map(|(&(u, v), &arc)| if net.flow(arc) == 1 { (u, v) } else { (v, u) })
            .collect();
        return OrientOutcome::Oriented(Orientation::build(g.clone(), arcs));
    }
    let reach = net.residual_reachable(source);
    let vertices: Vec<usize> = (0..n).filter(|&v| reach[vertex_node(v)]).collect();
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| reach[vertex_node(u)] && reach[vertex_node(v)])
        .count();
    debug_assert!(edges > d * vertices.len());
    OrientOutcome::Dense(DenseSubgraph { vertices, edges })
}

/// Independent in the host, and no vertex has two in-neighbours in `a`.
pub fn is_out_two_independent(o: &Orientation, a: &VertexSet) -> bool {
    let g = o.host();
    if a.check_host(g).is_err() {
        return false;
    }
    let mut hit = vec![false; g.n()];
    for v in a.iter() {
        if g.neighbors(v).iter().any(|&w| a.contains(w)) {
            return false;
        }
        for &z in o.out_neighbors(v) {
            if std::mem::replace(&mut hit[z], true) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtractError {
    #[error("no orientation of outdegree {d} exists: {} vertices induce {} edges", .witness.vertices.len(), .witness.edges)]
    NoOrientation { d: usize, witness: DenseSubgraph },
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// A maximum `(2d+1)`-nearly 2-independent set, which has at least
/// `γ(G)/(4d+2)` vertices whenever an outdegree-`d` orientation exists.
pub fn extract_nearly_two_independent(g: &Graph, d: usize, solver: &ExactSolver) -> Result<VertexSet, ExtractError> {
    if let OrientOutcome::Dense(witness) = orient_bounded_outdegree(g, d) {
        return Err(ExtractError::NoOrientation { d, witness });
    }
    Ok(solver.max_nearly_two_independent(g, 2 * d + 1)?.witness)
}

/// The sets built from a base set `B`: disjoint maximal out-2-independent
/// layers outside `B`, their union `X`, and `D` = the smallest layer plus
/// its out-neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutDomDecomposition {
    pub base: VertexSet,
    pub x: VertexSet,
    pub d: VertexSet,
    pub layers: Vec<VertexSet>,
    /// Zero-based index of the layer used for `D`.
    pub chosen_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecomposeError {
    #[error("m = {m} must exceed d = {d}")]
    MNotAboveD { m: usize, d: usize },
    #[error("vertex {vertex} has outdegree {outdegree} > {d}")]
    Outdegree { vertex: usize, outdegree: usize, d: usize },
    #[error("orientation is for a different graph")]
    HostMismatch,
    #[error("base set: {0}")]
    Base(#[from] VertexSetError),
}

pub fn outdom_decompose(
    g: &Graph,
    o: &Orientation,
    base: &VertexSet,
    d: usize,
    m: usize,
) -> Result<OutDomDecomposition, DecomposeError> {
    if m <= d {
        return Err(DecomposeError::MNotAboveD { m, d });
    }
    if o.host() != g {
        return Err(DecomposeError::HostMismatch);
    }
    base.check_host(g)?;
    if let Some(v) = (0..g.n()).find(|&v| o.outdegree(v) > d) {
        return Err(DecomposeError::Outdegree {
            vertex: v,
            outdegree: o.outdegree(v),
            d,
        });
    }
    let n = g.n();
    let mut used = base.mask(n);
    let mut layers = Vec::with_capacity(m - d);
    for _ in 0..m - d {
        let mut inside = vec![false; n];
        let mut hit = vec![false; n];
        let mut layer = Vec::new();
        for w in 0..n {
            if used[w] || g.neighbors(w).iter().any(|&u| inside[u]) || o.out_neighbors(w).iter().any(|&z| hit[z]) {
                continue;
            }
            inside[w] = true;
            for &z in o.out_neighbors(w) {
                hit[z] = true;
            }
            layer.push(w);
        }
        for &w in &layer {
            used[w] = true;
        }
        layers.push(VertexSet::from_iter(layer));
    }
    let chosen_index = (0..layers.len())
        .min_by_key(|&i| (layers[i].len(), i))
        .expect("at least one layer");
    let x: VertexSet = layers.iter().flat_map(|l| l.iter()).collect();
    let dset: VertexSet = layers[chosen_index]
        .iter()
        .flat_map(|v| std::iter::once(v).chain(o.out_neighbors(v).iter().copied()))
        .collect();
    Ok(OutDomDecomposition {
        base: base.clone(),
        x,
        d: dset,
        layers,
        chosen_index,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OutDomViolation {
    #[error("layer {0} meets the base set or an earlier layer")]
    Overlap(usize),
    #[error("layer {0} is not out-2-independent")]
    NotOut2Independent(usize),
    #[error("layer {layer} is not maximal: vertex {vertex} can be added")]
    NotMaximal { layer: usize, vertex: usize },
    #[error("X is not the union of the layers")]
    Union,
    #[error("D is not the chosen layer together with its out-neighbours")]
    DSet,
    #[error("chosen layer {0} is not the smallest")]
    Choice(usize),
    #[error("X is not m-nearly 2-independent")]
    NotNearly,
    #[error("|X| = {x} exceeds b = {b}")]
    XSize { x: usize, b: usize },
    #[error("|D| = {dsize} exceeds (d+1)b/(m-d) = {bound}")]
    DSize { dsize: usize, bound: Rational },
    #[error("vertex {0} outside B, X and D has no neighbour in D")]
    Undominated(usize),
}

/// Checks every property of the decomposition directly; `b` is the maximum
/// size of an `m`-nearly 2-independent set of `g`.
pub fn verify_outdom(
    g: &Graph,
    o: &Orientation,
    dec: &OutDomDecomposition,
    d: usize,
    m: usize,
    b: usize,
) -> Result<(), OutDomViolation> {
    let n = g.n();
    let mut used = dec.base.mask(n);
    for (i, layer) in dec.layers.iter().enumerate() {
        if layer.iter().any(|v| used[v]) {
            return Err(OutDomViolation::Overlap(i));
        }
        if !is_out_two_independent(o, layer) {
            return Err(OutDomViolation::NotOut2Independent(i));
        }
        for w in (0..n).filter(|&w| !used[w] && !layer.contains(w)) {
            let grown: VertexSet = layer.iter().chain(std::iter::once(w)).collect();
            if is_out_two_independent(o, &grown) {
                return Err(OutDomViolation::NotMaximal { layer: i, vertex: w });
            }
        }
        for v in layer.iter() {
            used[v] = true;
        }
    }
    let union: VertexSet = dec.layers.iter().flat_map(|l| l.iter()).collect();
    if union != dec.x {
        return Err(OutDomViolation::Union);
    }
    let i = dec.chosen_index;
    let chosen = dec.layers.get(i).ok_or(OutDomViolation::Choice(i))?;
    if dec.layers.iter().any(|l| l.len() < chosen.len()) {
        return Err(OutDomViolation::Choice(i));
    }
    let expected: VertexSet = chosen
        .iter()
        .flat_map(|v| std::iter::once(v).chain(o.out_neighbors(v).iter().copied()))
        .collect();
    if expected != dec.d {
        return Err(OutDomViolation::DSet);
    }
    if !is_nearly_two_independent(g, &dec.x, m) {
        return Err(OutDomViolation::NotNearly);
    }
    if dec.x.len() > b {
        return Err(OutDomViolation::XSize { x: dec.x.len(), b });
    }
    let bound = Rational::from_usize((d + 1) * b) / Rational::from_usize(m - d);
    if Rational::from_usize(dec.d.len()) > bound {
        return Err(OutDomViolation::DSize {
            dsize: dec.d.len(),
            bound,
        });
    }
    let covered = dec.d.mask(n);
    for v in 0..n {
        if used[v] || covered[v] {
            continue;
        }
        if !g.neighbors(v).iter().any(|&w| covered[w]) {
            return Err(OutDomViolation::Undominated(v));
        }
    }
    Ok(())
}
