//! Reference implementations written against the definitions, sharing no
//! code with the library beyond the `Graph` container.

use domtie::Graph;

pub fn closed_masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    (0..g.n())
        .map(|u| g.neighbors(u).iter().fold(1u64 << u, |m, &v| m | 1 << v))
        .collect()
}

fn subsets(n: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 24, "enumeration limited to 24 vertices");
    0u64..(1u64 << n)
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn dominates(masks: &[u64], s: u64) -> bool {
    let mut cover = 0;
    for (u, &m) in masks.iter().enumerate() {
        if s >> u & 1 == 1 {
            cover |= m;
        }
    }
    cover == full(masks.len())
}

/// `|N[u] ∩ S| ≤ k` for every `u`.
pub fn nearly(masks: &[u64], s: u64, k: u32) -> bool {
    masks.iter().all(|&m| (m & s).count_ones() <= k)
}

pub fn independent(g: &Graph, s: u64) -> bool {
    g.edges().iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0)
}

pub fn gamma(g: &Graph) -> usize {
    let masks = closed_masks(g);
    subsets(g.n())
        .filter(|&s| dominates(&masks, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .expect("the full set dominates")
}

pub fn alpha(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|&s| independent(g, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn max_nearly(g: &Graph, k: u32) -> usize {
    let masks = closed_masks(g);
    subsets(g.n())
        .filter(|&s| nearly(&masks, s, k))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// A 2-independent set is exactly a 1-nearly 2-independent one.
pub fn alpha2(g: &Graph) -> usize {
    max_nearly(g, 1)
}

/// Breadth-first distances; `usize::MAX` marks unreachable vertices.
pub fn distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Pairwise distances above two.
pub fn two_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter().all(|&u| {
        let d = distances(g, u);
        set.iter().all(|&v| v == u || d[v] > 2)
    })
}

pub fn induced_edges(g: &Graph, vertices: &[usize]) -> usize {
    let inside = {
        let mut m = vec![false; g.n()];
        for &v in vertices {
            m[v] = true;
        }
        m
    };
    g.edges().iter().filter(|&&(u, v)| inside[u] && inside[v]).count()
}

/// Maximum of `e(S)/|S|` over nonempty `S`, as `(edges, vertices)`.
pub fn max_density(g: &Graph) -> (usize, usize) {
    assert!(g.n() >= 1);
    let mut best = (0usize, 1usize);
    for s in 1..(1u64 << g.n()) {
        let vs = s.count_ones() as usize;
        let es = g
            .edges()
            .iter()
            .filter(|&&(u, v)| s >> u & 1 == 1 && s >> v & 1 == 1)
            .count();
        if es * best.1 > best.0 * vs {
            best = (es, vs);
        }
    }
    best
}

/// Smallest `k` such that every subgraph has a vertex of degree at most `k`.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| deg[v]).unwrap();
        k = k.max(deg[v]);
        gone[v] = true;
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    k
}

/// Greedy partition into cliques; its size bounds `α` from above.
pub fn clique_cover_size(g: &Graph) -> usize {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut count = 0;
    for v in 0..n {
        if placed[v] {
            continue;
        }
        let mut clique = vec![v];
        placed[v] = true;
        for w in v + 1..n {
            if !placed[w] && clique.iter().all(|&u| g.has_edge(u, w)) {
                clique.push(w);
                placed[w] = true;
            }
        }
        count += 1;
    }
    count
}

/// Colour classes 0 = v, 1 = e, 2 = d. Checks the cascade axioms; with
/// `m = None` every e-vertex needs exactly two v-neighbours.
pub fn cascade_axioms(g: &Graph, colors: &[u8], m: Option<usize>) -> bool {
    if colors.len() != g.n() {
        return false;
    }
    for &(u, v) in g.edges() {
        let (a, b) = (colors[u], colors[v]);
        if a == b || (a != 1 && b != 1) {
            return false;
        }
    }
    (0..g.n()).filter(|&x| colors[x] == 1).all(|x| {
        let vs = g.neighbors(x).iter().filter(|&&w| colors[w] == 0).count();
        let ds = g.neighbors(x).iter().filter(|&&w| colors[w] == 2).count();
        let v_ok = match m {
            None => vs == 2,
            Some(m) => vs <= m,
        };
        v_ok && ds == 1
    })
}

/// The graph on v-vertices (relabelled in ascending order) joining two of
/// them when they share an e-neighbour.
pub fn foundation(g: &Graph, colors: &[u8]) -> Graph {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| colors[v] == 0).collect();
    let index = |v: usize| vs.binary_search(&v).unwrap();
    let mut edges = Vec::new();
    for x in (0..g.n()).filter(|&x| colors[x] == 1) {
        let nb: Vec<usize> = g.neighbors(x).iter().copied().filter(|&w| colors[w] == 0).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                edges.push((index(a), index(b)));
            }
        }
    }
    Graph::new_merging(vs.len(), edges).unwrap()
}
