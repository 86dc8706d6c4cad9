#![allow(dead_code)]

pub mod oracle;

use std::collections::HashSet;

use domtie::graph::generators;
use domtie::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n_lo: usize, n_hi: usize) -> Graph {
    let n = rng.gen_range(n_lo..=n_hi);
    let p = rng.gen_range(0.05..0.8);
    generators::gnp(n, p, rng)
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            idx[u][v] = k;
            idx[v][u] = k;
            k += 1;
        }
    }
    idx
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Canonical code: minimum adjacency code over the relabelings that sort
/// vertices by (degree, sorted neighbour degrees).
fn canonical(g: &Graph) -> u64 {
    let n = g.n();
    let idx = pair_index(n);
    let inv: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(c) if inv[c[0]] == inv[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut perms: Vec<Vec<usize>> = classes.to_vec();
    for p in &mut perms {
        p.sort_unstable();
    }
    let mut best = u64::MAX;
    loop {
        let mut pos = vec![0; n];
        let mut k = 0;
        for p in &perms {
            for &v in p {
                pos[v] = k;
                k += 1;
            }
        }
        let code = g.edges().iter().fold(0u64, |c, &(u, v)| c | 1 << idx[pos[u]][pos[v]]);
        best = best.min(code);
        // advance the mixed-radix permutation counter
        let mut i = 0;
        loop {
            if i == perms.len() {
                return best;
            }
            if next_permutation(&mut perms[i]) {
                break;
            }
            perms[i].sort_unstable();
            i += 1;
        }
    }
}

/// One representative of every isomorphism class of graphs on `n` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n));
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    let smaller = nonisomorphic_graphs(n - 1);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for h in &smaller {
        for mask in 0u32..(1 << (n - 1)) {
            let mut edges: Vec<(usize, usize)> = h.edges().to_vec();
            edges.extend((0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
            let g = Graph::new(n, edges).expect("simple");
            if seen.insert(canonical(&g)) {
                out.push(g);
            }
        }
    }
    out
}
