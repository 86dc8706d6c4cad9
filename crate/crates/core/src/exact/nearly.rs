//! Maximum k-nearly 2-independent set: branch over vertex inclusion with a
//! counter per closed neighbourhood.
//!
//! A candidate is always a vertex whose inclusion keeps every counter at
//! most `k`. A candidate whose closed neighbourhoods all have room for every
//! remaining candidate is taken without branching. The bound groups the
//! candidates by closed neighbourhoods whose slack is smaller than the number
//! of candidates they contain.

use crate::bitset::Bits;
use crate::graph::Graph;

struct Search {
    k: usize,
    closed: Vec<Bits>,
    /// `|N[u] ∩ chosen|` for every vertex `u`.
    count: Vec<usize>,
    best: Vec<usize>,
}

impl Search {
    fn slack(&self, u: usize) -> usize {
        self.k - self.count[u]
    }

    fn bound(&self, cand: &Bits) -> usize {
        let mut tight: Vec<(isize, usize, Bits)> = Vec::new();
        for u in 0..self.closed.len() {
            let mut inside = self.closed[u].clone();
            inside.intersect_with(cand);
            let len = inside.len();
            let slack = self.slack(u);
            if len > slack {
                tight.push((slack as isize - len as isize, u, inside));
            }
        }
        tight.sort_unstable_by_key(|(excess, u, _)| (*excess, *u));
        let mut covered = Bits::empty(self.closed.len());
        let mut total = 0;
        for (_, u, mut inside) in tight {
            inside.difference_with(&covered);
            total += inside.len().min(self.slack(u));
            covered.union_with(&inside);
        }
        let mut rest = cand.clone();
        rest.difference_with(&covered);
        total + rest.len()
    }

    fn include(&mut self, v: usize, cand: &Bits) -> Bits {
        let mut next = cand.clone();
        next.remove(v);
        let around: Vec<usize> = self.closed[v].iter().collect();
        for u in around {
            self.count[u] += 1;
            if self.count[u] == self.k {
                next.difference_with(&self.closed[u]);
            }
        }
        next
    }

    fn undo(&mut self, v: usize) {
        let around: Vec<usize> = self.closed[v].iter().collect();
        for u in around {
            self.count[u] -= 1;
        }
    }

    fn is_free(&self, v: usize, cand: &Bits) -> bool {
        self.closed[v]
            .iter()
            .all(|u| self.closed[u].intersection_len(cand) <= self.slack(u))
    }

    fn search(&mut self, cand: Bits, chosen: &mut Vec<usize>) {
        if chosen.len() + cand.len() <= self.best.len() {
            return;
        }
        if cand.is_empty() {
            self.best = chosen.clone();
            return;
        }
        if let Some(v) = cand.iter().find(|&v| self.is_free(v, &cand)) {
            let next = self.include(v, &cand);
            chosen.push(v);
            self.search(next, chosen);
            chosen.pop();
            self.undo(v);
            return;
        }
        if chosen.len() + self.bound(&cand) <= self.best.len() {
            return;
        }
        let v = cand
            .iter()
            .max_by_key(|&v| (self.closed[v].len(), std::cmp::Reverse(v)))
            .expect("candidate exists");
        let next = self.include(v, &cand);
        chosen.push(v);
        self.search(next, chosen);
        chosen.pop();
        self.undo(v);
        let mut without = cand;
        without.remove(v);
        self.search(without, chosen);
    }
}

pub(super) fn maximum_nearly_two_independent(g: &Graph, k: usize) -> Vec<usize> {
    let n = g.n();
    let mut s = Search {
        k,
        closed: g.closed_bits(),
        count: vec![0; n],
        best: Vec::new(),
    };
    s.search(Bits::full(n), &mut Vec::new());
    s.best
}
