//! Minimum dominating set by branch-and-bound.
//!
//! Each node picks the undominated vertex with the fewest remaining
//! candidate dominators and branches on which of them dominates it; a
//! candidate that has been tried is excluded from later sibling branches.
//! The lower bound is the larger of a neighbourhood-cover count and a
//! packing of undominated vertices with disjoint candidate sets.

use crate::bitset::Bits;
use crate::graph::Graph;

struct Search {
    n: usize,
    closed: Vec<Bits>,
    all: Bits,
    best: Vec<usize>,
}

fn greedy(g: &Graph, closed: &[Bits]) -> Vec<usize> {
    let n = g.n();
    let mut undominated = Bits::full(n);
    let mut chosen = Vec::new();
    while !undominated.is_empty() {
        let w = (0..n)
            .max_by_key(|&w| (closed[w].intersection_len(&undominated), std::cmp::Reverse(w)))
            .expect("nonempty graph");
        chosen.push(w);
        undominated.difference_with(&closed[w]);
    }
    chosen
}

impl Search {
    fn lower_bound(&self, undominated: &Bits, allowed: &Bits) -> usize {
        let mut max_cover = 0;
        for w in allowed.iter() {
            max_cover = max_cover.max(self.closed[w].intersection_len(undominated));
        }
        if max_cover == 0 {
            return usize::MAX / 2;
        }
        let cover = undominated.len().div_ceil(max_cover);

        let mut cands: Vec<(usize, usize, Bits)> = undominated
            .iter()
            .map(|u| {
                let mut c = self.closed[u].clone();
                c.intersect_with(allowed);
                (c.len(), u, c)
            })
            .collect();
        cands.sort_unstable_by_key(|(len, u, _)| (*len, *u));
        let mut used = Bits::empty(self.n);
        let mut packing = 0;
        for (len, _, c) in &cands {
            if *len == 0 {
                return usize::MAX / 2;
            }
            if c.is_disjoint(&used) {
                used.union_with(c);
                packing += 1;
            }
        }
        cover.max(packing)
    }

    fn search(&mut self, dominated: &Bits, mut allowed: Bits, chosen: &mut Vec<usize>) {
        if chosen.len() >= self.best.len() {
            return;
        }
        let mut undominated = self.all.clone();
        undominated.difference_with(dominated);
        if undominated.is_empty() {
            self.best = chosen.clone();
            return;
        }
        if chosen.len() + self.lower_bound(&undominated, &allowed) >= self.best.len() {
            return;
        }
        let (u, _) = undominated
            .iter()
            .map(|u| (u, self.closed[u].intersection_len(&allowed)))
            .min_by_key(|&(u, c)| (c, u))
            .expect("undominated vertex exists");
        let mut cands = self.closed[u].clone();
        cands.intersect_with(&allowed);
        let mut order: Vec<(usize, usize)> = cands
            .iter()
            .map(|w| (self.closed[w].intersection_len(&undominated), w))
            .collect();
        order.sort_unstable_by_key(|&(gain, w)| (std::cmp::Reverse(gain), w));
        for (_, w) in order {
            if chosen.len() + 1 >= self.best.len() {
                break;
            }
            let mut next = dominated.clone();
            next.union_with(&self.closed[w]);
            chosen.push(w);
            self.search(&next, allowed.clone(), chosen);
            chosen.pop();
            allowed.remove(w);
        }
    }
}

pub(super) fn minimum_dominating_set(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let closed = g.closed_bits();
    let best = greedy(g, &closed);
    let mut s = Search {
        n,
        all: Bits::full(n),
        closed,
        best,
    };
    s.search(&Bits::empty(n), Bits::full(n), &mut Vec::new());
    s.best
}
