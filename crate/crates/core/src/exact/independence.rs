//! Maximum independent set by branch-and-bound with a greedy clique-cover
//! bound. Vertices of residual degree at most one are taken without
//! branching; otherwise the search branches on a vertex of maximum residual
//! degree (smallest index on ties).

use crate::bitset::Bits;
use crate::graph::Graph;

struct Search {
    open: Vec<Bits>,
    closed: Vec<Bits>,
    best: Vec<usize>,
    /// Only sets strictly larger than this are recorded.
    floor: usize,
    /// Stop as soon as a set larger than `floor` is recorded.
    stop_early: bool,
    done: bool,
}

impl Search {
    fn clique_cover(&self, cand: &Bits) -> usize {
        let mut joinable: Vec<Bits> = Vec::new();
        for v in cand.iter() {
            match joinable.iter_mut().find(|j| j.contains(v)) {
                Some(j) => j.intersect_with(&self.open[v]),
                None => {
                    let mut j = self.open[v].clone();
                    j.intersect_with(cand);
                    joinable.push(j);
                }
            }
        }
        joinable.len()
    }

    fn record(&mut self, chosen: &[usize]) {
        if chosen.len() > self.floor {
            self.best = chosen.to_vec();
            self.floor = chosen.len();
            if self.stop_early {
                self.done = true;
            }
        }
    }

    fn search(&mut self, cand: Bits, chosen: &mut Vec<usize>) {
        if self.done {
            return;
        }
        if chosen.len() + cand.len() <= self.floor {
            return;
        }
        if cand.is_empty() {
            self.record(chosen);
            return;
        }
        let mut pick = None;
        let mut forced = None;
        for v in cand.iter() {
            let d = self.open[v].intersection_len(&cand);
            if d <= 1 {
                forced = Some(v);
                break;
            }
            if pick.is_none_or(|(bd, _)| d > bd) {
                pick = Some((d, v));
            }
        }
        if let Some(v) = forced {
            let mut next = cand;
            next.difference_with(&self.closed[v]);
            chosen.push(v);
            self.search(next, chosen);
            chosen.pop();
            return;
        }
        if chosen.len() + self.clique_cover(&cand) <= self.floor {
            return;
        }
        let (_, v) = pick.expect("candidate exists");
        let mut with = cand.clone();
        with.difference_with(&self.closed[v]);
        chosen.push(v);
        self.search(with, chosen);
        chosen.pop();
        let mut without = cand;
        without.remove(v);
        self.search(without, chosen);
    }
}

fn greedy(g: &Graph) -> Vec<usize> {
    let mut alive = Bits::full(g.n());
    let open = g.open_bits();
    let mut chosen = Vec::new();
    while let Some(v) = alive.iter().min_by_key(|&v| (open[v].intersection_len(&alive), v)) {
        chosen.push(v);
        alive.remove(v);
        alive.difference_with(&open[v]);
    }
    chosen
}

fn searcher(g: &Graph) -> Search {
    Search {
        open: g.open_bits(),
        closed: g.closed_bits(),
        best: Vec::new(),
        floor: 0,
        stop_early: false,
        done: false,
    }
}

pub(super) fn maximum_independent_set(g: &Graph) -> Vec<usize> {
    let seed = greedy(g);
    let mut s = searcher(g);
    s.floor = seed.len();
    s.best = seed;
    s.search(Bits::full(g.n()), &mut Vec::new());
    s.best
}

pub(super) fn has_independent_set_larger_than(g: &Graph, bound: usize) -> bool {
    if greedy(g).len() > bound {
        return true;
    }
    let mut s = searcher(g);
    s.floor = bound;
    s.stop_early = true;
    s.search(Bits::full(g.n()), &mut Vec::new());
    s.done
}
