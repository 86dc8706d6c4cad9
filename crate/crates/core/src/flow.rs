//! Dinic's maximum flow on integer capacities.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    rev: usize,
    cap: i64,
}

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    adj: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

/// Handle to an arc returned by [`FlowNetwork::add_arc`], used to read the
/// flow it carries after a solve.
#[derive(Debug, Clone, Copy)]
pub struct ArcId {
    node: usize,
    index: usize,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> ArcId {
        assert!(cap >= 0);
        let rev_from = self.adj[to].len() + usize::from(from == to);
        let rev_to = self.adj[from].len();
        self.adj[from].push(Arc { to, rev: rev_from, cap });
        self.adj[to].push(Arc {
            to: from,
            rev: rev_to,
            cap: 0,
        });
        ArcId {
            node: from,
            index: rev_to,
        }
    }

    /// Flow currently pushed through `arc`.
    pub fn flow(&self, arc: ArcId) -> i64 {
        let a = &self.adj[arc.node][arc.index];
        self.adj[a.to][a.rev].cap
    }

    fn bfs(&mut self, source: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = VecDeque::new();
        self.level[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for a in &self.adj[v] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, sink: usize, limit: i64) -> i64 {
        if v == sink {
            return limit;
        }
        while self.iter[v] < self.adj[v].len() {
            let i = self.iter[v];
            let Arc { to, rev, cap } = self.adj[v][i];
            if cap > 0 && self.level[v] < self.level[to] {
                let pushed = self.dfs(to, sink, limit.min(cap));
                if pushed > 0 {
                    self.adj[v][i].cap -= pushed;
                    self.adj[to][rev].cap += pushed;
                    return pushed;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        loop {
            self.bfs(source);
            if self.level[sink] < 0 {
                return total;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(source, sink, i64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }

    /// Nodes reachable from `source` in the residual network; after
    /// [`max_flow`](Self::max_flow) this is the source side of a minimum cut.
    pub fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![source];
        seen[source] = true;
        while let Some(v) = stack.pop() {
            for a in &self.adj[v] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_network() {
        // CLRS figure 26.1: max flow 23.
        let mut g = FlowNetwork::new(6);
        g.add_arc(0, 1, 16);
        g.add_arc(0, 2, 13);
        g.add_arc(1, 3, 12);
        g.add_arc(2, 1, 4);
        g.add_arc(2, 4, 14);
        g.add_arc(3, 2, 9);
        g.add_arc(3, 5, 20);
        g.add_arc(4, 3, 7);
        g.add_arc(4, 5, 4);
        assert_eq!(g.max_flow(0, 5), 23);
        let side = g.residual_reachable(0);
        assert!(side[0] && !side[5]);
    }

    #[test]
    fn reports_arc_flow() {
        let mut g = FlowNetwork::new(3);
        let a = g.add_arc(0, 1, 5);
        let b = g.add_arc(1, 2, 3);
        assert_eq!(g.max_flow(0, 2), 3);
        assert_eq!(g.flow(a), 3);
        assert_eq!(g.flow(b), 3);
    }
}
