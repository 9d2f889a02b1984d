//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, one alternating-tree search per exposed vertex).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] == NONE {
                if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
    }

    /// Lowest common ancestor of two outer vertices in the contracted tree.
    fn common_base(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.iter_mut().for_each(|x| *x = false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed endpoint of
    /// an augmenting path if one exists.
    fn search(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.in_tree.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Odd cycle through two outer vertices: contract it.
                    let b = self.common_base(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, b, to);
                    self.mark_path(to, b, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = b;
                            if !self.in_tree[u] {
                                self.in_tree[u] = true;
                                self.queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.in_tree[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    /// Runs searches from every exposed vertex. A vertex with no augmenting
    /// path stays exposed in every maximum matching extending the current
    /// one, so it is never revisited. With `stop_on_failure`, the first such
    /// vertex ends the run.
    fn run(&mut self, stop_on_failure: bool) -> bool {
        self.greedy();
        for root in 0..self.adj.len() {
            if self.mate[root] != NONE {
                continue;
            }
            match self.search(root) {
                Some(end) => self.augment(end),
                None if stop_on_failure => return false,
                None => {}
            }
        }
        true
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect()
}

fn pairs(mate: &[usize]) -> Vec<(usize, usize)> {
    mate.iter().enumerate().filter(|&(v, &w)| w != NONE && v < w).map(|(v, &w)| (v, w)).collect()
}

/// A maximum-cardinality matching as edges `(u, v)` with `u < v`.
pub fn max_matching(g: &Graph) -> Vec<(usize, usize)> {
    let adj = adjacency(g);
    max_matching_adj(&adj)
}

pub(crate) fn max_matching_adj(adj: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut b = Blossom::new(adj);
    b.run(false);
    pairs(&b.mate)
}

/// A perfect matching as a mate array, or `None` if none exists.
pub(crate) fn perfect_matching_adj(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    if adj.len() % 2 == 1 {
        return None;
    }
    let mut b = Blossom::new(adj);
    b.run(true).then_some(b.mate)
}
