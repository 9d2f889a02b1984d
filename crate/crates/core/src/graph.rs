//! Simple undirected graphs on dense vertex ids with bit-row adjacency.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] row per vertex, so adjacency
/// tests are a single bit probe and neighborhood unions are word-parallel.
/// Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, m: 0, rows: vec![VertexSet::new(n); n] }
    }

    /// Builds a simple graph, rejecting out-of-range ids, loops and repeated pairs.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.adjacent(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Builds a graph on at most 64 vertices from per-vertex neighbor masks.
    ///
    /// The masks must describe a symmetric, loop-free relation.
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        assert!(n <= 64, "mask constructor supports at most 64 vertices");
        let rows: Vec<VertexSet> = masks.iter().map(|&m| VertexSet::from_mask(n, m)).collect();
        let m = masks.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2;
        debug_assert!((0..n).all(|v| masks[v] >> v & 1 == 0));
        debug_assert!((0..n).all(|u| (0..n).all(|v| (masks[u] >> v & 1) == (masks[v] >> u & 1))));
        Graph { n, m, rows }
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.adjacent(u, v));
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        self.m += 1;
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// The path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge_unchecked(v - 1, v);
        }
        g
    }

    /// The cycle on `n >= 3` vertices in index order.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut g = Graph::path(n);
        g.add_edge_unchecked(n - 1, 0);
        g
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge_unchecked(0, v);
        }
        g
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge_unchecked(i, (i + 1) % 5);
            g.add_edge_unchecked(5 + i, 5 + (i + 2) % 5);
            g.add_edge_unchecked(i, i + 5);
        }
        g
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Neighbor mask of `v`; only meaningful when `n <= 64`.
    #[inline]
    pub(crate) fn mask(&self, v: usize) -> u64 {
        self.rows[v].mask()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn check_vertices(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    /// Connected components of `G - removed`, each listed once, ordered by
    /// smallest member.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut left = self.vertices().difference(removed);
        let mut out = Vec::new();
        while let Some(root) = left.first() {
            let comp = self.flood(root, &left);
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// ω(G - removed).
    pub fn component_count(&self, removed: &VertexSet) -> usize {
        if self.n <= 64 {
            let alive = full_mask(self.n) & !removed.mask();
            return count_components_mask(&self.masks(), alive);
        }
        self.components(removed).len()
    }

    /// Vertices reachable from `root` inside `within`.
    pub fn flood(&self, root: usize, within: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::new(self.n);
        comp.insert(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let mut fresh = self.rows[v].intersection(within);
            fresh.difference_with(&comp);
            for w in fresh.iter() {
                comp.insert(w);
                queue.push_back(w);
            }
        }
        comp
    }

    /// N_G(U): vertices outside `set` with a neighbor in `set`.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in set.iter() {
            out.union_with(&self.rows[v]);
        }
        out.difference_with(set);
        out
    }

    /// Closed neighborhood N_G[U] = U ∪ N_G(U).
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set.iter() {
            out.union_with(&self.rows[v]);
        }
        out
    }

    /// Subgraph induced by `set`, relabeled to `0..|set|` in increasing
    /// order. The map sends new ids to old ids.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let map = set.to_vec();
        let mut back = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let mut g = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.rows[v].intersection(set).iter() {
                let j = back[w];
                if j > i {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        (g, map)
    }

    /// Number of edges between `a` and `b` (which should be disjoint).
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| self.rows[v].intersection(b).len()).sum()
    }

    /// Independent: no edge inside `set`.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.rows[v].is_disjoint(set))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let k = set.len();
        set.iter().all(|v| self.rows[v].intersection(set).len() == k - 1)
    }

    pub(crate) fn masks(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.mask(v)).collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Flood fill restricted to `alive`, starting from the lowest bit of `seed`.
#[inline]
pub(crate) fn flood_mask(rows: &[u64], alive: u64, seed: u64) -> u64 {
    let mut comp = seed & alive;
    let mut frontier = comp;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[v] & alive & !comp;
        comp |= fresh;
        frontier |= fresh;
    }
    comp
}

#[inline]
pub(crate) fn count_components_mask(rows: &[u64], mut alive: u64) -> usize {
    let mut count = 0;
    while alive != 0 {
        let comp = flood_mask(rows, alive, alive & alive.wrapping_neg());
        alive &= !comp;
        count += 1;
    }
    count
}

/// A vertex sequence without repeats.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.0.iter().copied())
    }

    /// Distinct vertices with consecutive ones adjacent.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new(g.vertex_count());
        for &v in &self.0 {
            if v >= g.vertex_count() || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        self.0.windows(2).all(|w| g.adjacent(w[0], w[1]))
    }

    /// A path whose only edges in `g` are the consecutive ones.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        if !self.is_path_in(g) {
            return false;
        }
        let k = self.0.len();
        (0..k).all(|i| (i + 2..k).all(|j| !g.adjacent(self.0[i], self.0[j])))
    }
}
