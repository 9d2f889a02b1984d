//! 2-factors through the vertex-gadget reduction to perfect matching.
//!
//! Each vertex `v` of degree `d` becomes `d` external vertices, one per
//! incident edge, completely joined to `d - 2` internal vertices. Every
//! original edge `uv` becomes one edge between the matching externals of `u`
//! and `v`. In a perfect matching the internals absorb `d - 2` externals of
//! each gadget, so exactly two external edges leave every gadget: the
//! matched external edges form a 2-factor, and every 2-factor lifts back.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::two_factor::matching::perfect_matching_adj;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetVertex {
    /// Stands for `vertex` on the original edge `edge` (stored `u < v`).
    External {
        vertex: usize,
        edge: (usize, usize),
    },
    Internal {
        vertex: usize,
    },
}

impl GadgetVertex {
    pub fn original(&self) -> usize {
        match *self {
            GadgetVertex::External { vertex, .. } | GadgetVertex::Internal { vertex } => vertex,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub graph: Graph,
    /// Role of each gadget vertex.
    pub roles: Vec<GadgetVertex>,
    /// External-external gadget edges `(x, y)` with the original edge each one encodes.
    pub edge_links: Vec<((usize, usize), (usize, usize))>,
}

impl GadgetGraph {
    /// Gadget vertices standing for original vertex `v`, externals first.
    pub fn gadget_of(&self, v: usize) -> Vec<usize> {
        let mut ext: Vec<usize> = Vec::new();
        let mut int: Vec<usize> = Vec::new();
        for (i, r) in self.roles.iter().enumerate() {
            match *r {
                GadgetVertex::External { vertex, .. } if vertex == v => ext.push(i),
                GadgetVertex::Internal { vertex } if vertex == v => int.push(i),
                _ => {}
            }
        }
        ext.extend(int);
        ext
    }
}

/// Builds the gadget graph. Every vertex needs degree at least two.
pub fn build_gadget(g: &Graph) -> Result<GadgetGraph> {
    let (roles, adj, edge_links) = gadget_parts(g)?;
    let mut graph = Graph::empty(roles.len());
    for (u, row) in adj.iter().enumerate() {
        for &v in row {
            if u < v {
                graph.add_edge_unchecked(u, v);
            }
        }
    }
    Ok(GadgetGraph { graph, roles, edge_links })
}

type Parts = (Vec<GadgetVertex>, Vec<Vec<usize>>, Vec<((usize, usize), (usize, usize))>);

fn gadget_parts(g: &Graph) -> Result<Parts> {
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) < 2) {
        return Err(Error::Precondition(format!("vertex {v} has degree {} < 2, so no 2-factor exists", g.degree(v))));
    }
    let mut roles = Vec::new();
    // external[v][i]: gadget id of v's external for its i-th neighbor.
    let mut external: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut internal: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let ext: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|w| {
                roles.push(GadgetVertex::External { vertex: v, edge: (v.min(w), v.max(w)) });
                roles.len() - 1
            })
            .collect();
        let int: Vec<usize> = (0..ext.len() - 2)
            .map(|_| {
                roles.push(GadgetVertex::Internal { vertex: v });
                roles.len() - 1
            })
            .collect();
        external.push(ext);
        internal.push(int);
    }
    let mut adj = vec![Vec::new(); roles.len()];
    for v in 0..n {
        for &x in &external[v] {
            for &y in &internal[v] {
                adj[x].push(y);
                adj[y].push(x);
            }
        }
    }
    let mut edge_links = Vec::with_capacity(g.edge_count());
    let slot = |v: usize, w: usize| g.neighbors(v).iter().position(|u| u == w).expect("adjacent");
    for (u, v) in g.edges() {
        let x = external[u][slot(u, v)];
        let y = external[v][slot(v, u)];
        adj[x].push(y);
        adj[y].push(x);
        edge_links.push(((x, y), (u, v)));
    }
    Ok((roles, adj, edge_links))
}

/// A spanning union of vertex-disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TwoFactor {
    /// Each cycle starts at its smallest vertex and continues towards the
    /// smaller of that vertex's two cycle neighbors.
    pub cycles: Vec<Vec<usize>>,
}

impl TwoFactor {
    /// Cycles have length at least 3, use edges of `g`, and cover every
    /// vertex exactly once.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let mut seen = VertexSet::new(n);
        let mut degree = vec![0usize; n];
        for cycle in &self.cycles {
            if cycle.len() < 3 {
                return false;
            }
            for (i, &v) in cycle.iter().enumerate() {
                let w = cycle[(i + 1) % cycle.len()];
                if v >= n || w >= n || seen.contains(v) || !g.adjacent(v, w) {
                    return false;
                }
                seen.insert(v);
                degree[v] += 1;
                degree[w] += 1;
            }
        }
        seen.len() == n && degree.iter().all(|&d| d == 2)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| (c[i].min(c[(i + 1) % c.len()]), c[i].max(c[(i + 1) % c.len()]))))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Splits a 2-regular spanning edge set into cycles.
fn decompose(n: usize, edges: &[(usize, usize)]) -> Option<TwoFactor> {
    let mut nbrs = vec![Vec::with_capacity(2); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    if nbrs.iter().any(|l| l.len() != 2) {
        return None;
    }
    let mut visited = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut cycle = vec![start];
        visited[start] = true;
        let mut prev = start;
        let mut cur = nbrs[start][0].min(nbrs[start][1]);
        while cur != start {
            visited[cur] = true;
            cycle.push(cur);
            let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    Some(TwoFactor { cycles })
}

/// A 2-factor of `g`, or `None` if it has none. The graph on no vertices
/// has the empty 2-factor.
pub fn find_two_factor(g: &Graph) -> Option<TwoFactor> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(TwoFactor { cycles: Vec::new() });
    }
    if n < 3 || g.min_degree().is_some_and(|d| d < 2) {
        return None;
    }
    let (_, adj, links) = gadget_parts(g).ok()?;
    let mate = perfect_matching_adj(&adj)?;
    let chosen: Vec<(usize, usize)> = links.iter().filter(|((x, y), _)| mate[*x] == *y).map(|&(_, e)| e).collect();
    let factor = decompose(n, &chosen);
    debug_assert!(factor.as_ref().is_some_and(|f| f.is_valid_in(g)));
    factor
}
