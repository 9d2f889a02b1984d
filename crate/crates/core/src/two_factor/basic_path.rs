//! Basic U-paths: shortest paths between two vertices of `U ⊆ N_T(C)`
//! whose interior runs through the component `C`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path};
use crate::vertex_set::VertexSet;

/// Re-checks the defining clauses: both ends in `U`, interior inside `C`,
/// induced in `g`, and at most two vertices of N_C(U) on the path.
pub fn is_basic_u_path(g: &Graph, c: &VertexSet, u: &VertexSet, path: &Path) -> bool {
    let vs = path.vertices();
    if vs.len() < 2 || !u.contains(vs[0]) || !u.contains(vs[vs.len() - 1]) {
        return false;
    }
    if !vs[1..vs.len() - 1].iter().all(|&v| c.contains(v)) || !path.is_induced_in(g) {
        return false;
    }
    let attach = g.neighborhood(u).intersection(c);
    vs.iter().filter(|&&v| attach.contains(v)).count() <= 2
}

/// A shortest path from `start` through `c` to another vertex of `u`.
///
/// Requires `(s, t)` disjoint, `c` an odd component of `G - (S ∪ T)`,
/// `u ⊆ N_T(C)` with `|U| >= 2`, and `start ∈ U`.
pub fn basic_u_path(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    c: &VertexSet,
    u: &VertexSet,
    start: usize,
) -> Result<Path> {
    let n = g.vertex_count();
    for set in [s, t, c, u] {
        g.check_vertices(set)?;
    }
    if let Some(v) = s.intersection(t).first() {
        return Err(Error::Overlap(v));
    }
    let removed = s.union(t);
    let is_component =
        c.first().is_some_and(|r| c.is_disjoint(&removed) && g.flood(r, &g.vertices().difference(&removed)) == *c);
    if !is_component {
        return Err(Error::Precondition("C is not a component of G - (S ∪ T)".into()));
    }
    if g.edges_between(c, t).is_multiple_of(2) {
        return Err(Error::Precondition("C is not an odd component".into()));
    }
    let attached = g.neighborhood(c).intersection(t);
    if u.len() < 2 || !u.is_subset(&attached) {
        return Err(Error::Precondition("U must be a subset of N_T(C) with at least two vertices".into()));
    }
    if !u.contains(start) {
        return Err(Error::Precondition(format!("start vertex {start} is not in U")));
    }

    // Breadth-first search from `start` whose first step enters C and
    // which stops at the first other U-vertex reached from C.
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for v in g.neighbors(start).intersection(c).iter() {
        parent[v] = start;
        queue.push_back(v);
    }
    let mut end = None;
    'bfs: while let Some(v) = queue.pop_front() {
        if let Some(w) = g.neighbors(v).intersection(u).iter().find(|&w| w != start) {
            parent[w] = v;
            end = Some(w);
            break 'bfs;
        }
        for w in g.neighbors(v).intersection(c).iter() {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let end = end.ok_or_else(|| Error::SearchFailure("no second U-vertex is reachable through C".into()))?;
    let mut vs = vec![end];
    let mut cur = end;
    while cur != start {
        cur = parent[cur];
        vs.push(cur);
    }
    vs.reverse();
    let path = Path(vs);
    if !is_basic_u_path(g, c, u, &path) {
        return Err(Error::Internal(format!(
            "shortest U-path {:?} fails re-validation (T is not independent?)",
            path.vertices()
        )));
    }
    Ok(path)
}
