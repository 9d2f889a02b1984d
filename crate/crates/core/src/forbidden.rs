//! Induced paths, induced unions of two paths, and split graphs.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::graph::{Graph, Path};
use crate::vertex_set::VertexSet;

/// An induced copy of `P_a ∪ P_b`: two induced paths with no edge between them.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PathUnionWitness {
    pub path_a: Path,
    pub path_b: Path,
}

impl PathUnionWitness {
    /// Re-checks inducedness, disjointness and the absence of cross edges.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if !self.path_a.is_induced_in(g) || !self.path_b.is_induced_in(g) {
            return false;
        }
        let a = self.path_a.vertex_set(n);
        let b = self.path_b.vertex_set(n);
        a.is_disjoint(&b) && g.edges_between(&a, &b) == 0
    }
}

/// Depth-first enumeration of induced paths inside `allowed`.
///
/// `blocked` holds the closed neighborhoods of every path vertex except the
/// last one, so a vertex may extend the path iff it is a neighbor of the
/// last vertex outside `blocked`.
fn extend<F>(
    g: &Graph,
    allowed: &VertexSet,
    path: &mut Vec<usize>,
    blocked: &VertexSet,
    len: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if path.len() == len {
        return visit(path);
    }
    let last = *path.last().expect("path is seeded");
    let mut next = g.neighbors(last).intersection(allowed);
    next.difference_with(blocked);
    if next.is_empty() {
        return ControlFlow::Continue(());
    }
    let mut child = blocked.clone();
    child.union_with(g.neighbors(last));
    child.insert(last);
    for v in next.iter() {
        path.push(v);
        let flow = extend(g, allowed, path, &child, len, visit);
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Visits every induced path on `len` vertices inside `allowed` exactly
/// once, oriented so the first vertex is smaller than the last.
fn for_each_induced_path<F>(g: &Graph, allowed: &VertexSet, len: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    assert!(len >= 1, "paths have at least one vertex");
    let mut path = Vec::with_capacity(len);
    for start in allowed.iter() {
        path.clear();
        path.push(start);
        let blocked = VertexSet::new(g.vertex_count());
        extend(g, allowed, &mut path, &blocked, len, &mut |p: &[usize]| {
            if p.len() == 1 || p[0] < p[p.len() - 1] {
                visit(p)
            } else {
                ControlFlow::Continue(())
            }
        })?;
    }
    ControlFlow::Continue(())
}

/// Any induced path on `len` vertices inside `allowed`, searching one
/// component at a time and skipping components that are too small.
fn induced_path_within(g: &Graph, allowed: &VertexSet, len: usize) -> Option<Path> {
    let mut left = allowed.clone();
    while let Some(root) = left.first() {
        let comp = g.flood(root, &left);
        left.difference_with(&comp);
        if comp.len() < len {
            continue;
        }
        let mut found = None;
        let _ = for_each_induced_path(g, &comp, len, |p| {
            found = Some(Path(p.to_vec()));
            ControlFlow::Break(())
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Some induced path on exactly `k >= 1` vertices.
pub fn find_induced_path(g: &Graph, k: usize) -> Option<Path> {
    assert!(k >= 1, "paths have at least one vertex");
    induced_path_within(g, &g.vertices(), k)
}

/// Some induced `P_a ∪ P_b` in `g` (`a, b >= 1`), with `path_a` on `a`
/// vertices and `path_b` on `b` vertices.
///
/// Copies of the shorter path are enumerated; for each, the longer path is
/// sought in `G - N[V(P)]`, which is exactly the set of vertices with no
/// edge to the copy. Residuals already known to be free of the longer path
/// are cached for the duration of the call.
pub fn find_induced_path_union(g: &Graph, a: usize, b: usize) -> Option<PathUnionWitness> {
    assert!(a >= 1 && b >= 1, "paths have at least one vertex");
    let n = g.vertex_count();
    if n < a + b {
        return None;
    }
    let (short, long) = (a.min(b), a.max(b));
    let mut dead: HashSet<VertexSet> = HashSet::new();
    let mut found = None;
    let _ = for_each_induced_path(g, &g.vertices(), short, |p| {
        let copy = VertexSet::from_vertices(n, p.iter().copied());
        let residual = g.vertices().difference(&g.closed_neighborhood(&copy));
        if residual.len() < long || dead.contains(&residual) {
            return ControlFlow::Continue(());
        }
        match induced_path_within(g, &residual, long) {
            Some(other) => {
                found = Some((Path(p.to_vec()), other));
                ControlFlow::Break(())
            }
            None => {
                dead.insert(residual);
                ControlFlow::Continue(())
            }
        }
    });
    found.map(|(s, l)| {
        if a <= b {
            PathUnionWitness { path_a: s, path_b: l }
        } else {
            PathUnionWitness { path_a: l, path_b: s }
        }
    })
}

/// True iff `g` has no induced `P_a ∪ P_b`.
pub fn is_pa_pb_free(g: &Graph, a: usize, b: usize) -> bool {
    find_induced_path_union(g, a, b).is_none()
}

/// A partition of the vertex set into a clique and an independent set.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.clique.is_disjoint(&self.independent)
            && self.clique.union(&self.independent) == g.vertices()
            && g.is_clique(&self.clique)
            && g.is_independent(&self.independent)
    }
}

/// Largest graph for the exhaustive partition fallback.
const SPLIT_FALLBACK_LIMIT: usize = 20;

/// Split recognition from the degree sequence (Hammer–Simeone), returning
/// the partition it induces. If that partition fails re-validation a direct
/// search over all partitions is run on small graphs.
pub fn is_split(g: &Graph) -> Option<SplitPartition> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    // Largest 1-based i with d_i >= i - 1.
    let k = (1..=n).filter(|&i| deg[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = deg[..k].iter().sum();
    let tail: usize = deg[k..].iter().sum();
    if head != k * k.saturating_sub(1) + tail {
        return None;
    }
    let candidate = SplitPartition {
        clique: VertexSet::from_vertices(n, order[..k].iter().copied()),
        independent: VertexSet::from_vertices(n, order[k..].iter().copied()),
    };
    if candidate.is_valid_in(g) {
        return Some(candidate);
    }
    if n > SPLIT_FALLBACK_LIMIT {
        return None;
    }
    (0u64..1 << n).find_map(|mask| {
        let clique = VertexSet::from_mask(n, mask);
        let p = SplitPartition { independent: g.vertices().difference(&clique), clique };
        p.is_valid_in(g).then_some(p)
    })
}
