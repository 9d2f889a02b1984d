//! Slow reference implementations shared by the integration tests. They
//! work from the adjacency predicate only and share no code with the
//! library's solvers.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use twofactor::harness::enumerate_labeled_graphs;
use twofactor::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n).map(|u| (0..n).map(|v| u != v && g.adjacent(u, v)).collect()).collect()
}

/// Components of the subgraph induced by `keep`, by plain DFS.
pub fn components(adj: &[Vec<bool>], keep: &[bool]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for r in 0..n {
        if !keep[r] || seen[r] {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![r];
        seen[r] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for w in 0..n {
                if keep[w] && !seen[w] && adj[v][w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Toughness over every vertex subset as a reduced fraction `(p, q)`;
/// `None` for complete graphs.
pub fn naive_toughness(g: &Graph) -> Option<(i64, i64)> {
    let adj = adjacency(g);
    let n = adj.len();
    let mut best: Option<(i64, i64)> = None;
    for mask in 0u32..1 << n {
        let keep: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 0).collect();
        let w = components(&adj, &keep).len() as i64;
        if w < 2 {
            continue;
        }
        let k = mask.count_ones() as i64;
        if best.is_none_or(|(p, q)| k * q < p * w) {
            best = Some((k, w));
        }
    }
    best.map(|(p, q)| {
        let d = gcd(p, q);
        (p / d, q / d)
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Whether some spanning 2-regular subgraph exists, by choosing edges at
/// the first vertex still short of degree two.
pub fn brute_two_factor(g: &Graph) -> bool {
    fn go(adj: &[Vec<bool>], used: &mut Vec<Vec<bool>>, deg: &mut Vec<usize>) -> bool {
        let Some(v) = (0..adj.len()).find(|&v| deg[v] < 2) else {
            return true;
        };
        for w in 0..adj.len() {
            if w != v && adj[v][w] && !used[v][w] && deg[w] < 2 {
                used[v][w] = true;
                used[w][v] = true;
                deg[v] += 1;
                deg[w] += 1;
                if go(adj, used, deg) {
                    return true;
                }
                used[v][w] = false;
                used[w][v] = false;
                deg[v] -= 1;
                deg[w] -= 1;
            }
        }
        false
    }
    let adj = adjacency(g);
    let n = adj.len();
    go(&adj, &mut vec![vec![false; n]; n], &mut vec![0; n])
}

/// Maximum matching size by exhaustive branching.
pub fn brute_matching_size(g: &Graph) -> usize {
    fn go(adj: &[Vec<bool>], free: &mut Vec<bool>) -> usize {
        let Some(v) = (0..adj.len()).find(|&v| free[v]) else {
            return 0;
        };
        free[v] = false;
        let mut best = go(adj, free);
        for w in 0..adj.len() {
            if free[w] && adj[v][w] {
                free[w] = false;
                best = best.max(1 + go(adj, free));
                free[w] = true;
            }
        }
        free[v] = true;
        best
    }
    let adj = adjacency(g);
    go(&adj, &mut vec![true; adj.len()])
}

/// η(S, T) computed straight from the definition. `side[v]` is 0 for
/// S, 1 for T and 2 otherwise.
pub fn naive_eta(g: &Graph, side: &[u8]) -> (i64, usize) {
    let adj = adjacency(g);
    let n = adj.len();
    let s = side.iter().filter(|&&x| x == 0).count() as i64;
    let t = side.iter().filter(|&&x| x == 1).count() as i64;
    let mut sum = 0i64;
    for x in (0..n).filter(|&x| side[x] == 1) {
        sum += (0..n).filter(|&y| adj[x][y] && side[y] != 0).count() as i64;
    }
    let keep: Vec<bool> = side.iter().map(|&x| x == 2).collect();
    let h = components(&adj, &keep)
        .iter()
        .filter(|c| {
            let e: usize = c.iter().map(|&v| (0..n).filter(|&x| side[x] == 1 && adj[v][x]).count()).sum();
            e % 2 == 1
        })
        .count();
    (2 * s - 2 * t + sum - h as i64, h)
}

/// Every assignment of vertices to S, T or neither.
pub fn all_sides(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..3usize.pow(n as u32)).map(move |mut code| {
        (0..n)
            .map(|_| {
                let d = (code % 3) as u8;
                code /= 3;
                d
            })
            .collect()
    })
}

/// Whether `vs` induces `P_a ∪ P_b`.
fn induces_two_paths(adj: &[Vec<bool>], vs: &[usize], a: usize, b: usize) -> bool {
    let n = adj.len();
    let mut keep = vec![false; n];
    for &v in vs {
        keep[v] = true;
    }
    for &v in vs {
        if vs.iter().filter(|&&w| adj[v][w]).count() > 2 {
            return false;
        }
    }
    let comps = components(adj, &keep);
    if comps.len() != 2 {
        return false;
    }
    let acyclic = comps.iter().all(|c| {
        let e: usize = c.iter().map(|&v| c.iter().filter(|&&w| adj[v][w]).count()).sum::<usize>() / 2;
        e + 1 == c.len()
    });
    let mut sizes = [comps[0].len(), comps[1].len()];
    sizes.sort_unstable();
    acyclic && sizes == [a.min(b), a.max(b)]
}

/// Induced `P_a ∪ P_b` by scanning all `(a+b)`-subsets.
pub fn brute_has_path_union(g: &Graph, a: usize, b: usize) -> bool {
    let adj = adjacency(g);
    let n = adj.len();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == a + b)
        .any(|m| induces_two_paths(&adj, &(0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>(), a, b))
}

/// Induced `P_k` by scanning all `k`-subsets.
pub fn brute_has_induced_path(g: &Graph, k: usize) -> bool {
    let adj = adjacency(g);
    let n = adj.len();
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
        let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        let mut keep = vec![false; n];
        for &v in &vs {
            keep[v] = true;
        }
        let e: usize = vs.iter().map(|&v| vs.iter().filter(|&&w| adj[v][w]).count()).sum::<usize>() / 2;
        let maxdeg = vs.iter().map(|&v| vs.iter().filter(|&&w| adj[v][w]).count()).max().unwrap_or(0);
        e + 1 == k && maxdeg <= 2 && components(&adj, &keep).len() == 1
    })
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// All labeled graphs on `0..=n_max` vertices.
pub fn labeled_up_to(n_max: usize) -> impl Iterator<Item = Graph> {
    (0..=n_max).flat_map(|n| enumerate_labeled_graphs(n).unwrap())
}
