//! Tutte's 2-factor criterion: η(S,T), odd components, exhaustive Tutte
//! pairs and special Tutte pairs.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{flood_mask, full_mask, Graph};
use crate::rational::Rational;
use crate::toughness::is_t_tough;
use crate::vertex_set::VertexSet;

/// Default vertex limit for the 3^n pair enumeration.
pub const EXHAUSTIVE_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// Strong odd components send at least three edges to T, weak ones exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strength {
    Strong,
    Weak,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ComponentEntry {
    pub vertices: VertexSet,
    pub edges_to_t: usize,
    pub parity: Parity,
    pub class: Strength,
}

/// Components of `G - (S ∪ T)` with their edge counts towards T.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OddComponentReport {
    pub components: Vec<ComponentEntry>,
}

impl OddComponentReport {
    /// h(S,T).
    pub fn odd_count(&self) -> usize {
        self.odd().count()
    }

    pub fn odd(&self) -> impl Iterator<Item = &ComponentEntry> {
        self.components.iter().filter(|c| c.parity == Parity::Odd)
    }
}

/// A pair of disjoint vertex sets with η(S,T), h(S,T) and d_{G-S} on T.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TuttePair {
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(rename = "T")]
    pub t: VertexSet,
    pub eta: i64,
    pub h: usize,
    /// `(x, d_{G-S}(x))` for each `x` in T, increasing in `x`.
    pub degrees: Vec<(usize, usize)>,
}

impl TuttePair {
    pub fn is_tutte_pair(&self) -> bool {
        self.eta <= -2
    }

    pub fn degree_outside_s(&self, x: usize) -> Option<usize> {
        self.degrees.iter().find(|(v, _)| *v == x).map(|&(_, d)| d)
    }
}

fn check_disjoint(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<()> {
    g.check_vertices(s)?;
    g.check_vertices(t)?;
    match s.intersection(t).first() {
        Some(v) => Err(Error::Overlap(v)),
        None => Ok(()),
    }
}

pub fn odd_components(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<OddComponentReport> {
    check_disjoint(g, s, t)?;
    let removed = s.union(t);
    let components = g
        .components(&removed)
        .into_iter()
        .map(|c| {
            let edges_to_t = g.edges_between(&c, t);
            let parity = if edges_to_t % 2 == 1 { Parity::Odd } else { Parity::Even };
            let class = match (parity, edges_to_t) {
                (Parity::Even, _) => Strength::NotApplicable,
                (Parity::Odd, 1) => Strength::Weak,
                (Parity::Odd, _) => Strength::Strong,
            };
            ComponentEntry { vertices: c, edges_to_t, parity, class }
        })
        .collect();
    Ok(OddComponentReport { components })
}

/// η(S,T) = 2|S| - 2|T| + Σ_{x∈T} d_{G-S}(x) - h(S,T).
pub fn eta_of(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<TuttePair> {
    let report = odd_components(g, s, t)?;
    let degrees: Vec<(usize, usize)> = t.iter().map(|x| (x, g.neighbors(x).difference(s).len())).collect();
    let h = report.odd_count();
    let sum: usize = degrees.iter().map(|&(_, d)| d).sum();
    let eta = 2 * s.len() as i64 - 2 * t.len() as i64 + sum as i64 - h as i64;
    Ok(TuttePair { s: s.clone(), t: t.clone(), eta, h, degrees })
}

/// Mask-level η and h for graphs on at most 64 vertices.
pub(crate) fn eta_mask(rows: &[u64], s: u64, t: u64) -> (i64, usize) {
    let n = rows.len();
    let mut sum = 0i64;
    let mut rest = t;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        sum += (rows[x] & !s).count_ones() as i64;
    }
    let h = odd_count_mask(rows, full_mask(n) & !(s | t), t);
    let eta = 2 * s.count_ones() as i64 - 2 * t.count_ones() as i64 + sum - h as i64;
    (eta, h)
}

fn odd_count_mask(rows: &[u64], mut alive: u64, t: u64) -> usize {
    let mut h = 0;
    while alive != 0 {
        let comp = flood_mask(rows, alive, alive & alive.wrapping_neg());
        alive &= !comp;
        let mut edges = 0u32;
        let mut c = comp;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            edges += (rows[v] & t).count_ones();
        }
        h += (edges & 1) as usize;
    }
    h
}

/// Visits all disjoint (S, T) pairs as masks. `S` runs over all masks in
/// increasing order, T over the submasks of the complement.
fn admit_exhaustive(g: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(64);
    if g.vertex_count() > limit {
        return Err(Error::BudgetExceeded { what: "exhaustive Tutte pair search", n: g.vertex_count(), limit });
    }
    Ok(())
}

/// Lower bound on η(S,T) using h <= |V - S - T|.
#[inline]
fn eta_floor(rows: &[u64], n: usize, s: u64, t: u64) -> i64 {
    let mut sum = 0i64;
    let mut rest = t;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        sum += (rows[x] & !s).count_ones() as i64;
    }
    let ks = s.count_ones() as i64;
    let kt = t.count_ones() as i64;
    2 * ks - 2 * kt + sum - (n as i64 - ks - kt)
}

fn pair_from_masks(g: &Graph, s: u64, t: u64) -> TuttePair {
    let n = g.vertex_count();
    eta_of(g, &VertexSet::from_mask(n, s), &VertexSet::from_mask(n, t)).expect("masks are disjoint and in range")
}

/// Searches all 3^n assignments for a pair with η(S,T) <= -2. A result
/// means `g` has no 2-factor; `None` means it has one.
pub fn find_tutte_pair_exhaustive(g: &Graph) -> Result<Option<TuttePair>> {
    find_tutte_pair_exhaustive_with(g, EXHAUSTIVE_LIMIT)
}

pub fn find_tutte_pair_exhaustive_with(g: &Graph, limit: usize) -> Result<Option<TuttePair>> {
    admit_exhaustive(g, limit)?;
    let n = g.vertex_count();
    let rows = g.masks();
    let all = full_mask(n);
    for s in 0..=all {
        let comp = all & !s;
        let mut t = comp;
        loop {
            if eta_floor(&rows, n, s, t) <= -2 && eta_mask(&rows, s, t).0 <= -2 {
                return Ok(Some(pair_from_masks(g, s, t)));
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & comp;
        }
    }
    Ok(None)
}

fn mask_lex_cmp(a: u64, b: u64) -> Ordering {
    let (mut a, mut b) = (a, b);
    loop {
        match (a, b) {
            (0, 0) => return Ordering::Equal,
            (0, _) => return Ordering::Less,
            (_, 0) => return Ordering::Greater,
            _ => {
                let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
                if x != y {
                    return x.cmp(&y);
                }
                a &= a - 1;
                b &= b - 1;
            }
        }
    }
}

/// The special Tutte pair: |S| maximum, then |T| minimum, then h minimum,
/// then the lexicographically smallest S and T. `None` iff `g` has a 2-factor.
pub fn special_tutte_pair(g: &Graph) -> Result<Option<TuttePair>> {
    special_tutte_pair_with(g, EXHAUSTIVE_LIMIT)
}

pub fn special_tutte_pair_with(g: &Graph, limit: usize) -> Result<Option<TuttePair>> {
    admit_exhaustive(g, limit)?;
    let n = g.vertex_count();
    let rows = g.masks();
    let all = full_mask(n);
    for size in (0..=n).rev() {
        // (|T|, h, S, T)
        let mut best: Option<(u32, usize, u64, u64)> = None;
        for s in 0..=all {
            if s.count_ones() as usize != size {
                continue;
            }
            let comp = all & !s;
            let mut t = comp;
            loop {
                let kt = t.count_ones();
                let viable = best.is_none_or(|(bt, ..)| kt <= bt);
                if viable && eta_floor(&rows, n, s, t) <= -2 {
                    let (eta, h) = eta_mask(&rows, s, t);
                    if eta <= -2 {
                        let better = match best {
                            None => true,
                            Some((bt, bh, bs, btm)) => (kt, h)
                                .cmp(&(bt, bh))
                                .then_with(|| mask_lex_cmp(s, bs))
                                .then_with(|| mask_lex_cmp(t, btm))
                                .is_lt(),
                        };
                        if better {
                            best = Some((kt, h, s, t));
                        }
                    }
                }
                if t == 0 {
                    break;
                }
                t = (t - 1) & comp;
            }
        }
        if let Some((_, _, s, t)) = best {
            return Ok(Some(pair_from_masks(g, s, t)));
        }
    }
    Ok(None)
}

/// Structural properties of a special Tutte pair.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Lemma5Report {
    /// T is independent.
    pub t_independent: bool,
    /// Each x in T meets exactly d_{G-S}(x) odd components.
    pub odd_adjacency_matches_degree: bool,
    /// Every vertex of an odd component has at most one neighbor in T.
    pub single_edge_to_t: bool,
    /// Odd components next to some x in T with d_{G-S}(x) >= 2 have at least three vertices.
    pub large_components: bool,
    /// `S` nonempty and `|T| >= 2`; only evaluated when G is 3/2-tough
    /// with at least three vertices.
    pub claim_s_and_t: Option<bool>,
}

impl Lemma5Report {
    pub fn all_hold(&self) -> bool {
        self.t_independent
            && self.odd_adjacency_matches_degree
            && self.single_edge_to_t
            && self.large_components
            && self.claim_s_and_t != Some(false)
    }
}

/// Checks the special-pair properties. The pair is first re-derived: it
/// must be a Tutte pair whose (|S|, |T|, h) equals that of the special pair.
pub fn check_lemma5(g: &Graph, pair: &TuttePair) -> Result<Lemma5Report> {
    let fresh = eta_of(g, &pair.s, &pair.t)?;
    if fresh != *pair {
        return Err(Error::Precondition("pair data does not match the graph".into()));
    }
    let special = special_tutte_pair(g)?
        .ok_or_else(|| Error::Precondition("graph has a 2-factor, so no Tutte pair exists".into()))?;
    let key = |p: &TuttePair| (p.s.len(), p.t.len(), p.h);
    if !pair.is_tutte_pair() || key(pair) != key(&special) {
        return Err(Error::Precondition(format!(
            "pair with (|S|,|T|,h) = {:?} is not special; expected {:?}",
            key(pair),
            key(&special)
        )));
    }

    let report = odd_components(g, &pair.s, &pair.t)?;
    let odd: Vec<&ComponentEntry> = report.odd().collect();
    let t = &pair.t;

    let t_independent = g.is_independent(t);
    let odd_adjacency_matches_degree =
        pair.degrees.iter().all(|&(x, d)| odd.iter().filter(|c| !g.neighbors(x).is_disjoint(&c.vertices)).count() == d);
    let single_edge_to_t = odd.iter().all(|c| c.vertices.iter().all(|y| g.neighbors(y).intersection(t).len() <= 1));
    let large_components =
        pair.degrees.iter().filter(|&&(_, d)| d >= 2).all(|&(x, _)| {
            odd.iter().filter(|c| !g.neighbors(x).is_disjoint(&c.vertices)).all(|c| c.vertices.len() >= 3)
        });
    let claim_s_and_t = if g.vertex_count() >= 3 && is_t_tough(g, Rational::new(3, 2))?.tough {
        Some(!pair.s.is_empty() && pair.t.len() >= 2)
    } else {
        None
    };
    Ok(Lemma5Report { t_independent, odd_adjacency_matches_degree, single_edge_to_t, large_components, claim_s_and_t })
}
