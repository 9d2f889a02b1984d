//! The family `G(l, m) = K_m + H(l, m)` of 2P5-free graphs without a
//! 2-factor whose toughness approaches 2 from below.
//!
//! `H(l, m)` consists of `2m + 1` cliques `A_i ≅ K_{2l+1}` and one clique
//! `B ≅ K_{(2l+1)(2m+1)}`, with the i-th vertex of `A = ∪ A_i` joined to
//! the i-th vertex of `B` through its own subdividing vertex in `T`.
//!
//! Vertex ids: `S` first, then the A-blocks in order, then `T`, then `B`;
//! the i-th vertices of `A`, `T` and `B` form one subdivided matching edge.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::toughness::cut_ratio;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, serde::Serialize)]
pub struct FamilyWitness {
    pub l: usize,
    pub m: usize,
    #[serde(skip)]
    pub graph: Graph,
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(rename = "A")]
    pub a_blocks: Vec<VertexSet>,
    #[serde(rename = "T")]
    pub t: VertexSet,
    #[serde(rename = "B")]
    pub b: VertexSet,
    /// The Tutte pair (S, T) with η = -2.
    pub tutte_s: VertexSet,
    pub tutte_t: VertexSet,
    /// First vertex of each A-block.
    pub representatives: Vec<usize>,
    /// `(a, x, b)`: the first representative, its subdivider and that subdivider's B-end.
    pub distinguished: (usize, usize, usize),
    /// `S ∪ (A - representatives) ∪ (B - {b}) ∪ {x}`.
    #[serde(rename = "W")]
    pub w: VertexSet,
    pub formula_toughness: Rational,
}

/// `(2l+1)(2m+1)`, the common size of A, T and B.
pub fn block_total(l: usize, m: usize) -> usize {
    (2 * l + 1) * (2 * m + 1)
}

/// `2 - (m+3) / ((2l+1)(2m+1) + 1)`.
pub fn formula_toughness(l: usize, m: usize) -> Rational {
    let k = block_total(l, m) as i64;
    Rational::new(2 * (k + 1) - (m as i64 + 3), k + 1)
}

pub fn build_family(l: usize, m: usize) -> Result<FamilyWitness> {
    if l < 1 || m < 2 {
        return Err(Error::InvalidParameters(format!("G(l, m) needs l >= 1 and m >= 2, got l = {l}, m = {m}")));
    }
    let block = 2 * l + 1;
    let k = block_total(l, m);
    let n = m + 3 * k;
    let a0 = m;
    let t0 = m + k;
    let b0 = m + 2 * k;

    let mut g = Graph::empty(n);
    for u in 0..m {
        for v in u + 1..n {
            g.add_edge_unchecked(u, v);
        }
    }
    for i in 0..2 * m + 1 {
        let start = a0 + i * block;
        for u in start..start + block {
            for v in u + 1..start + block {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    for u in b0..n {
        for v in u + 1..n {
            g.add_edge_unchecked(u, v);
        }
    }
    for j in 0..k {
        g.add_edge_unchecked(a0 + j, t0 + j);
        g.add_edge_unchecked(t0 + j, b0 + j);
    }

    let s = VertexSet::from_vertices(n, 0..m);
    let a_blocks: Vec<VertexSet> =
        (0..2 * m + 1).map(|i| VertexSet::from_vertices(n, a0 + i * block..a0 + (i + 1) * block)).collect();
    let t = VertexSet::from_vertices(n, t0..t0 + k);
    let b = VertexSet::from_vertices(n, b0..n);
    let representatives: Vec<usize> = (0..2 * m + 1).map(|i| a0 + i * block).collect();
    let a = representatives[0];
    let x = t0 + (a - a0);
    let bx = b0 + (a - a0);

    let mut w = s.clone();
    w.union_with(&VertexSet::from_vertices(n, a0..t0));
    for &r in &representatives {
        w.remove(r);
    }
    w.union_with(&b);
    w.remove(bx);
    w.insert(x);

    Ok(FamilyWitness {
        l,
        m,
        graph: g,
        tutte_s: s.clone(),
        tutte_t: t.clone(),
        s,
        a_blocks,
        t,
        b,
        representatives,
        distinguished: (a, x, bx),
        w,
        formula_toughness: formula_toughness(l, m),
    })
}

/// `|W| / ω(G - W)`, checked against the closed form and against
/// `ω(G - W) = (2l+1)(2m+1) + 1`.
pub fn family_witness_ratio(fw: &FamilyWitness) -> Result<Rational> {
    let parts = fw.graph.component_count(&fw.w);
    let expected_parts = block_total(fw.l, fw.m) + 1;
    if parts != expected_parts {
        return Err(Error::Internal(format!("G - W has {parts} components, expected {expected_parts}")));
    }
    let ratio = cut_ratio(&fw.graph, &fw.w).ok_or_else(|| Error::Internal("W does not disconnect G".into()))?;
    if ratio != fw.formula_toughness {
        return Err(Error::Internal(format!(
            "witness ratio {ratio} differs from closed form {}",
            fw.formula_toughness
        )));
    }
    Ok(ratio)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LimitReport {
    pub m: usize,
    /// `(l, witness ratio)` in increasing `l`.
    pub points: Vec<(usize, Rational)>,
    pub strictly_increasing: bool,
    pub all_below_two: bool,
}

impl LimitReport {
    pub fn holds(&self) -> bool {
        self.strictly_increasing && self.all_below_two
    }
}

/// Witness ratios of `G(l, m)` for fixed `m` over `ls`.
pub fn family_limit_check(m: usize, ls: RangeInclusive<usize>) -> Result<LimitReport> {
    let points = ls
        .map(|l| {
            let fw = build_family(l, m)?;
            Ok((l, family_witness_ratio(&fw)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let strictly_increasing = points.windows(2).all(|w| w[0].1 < w[1].1);
    let all_below_two = points.iter().all(|(_, r)| *r < Rational::integer(2));
    Ok(LimitReport { m, points, strictly_increasing, all_below_two })
}
