//! Exact toughness by size-ordered cut enumeration with a ratio bound.
//!
//! For a fixed cut size `k` every cut leaves at most `n - k` components, so
//! `k / (n - k)` bounds all ratios of cuts with at least `k` vertices. The
//! search walks `k = 0, 1, ..` and stops once that bound reaches the
//! incumbent. Within one size, cuts are visited in lexicographic order of
//! their sorted vertex lists, which gives the witness tie-break for free.

use std::ops::ControlFlow;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{count_components_mask, full_mask, Graph};
use crate::rational::Rational;
use crate::vertex_set::VertexSet;

/// Hard ceiling of the mask-based solvers.
pub const MASK_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug)]
pub struct ToughnessConfig {
    /// Largest graph the exhaustive solvers accept.
    pub max_vertices: usize,
}

impl Default for ToughnessConfig {
    fn default() -> Self {
        ToughnessConfig { max_vertices: 20 }
    }
}

impl ToughnessConfig {
    fn admit(&self, g: &Graph) -> Result<()> {
        let limit = self.max_vertices.min(MASK_LIMIT);
        if g.vertex_count() > limit {
            return Err(Error::BudgetExceeded { what: "exact toughness", n: g.vertex_count(), limit });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ToughnessResult {
    pub value: Rational,
    /// A cut attaining `value`; `None` exactly when the graph is complete.
    pub witness: Option<VertexSet>,
}

/// Outcome of a t-tough test.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ToughCheck {
    pub tough: bool,
    /// A cut `U` with `t * ω(G - U) > |U|` when `tough` is false.
    pub counter_witness: Option<VertexSet>,
}

/// `|U| / ω(G - U)` when the removal leaves at least two components.
pub fn cut_ratio(g: &Graph, cut: &VertexSet) -> Option<Rational> {
    let parts = g.component_count(cut);
    (parts >= 2).then(|| Rational::new(cut.len() as i64, parts as i64))
}

/// Visits every `k`-subset of `0..n` as a bit mask, in lexicographic order
/// of the sorted member lists.
pub(crate) fn for_each_combination<F>(n: usize, k: usize, mut f: F) -> ControlFlow<()>
where
    F: FnMut(u64) -> ControlFlow<()>,
{
    if k > n {
        return ControlFlow::Continue(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        f(mask)?;
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return ControlFlow::Continue(());
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn toughness_exact(g: &Graph) -> Result<ToughnessResult> {
    toughness_exact_with(g, &ToughnessConfig::default())
}

pub fn toughness_exact_with(g: &Graph, config: &ToughnessConfig) -> Result<ToughnessResult> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameters("toughness needs at least one vertex".into()));
    }
    config.admit(g)?;
    if g.is_complete() {
        return Ok(ToughnessResult { value: Rational::Infinite, witness: None });
    }
    let rows = g.masks();
    let all = full_mask(n);
    // Best ratio as (|U|, ω) with the witness mask.
    let mut best: Option<(usize, usize, u64)> = None;
    for k in 0..n - 1 {
        if let Some((bk, bw, _)) = best {
            // k/(n-k) >= bk/bw: no cut of size >= k can do strictly better.
            if k * bw >= bk * (n - k) {
                break;
            }
        }
        let _ = for_each_combination(n, k, |cut| {
            let parts = count_components_mask(&rows, all & !cut);
            if parts >= 2 {
                let better = match best {
                    None => true,
                    Some((bk, bw, _)) => k * bw < bk * parts,
                };
                if better {
                    best = Some((k, parts, cut));
                }
            }
            ControlFlow::Continue(())
        });
    }
    let (k, parts, cut) = best.ok_or_else(|| Error::Internal("non-complete graph without a cut".into()))?;
    Ok(ToughnessResult {
        value: Rational::Finite(Ratio::new(k as i64, parts as i64)),
        witness: Some(VertexSet::from_mask(n, cut)),
    })
}

pub fn is_t_tough(g: &Graph, t: Rational) -> Result<ToughCheck> {
    is_t_tough_with(g, t, &ToughnessConfig::default())
}

/// True iff `t * ω(G - U) <= |U|` for every cut `U` leaving two or more
/// components. The first violating cut in (size, lexicographic) order is
/// returned otherwise.
pub fn is_t_tough_with(g: &Graph, t: Rational, config: &ToughnessConfig) -> Result<ToughCheck> {
    if t < Rational::ZERO {
        return Err(Error::InvalidParameters(format!("toughness threshold {t} is negative")));
    }
    let n = g.vertex_count();
    config.admit(g)?;
    let tough = ToughCheck { tough: true, counter_witness: None };
    if g.is_complete() {
        return Ok(tough);
    }
    if t.is_infinite() {
        // Any non-complete graph has a cut; report the smallest one.
        let result = toughness_exact_with(g, config)?;
        return Ok(ToughCheck { tough: false, counter_witness: result.witness });
    }
    let rows = g.masks();
    let all = full_mask(n);
    let mut found = None;
    for k in 0..n - 1 {
        // Every cut of size >= k leaves at most n - k components.
        if t.times_le(n - k, k) {
            break;
        }
        let flow = for_each_combination(n, k, |cut| {
            let parts = count_components_mask(&rows, all & !cut);
            if parts >= 2 && !t.times_le(parts, k) {
                found = Some(cut);
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if flow.is_break() {
            break;
        }
    }
    Ok(match found {
        Some(cut) => ToughCheck { tough: false, counter_witness: Some(VertexSet::from_mask(n, cut)) },
        None => tough,
    })
}
