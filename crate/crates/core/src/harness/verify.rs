//! Corpus pipelines for the main implication, the special-pair lemma, and
//! the sharpness family.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{block_total, build_family, family_witness_ratio};
use crate::forbidden::find_induced_path_union;
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::harness::report::{GraphRecord, Outcome, RecordPolicy, Summary, VerificationReport};
use crate::rational::Rational;
use crate::toughness::{is_t_tough_with, ToughnessConfig};
use crate::two_factor::{
    check_lemma5, eta_of, find_tutte_pair_exhaustive, find_two_factor, odd_components, special_tutte_pair,
    EXHAUSTIVE_LIMIT,
};
use crate::vertex_set::VertexSet;

/// Graphs handed to the worker pool at a time; records keep corpus order.
const CHUNK: usize = 1 << 14;

#[derive(Clone, Copy, Debug)]
pub struct TheoremOptions {
    pub t: Rational,
    pub a: usize,
    pub b: usize,
    pub records: RecordPolicy,
    pub toughness: ToughnessConfig,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        TheoremOptions {
            t: Rational::new(3, 2),
            a: 4,
            b: 10,
            records: RecordPolicy::Violations,
            toughness: ToughnessConfig::default(),
        }
    }
}

/// Runs `check` over the stream on the current rayon pool, chunk by chunk,
/// folding records into a summary in corpus order.
fn run_pipeline<I, F>(corpus: &str, statement: String, stream: I, policy: RecordPolicy, check: F) -> VerificationReport
where
    I: IntoIterator<Item = Graph>,
    F: Fn(usize, &Graph) -> (GraphRecord, bool) + Sync,
{
    let started = Instant::now();
    let mut records = Vec::new();
    let mut summary = Summary::default();
    let mut stream = stream.into_iter().enumerate().peekable();
    while stream.peek().is_some() {
        let chunk: Vec<(usize, Graph)> = stream.by_ref().take(CHUNK).collect();
        let done: Vec<(GraphRecord, bool)> = chunk.par_iter().map(|(i, g)| check(*i, g)).collect();
        for (record, hypothesis) in done {
            summary.add(&record, hypothesis);
            if policy.keeps(&record) {
                records.push(record);
            }
        }
    }
    VerificationReport {
        corpus: corpus.to_string(),
        statement,
        records,
        summary,
        runtime_ms: started.elapsed().as_millis(),
    }
}

/// Checks "every t-tough (P_a ∪ P_b)-free graph on at least three vertices
/// has a 2-factor" on each graph of the stream.
pub fn verify_main_theorem<I>(corpus: &str, stream: I, options: &TheoremOptions) -> VerificationReport
where
    I: IntoIterator<Item = Graph>,
{
    let statement = format!(
        "every {}-tough (P{} ∪ P{})-free graph on at least three vertices has a 2-factor",
        options.t, options.a, options.b
    );
    run_pipeline(corpus, statement, stream, options.records, |i, g| check_theorem(i, g, options))
}

fn check_theorem(index: usize, g: &Graph, options: &TheoremOptions) -> (GraphRecord, bool) {
    let n = g.vertex_count();
    let mut rec = GraphRecord::new(index, to_graph6(g), n);
    if n < 3 {
        rec.outcome = Outcome::NotApplicable;
        return (rec, false);
    }
    let union = find_induced_path_union(g, options.a, options.b);
    rec.free = Some(union.is_none());
    if union.is_some() {
        rec.outcome = Outcome::NotApplicable;
        rec.path_union = union;
        return (rec, false);
    }
    match is_t_tough_with(g, options.t, &options.toughness) {
        Ok(check) => {
            rec.tough = Some(check.tough);
            rec.counter_witness = check.counter_witness;
        }
        Err(e) => {
            rec.outcome = Outcome::Skipped;
            rec.note = Some(e.to_string());
            return (rec, false);
        }
    }
    let factor = find_two_factor(g);
    rec.two_factor = Some(factor.is_some());
    let hypothesis = rec.tough == Some(true) && rec.free == Some(true);
    if hypothesis && factor.is_none() {
        rec.violation = true;
        if n <= EXHAUSTIVE_LIMIT {
            rec.tutte_pair = find_tutte_pair_exhaustive(g).ok().flatten();
        }
    }
    (rec, hypothesis)
}

/// For each graph without a 2-factor, derives the special Tutte pair and
/// checks its structural properties.
pub fn verify_lemma5<I>(corpus: &str, stream: I, policy: RecordPolicy) -> VerificationReport
where
    I: IntoIterator<Item = Graph>,
{
    let statement = "special Tutte pairs satisfy (i)-(iv), and S ≠ ∅, |T| ≥ 2 when 3/2-tough".to_string();
    run_pipeline(corpus, statement, stream, policy, check_lemma5_record)
}

fn check_lemma5_record(index: usize, g: &Graph) -> (GraphRecord, bool) {
    let mut rec = GraphRecord::new(index, to_graph6(g), g.vertex_count());
    let factor = find_two_factor(g);
    rec.two_factor = Some(factor.is_some());
    if factor.is_some() {
        rec.outcome = Outcome::NotApplicable;
        return (rec, false);
    }
    let result = special_tutte_pair(g).and_then(|pair| {
        let pair = pair.ok_or_else(|| Error::Internal("no 2-factor found, but no Tutte pair exists".into()))?;
        let report = check_lemma5(g, &pair)?;
        Ok((pair, report))
    });
    match result {
        Ok((pair, report)) => {
            rec.violation = !report.all_hold();
            rec.tutte_pair = Some(pair);
            rec.lemma5 = Some(report);
        }
        Err(e @ Error::BudgetExceeded { .. }) => {
            rec.outcome = Outcome::Skipped;
            rec.note = Some(e.to_string());
            return (rec, false);
        }
        Err(e) => {
            rec.violation = true;
            rec.note = Some(e.to_string());
        }
    }
    (rec, true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SharpnessCheck {
    pub name: &'static str,
    pub expected: String,
    pub observed: String,
    pub status: CheckStatus,
}

/// Per-check results for one `G(l, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SharpnessReport {
    pub l: usize,
    pub m: usize,
    pub n: usize,
    pub graph6: String,
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(rename = "T")]
    pub t: VertexSet,
    #[serde(rename = "W")]
    pub w: VertexSet,
    pub eta: i64,
    pub h: usize,
    pub witness_ratio: Rational,
    pub formula: Rational,
    pub two_factor: bool,
    pub two_p5_free: Option<bool>,
    pub checks: Vec<SharpnessCheck>,
    pub violation: bool,
    pub runtime_ms: u128,
}

#[derive(Clone, Copy, Debug)]
pub struct SharpnessOptions {
    /// Largest instance on which the induced path-union searches run.
    pub freeness_limit: usize,
}

impl Default for SharpnessOptions {
    fn default() -> Self {
        SharpnessOptions { freeness_limit: 70 }
    }
}

fn check(name: &'static str, expected: impl ToString, observed: impl ToString, ok: bool) -> SharpnessCheck {
    SharpnessCheck {
        name,
        expected: expected.to_string(),
        observed: observed.to_string(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
    }
}

fn skipped(name: &'static str, expected: impl ToString, why: String) -> SharpnessCheck {
    SharpnessCheck { name, expected: expected.to_string(), observed: why, status: CheckStatus::Skipped }
}

/// Builds `G(l, m)` and checks: no 2-factor, η(S,T) = -2 with h = 2m+2 and
/// odd components exactly the A-blocks and B, the W ratio equal to the closed
/// form and at least 3/2, 2P5-freeness, and an induced P4 ∪ P10.
pub fn verify_sharpness(l: usize, m: usize, options: &SharpnessOptions) -> Result<SharpnessReport> {
    let started = Instant::now();
    let fw = build_family(l, m)?;
    let g = &fw.graph;
    let n = g.vertex_count();
    let mut checks = Vec::new();

    let factor = find_two_factor(g);
    checks.push(check("no_two_factor", "none", if factor.is_some() { "found" } else { "none" }, factor.is_none()));

    let pair = eta_of(g, &fw.tutte_s, &fw.tutte_t)?;
    checks.push(check("eta", -2, pair.eta, pair.eta == -2));
    checks.push(check("h", 2 * m + 2, pair.h, pair.h == 2 * m + 2));
    let all_two = pair.degrees.iter().all(|&(_, d)| d == 2);
    checks.push(check("t_degrees_outside_s", "all 2", if all_two { "all 2" } else { "not all 2" }, all_two));
    let report = odd_components(g, &fw.tutte_s, &fw.tutte_t)?;
    let mut odd: Vec<VertexSet> = report.odd().map(|c| c.vertices.clone()).collect();
    let mut expected: Vec<VertexSet> = fw.a_blocks.clone();
    expected.push(fw.b.clone());
    odd.sort_by(|a, b| a.lex_cmp(b));
    expected.sort_by(|a, b| a.lex_cmp(b));
    let same = odd == expected && report.components.len() == expected.len();
    checks.push(check(
        "odd_components",
        format!("{} blocks of A plus B", 2 * m + 1),
        format!("{} components, {} odd", report.components.len(), odd.len()),
        same,
    ));

    let parts = g.component_count(&fw.w);
    let ratio = family_witness_ratio(&fw)?;
    checks.push(check("witness_components", block_total(l, m) + 1, parts, parts == block_total(l, m) + 1));
    checks.push(check("witness_ratio", fw.formula_toughness, ratio, ratio == fw.formula_toughness));
    let floor = Rational::new(3, 2);
    checks.push(check("ratio_at_least_3/2", format!(">= {floor}"), ratio, ratio >= floor));

    let two_p5_free = if n <= options.freeness_limit {
        let w = find_induced_path_union(g, 5, 5);
        checks.push(check("2p5_free", true, w.is_none(), w.is_none()));
        let w = find_induced_path_union(g, 4, 10);
        let valid = w.as_ref().is_some_and(|w| w.is_valid_in(g));
        checks.push(check("contains_p4_p10", true, valid, valid));
        Some(checks[checks.len() - 2].status == CheckStatus::Pass)
    } else {
        let why = format!("n = {n} exceeds freeness limit {}", options.freeness_limit);
        checks.push(skipped("2p5_free", true, why.clone()));
        checks.push(skipped("contains_p4_p10", true, why));
        None
    };

    let violation = checks.iter().any(|c| c.status == CheckStatus::Fail);
    Ok(SharpnessReport {
        l,
        m,
        n,
        graph6: to_graph6(g),
        s: fw.tutte_s.clone(),
        t: fw.tutte_t.clone(),
        w: fw.w.clone(),
        eta: pair.eta,
        h: pair.h,
        witness_ratio: ratio,
        formula: fw.formula_toughness,
        two_factor: factor.is_some(),
        two_p5_free,
        checks,
        violation,
        runtime_ms: started.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::enumerate_labeled_graphs;

    #[test]
    fn family_graph_is_outside_the_theorem() {
        let g = build_family(1, 2).unwrap().graph;
        let options = TheoremOptions { records: RecordPolicy::All, ..TheoremOptions::default() };
        let r = verify_main_theorem("G(1,2)", vec![g.clone()], &options);
        let rec = &r.records[0];
        assert_eq!(rec.outcome, Outcome::NotApplicable);
        assert_eq!(rec.free, Some(false));
        assert!(rec.path_union.as_ref().unwrap().is_valid_in(&g));
        assert_eq!(r.summary.violations, 0);
        assert_eq!(r.summary.not_applicable, 1);
    }

    #[test]
    fn empty_stream() {
        let r = verify_main_theorem("empty", Vec::new(), &TheoremOptions::default());
        assert!(r.records.is_empty());
        assert_eq!(r.summary, Summary::default());
        assert!(r.passed());
    }

    #[test]
    fn small_graphs_are_not_applicable() {
        let options = TheoremOptions { records: RecordPolicy::All, ..TheoremOptions::default() };
        let r = verify_main_theorem("n=2", enumerate_labeled_graphs(2).unwrap(), &options);
        assert_eq!(r.summary.not_applicable, 2);
        assert!(r.records.iter().all(|r| r.outcome == Outcome::NotApplicable));
    }

    #[test]
    fn records_tally_with_summary() {
        let options = TheoremOptions { records: RecordPolicy::All, ..TheoremOptions::default() };
        let r = verify_main_theorem("n=4", enumerate_labeled_graphs(4).unwrap(), &options);
        assert_eq!(r.records.len(), r.summary.graphs);
        let checked = r.records.iter().filter(|x| x.outcome == Outcome::Checked).count();
        assert_eq!(checked, r.summary.checked);
        // K4 is the only 3/2-tough labeled graph on four vertices.
        assert_eq!(r.summary.hypothesis_holds, 1);
        assert!(r.passed());
        assert!(r.records.windows(2).all(|w| w[0].index < w[1].index));
    }

    #[test]
    fn lower_threshold_exposes_violations() {
        // K_{1,3} is 1/3-tough and has no 2-factor.
        let options = TheoremOptions { t: Rational::new(1, 3), ..TheoremOptions::default() };
        let r = verify_main_theorem("star", vec![Graph::star(3)], &options);
        assert_eq!(r.summary.violations, 1);
        let rec = &r.records[0];
        assert!(rec.violation);
        assert!(rec.tutte_pair.as_ref().is_some_and(|p| p.eta <= -2));
    }

    #[test]
    fn budget_overrun_is_skipped() {
        // K_{10,11} has no induced P4, so only the toughness budget can stop it.
        let edges: Vec<(usize, usize)> = (0..10).flat_map(|u| (10..21).map(move |v| (u, v))).collect();
        let g = Graph::from_edge_list(21, &edges).unwrap();
        let r = verify_main_theorem("big", vec![g], &TheoremOptions::default());
        assert_eq!(r.summary.skipped, 1);
        assert!(r.passed());
    }

    #[test]
    fn lemma5_on_small_corpus() {
        let r = verify_lemma5("n<=4", (0..=4).flat_map(|n| enumerate_labeled_graphs(n).unwrap()), RecordPolicy::All);
        assert!(r.passed(), "{:#?}", r.records.iter().filter(|r| r.violation).take(3).collect::<Vec<_>>());
        assert!(r.summary.hypothesis_holds > 0);
    }

    #[test]
    fn sharpness_smallest() {
        let r = verify_sharpness(1, 2, &SharpnessOptions::default()).unwrap();
        assert!(!r.violation, "{:#?}", r.checks);
        assert_eq!(r.eta, -2);
        assert_eq!(r.h, 6);
        assert_eq!(r.witness_ratio, Rational::new(27, 16));
        assert!(!r.two_factor);
        assert_eq!(r.two_p5_free, Some(true));
    }
}
