use std::io::{self, Write};

use serde::Serialize;

use crate::forbidden::PathUnionWitness;
use crate::toughness::ToughnessResult;
use crate::two_factor::{Lemma5Report, TuttePair, TwoFactor};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Checked,
    /// A solver budget was exceeded for this graph.
    Skipped,
    /// The statement under test does not apply (e.g. fewer than three vertices).
    NotApplicable,
}

/// Which per-graph records a pipeline keeps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RecordPolicy {
    All,
    #[default]
    Violations,
}

impl RecordPolicy {
    pub(crate) fn keeps(&self, record: &GraphRecord) -> bool {
        matches!(self, RecordPolicy::All) || record.violation
    }
}

/// One graph of a corpus with everything computed for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tough: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counter_witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub toughness: Option<ToughnessResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path_union: Option<PathUnionWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_factor: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<TwoFactor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tutte_pair: Option<TuttePair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma5: Option<Lemma5Report>,
    pub violation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl GraphRecord {
    pub(crate) fn new(index: usize, graph6: String, n: usize) -> Self {
        GraphRecord {
            index,
            graph6,
            n,
            outcome: Outcome::Checked,
            tough: None,
            counter_witness: None,
            toughness: None,
            free: None,
            path_union: None,
            two_factor: None,
            cycles: None,
            tutte_pair: None,
            lemma5: None,
            violation: false,
            note: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub checked: usize,
    pub skipped: usize,
    pub not_applicable: usize,
    /// Checked graphs satisfying every hypothesis of the statement.
    pub hypothesis_holds: usize,
    pub violations: usize,
}

impl Summary {
    pub(crate) fn add(&mut self, record: &GraphRecord, hypothesis: bool) {
        self.graphs += 1;
        match record.outcome {
            Outcome::Checked => self.checked += 1,
            Outcome::Skipped => self.skipped += 1,
            Outcome::NotApplicable => self.not_applicable += 1,
        }
        self.hypothesis_holds += hypothesis as usize;
        self.violations += record.violation as usize;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub corpus: String,
    pub statement: String,
    pub records: Vec<GraphRecord>,
    pub summary: Summary,
    pub runtime_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.violations == 0
    }

    /// One JSON object per record, then a final summary object. Only the
    /// summary line carries timing.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        #[derive(Serialize)]
        struct Tail<'a> {
            corpus: &'a str,
            statement: &'a str,
            summary: &'a Summary,
            runtime_ms: u128,
        }
        serde_json::to_writer(
            &mut out,
            &Tail {
                corpus: &self.corpus,
                statement: &self.statement,
                summary: &self.summary,
                runtime_ms: self.runtime_ms,
            },
        )?;
        out.write_all(b"\n")
    }
}
