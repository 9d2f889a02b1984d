//! Corpus generation and verification pipelines with JSON-lines reports.

mod enumerate;
mod report;
mod verify;

pub use enumerate::{enumerate_labeled_graphs, LabeledGraphs, LABELED_LIMIT};
pub use report::{GraphRecord, Outcome, RecordPolicy, Summary, VerificationReport};
pub use verify::{
    verify_lemma5, verify_main_theorem, verify_sharpness, CheckStatus, SharpnessCheck, SharpnessOptions,
    SharpnessReport, TheoremOptions,
};
