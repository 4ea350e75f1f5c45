//! Corpus sweeps over small graphs: the sufficient conditions for
//! hamiltonicity, the extremal-family conjecture and the lemma checks,
//! with deterministic JSONL/CSV reports.

#![forbid(unsafe_code)]

pub mod campaign;
pub mod canon;
pub mod check;
pub mod config;
pub mod corpus;
pub mod report;

pub use campaign::{
    construct, lemma_report, run_campaign, search_counterexamples, Family, Summary,
};
pub use check::{CheckId, CheckResult, CheckStatus, GraphCheck, GraphContext, Severity};
pub use config::{CampaignConfig, InputSource, OutputFormat};
pub use report::ReportRecord;
