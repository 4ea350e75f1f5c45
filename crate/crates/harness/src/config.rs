use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Result};
use toughham_core::theorems::TPolicy;
use toughham_core::Graph;

use crate::check::CheckId;
use crate::corpus::{RandomModel, LABELED_LIMIT, UNLABELED_LIMIT};

#[derive(Debug, Clone, PartialEq)]
pub enum InputSource {
    /// graph6 lines; `-` reads standard input
    Graph6File(PathBuf),
    Labeled {
        n: usize,
        connected: bool,
    },
    Unlabeled {
        n: usize,
        connected: bool,
    },
    Random(RandomModel),
    Graphs(Vec<Graph>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Jsonl,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "jsonl" => Ok(OutputFormat::Jsonl),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format {other:?}, expected jsonl or csv")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    pub input: InputSource,
    pub checks: Vec<CheckId>,
    pub t_policy: TPolicy,
    /// worker threads; 0 uses one per core
    pub jobs: usize,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    /// emit `wall_time_us` per record
    pub timing: bool,
}

impl CampaignConfig {
    pub fn new(input: InputSource, checks: Vec<CheckId>) -> Self {
        CampaignConfig {
            input,
            checks,
            t_policy: TPolicy::Auto,
            jobs: 1,
            output: None,
            format: OutputFormat::Jsonl,
            timing: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.checks.is_empty() {
            bail!("at least one check is required");
        }
        self.validate_input()
    }

    pub fn validate_input(&self) -> Result<()> {
        match &self.input {
            InputSource::Labeled { n, .. } if !(1..=LABELED_LIMIT).contains(n) => {
                bail!("labeled enumeration supports 1..={LABELED_LIMIT} vertices, got {n}")
            }
            InputSource::Unlabeled { n, .. } if !(1..=UNLABELED_LIMIT).contains(n) => {
                bail!(
                    "isomorphism-free generation supports 1..={UNLABELED_LIMIT} vertices, got {n}"
                )
            }
            InputSource::Random(m)
                if !(1..=toughham_core::MAX_ORDER).contains(&m.n)
                    || !(0.0..=1.0).contains(&m.p) =>
            {
                bail!(
                    "random model needs 1 <= n <= {} and 0 <= p <= 1",
                    toughham_core::MAX_ORDER
                )
            }
            _ => Ok(()),
        }
    }
}

/// `TOUGHHAM_JOBS`, when set to a number, wins over the configured count.
pub fn effective_jobs(configured: usize) -> usize {
    std::env::var("TOUGHHAM_JOBS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(configured)
}
