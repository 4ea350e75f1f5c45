use std::io::Write;

use anyhow::Result;
use serde::{Deserialize, Serialize};

use crate::check::CheckResult;
use crate::config::OutputFormat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_used: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_scan: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measured: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attempts: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&CheckResult> for CheckEntry {
    fn from(r: &CheckResult) -> Self {
        CheckEntry {
            check: r.check.clone(),
            status: r.status().as_str().to_owned(),
            t_used: r.t_used.map(|t| t.to_string()),
            t_scan: r.t_scan.map(str::to_owned),
            measured: r.measured.map(|t| t.to_string()),
            threshold: r.threshold.map(|t| t.to_string()),
            margin: r.margin.map(|t| t.to_string()),
            attempts: r.attempts,
            witness: r.witness.clone(),
            note: r.note.clone(),
        }
    }
}

/// One line of a report. Rationals are `num/den` strings or `inf`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    /// position among the decoded input graphs
    pub index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub tau: String,
    pub sigma2: String,
    pub delta: usize,
    pub alpha: usize,
    pub hamiltonian: bool,
    pub lambda_threshold: Option<usize>,
    pub checks: Vec<CheckEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_us: Option<u64>,
}

pub struct ReportWriter<'w> {
    out: Box<dyn Write + 'w>,
    format: OutputFormat,
    csv: Option<csv::Writer<Box<dyn Write + 'w>>>,
    check_ids: Vec<String>,
}

impl<'w> ReportWriter<'w> {
    pub fn new(out: Box<dyn Write + 'w>, format: OutputFormat, check_ids: Vec<String>) -> Self {
        match format {
            OutputFormat::Jsonl => ReportWriter {
                out,
                format,
                csv: None,
                check_ids,
            },
            OutputFormat::Csv => ReportWriter {
                out: Box::new(std::io::sink()),
                format,
                csv: Some(csv::Writer::from_writer(out)),
                check_ids,
            },
        }
    }

    fn csv_header(&self) -> Vec<String> {
        let mut h: Vec<String> = [
            "index",
            "graph6",
            "n",
            "edges",
            "tau",
            "sigma2",
            "delta",
            "alpha",
            "hamiltonian",
            "lambda_threshold",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        for id in &self.check_ids {
            for col in ["status", "margin", "witness"] {
                h.push(format!("{id}_{col}"));
            }
        }
        h.push("wall_time_us".into());
        h
    }

    pub fn write_header(&mut self) -> Result<()> {
        if self.format == OutputFormat::Csv {
            let header = self.csv_header();
            self.csv
                .as_mut()
                .expect("csv writer")
                .write_record(&header)?;
        }
        Ok(())
    }

    pub fn write(&mut self, r: &ReportRecord) -> Result<()> {
        match self.format {
            OutputFormat::Jsonl => {
                serde_json::to_writer(&mut self.out, r)?;
                self.out.write_all(b"\n")?;
            }
            OutputFormat::Csv => {
                let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
                let mut row = vec![
                    r.index.to_string(),
                    r.graph6.clone(),
                    r.n.to_string(),
                    r.edges.to_string(),
                    r.tau.clone(),
                    r.sigma2.clone(),
                    r.delta.to_string(),
                    r.alpha.to_string(),
                    r.hamiltonian.to_string(),
                    opt(r.lambda_threshold),
                ];
                for id in &self.check_ids {
                    let entry = r.checks.iter().find(|c| &c.check == id);
                    row.push(entry.map(|c| c.status.clone()).unwrap_or_default());
                    row.push(entry.and_then(|c| c.margin.clone()).unwrap_or_default());
                    row.push(entry.and_then(|c| c.witness.clone()).unwrap_or_default());
                }
                row.push(r.wall_time_us.map(|t| t.to_string()).unwrap_or_default());
                self.csv.as_mut().expect("csv writer").write_record(&row)?;
            }
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        if let Some(mut w) = self.csv.take() {
            w.flush()?;
        }
        self.out.flush()?;
        Ok(())
    }
}

/// Parses a JSONL report and drops the timing field, for comparing runs.
pub fn normalized_jsonl(text: &str) -> Result<Vec<ReportRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut r: ReportRecord = serde_json::from_str(l)?;
            r.wall_time_us = None;
            Ok(r)
        })
        .collect()
}
