use std::fs::File;
use std::io::{self, BufReader, Write};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use log::warn;
use rayon::prelude::*;
use toughham_core::graph::{complete, complete_bipartite, cycle, family_h};
use toughham_core::graph6::to_graph6_string;
use toughham_core::{parse_graph6, Graph};

use crate::check::{CheckId, CheckStatus, GraphCheck, GraphContext, Severity};
use crate::config::{effective_jobs, CampaignConfig, InputSource};
use crate::corpus::{
    labeled_graphs, random_graphs, read_graph6, unlabeled_graphs, Record, SkippedLine,
};
use crate::report::{CheckEntry, ReportRecord, ReportWriter};

const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub check: String,
    pub severity: Severity,
    pub index: usize,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckTally {
    pub check: String,
    pub severity: Severity,
    /// indexed like [`CheckStatus::ALL`]
    pub counts: [usize; 4],
}

impl CheckTally {
    pub fn count(&self, status: CheckStatus) -> usize {
        self.counts[CheckStatus::ALL
            .iter()
            .position(|&s| s == status)
            .expect("listed")]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Summary {
    pub processed: usize,
    pub skipped: Vec<SkippedLine>,
    pub tallies: Vec<CheckTally>,
    pub counterexamples: Vec<Counterexample>,
}

impl Summary {
    pub fn tally(&self, check: &str) -> Option<&CheckTally> {
        self.tallies.iter().find(|t| t.check == check)
    }

    /// 0 when clean, 2 for a counterexample to a proven statement, 3 when
    /// only conjectures were refuted.
    pub fn exit_code(&self) -> i32 {
        if self
            .counterexamples
            .iter()
            .any(|c| c.severity == Severity::Theorem)
        {
            2
        } else if !self.counterexamples.is_empty() {
            3
        } else {
            0
        }
    }

    pub fn render(&self) -> String {
        let mut s = format!(
            "processed {} graphs, skipped {} lines\n",
            self.processed,
            self.skipped.len()
        );
        for t in &self.tallies {
            s.push_str(&format!("{}:", t.check));
            for (status, count) in CheckStatus::ALL.iter().zip(t.counts) {
                s.push_str(&format!(" {status}={count}"));
            }
            s.push('\n');
        }
        for c in &self.counterexamples {
            s.push_str(&format!(
                "counterexample {} #{} {}\n",
                c.check, c.index, c.graph6
            ));
        }
        s
    }
}

fn input_records(source: &InputSource) -> Result<Box<dyn Iterator<Item = Record> + '_>> {
    let wrap = |it: Box<dyn Iterator<Item = Graph>>| -> Box<dyn Iterator<Item = Record>> {
        Box::new(it.map(|graph| Record::Graph { line: 0, graph }))
    };
    Ok(match source {
        InputSource::Graph6File(path) => {
            let records = if path.as_os_str() == "-" {
                read_graph6(io::stdin().lock())?
            } else {
                let f =
                    File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
                read_graph6(BufReader::new(f))
                    .with_context(|| format!("cannot read {}", path.display()))?
            };
            Box::new(records.into_iter())
        }
        InputSource::Labeled { n, connected } => {
            let connected = *connected;
            wrap(Box::new(
                labeled_graphs(*n).filter(move |g| !connected || g.is_connected()),
            ))
        }
        InputSource::Unlabeled { n, connected } => {
            wrap(Box::new(unlabeled_graphs(*n, *connected).into_iter()))
        }
        InputSource::Random(model) => wrap(Box::new(random_graphs(*model))),
        InputSource::Graphs(gs) => wrap(Box::new(gs.clone().into_iter())),
    })
}

fn evaluate(
    index: usize,
    line: usize,
    g: &Graph,
    checks: &[Box<dyn GraphCheck>],
    timing: bool,
) -> ReportRecord {
    let start = Instant::now();
    let ctx = GraphContext::new(g);
    let results: Vec<_> = checks.iter().map(|c| c.run(&ctx)).collect();
    let facts = ctx.facts();
    ReportRecord {
        index,
        line: (line > 0).then_some(line),
        graph6: to_graph6_string(g),
        n: g.order(),
        edges: g.edge_count(),
        tau: facts.tau.value.to_string(),
        sigma2: facts.sigma2.to_string(),
        delta: facts.delta,
        alpha: ctx.alpha(),
        hamiltonian: facts.hamiltonian(),
        lambda_threshold: ctx.lambda_threshold(),
        checks: results.iter().map(CheckEntry::from).collect(),
        wall_time_us: timing.then(|| start.elapsed().as_micros() as u64),
    }
}

/// Runs `checks` over the configured input, handing records to `sink` in
/// input order whatever the worker count.
pub fn run_checks(
    cfg: &CampaignConfig,
    checks: &[Box<dyn GraphCheck>],
    sink: &mut dyn FnMut(&ReportRecord) -> Result<()>,
) -> Result<Summary> {
    cfg.validate_input()?;
    let jobs = effective_jobs(cfg.jobs);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let mut summary = Summary {
        tallies: checks
            .iter()
            .map(|c| CheckTally {
                check: c.id().to_owned(),
                severity: c.severity(),
                counts: [0; 4],
            })
            .collect(),
        ..Default::default()
    };
    let mut records = input_records(&cfg.input)?;
    let mut index = 0;
    loop {
        let mut batch = Vec::with_capacity(CHUNK);
        for rec in records.by_ref() {
            match rec {
                Record::Graph { line, graph } => {
                    batch.push((index, line, graph));
                    index += 1;
                }
                Record::Skipped(s) => {
                    warn!("line {} (byte {}): {}", s.line, s.offset, s.error);
                    summary.skipped.push(s);
                }
            }
            if batch.len() == CHUNK {
                break;
            }
        }
        if batch.is_empty() {
            break;
        }
        let out: Vec<ReportRecord> = pool.install(|| {
            batch
                .par_iter()
                .map(|(i, line, g)| evaluate(*i, *line, g, checks, cfg.timing))
                .collect()
        });
        for r in &out {
            summary.processed += 1;
            for (k, entry) in r.checks.iter().enumerate() {
                let status = CheckStatus::ALL
                    .iter()
                    .position(|s| s.as_str() == entry.status)
                    .expect("known status");
                summary.tallies[k].counts[status] += 1;
                if CheckStatus::ALL[status] == CheckStatus::Counterexample {
                    summary.counterexamples.push(Counterexample {
                        check: entry.check.clone(),
                        severity: summary.tallies[k].severity,
                        index: r.index,
                        graph6: r.graph6.clone(),
                    });
                }
            }
            sink(r)?;
        }
    }
    Ok(summary)
}

fn open_output(cfg: &CampaignConfig) -> Result<Box<dyn Write>> {
    Ok(match &cfg.output {
        Some(p) => Box::new(io::BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout())),
    })
}

/// Writes the report for `checks` to the configured output.
pub fn run_campaign_with(cfg: &CampaignConfig, checks: &[Box<dyn GraphCheck>]) -> Result<Summary> {
    let ids = checks.iter().map(|c| c.id().to_owned()).collect();
    let mut writer = ReportWriter::new(open_output(cfg)?, cfg.format, ids);
    writer.write_header()?;
    let summary = run_checks(cfg, checks, &mut |r| writer.write(r))?;
    writer.finish()?;
    Ok(summary)
}

fn build_checks(cfg: &CampaignConfig) -> Vec<Box<dyn GraphCheck>> {
    cfg.checks.iter().map(|c| c.build(cfg.t_policy)).collect()
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<Summary> {
    cfg.validate()?;
    run_campaign_with(cfg, &build_checks(cfg))
}

/// Invariant-only records: no checks are run.
pub fn invariant_report(cfg: &CampaignConfig) -> Result<Summary> {
    run_campaign_with(cfg, &[])
}

/// Runs the lemma checks of `cfg`, which must all be lemmas.
pub fn lemma_report(cfg: &CampaignConfig) -> Result<Summary> {
    if let Some(c) = cfg
        .checks
        .iter()
        .find(|c| !matches!(c, CheckId::Lemma1 | CheckId::Lemma2 | CheckId::Lemma3))
    {
        bail!("{c:?} is not a lemma check");
    }
    run_campaign(cfg)
}

/// graph6 strings of the inputs with at least one Counterexample, in input
/// order. No report is written.
pub fn search_counterexamples_with(
    cfg: &CampaignConfig,
    checks: &[Box<dyn GraphCheck>],
) -> Result<Vec<String>> {
    let summary = run_checks(cfg, checks, &mut |_| Ok(()))?;
    let mut out: Vec<(usize, String)> = summary
        .counterexamples
        .into_iter()
        .map(|c| (c.index, c.graph6))
        .collect();
    out.dedup_by_key(|(i, _)| *i);
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

pub fn search_counterexamples(cfg: &CampaignConfig) -> Result<Vec<String>> {
    cfg.validate()?;
    search_counterexamples_with(cfg, &build_checks(cfg))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `K_{(n−1)/2, (n+1)/2}`
    Kbip,
    /// `H + K̄_{k+1}` with `|H| = k`
    FamilyH,
    Complete,
    Cycle,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "kbip" => Ok(Family::Kbip),
            "familyH" | "familyh" => Ok(Family::FamilyH),
            "complete" => Ok(Family::Complete),
            "cycle" => Ok(Family::Cycle),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

fn odd_order(n: Option<usize>) -> Result<usize> {
    match n {
        Some(n) if n % 2 == 1 && n >= 3 => Ok(n),
        Some(n) => bail!("the family needs an odd order of at least 3, got {n}"),
        None => bail!("--n is required"),
    }
}

/// graph6 lines for the requested instances. `familyH` with `h` builds one
/// graph; with only `n` it builds one per isomorphism class of `H`.
pub fn construct(family: Family, n: Option<usize>, h: Option<&str>) -> Result<Vec<String>> {
    let one = |g: toughham_core::Result<Graph>| -> Result<Vec<String>> {
        Ok(vec![to_graph6_string(&g?)])
    };
    match family {
        Family::Kbip => {
            let n = odd_order(n)?;
            one(complete_bipartite((n - 1) / 2, n.div_ceil(2)))
        }
        Family::Complete => one(complete(n.context("--n is required")?)),
        Family::Cycle => one(cycle(n.context("--n is required")?)),
        Family::FamilyH => match h {
            Some(h) => {
                let h = parse_graph6(h.as_bytes()).context("--h is not valid graph6")?;
                if let Some(n) = n {
                    if n != 2 * h.order() + 1 {
                        bail!(
                            "--h has {} vertices, so the order is {}, not {n}",
                            h.order(),
                            2 * h.order() + 1
                        );
                    }
                }
                one(family_h(&h))
            }
            None => {
                let n = odd_order(n)?;
                unlabeled_graphs((n - 1) / 2, false)
                    .iter()
                    .map(|h| Ok(to_graph6_string(&family_h(h)?)))
                    .collect()
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use toughham_core::graph::empty;

    #[test]
    fn construct_examples() {
        let k23 = to_graph6_string(&complete_bipartite(2, 3).unwrap());
        assert_eq!(construct(Family::Kbip, Some(5), None).unwrap(), vec![k23]);
        let k2 = to_graph6_string(&complete(2).unwrap());
        let expected =
            toughham_core::graph::join(&complete(2).unwrap(), &empty(3).unwrap()).unwrap();
        assert_eq!(
            construct(Family::FamilyH, None, Some(&k2)).unwrap(),
            vec![to_graph6_string(&expected)]
        );
        assert_eq!(
            construct(Family::Cycle, Some(6), None).unwrap(),
            vec![to_graph6_string(&cycle(6).unwrap())]
        );
        assert_eq!(construct(Family::FamilyH, Some(7), None).unwrap().len(), 4);
        assert!(construct(Family::Kbip, Some(6), None).is_err());
        assert!(construct(Family::FamilyH, Some(9), Some(&k2)).is_err());
    }

    #[test]
    fn exit_codes() {
        let mut s = Summary::default();
        assert_eq!(s.exit_code(), 0);
        s.counterexamples.push(Counterexample {
            check: "conj1".into(),
            severity: Severity::Conjecture,
            index: 0,
            graph6: "A_".into(),
        });
        assert_eq!(s.exit_code(), 3);
        s.counterexamples.push(Counterexample {
            check: "main".into(),
            severity: Severity::Theorem,
            index: 1,
            graph6: "A_".into(),
        });
        assert_eq!(s.exit_code(), 2);
    }
}
