mod common;

use std::fs;

use toughham_core::graph::{complete, complete_bipartite, cycle, path};
use toughham_core::graph6::to_graph6_string;
use toughham_core::theorems::{Condition, TPolicy};
use toughham_core::Rational;
use toughham_harness::campaign::{run_campaign_with, search_counterexamples_with};
use toughham_harness::check::{CheckResult, Severity};
use toughham_harness::report::normalized_jsonl;
use toughham_harness::{
    lemma_report, run_campaign, search_counterexamples, CampaignConfig, CheckId, CheckStatus,
    GraphCheck, GraphContext, InputSource, OutputFormat,
};

fn write_lines(dir: &tempfile::TempDir, name: &str, lines: &[String]) -> std::path::PathBuf {
    let p = dir.path().join(name);
    let mut text = lines.join("\n");
    text.push('\n');
    fs::write(&p, text).unwrap();
    p
}

fn g6(g: toughham_core::Result<toughham_core::Graph>) -> String {
    to_graph6_string(&g.unwrap())
}

#[test]
fn k23_conj2_is_consistent_with_family_witness() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_lines(&dir, "k23.g6", &[g6(complete_bipartite(2, 3))]);
    let out = dir.path().join("r.jsonl");
    let cfg = CampaignConfig {
        output: Some(out.clone()),
        ..CampaignConfig::new(InputSource::Graph6File(input), vec![CheckId::Conj2])
    };
    let s = run_campaign(&cfg).unwrap();
    assert_eq!(s.processed, 1);
    assert_eq!(s.tally("conj2").unwrap().count(CheckStatus::Consistent), 1);
    let recs = normalized_jsonl(&fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(recs.len(), 1);
    let c = &recs[0].checks[0];
    assert_eq!(c.witness.as_deref(), Some("family:A={0,1},I={2,3,4}"));
    assert_eq!(recs[0].tau, "2/3");
    assert_eq!(recs[0].sigma2, "4/1");
    assert_eq!(recs[0].lambda_threshold, Some(2));
}

#[test]
fn main_over_boundary_graphs_finds_nothing() {
    let cfg = CampaignConfig::new(
        InputSource::Graphs(vec![complete_bipartite(2, 3).unwrap(), cycle(6).unwrap()]),
        vec![CheckId::Condition(Condition::Main)],
    );
    assert!(search_counterexamples(&cfg).unwrap().is_empty());
}

/// Ore's premise with the conclusion negated: flags exactly the hamiltonian
/// graphs that satisfy the premise.
struct InvertedOre;

impl GraphCheck for InvertedOre {
    fn id(&self) -> &str {
        "inverted-ore"
    }

    fn severity(&self) -> Severity {
        Severity::Theorem
    }

    fn run(&self, ctx: &GraphContext<'_>) -> CheckResult {
        let f = ctx.facts();
        let premise = f.sigma2 >= Rational::from(f.n);
        let status = match (premise, f.hamiltonian()) {
            (false, _) => CheckStatus::PremiseFails,
            (true, false) => CheckStatus::Consistent,
            (true, true) => CheckStatus::Counterexample,
        };
        CheckResult {
            check: self.id().into(),
            status: Some(status),
            ..Default::default()
        }
    }
}

#[test]
fn inverted_check_returns_the_planted_graph() {
    let planted = complete(5).unwrap();
    let inputs = vec![
        complete_bipartite(2, 3).unwrap(),
        cycle(6).unwrap(),
        path(4).unwrap(),
        planted.clone(),
    ];
    let cfg = CampaignConfig::new(
        InputSource::Graphs(inputs),
        vec![CheckId::Condition(Condition::Ore)],
    );
    let found = search_counterexamples_with(&cfg, &[Box::new(InvertedOre)]).unwrap();
    assert_eq!(found, vec![to_graph6_string(&planted)]);
}

#[test]
fn skipped_lines_are_counted_with_offsets() {
    let dir = tempfile::tempdir().unwrap();
    let lines = vec![
        g6(cycle(5)),
        "".to_owned(),
        "D!!".to_owned(),
        g6(path(4)),
        "C~~".to_owned(),
        "E".to_owned(),
    ];
    let input = write_lines(&dir, "bad.g6", &lines);
    let cfg = CampaignConfig {
        output: Some(dir.path().join("r.jsonl")),
        ..CampaignConfig::new(
            InputSource::Graph6File(input),
            vec![CheckId::Condition(Condition::Dirac)],
        )
    };
    let s = run_campaign(&cfg).unwrap();
    assert_eq!(s.processed, 2);
    assert_eq!(s.processed + s.skipped.len(), lines.len());
    let lines_skipped: Vec<usize> = s.skipped.iter().map(|k| k.line).collect();
    assert_eq!(lines_skipped, vec![2, 3, 5, 6]);
    // "D!!" fails at its second byte; line 3 follows line 1 and the empty line 2
    let line3_start = lines[0].len() + 1 + 1;
    assert_eq!(s.skipped[1].offset, line3_start + 1);
    assert!(s.skipped.iter().all(|k| !k.error.is_empty()));
}

#[test]
fn worker_count_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = common::connected(3, 7);
    let run = |jobs: usize, name: &str| {
        let out = dir.path().join(name);
        let cfg = CampaignConfig {
            jobs,
            timing: false,
            output: Some(out.clone()),
            ..CampaignConfig::new(
                InputSource::Graphs(corpus.clone()),
                vec![
                    CheckId::Condition(Condition::Main),
                    CheckId::Conj2,
                    CheckId::Lemma2,
                ],
            )
        };
        run_campaign(&cfg).unwrap();
        fs::read(out).unwrap()
    };
    let a = run(1, "a.jsonl");
    let b = run(8, "b.jsonl");
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn csv_projection() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.csv");
    let cfg = CampaignConfig {
        format: OutputFormat::Csv,
        output: Some(out.clone()),
        t_policy: TPolicy::Fixed(Rational::new(2, 3)),
        ..CampaignConfig::new(
            InputSource::Graphs(vec![complete_bipartite(2, 3).unwrap()]),
            vec![
                CheckId::Condition(Condition::Main),
                CheckId::Condition(Condition::Conj1),
            ],
        )
    };
    run_campaign(&cfg).unwrap();
    let text = fs::read_to_string(out).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with(
        "index,graph6,n,edges,tau,sigma2,delta,alpha,hamiltonian,lambda_threshold,main_status"
    ));
    let row = lines.next().unwrap();
    assert!(row.contains(",2/3,4/1,2,3,false,2,PremiseFails,"), "{row}");
    assert!(row.contains(r#""cut:{0,1}/3""#), "{row}");
}

#[test]
fn lemma_report_margins_for_k23() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("l.jsonl");
    let cfg = CampaignConfig {
        output: Some(out.clone()),
        ..CampaignConfig::new(
            InputSource::Graphs(vec![complete_bipartite(2, 3).unwrap()]),
            vec![CheckId::Lemma1, CheckId::Lemma2, CheckId::Lemma3],
        )
    };
    let s = lemma_report(&cfg).unwrap();
    assert_eq!(s.exit_code(), 0);
    let recs = normalized_jsonl(&fs::read_to_string(out).unwrap()).unwrap();
    let margins: Vec<_> = recs[0].checks.iter().map(|c| c.margin.clone()).collect();
    assert_eq!(margins, vec![Some("0/1".into()), Some("0/1".into()), None]);
    assert_eq!(recs[0].checks[2].status, "Skipped");

    let bad = CampaignConfig {
        checks: vec![CheckId::Conj2],
        ..cfg
    };
    assert!(lemma_report(&bad).is_err());
}

#[test]
fn config_validation() {
    let empty = CampaignConfig::new(
        InputSource::Labeled {
            n: 3,
            connected: false,
        },
        vec![],
    );
    assert!(run_campaign(&empty).is_err());
    let big = CampaignConfig::new(
        InputSource::Labeled {
            n: 8,
            connected: false,
        },
        vec![CheckId::Conj2],
    );
    assert!(run_campaign(&big).is_err());
    let missing = CampaignConfig::new(
        InputSource::Graph6File("/nonexistent/x.g6".into()),
        vec![CheckId::Conj2],
    );
    assert!(run_campaign_with(&missing, &[]).is_err());
}
