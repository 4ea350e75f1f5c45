use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use toughham_core::graph6::to_graph6;
use toughham_core::theorems::TPolicy;
use toughham_harness::campaign::invariant_report;
use toughham_harness::corpus::{labeled_graphs, unlabeled_graphs, RandomModel};
use toughham_harness::{
    construct, lemma_report, run_campaign, CampaignConfig, CheckId, Family, InputSource,
    OutputFormat, Summary,
};

#[derive(Parser)]
#[command(
    name = "toughham",
    version,
    about = "Toughness and hamiltonicity checks over small-graph corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// graph6 file, `-` for stdin
    #[arg(conflicts_with_all = ["labeled", "unlabeled", "random"])]
    input: Option<PathBuf>,
    /// every labeled graph on N vertices
    #[arg(long, value_name = "N", conflicts_with_all = ["unlabeled", "random"])]
    labeled: Option<usize>,
    /// one graph per isomorphism class on N vertices
    #[arg(long, value_name = "N", conflicts_with = "random")]
    unlabeled: Option<usize>,
    /// keep connected graphs only (with --labeled/--unlabeled)
    #[arg(long)]
    connected: bool,
    /// G(N, p) samples
    #[arg(long, value_name = "N", requires = "seed")]
    random: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 100)]
    count: usize,
}

impl InputArgs {
    fn source(&self) -> Result<InputSource> {
        Ok(if let Some(path) = &self.input {
            InputSource::Graph6File(path.clone())
        } else if let Some(n) = self.labeled {
            InputSource::Labeled {
                n,
                connected: self.connected,
            }
        } else if let Some(n) = self.unlabeled {
            InputSource::Unlabeled {
                n,
                connected: self.connected,
            }
        } else if let Some(n) = self.random {
            let seed = self.seed.expect("enforced by clap");
            InputSource::Random(RandomModel {
                seed,
                n,
                p: self.p,
                count: self.count,
            })
        } else {
            bail!("no input: give a graph6 file or one of --labeled, --unlabeled, --random")
        })
    }
}

#[derive(Args)]
struct OutputArgs {
    /// worker threads, 0 for one per core (TOUGHHAM_JOBS overrides)
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// report path, stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "jsonl")]
    format: OutputFormat,
    /// omit per-record wall time
    #[arg(long)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant records (τ, σ₂, δ, α, hamiltonicity, λ threshold)
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Premise/conclusion verdicts for the sufficient conditions
    Verify {
        #[arg(long, value_delimiter = ',', default_value = "main")]
        check: Vec<CheckId>,
        /// auto, grid or a rational p/q
        #[arg(long, default_value = "auto")]
        t: TPolicy,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Lemma margins
    Lemmas {
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        which: Vec<CheckId>,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// graph6 lines for a named family
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        /// graph6 of H for familyH
        #[arg(long)]
        h: Option<String>,
    },
    /// Stream every graph on K vertices as graph6
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        /// one graph per isomorphism class instead of every labeling
        #[arg(long)]
        unlabeled: bool,
    },
}

fn config(
    input: &InputArgs,
    output: &OutputArgs,
    checks: Vec<CheckId>,
    t: TPolicy,
) -> Result<CampaignConfig> {
    Ok(CampaignConfig {
        t_policy: t,
        jobs: output.jobs,
        output: output.out.clone(),
        format: output.format,
        timing: !output.no_timing,
        ..CampaignConfig::new(input.source()?, checks)
    })
}

fn finish(summary: &Summary) -> i32 {
    eprint!("{}", summary.render());
    summary.exit_code()
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Invariants { input, output } => {
            let cfg = config(&input, &output, Vec::new(), TPolicy::Auto)?;
            Ok(finish(&invariant_report(&cfg)?))
        }
        Command::Verify {
            check,
            t,
            input,
            output,
        } => {
            if let Some(c) = check
                .iter()
                .find(|c| matches!(c, CheckId::Lemma1 | CheckId::Lemma2 | CheckId::Lemma3))
            {
                bail!("{c:?} belongs to the lemmas command");
            }
            Ok(finish(&run_campaign(&config(&input, &output, check, t)?)?))
        }
        Command::Lemmas {
            which,
            input,
            output,
        } => Ok(finish(&lemma_report(&config(
            &input,
            &output,
            which,
            TPolicy::Auto,
        )?)?)),
        Command::Construct { family, n, h } => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for line in construct(family, n, h.as_deref())? {
                writeln!(out, "{line}")?;
            }
            Ok(0)
        }
        Command::Enumerate {
            n,
            connected,
            unlabeled,
        } => {
            let mut out = BufWriter::new(io::stdout().lock());
            let mut emit = |g: &toughham_core::Graph| -> io::Result<()> {
                if !connected || g.is_connected() {
                    out.write_all(&to_graph6(g))?;
                    out.write_all(b"\n")?;
                }
                Ok(())
            };
            if unlabeled {
                if !(1..=toughham_harness::corpus::UNLABELED_LIMIT).contains(&n) {
                    bail!(
                        "isomorphism-free generation supports 1..={} vertices",
                        toughham_harness::corpus::UNLABELED_LIMIT
                    );
                }
                unlabeled_graphs(n, false).iter().try_for_each(&mut emit)?;
            } else {
                if !(1..=toughham_harness::corpus::LABELED_LIMIT).contains(&n) {
                    bail!(
                        "labeled enumeration supports 1..={} vertices",
                        toughham_harness::corpus::LABELED_LIMIT
                    );
                }
                labeled_graphs(n).try_for_each(|g| emit(&g))?;
            }
            out.flush()?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
