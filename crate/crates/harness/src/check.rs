use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use toughham_core::hamiltonian::{
    check_lemma1, extend_cycle, lambda_threshold, spanning_cycle, CyclePolicy, CycleSetIndex,
    Lemma1Report, Lemma1Skip, INDEX_LIMIT,
};
use toughham_core::invariants::independence_number;
use toughham_core::theorems::{
    check_conjecture2_with_facts, check_with_facts, CheckKind, Condition, GraphFacts, Status,
    TPolicy, Verdict,
};
use toughham_core::{Graph, Rational};

/// Orders up to which the D_λ analysis of a non-hamiltonian graph is run
/// for report records.
pub const LAMBDA_LIMIT: usize = 16;

/// Lazily computed per-graph values shared by all checks of one record.
pub struct GraphContext<'g> {
    pub graph: &'g Graph,
    facts: OnceCell<GraphFacts>,
    alpha: OnceCell<usize>,
    index: OnceCell<Option<CycleSetIndex>>,
}

impl<'g> GraphContext<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        GraphContext {
            graph,
            facts: OnceCell::new(),
            alpha: OnceCell::new(),
            index: OnceCell::new(),
        }
    }

    pub fn facts(&self) -> &GraphFacts {
        self.facts.get_or_init(|| GraphFacts::compute(self.graph))
    }

    pub fn alpha(&self) -> usize {
        *self.alpha.get_or_init(|| independence_number(self.graph))
    }

    /// `None` above [`INDEX_LIMIT`] vertices.
    pub fn cycle_index(&self) -> Option<&CycleSetIndex> {
        self.index
            .get_or_init(|| CycleSetIndex::build(self.graph).ok())
            .as_ref()
    }

    /// Smallest λ admitting a D_λ-cycle; 1 for hamiltonian graphs, `None`
    /// for acyclic graphs or orders above [`LAMBDA_LIMIT`].
    pub fn lambda_threshold(&self) -> Option<usize> {
        if self.facts().hamiltonian() {
            return Some(1);
        }
        if self.graph.order() > LAMBDA_LIMIT {
            return None;
        }
        let index = self.cycle_index()?;
        lambda_threshold(self.graph, index, CyclePolicy::MinComponentsFirst)
            .ok()
            .map(|a| a.lambda_threshold)
    }
}

/// Bug-level checks guard proven statements; finding-level ones guard open
/// conjectures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Severity {
    Theorem,
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckStatus {
    PremiseFails,
    Consistent,
    Counterexample,
    /// the input is outside the statement's scope
    Skipped,
}

impl CheckStatus {
    pub const ALL: [CheckStatus; 4] = [
        CheckStatus::PremiseFails,
        CheckStatus::Consistent,
        CheckStatus::Counterexample,
        CheckStatus::Skipped,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::PremiseFails => "PremiseFails",
            CheckStatus::Consistent => "Consistent",
            CheckStatus::Counterexample => "Counterexample",
            CheckStatus::Skipped => "Skipped",
        }
    }
}

impl From<Status> for CheckStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::PremiseFails => CheckStatus::PremiseFails,
            Status::Consistent => CheckStatus::Consistent,
            Status::Counterexample => CheckStatus::Counterexample,
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one check on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckResult {
    pub check: String,
    pub status: Option<CheckStatus>,
    pub t_used: Option<Rational>,
    pub t_scan: Option<&'static str>,
    pub measured: Option<Rational>,
    pub threshold: Option<Rational>,
    /// slack of the checked inequality; negative means violated
    pub margin: Option<Rational>,
    /// number of premise-holding instances examined
    pub attempts: Option<usize>,
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl CheckResult {
    fn new(check: &str, status: CheckStatus) -> Self {
        CheckResult {
            check: check.to_owned(),
            status: Some(status),
            ..Default::default()
        }
    }

    pub fn status(&self) -> CheckStatus {
        self.status.unwrap_or(CheckStatus::Skipped)
    }

    pub fn from_verdict(v: &Verdict) -> Self {
        let witness = v.witness.to_string();
        CheckResult {
            check: v.check.id().to_owned(),
            status: Some(v.status.into()),
            t_used: v.t_used,
            t_scan: Some(v.t_scan.as_str()).filter(|s| *s != "none"),
            measured: Some(v.measured),
            threshold: v.threshold,
            witness: Some(witness).filter(|w| !w.is_empty()),
            ..Default::default()
        }
    }
}

pub trait GraphCheck: Send + Sync {
    fn id(&self) -> &str;
    fn severity(&self) -> Severity;
    fn run(&self, ctx: &GraphContext<'_>) -> CheckResult;
}

fn skipped(id: &str, note: &str) -> CheckResult {
    CheckResult {
        note: Some(note.to_owned()),
        ..CheckResult::new(id, CheckStatus::Skipped)
    }
}

fn too_small(ctx: &GraphContext<'_>) -> bool {
    ctx.graph.order() < 3
}

pub struct ConditionCheck {
    pub condition: Condition,
    pub policy: TPolicy,
}

impl GraphCheck for ConditionCheck {
    fn id(&self) -> &str {
        self.condition.id()
    }

    fn severity(&self) -> Severity {
        if self.condition.is_conjecture() {
            Severity::Conjecture
        } else {
            Severity::Theorem
        }
    }

    fn run(&self, ctx: &GraphContext<'_>) -> CheckResult {
        if too_small(ctx) {
            return skipped(self.id(), "order below 3");
        }
        match check_with_facts(ctx.graph, self.condition, self.policy, ctx.facts()) {
            Ok(v) => CheckResult::from_verdict(&v),
            Err(e) => skipped(self.id(), &e.to_string()),
        }
    }
}

pub struct Conjecture2Check;

impl GraphCheck for Conjecture2Check {
    fn id(&self) -> &str {
        CheckKind::Conj2.id()
    }

    fn severity(&self) -> Severity {
        Severity::Conjecture
    }

    fn run(&self, ctx: &GraphContext<'_>) -> CheckResult {
        if too_small(ctx) {
            return skipped(self.id(), "order below 3");
        }
        match check_conjecture2_with_facts(ctx.graph, ctx.facts()) {
            Ok(v) => CheckResult::from_verdict(&v),
            Err(e) => skipped(self.id(), &e.to_string()),
        }
    }
}

/// Lemma 1 at `t = τ`: `n >= (τ + λ)(d_G(H) + 1)` for each order-λ component
/// left by the policy-A cycle.
pub struct Lemma1Check;

impl GraphCheck for Lemma1Check {
    fn id(&self) -> &str {
        "lemma1"
    }

    fn severity(&self) -> Severity {
        Severity::Theorem
    }

    fn run(&self, ctx: &GraphContext<'_>) -> CheckResult {
        let g = ctx.graph;
        if too_small(ctx) {
            return skipped(self.id(), "order below 3");
        }
        if g.order() > INDEX_LIMIT {
            return skipped(self.id(), "too large");
        }
        if ctx.facts().hamiltonian() {
            return skipped(self.id(), "hamiltonian");
        }
        let tau = ctx.facts().tau.value;
        if !tau.is_positive() {
            return skipped(self.id(), "not 2-connected");
        }
        let report = check_lemma1(g, tau);
        match report {
            Lemma1Report::Precondition(skip) => skipped(
                self.id(),
                match skip {
                    Lemma1Skip::NotTwoConnected => "not 2-connected",
                    Lemma1Skip::NotTTough => "not t-tough",
                    Lemma1Skip::Hamiltonian => "hamiltonian",
                    Lemma1Skip::TooLarge => "too large",
                },
            ),
            Lemma1Report::Checked {
                lambda,
                chosen_set,
                ref margins,
                holds,
            } => CheckResult {
                t_used: Some(tau),
                margin: report.min_margin(),
                attempts: Some(margins.len()),
                witness: Some(format!("lambda={lambda};cycle={chosen_set}")),
                ..CheckResult::new(
                    self.id(),
                    if holds {
                        CheckStatus::Consistent
                    } else {
                        CheckStatus::Counterexample
                    },
                )
            },
        }
    }
}

/// Lemma 2 at `t = τ`: every independent set has at most `n/(τ+1)`
/// vertices, checked as `n − α(τ + 1) >= 0`.
pub struct Lemma2Check;

impl GraphCheck for Lemma2Check {
    fn id(&self) -> &str {
        "lemma2"
    }

    fn severity(&self) -> Severity {
        Severity::Theorem
    }

    fn run(&self, ctx: &GraphContext<'_>) -> CheckResult {
        let tau = ctx.facts().tau.value;
        if tau.is_infinite() {
            return skipped(self.id(), "complete");
        }
        if !tau.is_positive() {
            return skipped(self.id(), "disconnected");
        }
        let alpha = ctx.alpha();
        let n = Rational::from(ctx.graph.order());
        let margin = n - Rational::from(alpha) * (tau + Rational::ONE);
        let status = if margin >= Rational::ZERO {
            CheckStatus::Consistent
        } else {
            CheckStatus::Counterexample
        };
        CheckResult {
            t_used: Some(tau),
            measured: Some(Rational::from(alpha)),
            threshold: Some(n / (tau + Rational::ONE)),
            margin: Some(margin),
            ..CheckResult::new(self.id(), status)
        }
    }
}

/// Lemma 3 at `t = τ >= 1`: every cycle set `T ⊊ V` and vertex `x ∉ T`
/// with `deg(x, T) > n/(τ+1) − 1` admits a cycle on `T ∪ {x}`.
pub struct Lemma3Check;

impl GraphCheck for Lemma3Check {
    fn id(&self) -> &str {
        "lemma3"
    }

    fn severity(&self) -> Severity {
        Severity::Theorem
    }

    fn run(&self, ctx: &GraphContext<'_>) -> CheckResult {
        let g = ctx.graph;
        let tau = ctx.facts().tau.value;
        if tau < Rational::ONE {
            return skipped(self.id(), "toughness below 1");
        }
        let Some(index) = ctx.cycle_index() else {
            return skipped(self.id(), "too large");
        };
        let full = g.vertices();
        let mut attempts = 0;
        let mut failure = None;
        'sets: for t in index.iter().filter(|&t| t != full) {
            let cycle = spanning_cycle(g, t).expect("flagged set carries a cycle");
            for x in (full - t).iter() {
                let outcome = extend_cycle(g, &cycle, x, tau).expect("valid cycle and vertex");
                if !outcome.premise_held {
                    continue;
                }
                attempts += 1;
                if outcome.contract_violated() {
                    failure = Some(format!("cycle={cycle};x={x}"));
                    break 'sets;
                }
            }
        }
        let status = if failure.is_some() {
            CheckStatus::Counterexample
        } else {
            CheckStatus::Consistent
        };
        CheckResult {
            t_used: Some(tau),
            attempts: Some(attempts),
            witness: failure,
            ..CheckResult::new(self.id(), status)
        }
    }
}

/// Identifier accepted by `--check` and `--which`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    Condition(Condition),
    Conj2,
    Lemma1,
    Lemma2,
    Lemma3,
}

impl CheckId {
    pub fn build(self, policy: TPolicy) -> Box<dyn GraphCheck> {
        match self {
            CheckId::Condition(condition) => Box::new(ConditionCheck { condition, policy }),
            CheckId::Conj2 => Box::new(Conjecture2Check),
            CheckId::Lemma1 => Box::new(Lemma1Check),
            CheckId::Lemma2 => Box::new(Lemma2Check),
            CheckId::Lemma3 => Box::new(Lemma3Check),
        }
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "conj2" => Ok(CheckId::Conj2),
            "lemma1" | "1" => Ok(CheckId::Lemma1),
            "lemma2" | "2" => Ok(CheckId::Lemma2),
            "lemma3" | "3" => Ok(CheckId::Lemma3),
            other => other
                .parse::<Condition>()
                .map(CheckId::Condition)
                .map_err(|e| e.to_string()),
        }
    }
}
