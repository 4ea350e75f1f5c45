//! Premise/conclusion checkers for sufficient conditions of hamiltonicity.
//!
//! Each [`Condition`] pairs a degree premise (σ₂ or δ against a threshold,
//! plus toughness and order side conditions) with the conclusion "G is
//! hamiltonian". A [`Verdict`] records the exact values that went into the
//! comparison, so its status can be re-derived from its fields.

use std::fmt;
use std::str::FromStr;

use crate::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6_string;
use crate::hamiltonian::hamiltonian_cycle;
use crate::invariants::{is_t_tough, sigma2, toughness, ToughnessResult};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `δ >= n/2`
    Dirac,
    /// `σ₂ >= n`
    Ore,
    /// `t`-tough and `δ > n/(t+1) − 1`
    BauerDegree,
    /// 1-tough, `n >= 11` and `σ₂ >= n − 4`
    Jung,
    /// `τ > 1`, `n >= 30` and `σ₂ >= n − 7`
    Bcl,
    /// 2-tough and `σ₂ >= 2n/3`
    Bvms,
    /// `t`-tough and `σ₂ > 2n/(t+1) + t − 2`
    Main,
    /// `t`-tough and `σ₂ > 2n/(t+1) − 2`
    Conj1,
}

impl Condition {
    pub const ALL: [Condition; 8] = [
        Condition::Main,
        Condition::Ore,
        Condition::Dirac,
        Condition::BauerDegree,
        Condition::Jung,
        Condition::Bcl,
        Condition::Bvms,
        Condition::Conj1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Condition::Dirac => "dirac",
            Condition::Ore => "ore",
            Condition::BauerDegree => "bauer",
            Condition::Jung => "jung",
            Condition::Bcl => "bcl",
            Condition::Bvms => "bvms",
            Condition::Main => "main",
            Condition::Conj1 => "conj1",
        }
    }

    /// Whether the threshold depends on a toughness parameter `t`.
    pub fn uses_t(self) -> bool {
        matches!(
            self,
            Condition::BauerDegree | Condition::Main | Condition::Conj1
        )
    }

    /// Whether the statement is an open conjecture rather than a theorem.
    pub fn is_conjecture(self) -> bool {
        matches!(self, Condition::Conj1)
    }

    /// Compared quantity is δ (as opposed to σ₂).
    fn uses_min_degree(self) -> bool {
        matches!(self, Condition::Dirac | Condition::BauerDegree)
    }

    fn strict(self) -> bool {
        matches!(
            self,
            Condition::BauerDegree | Condition::Main | Condition::Conj1
        )
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "dirac" => Condition::Dirac,
            "ore" => Condition::Ore,
            "bauer" | "bauer_degree" => Condition::BauerDegree,
            "jung" => Condition::Jung,
            "bcl" => Condition::Bcl,
            "bvms" => Condition::Bvms,
            "main" => Condition::Main,
            "conj1" => Condition::Conj1,
            other => return Err(Error::UnknownCondition(other.to_owned())),
        })
    }
}

/// Exact threshold of `condition` for order `n` and toughness parameter `t`
/// (ignored by conditions that do not use one).
pub fn threshold(condition: Condition, n: usize, t: Rational) -> Result<Rational> {
    if n < 3 {
        return Err(Error::OrderBelowThree(n));
    }
    let n_r = Rational::from(n);
    let two = Rational::from_int(2);
    if condition.uses_t() && t < Rational::ZERO {
        return Err(Error::InvalidParameter(format!(
            "t must be non-negative, got {t}"
        )));
    }
    Ok(match condition {
        Condition::Dirac => n_r / two,
        Condition::Ore => n_r,
        Condition::Jung => n_r - Rational::from_int(4),
        Condition::Bcl => n_r - Rational::from_int(7),
        Condition::Bvms => two * n_r / Rational::from_int(3),
        Condition::BauerDegree => n_r / (t + Rational::ONE) - Rational::ONE,
        Condition::Main => match t {
            Rational::Infinity => Rational::Infinity,
            t => two * n_r / (t + Rational::ONE) + t - two,
        },
        Condition::Conj1 => two * n_r / (t + Rational::ONE) - two,
    })
}

/// How the toughness parameter of a `t`-dependent condition is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TPolicy {
    /// `t = τ(G)`; for the main condition, also the grid below whenever
    /// `(τ+1)² > 2n`, where the threshold stops decreasing in `t`.
    #[default]
    Auto,
    Fixed(Rational),
    /// `τ(G)` and every `k/8 <= min(τ, n)`.
    Grid,
}

impl FromStr for TPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "auto" => Ok(TPolicy::Auto),
            "grid" => Ok(TPolicy::Grid),
            other => other
                .parse::<Rational>()
                .map(TPolicy::Fixed)
                .map_err(|e| Error::InvalidParameter(e.to_string())),
        }
    }
}

/// Which toughness parameters a verdict's premise was evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TScan {
    /// the condition has no `t`
    None,
    Fixed,
    Tau,
    /// `τ` followed by the `k/8` grid
    TauAndGrid,
}

impl TScan {
    pub fn as_str(self) -> &'static str {
        match self {
            TScan::None => "none",
            TScan::Fixed => "fixed",
            TScan::Tau => "tau",
            TScan::TauAndGrid => "tau+grid",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    PremiseFails,
    Consistent,
    Counterexample,
}

impl Status {
    pub fn derive(premise_holds: bool, conclusion_holds: bool) -> Status {
        match (premise_holds, conclusion_holds) {
            (false, _) => Status::PremiseFails,
            (true, true) => Status::Consistent,
            (true, false) => Status::Counterexample,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::PremiseFails => "PremiseFails",
            Status::Consistent => "Consistent",
            Status::Counterexample => "Counterexample",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Split `V = A ∪ I` certifying membership in the extremal family: `I` is
/// independent, `|I| = |A| + 1`, and every `A`–`I` pair is adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyDecomposition {
    pub join_side: VertexSet,
    pub independent_side: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    None,
    Cycle(Box<OrientedCycle>),
    /// A toughness-minimizing cut and the number of components it leaves.
    Cut {
        cut: VertexSet,
        components: usize,
    },
    Family(FamilyDecomposition),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::None => Ok(()),
            Witness::Cycle(c) => write!(f, "cycle:{c}"),
            Witness::Cut { cut, components } => write!(f, "cut:{cut}/{components}"),
            Witness::Family(d) => write!(f, "family:A={},I={}", d.join_side, d.independent_side),
        }
    }
}

/// Which statement a verdict is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Condition(Condition),
    /// boundary-equality graphs belong to the extremal family
    Conj2,
}

impl CheckKind {
    pub fn id(self) -> &'static str {
        match self {
            CheckKind::Condition(c) => c.id(),
            CheckKind::Conj2 => "conj2",
        }
    }

    pub fn is_conjecture(self) -> bool {
        match self {
            CheckKind::Condition(c) => c.is_conjecture(),
            CheckKind::Conj2 => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub check: CheckKind,
    pub graph6: String,
    pub n: usize,
    /// Toughness parameter the premise was evaluated at, for the
    /// `t`-dependent statements.
    pub t_used: Option<Rational>,
    pub t_scan: TScan,
    /// σ₂ or δ, whichever the premise compares.
    pub measured: Rational,
    pub threshold: Option<Rational>,
    pub premise_holds: bool,
    pub hamiltonian: bool,
    pub conclusion_holds: bool,
    pub status: Status,
    pub witness: Witness,
}

impl Verdict {
    /// Re-derives the status from the stored flags.
    pub fn is_coherent(&self) -> bool {
        self.status == Status::derive(self.premise_holds, self.conclusion_holds)
    }
}

/// Per-graph values shared by every check.
#[derive(Debug, Clone)]
pub struct GraphFacts {
    pub n: usize,
    pub delta: usize,
    pub sigma2: Rational,
    pub tau: ToughnessResult,
    pub cycle: Option<OrientedCycle>,
}

impl GraphFacts {
    pub fn compute(g: &Graph) -> Self {
        GraphFacts {
            n: g.order(),
            delta: g.min_degree(),
            sigma2: sigma2(g),
            tau: toughness(g),
            cycle: hamiltonian_cycle(g),
        }
    }

    pub fn hamiltonian(&self) -> bool {
        self.cycle.is_some()
    }
}

fn compare(measured: Rational, threshold: Rational, strict: bool) -> bool {
    if strict {
        measured > threshold
    } else {
        measured >= threshold
    }
}

/// Grid of candidate toughness parameters `k/8` with `0 < k/8 <= cap`.
fn t_grid(cap: Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut k = 1;
    loop {
        let t = Rational::new(k, 8);
        if t > cap {
            break;
        }
        out.push(t);
        k += 1;
    }
    out
}

/// Candidate `t` values under `policy`, in evaluation order.
fn candidate_ts(
    condition: Condition,
    facts: &GraphFacts,
    policy: TPolicy,
) -> (Vec<Rational>, TScan) {
    let tau = facts.tau.value;
    let n = Rational::from(facts.n);
    let ts = match policy {
        TPolicy::Fixed(t) => return (vec![t], TScan::Fixed),
        TPolicy::Auto => {
            let mut ts = vec![tau];
            let one = Rational::ONE;
            let past_minimum =
                tau.is_infinite() || (tau + one) * (tau + one) > Rational::from_int(2) * n;
            if condition == Condition::Main && past_minimum {
                ts.extend(t_grid(tau.min(n)).into_iter().filter(|&t| t != tau));
            }
            ts
        }
        TPolicy::Grid => {
            let mut ts = vec![tau];
            ts.extend(t_grid(tau.min(n)).into_iter().filter(|&t| t != tau));
            ts
        }
    };
    let scan = if ts.len() > 1 {
        TScan::TauAndGrid
    } else {
        TScan::Tau
    };
    (ts, scan)
}

fn evaluate_at(
    g: &Graph,
    condition: Condition,
    facts: &GraphFacts,
    t: Rational,
) -> Result<(Rational, bool)> {
    let measured = if condition.uses_min_degree() {
        Rational::from(facts.delta)
    } else {
        facts.sigma2
    };
    let thr = threshold(condition, facts.n, t)?;
    // σ₂ = ∞ means there is no nonadjacent pair to violate the premise.
    let degree_ok = measured.is_infinite() || compare(measured, thr, condition.strict());
    let tau = facts.tau.value;
    let side_ok = match condition {
        Condition::Dirac | Condition::Ore => true,
        Condition::Jung => facts.n >= 11 && tau >= Rational::ONE,
        Condition::Bcl => facts.n >= 30 && tau > Rational::ONE,
        Condition::Bvms => tau >= Rational::from_int(2),
        Condition::BauerDegree | Condition::Main | Condition::Conj1 => {
            // τ is exact, so "t-tough" is t <= τ; the direct scan is kept for
            // externally supplied t.
            t.is_positive() && (t <= tau || is_t_tough(g, t))
        }
    };
    Ok((thr, degree_ok && side_ok))
}

/// Evaluates every candidate `t` and keeps the first one whose premise holds
/// (or the first candidate when none does).
pub fn check_with_facts(
    g: &Graph,
    condition: Condition,
    policy: TPolicy,
    facts: &GraphFacts,
) -> Result<Verdict> {
    if facts.n < 3 {
        return Err(Error::OrderBelowThree(facts.n));
    }
    let measured = if condition.uses_min_degree() {
        Rational::from(facts.delta)
    } else {
        facts.sigma2
    };
    let (t_used, t_scan, thr, premise) = if condition.uses_t() {
        let mut chosen = None;
        let (ts, scan) = candidate_ts(condition, facts, policy);
        for t in ts {
            let (thr, ok) = evaluate_at(g, condition, facts, t)?;
            if chosen.is_none() || ok {
                chosen = Some((Some(t), thr, ok));
            }
            if ok {
                break;
            }
        }
        let (t, thr, ok) = chosen.expect("at least one candidate t");
        (t, scan, thr, ok)
    } else {
        let (thr, ok) = evaluate_at(g, condition, facts, Rational::ZERO)?;
        (None, TScan::None, thr, ok)
    };
    let hamiltonian = facts.hamiltonian();
    let status = Status::derive(premise, hamiltonian);
    let witness = match &facts.cycle {
        Some(c) => Witness::Cycle(Box::new(c.clone())),
        None => Witness::Cut {
            cut: facts.tau.witness_cut,
            components: facts.tau.witness_components,
        },
    };
    Ok(Verdict {
        check: CheckKind::Condition(condition),
        graph6: to_graph6_string(g),
        n: facts.n,
        t_used,
        t_scan,
        measured,
        threshold: Some(thr),
        premise_holds: premise,
        hamiltonian,
        conclusion_holds: hamiltonian,
        status,
        witness,
    })
}

pub fn check(g: &Graph, condition: Condition, policy: TPolicy) -> Result<Verdict> {
    if g.order() < 3 {
        return Err(Error::OrderBelowThree(g.order()));
    }
    check_with_facts(g, condition, policy, &GraphFacts::compute(g))
}

/// Membership in `{H + K̄_{k+1} : |H| = k}`.
pub fn classify_family_h(g: &Graph) -> Option<FamilyDecomposition> {
    let n = g.order();
    if n.is_multiple_of(2) {
        return None;
    }
    let k = (n - 1) / 2;
    // every vertex of I has N(v) = A exactly
    (0..n).filter(|&v| g.degree(v) == k).find_map(|v| {
        let a = g.neighbors(v);
        let i = g.vertices() - a;
        let ok = g.is_independent(i) && i.iter().all(|w| g.neighbors(w) == a);
        ok.then_some(FamilyDecomposition {
            join_side: a,
            independent_side: i,
        })
    })
}

/// `2n/(τ+1) − 2`, the boundary value of σ₂ for the extremal family.
pub fn conj2_boundary(n: usize, tau: Rational) -> Rational {
    let two = Rational::from_int(2);
    two * Rational::from(n) / (tau + Rational::ONE) - two
}

pub fn check_conjecture2_with_facts(g: &Graph, facts: &GraphFacts) -> Result<Verdict> {
    if facts.n < 3 {
        return Err(Error::OrderBelowThree(facts.n));
    }
    let tau = facts.tau.value;
    let hamiltonian = facts.hamiltonian();
    let (thr, premise) = if tau.is_infinite() || !tau.is_positive() {
        (None, false)
    } else {
        let thr = conj2_boundary(facts.n, tau);
        (Some(thr), facts.sigma2 == thr && !hamiltonian)
    };
    let family = classify_family_h(g);
    let conclusion = family.is_some();
    let status = Status::derive(premise, conclusion);
    let witness = match (family, &facts.cycle) {
        (Some(d), _) => Witness::Family(d),
        (None, Some(c)) => Witness::Cycle(Box::new(c.clone())),
        (None, None) => Witness::Cut {
            cut: facts.tau.witness_cut,
            components: facts.tau.witness_components,
        },
    };
    Ok(Verdict {
        check: CheckKind::Conj2,
        graph6: to_graph6_string(g),
        n: facts.n,
        t_used: Some(tau),
        t_scan: TScan::Tau,
        measured: facts.sigma2,
        threshold: thr,
        premise_holds: premise,
        hamiltonian,
        conclusion_holds: conclusion,
        status,
        witness,
    })
}

/// Premise: `σ₂ = 2n/(τ+1) − 2` exactly and `G` non-hamiltonian.
/// Conclusion: `G` is in the extremal family.
pub fn check_conjecture2(g: &Graph) -> Result<Verdict> {
    if g.order() < 3 {
        return Err(Error::OrderBelowThree(g.order()));
    }
    check_conjecture2_with_facts(g, &GraphFacts::compute(g))
}
