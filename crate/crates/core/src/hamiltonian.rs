//! Spanning-cycle search, the cycle-set index and D_λ-cycles.
//!
//! Both `c_λ(G − V(C))` and the attachment data of the components of
//! `G − V(C)` depend only on the vertex set of `C`, so D_λ questions are
//! answered over a 2ⁿ table of "which vertex sets carry a cycle" instead of
//! over cycle orderings. An ordering is rebuilt only when a witness is asked
//! for.

use crate::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{c_lambda, components, is_t_tough};
use crate::rational::Rational;

/// Largest vertex set handled by the subset DP in [`spanning_cycle`];
/// larger sets fall back to depth-first search.
pub const DP_LIMIT: usize = 25;

/// Largest graph for which [`CycleSetIndex`] can be built.
pub const INDEX_LIMIT: usize = 24;

/// A cycle of `g` through exactly the vertices of `within`, if any.
pub fn spanning_cycle(g: &Graph, within: VertexSet) -> Option<OrientedCycle> {
    if within.len() < 3 {
        return None;
    }
    let (sub, map) = g.induced(within);
    let local = if sub.order() <= DP_LIMIT {
        spanning_cycle_dp(&sub)
    } else {
        spanning_cycle_dfs(&sub)
    }?;
    let order = local.into_iter().map(|v| map[v]).collect();
    Some(OrientedCycle::new(g, order).expect("search yields a valid cycle"))
}

pub fn hamiltonian_cycle(g: &Graph) -> Option<OrientedCycle> {
    spanning_cycle(g, g.vertices())
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    hamiltonian_cycle(g).is_some()
}

/// Paths anchored at vertex 0. Entry `mask` (a subset of `1..k` shifted down
/// by one) holds, as a bitmask over the same shifted ids, every `e` such that
/// some path starts at 0, visits exactly `{0} ∪ mask` and ends at `e`.
fn spanning_cycle_dp(g: &Graph) -> Option<Vec<usize>> {
    let k = g.order();
    let rest = k - 1;
    // shifted adjacency: bit i stands for vertex i + 1
    let adj: Vec<u32> = (1..k)
        .map(|v| (g.neighbors(v).bits() >> 1) as u32)
        .collect();
    let start_adj = (g.neighbors(0).bits() >> 1) as u32;
    let full: u32 = (1u32 << rest) - 1;

    let mut reach = vec![0u32; 1usize << rest];
    for mask in 1..=full {
        if mask & (mask - 1) == 0 {
            reach[mask as usize] = mask & start_adj;
            continue;
        }
        let mut ends = 0u32;
        let mut m = mask;
        while m != 0 {
            let e = m.trailing_zeros();
            m &= m - 1;
            if adj[e as usize] & reach[(mask ^ (1 << e)) as usize] != 0 {
                ends |= 1 << e;
            }
        }
        reach[mask as usize] = ends;
    }

    let closing = reach[full as usize] & start_adj;
    if closing == 0 {
        return None;
    }
    let mut e = closing.trailing_zeros();
    let mut mask = full;
    let mut back = vec![e as usize + 1];
    loop {
        mask ^= 1 << e;
        if mask == 0 {
            break;
        }
        e = (reach[mask as usize] & adj[e as usize]).trailing_zeros();
        back.push(e as usize + 1);
    }
    let mut order = vec![0];
    order.extend(back.into_iter().rev());
    Some(order)
}

fn spanning_cycle_dfs(g: &Graph) -> Option<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, visited: VertexSet) -> bool {
        let last = *path.last().expect("non-empty");
        if visited == g.vertices() {
            return g.has_edge(last, 0);
        }
        let unvisited = g.vertices() - visited;
        // every unvisited vertex needs two usable neighbors
        let open = unvisited.with(last).with(0);
        if unvisited.iter().any(|v| g.degree_in(v, open) < 2) {
            return false;
        }
        if !g.is_connected_set(unvisited) {
            return false;
        }
        for next in g.neighbors_in_set(last, unvisited).iter() {
            path.push(next);
            if extend(g, path, visited.with(next)) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = vec![0];
    extend(g, &mut path, VertexSet::singleton(0)).then_some(path)
}

/// For every vertex subset `T`, whether `G[T]` has a spanning cycle.
#[derive(Clone)]
pub struct CycleSetIndex {
    n: usize,
    flags: Vec<u64>,
    count: usize,
}

impl CycleSetIndex {
    pub fn build(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n > INDEX_LIMIT {
            return Err(Error::OrderTooLarge(n, INDEX_LIMIT));
        }
        let size = 1usize << n;
        let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).bits() as u32).collect();
        // paths[mask]: endpoints e such that a path from min(mask) to e
        // visits exactly mask
        let mut paths = vec![0u32; size];
        let mut flags = vec![0u64; size.div_ceil(64)];
        let mut count = 0;
        for mask in 1..size as u32 {
            let low = mask.trailing_zeros();
            let tail = mask & (mask - 1);
            if tail == 0 {
                paths[mask as usize] = mask;
                continue;
            }
            let mut ends = 0u32;
            let mut m = tail;
            while m != 0 {
                let e = m.trailing_zeros();
                m &= m - 1;
                if adj[e as usize] & paths[(mask ^ (1 << e)) as usize] != 0 {
                    ends |= 1 << e;
                }
            }
            paths[mask as usize] = ends;
            if mask.count_ones() >= 3 && ends & adj[low as usize] != 0 {
                flags[mask as usize / 64] |= 1 << (mask % 64);
                count += 1;
            }
        }
        Ok(CycleSetIndex { n, flags, count })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn contains(&self, t: VertexSet) -> bool {
        let i = t.bits() as usize;
        t.bits() < 1u64 << self.n && self.flags[i / 64] >> (i % 64) & 1 == 1
    }

    /// Number of flagged sets.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.contains(VertexSet::full(self.n))
    }

    /// Flagged sets in ascending bitmask order.
    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.flags.iter().enumerate().flat_map(|(w, &word)| {
            VertexSet::from_bits(word)
                .iter()
                .map(move |b| VertexSet::from_bits((w * 64 + b) as u64))
        })
    }
}

/// Order of the largest component of `G − removed` (0 if nothing remains).
pub fn max_component_order(g: &Graph, removed: VertexSet) -> usize {
    components(g, removed)
        .iter()
        .map(|c| c.len())
        .max()
        .unwrap_or(0)
}

/// The first flagged set (by bitmask) whose complement splits into
/// components of order `< lambda`.
pub fn has_d_lambda_cycle(
    g: &Graph,
    index: &CycleSetIndex,
    lambda: usize,
) -> Result<Option<VertexSet>> {
    if lambda == 0 {
        return Err(Error::InvalidParameter("lambda must be at least 1".into()));
    }
    Ok(index.iter().find(|&t| max_component_order(g, t) < lambda))
}

/// How [`select_cycle`] ranks candidate D_{λ+1}-cycle sets. Ties that
/// survive both criteria go to the smallest bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CyclePolicy {
    /// Minimize `c_λ(G − T)` first, then maximize `|T|`.
    #[default]
    MinComponentsFirst,
    /// Maximize `|T|` first, then minimize `c_λ(G − T)`.
    LongestFirst,
}

pub fn select_cycle(
    g: &Graph,
    index: &CycleSetIndex,
    lambda_plus_one: usize,
    policy: CyclePolicy,
) -> Result<VertexSet> {
    if lambda_plus_one == 0 {
        return Err(Error::InvalidParameter(
            "lambda + 1 must be at least 1".into(),
        ));
    }
    let lambda = lambda_plus_one - 1;
    let key = |t: VertexSet| {
        let c = c_lambda(g, t, lambda);
        let len = usize::MAX - t.len();
        match policy {
            CyclePolicy::MinComponentsFirst => (c, len, t.bits()),
            CyclePolicy::LongestFirst => (len, c, t.bits()),
        }
    };
    index
        .iter()
        .filter(|&t| max_component_order(g, t) < lambda_plus_one)
        .min_by_key(|&t| key(t))
        .ok_or(Error::NoQualifyingCycle(lambda_plus_one))
}

/// A component `H` of `G − V(C)` together with how it hangs off `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentAttachment {
    pub vertices: VertexSet,
    pub order: usize,
    /// `W = N_C(V(H))`
    pub attachment: VertexSet,
    pub omega: usize,
    /// `d_G(H) = |N_G(V(H))|`
    pub degree: usize,
}

#[derive(Debug, Clone)]
pub struct DLambdaAnalysis {
    /// Smallest `λ >= 1` for which a D_λ-cycle exists.
    pub lambda_threshold: usize,
    /// `lambda_threshold - 1`: the graph has a D_{λ+1}-cycle but no D_λ-cycle.
    pub lambda: usize,
    pub policy: CyclePolicy,
    pub chosen_set: VertexSet,
    pub chosen_cycle: OrientedCycle,
    /// `c_λ(G − chosen_set)` for `λ = lambda`.
    pub c_lambda_value: usize,
    pub components: Vec<ComponentAttachment>,
}

pub fn lambda_threshold(
    g: &Graph,
    index: &CycleSetIndex,
    policy: CyclePolicy,
) -> Result<DLambdaAnalysis> {
    let threshold = index
        .iter()
        .map(|t| max_component_order(g, t) + 1)
        .min()
        .ok_or(Error::Acyclic)?;
    let chosen_set = select_cycle(g, index, threshold, policy)?;
    let chosen_cycle = spanning_cycle(g, chosen_set).expect("flagged set carries a cycle");
    let lambda = threshold - 1;
    let comps = components(g, chosen_set)
        .into_iter()
        .map(|h| {
            let nbrs = g.set_neighborhood(h);
            let attachment = nbrs & chosen_set;
            ComponentAttachment {
                vertices: h,
                order: h.len(),
                attachment,
                omega: attachment.len(),
                degree: nbrs.len(),
            }
        })
        .collect();
    Ok(DLambdaAnalysis {
        lambda_threshold: threshold,
        lambda,
        policy,
        chosen_set,
        chosen_cycle,
        c_lambda_value: c_lambda(g, chosen_set, lambda),
        components: comps,
    })
}

/// Builds the index and runs [`lambda_threshold`].
pub fn analyze(g: &Graph, policy: CyclePolicy) -> Result<DLambdaAnalysis> {
    lambda_threshold(g, &CycleSetIndex::build(g)?, policy)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma1Skip {
    NotTwoConnected,
    NotTTough,
    Hamiltonian,
    TooLarge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMargin {
    pub component: VertexSet,
    pub degree: usize,
    /// `n − (t + λ)(d_G(H) + 1)`
    pub margin: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lemma1Report {
    Precondition(Lemma1Skip),
    Checked {
        lambda: usize,
        chosen_set: VertexSet,
        margins: Vec<ComponentMargin>,
        holds: bool,
    },
}

impl Lemma1Report {
    pub fn min_margin(&self) -> Option<Rational> {
        match self {
            Lemma1Report::Checked { margins, .. } => margins.iter().map(|m| m.margin).min(),
            Lemma1Report::Precondition(_) => None,
        }
    }
}

/// For a `t`-tough 2-connected non-hamiltonian graph, checks
/// `n >= (t + λ)(d_G(H) + 1)` for every order-λ component `H` left by the
/// cycle of minimum `c_λ`.
pub fn check_lemma1(g: &Graph, t: Rational) -> Lemma1Report {
    if !g.is_two_connected() {
        return Lemma1Report::Precondition(Lemma1Skip::NotTwoConnected);
    }
    if !is_t_tough(g, t) {
        return Lemma1Report::Precondition(Lemma1Skip::NotTTough);
    }
    let analysis = match analyze(g, CyclePolicy::MinComponentsFirst) {
        Ok(a) => a,
        Err(Error::OrderTooLarge(..)) => return Lemma1Report::Precondition(Lemma1Skip::TooLarge),
        Err(e) => unreachable!("2-connected graphs have cycles: {e}"),
    };
    if analysis.lambda == 0 {
        return Lemma1Report::Precondition(Lemma1Skip::Hamiltonian);
    }
    let lambda = analysis.lambda;
    let n = Rational::from(g.order());
    let margins: Vec<_> = analysis
        .components
        .iter()
        .filter(|h| h.order == lambda)
        .map(|h| ComponentMargin {
            component: h.vertices,
            degree: h.degree,
            margin: n - (t + Rational::from(lambda)) * Rational::from(h.degree + 1),
        })
        .collect();
    let holds = margins.iter().all(|m| m.margin >= Rational::ZERO);
    Lemma1Report::Checked {
        lambda,
        chosen_set: analysis.chosen_set,
        margins,
        holds,
    }
}

#[derive(Debug, Clone)]
pub struct ExtensionOutcome {
    pub result: Option<OrientedCycle>,
    /// `deg_G(x, C) > n/(t+1) − 1`
    pub premise_held: bool,
    /// `t >= 1`, `g` is `t`-tough and the degree premise holds, so an
    /// extension is guaranteed to exist.
    pub lemma_applies: bool,
}

impl ExtensionOutcome {
    pub fn contract_violated(&self) -> bool {
        self.lemma_applies && self.result.is_none()
    }
}

/// `n/(t+1) − 1`, the degree bound shared by extension and the
/// minimum-degree toughness condition.
pub fn extension_degree_bound(n: usize, t: Rational) -> Rational {
    Rational::from(n) / (t + Rational::ONE) - Rational::ONE
}

/// Looks for a cycle on `V(C) ∪ {x}`.
pub fn extend_cycle(
    g: &Graph,
    c: &OrientedCycle,
    x: usize,
    t: Rational,
) -> Result<ExtensionOutcome> {
    c.validate(g)?;
    if x >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            order: g.order(),
        });
    }
    if c.contains(x) {
        return Err(Error::AlreadyOnCycle(x));
    }
    let on_cycle = c.vertex_set();
    let degree = Rational::from(g.degree_in(x, on_cycle));
    let premise_held = degree > extension_degree_bound(g.order(), t);
    let lemma_applies = premise_held && t >= Rational::ONE && is_t_tough(g, t);
    Ok(ExtensionOutcome {
        result: spanning_cycle(g, on_cycle.with(x)),
        premise_held,
        lemma_applies,
    })
}
