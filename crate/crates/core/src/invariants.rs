//! Exact scalar invariants: components, toughness, σ₂, independence number,
//! `c_λ` and `δ_λ`.
//!
//! Toughness is found by scanning vertex subsets in order of size. The ratio
//! `|S| / c(G − S)` is bounded below by `|S| / (n − |S|)`, which grows with
//! `|S|`, so the scan stops at the first size whose bound cannot beat the
//! best ratio found so far.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

/// Components of `G − removed`, each as a vertex set, in ascending order of
/// their smallest vertex.
pub fn components(g: &Graph, removed: VertexSet) -> Vec<VertexSet> {
    let mut rest = g.vertices() - removed;
    let mut out = Vec::new();
    while let Some(v) = rest.min() {
        let comp = g.reach(v, rest);
        out.push(comp);
        rest = rest - comp;
    }
    out
}

/// `c(G − removed)` without materializing the components.
pub fn component_count(g: &Graph, removed: VertexSet) -> usize {
    let mut rest = g.vertices() - removed;
    let mut count = 0;
    while let Some(v) = rest.min() {
        rest = rest - g.reach(v, rest);
        count += 1;
    }
    count
}

/// Number of components of `G − removed` with at least `lambda` vertices.
/// `lambda = 0` counts every component.
pub fn c_lambda(g: &Graph, removed: VertexSet, lambda: usize) -> usize {
    components(g, removed)
        .into_iter()
        .filter(|c| c.len() >= lambda)
        .count()
}

/// Iterator over all `k`-subsets of `{0, .., n-1}` in increasing bitmask
/// order (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit: u128 = 1u128 << n;
    let mut cur: u128 = if k > n { limit } else { (1u128 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done || cur >= limit {
            return None;
        }
        let out = VertexSet::from_bits(cur as u64);
        if cur == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
        }
        Some(out)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughnessResult {
    /// `Infinity` exactly for complete graphs.
    pub value: Rational,
    /// A set attaining the minimum ratio; empty for complete and for
    /// disconnected graphs.
    pub witness_cut: VertexSet,
    /// `c(G − witness_cut)`.
    pub witness_components: usize,
}

impl ToughnessResult {
    /// Recomputes the witness ratio from scratch.
    pub fn verify_witness(&self, g: &Graph) -> bool {
        let c = component_count(g, self.witness_cut);
        if c != self.witness_components {
            return false;
        }
        match self.value {
            Rational::Infinity => g.is_complete(),
            v => c >= 2 && v == Rational::new(self.witness_cut.len() as i64, c as i64),
        }
    }
}

pub fn toughness(g: &Graph) -> ToughnessResult {
    let n = g.order();
    if g.is_complete() {
        return ToughnessResult {
            value: Rational::Infinity,
            witness_cut: VertexSet::EMPTY,
            witness_components: component_count(g, VertexSet::EMPTY),
        };
    }
    // best ratio as (|S|, c); a non-complete graph has a separating set of
    // size at most n - 2, so this is always overwritten.
    let mut best: Option<(usize, usize, VertexSet)> = None;
    for k in 0..=n.saturating_sub(2) {
        if let Some((s, c, _)) = best {
            // every S of size >= k has ratio >= k / (n - k) >= s / c
            if k * c >= s * (n - k) {
                break;
            }
        }
        for cut in subsets_of_size(n, k) {
            let c = component_count(g, cut);
            if c < 2 {
                continue;
            }
            let better = match best {
                None => true,
                Some((s, bc, _)) => k * bc < s * c,
            };
            if better {
                best = Some((k, c, cut));
            }
        }
    }
    let (s, c, cut) = best.expect("non-complete graph has a separating set");
    ToughnessResult {
        value: Rational::new(s as i64, c as i64),
        witness_cut: cut,
        witness_components: c,
    }
}

/// True iff `|S| >= t · c(G − S)` for every `S` with `c(G − S) >= 2`.
pub fn is_t_tough(g: &Graph, t: Rational) -> bool {
    if t <= Rational::ZERO {
        return true;
    }
    let (num, den) = match t {
        Rational::Infinity => return g.is_complete(),
        Rational::Finite(r) => (*r.numer() as i128, *r.denom() as i128),
    };
    let n = g.order();
    for k in 0..=n.saturating_sub(2) {
        // violation needs k * den < num * c with c <= n - k
        if (k as i128) * den >= num * (n - k) as i128 {
            break;
        }
        for cut in subsets_of_size(n, k) {
            let c = component_count(g, cut);
            if c >= 2 && (k as i128) * den < num * c as i128 {
                return false;
            }
        }
    }
    true
}

/// `min d(u) + d(v)` over nonadjacent pairs; `Infinity` for complete graphs.
pub fn sigma2(g: &Graph) -> Rational {
    let n = g.order();
    let mut best: Option<usize> = None;
    for u in 0..n {
        let non = g.vertices() - g.neighbors(u) - VertexSet::full(u + 1);
        for v in non.iter() {
            let s = g.degree(u) + g.degree(v);
            best = Some(best.map_or(s, |b| b.min(s)));
        }
    }
    best.map_or(Rational::Infinity, Rational::from)
}

fn mis_search(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + cand.len() <= *best {
        return;
    }
    // A vertex of degree <= 1 in the candidate graph is always safe to take.
    let mut pick = None;
    let mut max_deg = 0;
    for v in cand.iter() {
        let d = g.degree_in(v, cand);
        if d <= 1 {
            mis_search(g, cand - g.neighbors(v).with(v), size + 1, best);
            return;
        }
        if pick.is_none() || d > max_deg {
            pick = Some(v);
            max_deg = d;
        }
    }
    let v = pick.expect("non-empty");
    mis_search(g, cand - g.neighbors(v).with(v), size + 1, best);
    mis_search(g, cand.without(v), size, best);
}

/// `α(G[within])`.
pub fn independence_number_in(g: &Graph, within: VertexSet) -> usize {
    let mut best = 0;
    mis_search(g, within, 0, &mut best);
    best
}

pub fn independence_number(g: &Graph) -> usize {
    independence_number_in(g, g.vertices())
}

/// A maximum independent set; among all of them, the one with the
/// numerically smallest bitmask.
pub fn max_independent_set(g: &Graph) -> VertexSet {
    let alpha = independence_number(g);
    // Dropping vertices from the top keeps the smallest mask: a vertex stays
    // only if every maximum independent set of what remains needs it.
    let mut cand = g.vertices();
    for v in (0..g.order()).rev() {
        let without = cand.without(v);
        if independence_number_in(g, without) == alpha {
            cand = without;
        }
    }
    debug_assert!(g.is_independent(cand) && cand.len() == alpha);
    cand
}

/// `min |N(T)|` over connected vertex sets `T` with `|T| = lambda`.
pub fn delta_lambda(g: &Graph, lambda: usize) -> Result<usize> {
    let n = g.order();
    if lambda == 0 || lambda > n {
        return Err(Error::InvalidParameter(format!(
            "lambda must lie in [1, {n}], got {lambda}"
        )));
    }
    subsets_of_size(n, lambda)
        .filter(|&t| g.is_connected_set(t))
        .map(|t| g.set_neighborhood(t).len())
        .min()
        .ok_or(Error::NoConnectedSubgraph(lambda))
}

/// The scalars every premise mentions, computed once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBundle {
    pub n: usize,
    pub delta: usize,
    pub sigma2: Rational,
    pub alpha: usize,
    pub tau: ToughnessResult,
}

impl InvariantBundle {
    pub fn compute(g: &Graph) -> Self {
        InvariantBundle {
            n: g.order(),
            delta: g.min_degree(),
            sigma2: sigma2(g),
            alpha: independence_number(g),
            tau: toughness(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, empty, family_h, path, petersen};

    #[test]
    fn gosper_enumeration() {
        let all: Vec<_> = subsets_of_size(4, 2).map(|s| s.bits()).collect();
        assert_eq!(all, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(subsets_of_size(5, 0).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(64, 1).count(), 64);
        assert_eq!(subsets_of_size(10, 5).count(), 252);
    }

    #[test]
    fn component_partitions() {
        let c6 = cycle(6).unwrap();
        let comps = components(&c6, VertexSet::from_iter([0, 3]));
        assert_eq!(
            comps,
            vec![VertexSet::from_iter([1, 2]), VertexSet::from_iter([4, 5])]
        );

        let k23 = complete_bipartite(2, 3).unwrap();
        let comps = components(&k23, VertexSet::range(0, 2));
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));

        assert_eq!(components(&petersen(), VertexSet::EMPTY).len(), 1);
        assert!(components(&c6, c6.vertices()).is_empty());
    }

    #[test]
    fn c_lambda_counts() {
        let k23 = complete_bipartite(2, 3).unwrap();
        // removing the 4-cycle 0-2-1-3 leaves vertex 4
        let four_cycle = VertexSet::from_iter([0, 1, 2, 3]);
        assert_eq!(c_lambda(&k23, four_cycle, 1), 1);
        assert_eq!(c_lambda(&k23, four_cycle, 2), 0);
        let c6 = cycle(6).unwrap();
        let s = VertexSet::from_iter([0, 3]);
        assert_eq!(c_lambda(&c6, s, 1), components(&c6, s).len());
        assert_eq!(c_lambda(&c6, s, 5), 0);
    }

    #[test]
    fn toughness_values() {
        let k23 = complete_bipartite(2, 3).unwrap();
        let t = toughness(&k23);
        assert_eq!(t.value, Rational::new(2, 3));
        assert_eq!(t.witness_cut, VertexSet::range(0, 2));
        assert_eq!(t.witness_components, 3);
        assert!(t.verify_witness(&k23));

        assert_eq!(toughness(&complete(5).unwrap()).value, Rational::Infinity);
        assert_eq!(toughness(&complete(1).unwrap()).value, Rational::Infinity);
        assert_eq!(toughness(&petersen()).value, Rational::new(4, 3));
        assert_eq!(toughness(&cycle(7).unwrap()).value, Rational::ONE);
        assert_eq!(toughness(&path(4).unwrap()).value, Rational::new(1, 2));

        let disconnected = empty(3).unwrap();
        let t = toughness(&disconnected);
        assert_eq!(t.value, Rational::ZERO);
        assert_eq!(t.witness_cut, VertexSet::EMPTY);
        assert!(t.verify_witness(&disconnected));
    }

    #[test]
    fn t_tough_thresholds() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert!(is_t_tough(&k23, Rational::new(2, 3)));
        assert!(!is_t_tough(&k23, Rational::new(7, 10)));
        assert!(is_t_tough(&cycle(8).unwrap(), Rational::ONE));
        assert!(is_t_tough(&complete(4).unwrap(), Rational::from_int(100)));
        assert!(is_t_tough(&complete(4).unwrap(), Rational::Infinity));
        assert!(!is_t_tough(&cycle(4).unwrap(), Rational::Infinity));
        assert!(is_t_tough(&empty(3).unwrap(), Rational::ZERO));
        assert!(!is_t_tough(&empty(3).unwrap(), Rational::new(1, 100)));
    }

    #[test]
    fn sigma2_values() {
        assert_eq!(
            sigma2(&complete_bipartite(2, 3).unwrap()),
            Rational::from_int(4)
        );
        assert_eq!(sigma2(&cycle(6).unwrap()), Rational::from_int(4));
        assert_eq!(sigma2(&complete(3).unwrap()), Rational::Infinity);
        assert_eq!(sigma2(&petersen()), Rational::from_int(6));
    }

    #[test]
    fn independent_sets() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(max_independent_set(&k23), VertexSet::range(2, 5));
        assert_eq!(max_independent_set(&complete(4).unwrap()).len(), 1);
        assert_eq!(
            max_independent_set(&complete(4).unwrap()),
            VertexSet::singleton(0)
        );
        assert_eq!(max_independent_set(&empty(5).unwrap()), VertexSet::full(5));
        assert_eq!(independence_number(&petersen()), 4);
        // C5: {0,2} is the smallest mask among the five maximum sets
        assert_eq!(
            max_independent_set(&cycle(5).unwrap()),
            VertexSet::from_iter([0, 2])
        );
    }

    #[test]
    fn delta_lambda_values() {
        for g in [
            petersen(),
            cycle(6).unwrap(),
            complete_bipartite(2, 3).unwrap(),
        ] {
            assert_eq!(delta_lambda(&g, 1).unwrap(), g.min_degree());
        }
        assert_eq!(delta_lambda(&cycle(5).unwrap(), 2).unwrap(), 2);
        assert_eq!(delta_lambda(&complete(4).unwrap(), 2).unwrap(), 2);
        assert_eq!(
            delta_lambda(&empty(4).unwrap(), 2),
            Err(Error::NoConnectedSubgraph(2))
        );
        assert!(matches!(
            delta_lambda(&cycle(5).unwrap(), 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn bundle() {
        let g = family_h(&complete(3).unwrap()).unwrap();
        let b = InvariantBundle::compute(&g);
        assert_eq!(b.n, 7);
        assert_eq!(b.delta, 3);
        assert_eq!(b.sigma2, Rational::from_int(6));
        assert_eq!(b.alpha, 4);
        assert_eq!(b.tau.value, Rational::new(3, 4));
    }
}
