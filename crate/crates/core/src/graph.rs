//! Labeled simple graphs on at most 64 vertices.
//!
//! A [`Graph`] stores one `u64` adjacency row per vertex, so neighborhoods,
//! induced subgraphs and component searches are all word operations. Graphs
//! are immutable once built; [`GraphBuilder`] is the only way to add edges.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// A subset of `[0, 64)` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn range(lo: usize, hi: usize) -> Self {
        VertexSet(VertexSet::full(hi).0 & !VertexSet::full(lo).0)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with the given edges. Duplicate edges are
    /// merged; loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] >> u >> 1 << 1 << u)
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// `deg_G(v, S) = |N(v) ∩ S|`.
    pub fn degree_in(&self, v: usize, s: VertexSet) -> usize {
        (self.adj[v] & s.0).count_ones() as usize
    }

    /// `N(v) ∩ S`.
    pub fn neighbors_in_set(&self, v: usize, s: VertexSet) -> VertexSet {
        VertexSet(self.adj[v] & s.0)
    }

    /// `N(S) = (⋃_{x ∈ S} N(x)) \ S`.
    pub fn set_neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in s.iter() {
            acc |= self.adj[v];
        }
        VertexSet(acc & !s.0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// True iff `a` and `b` are disjoint and no edge joins them.
    pub fn are_remote(&self, a: VertexSet, b: VertexSet) -> bool {
        a.is_disjoint(b) && a.iter().all(|v| self.adj[v] & b.0 == 0)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// Vertices reachable from `start` inside `within` (which must contain
    /// `start`).
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// True iff `G[s]` is connected (the empty set counts as connected).
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.min() {
            None => true,
            Some(v) => self.reach(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// Connected, at least three vertices and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let all = self.vertices();
        (0..self.n).all(|v| self.is_connected_set(all.without(v)))
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `s`, relabeled to `0..|s|` in ascending order of
    /// the original ids. The second value maps new ids back to old ones.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut adj = vec![0u64; map.len()];
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    adj[i] |= 1u64 << j;
                }
            }
        }
        (Graph { n: map.len(), adj }, map)
    }

    /// Graph obtained by relabeling vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1u64 << perm[v];
            adj[perm[v]] |= 1u64 << perm[u];
        }
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// Mutable edge accumulator; [`GraphBuilder::build`] freezes it.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n, MAX_ORDER));
        }
        Ok(GraphBuilder { n, adj: vec![0; n] })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(self)
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj,
        }
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut b = GraphBuilder::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v)?;
        }
    }
    Ok(b.build())
}

pub fn empty(n: usize) -> Result<Graph> {
    Ok(GraphBuilder::new(n)?.build())
}

/// `K_{a,b}` with parts `{0..a-1}` and `{a..a+b-1}`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut g = GraphBuilder::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g.build())
}

/// `C_n` on `0, 1, .., n-1` in that cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let mut b = GraphBuilder::new(n)?;
    for v in 0..n {
        b.add_edge(v, (v + 1) % n)?;
    }
    Ok(b.build())
}

pub fn path(n: usize) -> Result<Graph> {
    let mut b = GraphBuilder::new(n)?;
    for v in 1..n {
        b.add_edge(v - 1, v)?;
    }
    Ok(b.build())
}

/// Outer 5-cycle `0..4`, inner pentagram `5..9`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("static construction")
}

/// Disjoint union plus every edge between the two parts. Vertices of `g`
/// keep their ids; those of `h` are shifted by `g.order()`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (a, b) = (g.order(), h.order());
    let mut out = GraphBuilder::new(a + b)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        out.add_edge(a + u, a + v)?;
    }
    for u in 0..a {
        for v in 0..b {
            out.add_edge(u, a + v)?;
        }
    }
    Ok(out.build())
}

/// Member of the extremal family: `h + K̄_{k+1}` for a `k`-vertex graph `h`.
/// The result has order `2k + 1`; its last `k + 1` vertices are independent
/// and adjacent to all of the first `k`.
pub fn family_h(h_part: &Graph) -> Result<Graph> {
    join(h_part, &empty(h_part.order() + 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(complete(3).unwrap().edge_count(), 3);
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
        assert_eq!(empty(4).unwrap().edge_count(), 0);
        assert_eq!(empty(0), Err(Error::ZeroOrder));
        assert_eq!(complete_bipartite(0, 3), Err(Error::ZeroOrder));
        assert!(matches!(empty(65), Err(Error::OrderTooLarge(65, 64))));
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = GraphBuilder::new(3).unwrap();
        assert_eq!(b.add_edge(1, 1).unwrap_err(), Error::SelfLoop(1));
        assert!(matches!(
            b.add_edge(0, 3),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        ));
    }

    #[test]
    fn join_matches_definitions() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(join(&empty(2).unwrap(), &empty(3).unwrap()).unwrap(), k23);
        assert_eq!(
            join(&complete(2).unwrap(), &complete(3).unwrap()).unwrap(),
            complete(5).unwrap()
        );
        let member = join(&complete(2).unwrap(), &empty(3).unwrap()).unwrap();
        assert_eq!(member, family_h(&complete(2).unwrap()).unwrap());
        assert_eq!(member.edge_count(), 7);
        assert!(matches!(
            join(&empty(40).unwrap(), &empty(30).unwrap()),
            Err(Error::OrderTooLarge(70, 64))
        ));
    }

    #[test]
    fn family_h_structure() {
        assert_eq!(
            family_h(&empty(2).unwrap()).unwrap(),
            complete_bipartite(2, 3).unwrap()
        );
        let g = family_h(&complete(3).unwrap()).unwrap();
        assert_eq!(g.order(), 7);
        let tail = VertexSet::range(3, 7);
        assert!(g.is_independent(tail));
        for v in tail.iter() {
            assert_eq!(g.neighbors(v), VertexSet::range(0, 3));
        }
        // Removing the join side leaves the 4 tail vertices isolated.
        let rest = g.vertices() - VertexSet::range(0, 3);
        assert!(rest.iter().all(|v| g.neighbors_in_set(v, rest).is_empty()));
        assert_eq!(rest.len(), 4);
    }

    #[test]
    fn neighborhoods() {
        let g = complete_bipartite(2, 3).unwrap();
        let two = VertexSet::range(0, 2);
        let three = VertexSet::range(2, 5);
        assert_eq!(g.neighbors_in_set(0, three), three);
        assert_eq!(g.set_neighborhood(three), two);
        assert_eq!(g.set_neighborhood(g.vertices()), VertexSet::EMPTY);
        assert_eq!(g.degree_in(2, two), 2);
    }

    #[test]
    fn remoteness() {
        let c6 = cycle(6).unwrap();
        let (a, b) = (VertexSet::singleton(0), VertexSet::singleton(3));
        assert!(c6.are_remote(a, b));
        assert!(c6.are_remote(b, a));
        assert!(!c6.are_remote(a, VertexSet::singleton(1)));
        assert!(!c6.are_remote(a.with(2), VertexSet::singleton(2).with(4)));
    }

    #[test]
    fn connectivity() {
        assert!(cycle(5).unwrap().is_two_connected());
        assert!(!path(4).unwrap().is_two_connected());
        assert!(petersen().is_two_connected());
        assert!(!empty(3).unwrap().is_connected());
        assert!(Graph::from_edges(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn induced_and_complement() {
        let c5 = cycle(5).unwrap();
        let (sub, map) = c5.induced(VertexSet::from_iter([0, 1, 2]));
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(sub, path(3).unwrap());
        // C5 is self-complementary: the complement is the pentagram.
        let comp = c5.complement();
        assert_eq!(comp.edge_count(), 5);
        assert!(comp.has_edge(0, 2) && !comp.has_edge(0, 1));
    }
}
