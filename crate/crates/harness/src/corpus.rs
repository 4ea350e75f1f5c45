//! Graph sources: graph6 files, a labeled enumerator, an isomorphism-free
//! generator and a seeded random model.

use std::collections::HashSet;
use std::io::BufRead;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toughham_core::graph6::HEADER;
use toughham_core::{parse_graph6, Graph, Graph6Error, VertexSet};

use crate::canon::{canonical_order, CANON_LIMIT};

pub const LABELED_LIMIT: usize = 7;
pub const UNLABELED_LIMIT: usize = 10;

/// Every labeled graph on `n` vertices, ordered by the graph6 bit string
/// read as a binary number.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(
        (1..=LABELED_LIMIT).contains(&n),
        "labeled enumeration supports 1..={LABELED_LIMIT} vertices"
    );
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |mask| {
        let edges: Vec<(usize, usize)> = (0..m)
            .filter(|&b| mask >> (m - 1 - b) & 1 == 1)
            .map(|b| pairs[b])
            .collect();
        Graph::from_edges(n, &edges).expect("valid pairs")
    })
}

fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permute(&perm)
}

/// One canonical representative per isomorphism class, for every order
/// `1..=max_n`. Level `k` lists its graphs by ascending canonical code.
pub fn unlabeled_levels(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(
        (1..=UNLABELED_LIMIT.min(CANON_LIMIT)).contains(&max_n),
        "isomorphism-free generation supports 1..={UNLABELED_LIMIT} vertices"
    );
    let mut levels = vec![vec![Graph::from_edges(1, &[]).expect("K1")]];
    for n in 2..=max_n {
        let mut seen: HashSet<u128> = HashSet::new();
        let mut found: Vec<(u128, Graph)> = Vec::new();
        for parent in &levels[n - 2] {
            let base: Vec<(usize, usize)> = parent.edges().collect();
            for nbrs in 0u64..1 << (n - 1) {
                let mut edges = base.clone();
                edges.extend(VertexSet::from_bits(nbrs).iter().map(|u| (u, n - 1)));
                let child = Graph::from_edges(n, &edges).expect("valid edges");
                let (code, order) = canonical_order(&child);
                if seen.insert(code) {
                    found.push((code, relabel(&child, &order)));
                }
            }
        }
        found.sort_unstable_by_key(|(code, _)| *code);
        levels.push(found.into_iter().map(|(_, g)| g).collect());
    }
    levels
}

/// Non-isomorphic graphs of order `n`, optionally only the connected ones.
pub fn unlabeled_graphs(n: usize, connected: bool) -> Vec<Graph> {
    let mut all = unlabeled_levels(n).pop().expect("non-empty");
    if connected {
        all.retain(Graph::is_connected);
    }
    all
}

/// Connected non-isomorphic graphs for every order in `lo..=hi`.
pub fn connected_corpus(lo: usize, hi: usize) -> Vec<Graph> {
    unlabeled_levels(hi)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| i + 1 >= lo)
        .flat_map(|(_, level)| level.into_iter().filter(Graph::is_connected))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomModel {
    pub seed: u64,
    pub n: usize,
    pub p: f64,
    pub count: usize,
}

/// `G(n, p)` samples from a ChaCha8 stream seeded with `seed`.
pub fn random_graphs(model: RandomModel) -> impl Iterator<Item = Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(model.seed);
    (0..model.count).map(move |_| random_graph(&mut rng, model.n, model.p))
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// A line of graph6 input that could not be decoded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedLine {
    /// 1-based
    pub line: usize,
    /// byte offset of the offending byte in the whole input
    pub offset: usize,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Record {
    Graph { line: usize, graph: Graph },
    Skipped(SkippedLine),
}

/// Decodes a graph6 stream line by line. A `>>graph6<<` header is accepted
/// as a prefix of the first line; empty and malformed lines become
/// [`Record::Skipped`], so every input line yields exactly one record.
pub fn read_graph6<R: BufRead>(mut input: R) -> std::io::Result<Vec<Record>> {
    let mut out = Vec::new();
    let mut buf = Vec::new();
    let mut offset = 0;
    let mut line = 0;
    loop {
        buf.clear();
        let read = input.read_until(b'\n', &mut buf)?;
        if read == 0 {
            return Ok(out);
        }
        line += 1;
        let mut body: &[u8] = &buf;
        let mut start = offset;
        if line == 1 && body.starts_with(HEADER) {
            body = &body[HEADER.len()..];
            start += HEADER.len();
        }
        let trimmed = body.strip_suffix(b"\n").unwrap_or(body);
        let trimmed = trimmed.strip_suffix(b"\r").unwrap_or(trimmed);
        out.push(match parse_graph6(trimmed) {
            Ok(graph) => Record::Graph { line, graph },
            Err(Graph6Error { offset: at, kind }) => Record::Skipped(SkippedLine {
                line,
                offset: start + at,
                error: kind.to_string(),
            }),
        });
        offset += read;
    }
}
