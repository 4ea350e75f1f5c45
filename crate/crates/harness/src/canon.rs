//! Canonical labeling by partition refinement and individualization.
//!
//! The canonical code of a graph is the largest upper-triangle bit string
//! (graph6 order) over all leaves of the search tree. Twin vertices in a
//! branching cell are interchangeable, so only one per twin class is tried.

use toughham_core::{Graph, VertexSet};

/// Largest order the canonical code (upper triangle in a `u128`) supports.
pub const CANON_LIMIT: usize = 16;

type Partition = Vec<Vec<usize>>;

fn neighbor_count(g: &Graph, v: usize, cell: &[usize]) -> usize {
    let set: VertexSet = cell.iter().copied().collect();
    g.degree_in(v, set)
}

/// Splits cells until every vertex of a cell has the same number of
/// neighbors in every cell. Splits are ordered by count, so the result does
/// not depend on vertex labels.
fn refine(g: &Graph, mut p: Partition) -> Partition {
    loop {
        let mut changed = false;
        let mut i = 0;
        'cells: while i < p.len() {
            if p[i].len() == 1 {
                i += 1;
                continue;
            }
            for j in 0..p.len() {
                let splitter = p[j].clone();
                let mut keyed: Vec<(usize, usize)> = p[i]
                    .iter()
                    .map(|&v| (neighbor_count(g, v, &splitter), v))
                    .collect();
                keyed.sort_unstable();
                if keyed.first().map(|k| k.0) != keyed.last().map(|k| k.0) {
                    let mut parts: Vec<Vec<usize>> = Vec::new();
                    let mut last = usize::MAX;
                    for (k, v) in keyed {
                        if k != last {
                            parts.push(Vec::new());
                            last = k;
                        }
                        parts.last_mut().expect("pushed").push(v);
                    }
                    p.splice(i..=i, parts);
                    changed = true;
                    continue 'cells;
                }
            }
            i += 1;
        }
        if !changed {
            return p;
        }
    }
}

fn code_of(g: &Graph, order: &[usize]) -> u128 {
    // order[k] is the vertex placed at position k
    let n = order.len();
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

fn search(g: &Graph, p: Partition, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = p.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = p.iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = &p[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = p.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(g, refine(g, next), best);
    }
}

/// Canonical code and the vertex order realizing it.
pub fn canonical_order(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.order();
    assert!(
        n <= CANON_LIMIT,
        "canonical labeling supports up to {CANON_LIMIT} vertices"
    );
    let mut best = None;
    search(g, refine(g, vec![(0..n).collect()]), &mut best);
    best.expect("at least one leaf")
}

pub fn canonical_code(g: &Graph) -> u128 {
    canonical_order(g).0
}

/// The canonically relabeled graph: isomorphic inputs map to equal outputs.
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, order) = canonical_order(g);
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permute(&perm)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_code(a) == canonical_code(b)
}
