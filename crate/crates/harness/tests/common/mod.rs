#![allow(dead_code)]

use std::io::Write;
use std::sync::OnceLock;

use toughham_core::Graph;
use toughham_harness::corpus::unlabeled_levels;

/// Non-isomorphic graphs of orders 1..=8, generated once per test binary.
pub fn levels() -> &'static [Vec<Graph>] {
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    LEVELS.get_or_init(|| unlabeled_levels(8))
}

/// Connected graphs with `lo <= n <= hi` (`hi <= 8`).
pub fn connected(lo: usize, hi: usize) -> Vec<Graph> {
    levels()[lo - 1..hi]
        .iter()
        .flatten()
        .filter(|g| g.is_connected())
        .cloned()
        .collect()
}

/// Writes a line straight to the process stdout so it shows up even when
/// the test harness captures output.
pub fn say(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

fn component_count(adj: &[Vec<bool>], keep: &[bool]) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if !keep[s] || seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if keep[v] && adj[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

/// Plain backtracking from vertex 0.
pub fn is_hamiltonian(g: &Graph) -> bool {
    fn extend(adj: &[Vec<bool>], path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let last = *path.last().unwrap();
        if path.len() == adj.len() {
            return adj[last][path[0]];
        }
        for v in 0..adj.len() {
            if !used[v] && adj[last][v] {
                used[v] = true;
                path.push(v);
                if extend(adj, path, used) {
                    return true;
                }
                path.pop();
                used[v] = false;
            }
        }
        false
    }
    let adj = adjacency(g);
    if adj.len() < 3 {
        return false;
    }
    let mut used = vec![false; adj.len()];
    used[0] = true;
    extend(&adj, &mut vec![0], &mut used)
}

/// `(|S|, c(G − S))` minimizing the ratio over all subsets, with no pruning;
/// `None` when no subset leaves two components.
pub fn toughness(g: &Graph) -> Option<(i64, i64)> {
    let adj = adjacency(g);
    let n = adj.len();
    let mut best: Option<(i64, i64)> = None;
    for mask in 0u64..1 << n {
        let keep: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 0).collect();
        let c = component_count(&adj, &keep) as i64;
        let s = mask.count_ones() as i64;
        if c >= 2 && best.is_none_or(|(bs, bc)| s * bc < bs * c) {
            best = Some((s, c));
        }
    }
    best
}
