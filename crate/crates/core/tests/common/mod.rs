//! Reference implementations that share nothing with the library beyond
//! `Graph::has_edge` and `Graph::order`.

#![allow(dead_code)]

use rand::Rng;
use toughham_core::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Components of the subgraph induced by the vertices with `keep[v]`.
pub fn component_count(adj: &[Vec<bool>], keep: &[bool]) -> usize {
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

/// Hamiltonicity by plain backtracking from vertex 0.
pub fn is_hamiltonian(g: &Graph) -> bool {
    let adj = adjacency(g);
    let n = adj.len();
    if n < 3 {
        return false;
    }
    fn extend(adj: &[Vec<bool>], path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = adj.len();
        let last = *path.last().unwrap();
        if path.len() == n {
            return adj[last][path[0]];
        }
        for v in 0..n {
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
    let mut used = vec![false; n];
    used[0] = true;
    extend(&adj, &mut vec![0], &mut used)
}

/// Toughness as `(|S|, c(G − S))` minimizing the ratio over every subset;
/// `None` for complete graphs.
pub fn toughness(g: &Graph) -> Option<(i64, i64)> {
    let adj = adjacency(g);
    let n = adj.len();
    let mut best: Option<(i64, i64)> = None;
    for mask in 0u64..1 << n {
        let keep: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 0).collect();
        let c = component_count(&adj, &keep) as i64;
        if c < 2 {
            continue;
        }
        let s = mask.count_ones() as i64;
        if best.is_none_or(|(bs, bc)| s * bc < bs * c) {
            best = Some((s, c));
        }
    }
    best
}

pub fn independence_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    (0u64..1 << n)
        .filter(|&m| {
            (0..n).all(|u| (0..n).all(|v| !(m >> u & 1 == 1 && m >> v & 1 == 1 && adj[u][v])))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Minimum degree sum over nonadjacent pairs; `None` for complete graphs.
pub fn sigma2(g: &Graph) -> Option<usize> {
    let adj = adjacency(g);
    let n = adj.len();
    let deg: Vec<usize> = adj
        .iter()
        .map(|r| r.iter().filter(|&&b| b).count())
        .collect();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !adj[u][v])
        .map(|(u, v)| deg[u] + deg[v])
        .min()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
