//! Cycle means of one-player weighted digraphs.

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use super::Rational;

/// Adjacency lists `u -> (v, weight)`; parallel arcs allowed.
pub(crate) type Adjacency = Vec<Vec<(usize, i128)>>;

/// For every node, the largest mean of a cycle reachable from it.
///
/// Every node must have an outgoing arc, so that some cycle is reachable.
pub(crate) fn max_reachable_cycle_mean(adj: &Adjacency) -> Vec<Rational> {
    let n = adj.len();
    let mut graph = DiGraph::<(), ()>::with_capacity(n, 0);
    let nodes: Vec<_> = (0..n).map(|_| graph.add_node(())).collect();
    for (u, arcs) in adj.iter().enumerate() {
        for &(v, _) in arcs {
            graph.add_edge(nodes[u], nodes[v], ());
        }
    }
    // Tarjan yields components in reverse topological order: successors first.
    let sccs = tarjan_scc(&graph);
    let mut comp = vec![usize::MAX; n];
    for (c, scc) in sccs.iter().enumerate() {
        for &node in scc {
            comp[node.index()] = c;
        }
    }
    let mut best: Vec<Option<Rational>> = vec![None; sccs.len()];
    for (c, scc) in sccs.iter().enumerate() {
        let members: Vec<usize> = scc.iter().map(|x| x.index()).collect();
        let mut value = karp(adj, &members, &comp, c);
        for &u in &members {
            for &(v, _) in &adj[u] {
                if comp[v] != c {
                    value = value.max(best[comp[v]]);
                }
            }
        }
        best[c] = value;
    }
    (0..n)
        .map(|u| best[comp[u]].expect("every node reaches a cycle"))
        .collect()
}

/// Maximum cycle mean inside one strongly connected component, or `None` if
/// the component carries no cycle.
fn karp(adj: &Adjacency, members: &[usize], comp: &[usize], c: usize) -> Option<Rational> {
    let k = members.len();
    let mut local = vec![usize::MAX; comp.len()];
    for (t, &u) in members.iter().enumerate() {
        local[u] = t;
    }
    let arcs: Vec<(usize, usize, i128)> = members
        .iter()
        .flat_map(|&u| {
            adj[u]
                .iter()
                .filter(|&&(v, _)| comp[v] == c)
                .map(move |&(v, w)| (u, v, w))
        })
        .map(|(u, v, w)| (local[u], local[v], w))
        .collect();
    if arcs.is_empty() {
        return None;
    }
    // d[t][v]: heaviest walk of exactly t arcs from member 0 to v.
    let mut d = vec![vec![None::<i128>; k]; k + 1];
    d[0][0] = Some(0);
    for t in 1..=k {
        for &(u, v, w) in &arcs {
            if let Some(du) = d[t - 1][u] {
                let cand = du + w;
                if d[t][v].is_none_or(|dv| cand > dv) {
                    d[t][v] = Some(cand);
                }
            }
        }
    }
    (0..k)
        .filter_map(|v| {
            let dk = d[k][v]?;
            (0..k)
                .filter_map(|t| d[t][v].map(|dt| Rational::new(dk - dt, (k - t) as i128)))
                .min()
        })
        .max()
}

/// All simple cycles as `(arc weights)`; exponential, for oracles only.
pub(crate) fn simple_cycles(adj: &Adjacency) -> Vec<(Vec<usize>, Rational)> {
    let n = adj.len();
    let mut out = Vec::new();
    for s in 0..n {
        let mut path = vec![s];
        let mut on_path = vec![false; n];
        on_path[s] = true;
        extend(adj, s, s, 0, &mut path, &mut on_path, &mut out);
    }
    out
}

fn extend(
    adj: &Adjacency,
    start: usize,
    u: usize,
    weight: i128,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<(Vec<usize>, Rational)>,
) {
    for &(v, w) in &adj[u] {
        if v == start {
            out.push((path.clone(), Rational::new(weight + w, path.len() as i128)));
        } else if v > start && !on_path[v] {
            on_path[v] = true;
            path.push(v);
            extend(adj, start, v, weight + w, path, on_path, out);
            path.pop();
            on_path[v] = false;
        }
    }
}

/// Per node, the best reachable simple-cycle mean by exhaustive enumeration.
pub(crate) fn max_reachable_cycle_mean_bruteforce(adj: &Adjacency) -> Vec<Rational> {
    let n = adj.len();
    let cycles = simple_cycles(adj);
    (0..n)
        .map(|s| {
            let mut seen = vec![false; n];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for &(v, _) in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            cycles
                .iter()
                .filter(|(nodes, _)| seen[nodes[0]])
                .map(|(_, mean)| *mean)
                .max()
                .expect("every node reaches a cycle")
        })
        .collect()
}
