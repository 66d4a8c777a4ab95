use std::collections::{BTreeSet, HashSet};

use super::elimination::decomposition_from_ordering;
use crate::decomp::TreeDecomposition;
use crate::graph::{Graph, Vertex};

/// Greedy min-fill elimination order; ties go to smaller degree, then
/// smaller id.
pub fn min_fill_ordering(g: &Graph) -> Vec<Vertex> {
    let ids: Vec<Vertex> = g.vertices().collect();
    let index = |v: Vertex| ids.binary_search(&v).expect("vertex of g");
    let mut adj: Vec<HashSet<usize>> = ids.iter().map(|&v| g.neighbors(v).iter().map(|&w| index(w)).collect()).collect();
    let fill = |adj: &[HashSet<usize>], u: usize| -> usize {
        let nb: Vec<usize> = adj[u].iter().copied().collect();
        let mut missing = 0;
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !adj[a].contains(&b) {
                    missing += 1;
                }
            }
        }
        missing
    };
    let mut key: Vec<(usize, usize, usize)> = (0..ids.len()).map(|u| (fill(&adj, u), adj[u].len(), u)).collect();
    let mut queue: BTreeSet<(usize, usize, usize)> = key.iter().copied().collect();
    let mut order = Vec::with_capacity(ids.len());
    while let Some((_, _, v)) = queue.pop_first() {
        order.push(ids[v]);
        let mut nb: Vec<usize> = adj[v].iter().copied().collect();
        nb.sort_unstable();
        let mut touched: BTreeSet<usize> = nb.iter().copied().collect();
        for &u in &nb {
            adj[u].remove(&v);
        }
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if adj[a].insert(b) {
                    adj[b].insert(a);
                    let (small, large) = if adj[a].len() <= adj[b].len() { (a, b) } else { (b, a) };
                    touched.extend(adj[small].iter().copied().filter(|c| adj[large].contains(c)));
                }
            }
        }
        adj[v].clear();
        for u in touched {
            if queue.remove(&key[u]) {
                key[u] = (fill(&adj, u), adj[u].len(), u);
                queue.insert(key[u]);
            }
        }
    }
    order
}

/// Strong decomposition from the min-fill ordering. Always valid; no
/// optimality claim.
pub fn min_fill_heuristic(g: &Graph) -> TreeDecomposition {
    decomposition_from_ordering(g, &min_fill_ordering(g))
}
