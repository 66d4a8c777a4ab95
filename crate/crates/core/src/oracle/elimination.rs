use std::collections::{BTreeMap, BTreeSet};

use crate::decomp::{Kind, TreeDecomposition};
use crate::graph::{Graph, Vertex, VertexSet};

/// Strong decomposition induced by eliminating vertices in `order`.
///
/// The bag of `v` is `v` plus its later neighbours in the filled graph. Roots
/// of separate components are chained so the index tree stays connected, and
/// nested bags are contracted at the end. `order` must list every vertex of
/// `g` exactly once.
pub fn decomposition_from_ordering(g: &Graph, order: &[Vertex]) -> TreeDecomposition {
    assert_eq!(order.len(), g.n(), "ordering must cover every vertex once");
    if order.is_empty() {
        return TreeDecomposition::single_bag(VertexSet::new(), Kind::Strong);
    }
    let pos: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); order.len()];
    for &(u, v) in g.edges() {
        let (a, b) = (pos[&u], pos[&v]);
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut bags = Vec::with_capacity(order.len());
    let mut parents: Vec<Option<usize>> = vec![None; order.len()];
    for i in 0..order.len() {
        let later: Vec<usize> = adj[i].iter().copied().filter(|&j| j > i).collect();
        for (a, &x) in later.iter().enumerate() {
            for &y in &later[a + 1..] {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
        parents[i] = later.first().copied();
        let mut bag: VertexSet = later.iter().map(|&j| order[j]).collect();
        bag.insert(order[i]);
        bags.push(bag);
    }
    let roots: Vec<usize> = (0..order.len()).filter(|&i| parents[i].is_none()).collect();
    for pair in roots.windows(2) {
        parents[pair[0]] = Some(pair[1]);
    }
    TreeDecomposition::from_parents(&parents, bags, Kind::Strong)
        .expect("elimination forest is a tree once roots are chained")
        .compacted()
}
