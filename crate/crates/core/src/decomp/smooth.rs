use super::work::WorkTree;
use super::{validate, validate_as, Kind, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Normalises a strong decomposition of width `k` so that every bag has
/// exactly `k + 1` vertices and adjacent bags differ in exactly one vertex
/// each way. The result has `n - k` nodes.
pub fn smooth_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<TreeDecomposition> {
    smooth_decomposition_with_width(g, td, td.width())
}

/// As [`smooth_decomposition`], padding bags up to `k + 1` for a chosen
/// `k >= width(td)`.
pub fn smooth_decomposition_with_width(g: &Graph, td: &TreeDecomposition, k: usize) -> Result<TreeDecomposition> {
    if td.kind() != Kind::Strong {
        return Err(Error::InvalidDecomposition(format!("smoothing needs a strong decomposition, got {}", td.kind())));
    }
    validate(td, g)?.into_result()?;
    if k < td.width() {
        return Err(Error::Parameter(format!("target width {k} is below the decomposition width {}", td.width())));
    }
    if g.n() <= k {
        return Err(Error::Parameter(format!("no smooth decomposition of width {k} exists for {} vertices", g.n())));
    }
    let size = k + 1;
    let mut w = WorkTree::from_decomposition(td);
    w.contract_nested();

    let mut short: Vec<usize> = w.alive_nodes().filter(|&x| w.bags[x].len() < size).collect();
    while let Some(x) = short.pop() {
        if !w.alive[x] {
            continue;
        }
        while w.bags[x].len() < size {
            let donor = w.adj[x]
                .iter()
                .find_map(|&y| w.bags[y].difference(&w.bags[x]).next().copied())
                .expect("a non-nested neighbour exists while a bag is short");
            w.bags[x].insert(donor);
            loop {
                let nested = w.adj[x].iter().copied().find(|&z| w.bags[z].is_subset(&w.bags[x]));
                match nested {
                    Some(z) => w.contract(z, x),
                    None => break,
                }
            }
        }
    }

    let edges: Vec<(usize, usize)> =
        w.alive_nodes().flat_map(|x| w.adj[x].iter().filter(move |&&y| x < y).map(move |&y| (x, y))).collect::<Vec<_>>();
    for (x, y) in edges {
        let out: Vec<_> = w.bags[x].difference(&w.bags[y]).copied().collect();
        let inn: Vec<_> = w.bags[y].difference(&w.bags[x]).copied().collect();
        debug_assert_eq!(out.len(), inn.len());
        if inn.len() < 2 {
            continue;
        }
        w.unlink(x, y);
        let mut prev = x;
        let mut bag: VertexSet = w.bags[x].clone();
        for i in 0..inn.len() - 1 {
            bag.remove(&out[i]);
            bag.insert(inn[i]);
            let node = w.push_node(bag.clone());
            w.link(prev, node);
            prev = node;
        }
        w.link(prev, y);
    }
    Ok(w.into_decomposition(Kind::Strong))
}

/// Turns a tree-partition into a strong decomposition on the same tree by
/// adding the parent's bag to every non-root bag.
pub fn partition_to_decomposition(g: &Graph, tp: &TreeDecomposition) -> Result<TreeDecomposition> {
    validate_as(tp, g, Kind::Partition)?.into_result()?;
    let tree = tp.tree();
    let bags = (0..tp.order())
        .map(|x| match tree.parent(x) {
            Some(p) => tp.bag(x).union(tp.bag(p)).copied().collect(),
            None => tp.bag(x).clone(),
        })
        .collect();
    TreeDecomposition::new(tree.clone(), bags, Kind::Strong)
}
