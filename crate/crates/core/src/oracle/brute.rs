use std::collections::BTreeMap;

use crate::decomp::{Kind, TreeDecomposition};
use crate::graph::{Graph, Vertex, VertexSet, Weight, Weighting};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

fn tree_adjacent(td: &TreeDecomposition, x: usize, y: usize) -> bool {
    td.tree().parent(x) == Some(y) || td.tree().parent(y) == Some(x)
}

/// Definition check for `kind`, by exhaustive search over nodes and node pairs.
pub fn verify_decomposition_bruteforce(g: &Graph, td: &TreeDecomposition, kind: Kind) -> Verdict {
    let nodes = td.order();
    for x in 0..nodes {
        if let Some(v) = td.bag(x).iter().find(|&&v| !g.contains(v)) {
            return Verdict::Fails(format!("bag {x} holds foreign vertex {v}"));
        }
    }
    for v in g.vertices() {
        let holders: Vec<usize> = (0..nodes).filter(|&x| td.bag(x).contains(&v)).collect();
        if holders.is_empty() {
            return Verdict::Fails(format!("vertex {v} in no bag"));
        }
        // flood fill inside the holders using the tree adjacency
        let mut reached = vec![holders[0]];
        let mut grew = true;
        while grew {
            grew = false;
            for &x in &holders {
                if !reached.contains(&x) && reached.iter().any(|&y| tree_adjacent(td, x, y)) {
                    reached.push(x);
                    grew = true;
                }
            }
        }
        if reached.len() != holders.len() {
            return Verdict::Fails(format!("vertex {v} occupies a disconnected node set"));
        }
        if kind == Kind::Partition && holders.len() != 1 {
            return Verdict::Fails(format!("vertex {v} in {} bags of a partition", holders.len()));
        }
    }
    for &(u, v) in g.edges() {
        let in_one = (0..nodes).any(|x| td.bag(x).contains(&u) && td.bag(x).contains(&v));
        let in_pair = || {
            (0..nodes).any(|x| {
                (0..nodes).any(|y| {
                    tree_adjacent(td, x, y)
                        && (td.bag(x).contains(&u) || td.bag(y).contains(&u))
                        && (td.bag(x).contains(&v) || td.bag(y).contains(&v))
                })
            })
        };
        let ok = match kind {
            Kind::Strong => in_one,
            Kind::Weak | Kind::Partition => in_one || in_pair(),
        };
        if !ok {
            return Verdict::Fails(format!("edge {u}-{v} uncovered"));
        }
    }
    Verdict::Holds
}

/// `s`-slickness straight from the definition.
pub fn is_slick_bruteforce(g: &Graph, td: &TreeDecomposition, s: usize) -> bool {
    for y in 0..td.order() {
        let Some(x) = td.tree().parent(y) else { continue };
        for &v in td.bag(x) {
            if !td.bag(y).contains(&v) {
                continue;
            }
            let gained = td.bag(y).iter().filter(|&&w| g.has_edge(v, w) && !td.bag(x).contains(&w)).count();
            if gained < s {
                return false;
            }
        }
    }
    true
}

pub fn spreads_bruteforce(g: &Graph, td: &TreeDecomposition) -> BTreeMap<Vertex, usize> {
    g.vertices().map(|v| (v, (0..td.order()).filter(|&x| td.bag(x).contains(&v)).count())).collect()
}

/// Whether every component of `g - x_set` weighs at most `bound`.
///
/// Components are found by repeated edge relaxation of a label per vertex.
pub fn verify_separator(g: &Graph, gamma: &Weighting, x_set: &VertexSet, bound: Weight) -> bool {
    let rest: Vec<Vertex> = g.vertices().filter(|v| !x_set.contains(v)).collect();
    let mut label: BTreeMap<Vertex, Vertex> = rest.iter().map(|&v| (v, v)).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(u, v) in g.edges() {
            if let (Some(&a), Some(&b)) = (label.get(&u), label.get(&v)) {
                if a != b {
                    let low = a.min(b);
                    label.insert(u, low);
                    label.insert(v, low);
                    changed = true;
                }
            }
        }
    }
    let mut weight: BTreeMap<Vertex, Weight> = BTreeMap::new();
    for (&v, &l) in &label {
        *weight.entry(l).or_default() += gamma.get(v);
    }
    weight.values().all(|&w| w <= bound)
}
