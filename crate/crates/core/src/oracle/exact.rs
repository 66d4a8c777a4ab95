use rayon::prelude::*;

use super::elimination::decomposition_from_ordering;
use crate::decomp::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Size caps for the exact routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 18, max_subsets: 1 << 18 }
    }
}

#[derive(Debug, Clone)]
pub struct ExactTreewidth {
    pub treewidth: usize,
    /// A decomposition of width exactly `treewidth`.
    pub witness: TreeDecomposition,
    pub ordering: Vec<Vertex>,
}

/// Exact treewidth with the default budget of 18 vertices.
pub fn exact_treewidth(g: &Graph) -> Result<ExactTreewidth> {
    exact_treewidth_with(g, OracleBudget::default())
}

/// Exact treewidth by dynamic programming over the set of already
/// eliminated vertices.
///
/// `tw(S)` is the best width achievable when `S` is eliminated first; the
/// cost of eliminating `v` after `S` is the number of vertices outside
/// `S ∪ {v}` reachable from `v` through `S`.
pub fn exact_treewidth_with(g: &Graph, budget: OracleBudget) -> Result<ExactTreewidth> {
    let n = g.n();
    if n > budget.max_vertices || n >= 32 || (1u64 << n) > budget.max_subsets {
        return Err(Error::OverBudget { n, cap: budget.max_vertices });
    }
    let ids: Vec<Vertex> = g.vertices().collect();
    let index = |v: Vertex| ids.binary_search(&v).expect("vertex of g");
    let nbr: Vec<u32> = ids
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << index(w))))
        .collect();

    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let q = |s: u32, v: usize| -> u32 {
        let mut reached = 1u32 << v;
        let mut frontier = reached;
        let mut outside = 0u32;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= nbr[u];
            }
            outside |= next & !s & !(1 << v);
            next &= s & !reached;
            reached |= next;
            frontier = next;
        }
        outside.count_ones()
    };

    let size = 1usize << n;
    let mut best = vec![u8::MAX; size];
    let mut choice = vec![0u8; size];
    best[0] = 0;
    // layer by popcount so each layer reads only the finished previous one
    let mut layers: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for s in 0..size as u32 {
        layers[s.count_ones() as usize].push(s);
    }
    for layer in layers.iter().skip(1) {
        let results: Vec<(u32, u8, u8)> = layer
            .par_iter()
            .map(|&s| {
                let mut top = (u8::MAX, 0u8);
                let mut rest = s;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let prev = s & !(1 << v);
                    let cost = best[prev as usize].max(q(prev, v) as u8);
                    if cost < top.0 {
                        top = (cost, v as u8);
                    }
                }
                (s, top.0, top.1)
            })
            .collect();
        for (s, b, c) in results {
            best[s as usize] = b;
            choice[s as usize] = c;
        }
    }

    let mut ordering = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize] as usize;
        ordering.push(ids[v]);
        s &= !(1 << v);
    }
    ordering.reverse();
    let treewidth = best[full as usize] as usize;
    let witness = decomposition_from_ordering(g, &ordering);
    debug_assert_eq!(witness.width(), treewidth);
    Ok(ExactTreewidth { treewidth, witness, ordering })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::validate;
    use crate::graph::{generate, Family};

    fn tw(f: Family) -> usize {
        let g = generate(&f, 1).unwrap();
        let r = exact_treewidth(&g).unwrap();
        assert!(validate(&r.witness, &g).unwrap().is_valid());
        assert_eq!(r.witness.width(), r.treewidth);
        r.treewidth
    }

    #[test]
    fn fixture_table() {
        assert_eq!(tw(Family::Path { n: 9 }), 1);
        assert_eq!(tw(Family::TreeRandom { n: 15 }), 1);
        assert_eq!(tw(Family::Cycle { n: 6 }), 2);
        assert_eq!(tw(Family::Grid { rows: 3, cols: 3 }), 3);
        assert_eq!(tw(Family::Complete { n: 5 }), 4);
        assert_eq!(tw(Family::Fan { n: 10 }), 2);
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(exact_treewidth(&Graph::new()).unwrap().treewidth, 0);
        assert_eq!(exact_treewidth(&Graph::with_vertices(3)).unwrap().treewidth, 0);
    }

    #[test]
    fn refuses_over_budget() {
        let g = generate(&Family::Path { n: 19 }, 0).unwrap();
        assert!(matches!(exact_treewidth(&g), Err(Error::OverBudget { n: 19, cap: 18 })));
    }
}
