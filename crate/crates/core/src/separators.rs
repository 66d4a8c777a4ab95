//! Balanced separators driven by an explicit tree-decomposition.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::decomp::{validate, Kind, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet, Weight, Weighting};

/// A separator `X` and parts `G_1..G_m` with `V(G_i ∩ G_j) = X`.
///
/// Each part is stored by its vertex set and is the induced subgraph on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub x_set: VertexSet,
    pub parts: Vec<VertexSet>,
}

impl Separation {
    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// `V(G_i - X)`.
    pub fn outside(&self, i: usize) -> VertexSet {
        self.parts[i].difference(&self.x_set).copied().collect()
    }

    pub fn part_graph(&self, g: &Graph, i: usize) -> Graph {
        g.induced_unchecked(&self.parts[i])
    }

    /// Checks that the parts cover every vertex and edge of `g` and pairwise
    /// meet exactly in `X`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let fail = |detail: String| Err(Error::Certificate { name: "separation_shape", detail });
        if self.parts.iter().any(|p| !self.x_set.is_subset(p)) {
            return fail("a part misses part of X".into());
        }
        let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p.difference(&self.x_set) {
                if let Some(j) = owner.insert(v, i) {
                    return fail(format!("vertex {v} outside X lies in parts {j} and {i}"));
                }
            }
        }
        for v in g.vertices() {
            if !self.x_set.contains(&v) && !owner.contains_key(&v) {
                return fail(format!("vertex {v} is in no part"));
            }
        }
        for &(u, v) in g.edges() {
            if let (Some(a), Some(b)) = (owner.get(&u), owner.get(&v)) {
                if a != b {
                    return fail(format!("edge {u}-{v} joins parts {a} and {b}"));
                }
            }
        }
        Ok(())
    }
}

fn require_strong(g: &Graph, td: &TreeDecomposition) -> Result<()> {
    if td.kind() != Kind::Strong {
        return Err(Error::InvalidDecomposition(format!("separators need a strong decomposition, got {}", td.kind())));
    }
    validate(td, g)?.into_result()
}

/// Nodes picked by the peeling recursion, with the vertices each one
/// contributed to `X`.
pub(crate) fn peel(g: &Graph, gamma: &Weighting, td: &TreeDecomposition, q: usize) -> (Vec<usize>, VertexSet) {
    let tree = td.tree();
    let order = tree.preorder();
    let depth = tree.depths();
    let mut alive = g.vertex_set();
    let mut top: BTreeMap<Vertex, usize> = BTreeMap::new();
    for &x in &order {
        for &v in td.bag(x) {
            if alive.contains(&v) {
                top.entry(v).or_insert(x);
            }
        }
    }
    let mut z = Vec::new();
    let mut x_set = VertexSet::new();
    let mut q = q;
    while q > 0 {
        let total = gamma.of(&alive);
        if total.is_zero() {
            break;
        }
        let theta = total / Weight::from_integer(q as i64 + 1);
        let mut below = vec![Weight::zero(); tree.len()];
        for (v, &t) in &top {
            if alive.contains(v) {
                below[t] += gamma.get(*v);
            }
        }
        for &x in order.iter().rev() {
            if let Some(p) = tree.parent(x) {
                let acc = below[x];
                below[p] += acc;
            }
        }
        let mut pick: Option<usize> = None;
        for x in 0..tree.len() {
            let shared = match tree.parent(x) {
                Some(p) => gamma.of(td.bag(x).iter().filter(|v| alive.contains(v) && td.bag(p).contains(v))),
                None => Weight::zero(),
            };
            if below[x] + shared > theta && pick.is_none_or(|b| depth[x] > depth[b]) {
                pick = Some(x);
            }
        }
        let Some(x) = pick else { break };
        let mut in_sub = vec![false; tree.len()];
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            in_sub[y] = true;
            stack.extend_from_slice(tree.children(y));
        }
        let bag: VertexSet = td.bag(x).iter().copied().filter(|v| alive.contains(v)).collect();
        alive.retain(|v| !in_sub[top[v]] && !bag.contains(v));
        x_set.extend(bag);
        z.push(x);
        q -= 1;
    }
    (z, x_set)
}

/// At most `q` nodes whose bags leave components of weight at most
/// `γ(G)/(q+1)`.
pub fn tree_dec_sep(g: &Graph, gamma: &Weighting, td: &TreeDecomposition, q: usize) -> Result<Vec<usize>> {
    require_strong(g, td)?;
    Ok(peel(g, gamma, td, q).0)
}

/// At most `q(k+1)` vertices leaving components of weight at most `γ(G)/(q+1)`.
pub fn treewidth_sep(g: &Graph, gamma: &Weighting, td: &TreeDecomposition, q: usize) -> Result<VertexSet> {
    require_strong(g, td)?;
    let x = peel(g, gamma, td, q).1;
    certify_balance(g, gamma, td, q, &x)?;
    Ok(x)
}

/// [`treewidth_sep`] with every vertex of `s` weighing 1 and all others 0.
pub fn set_sep(g: &Graph, td: &TreeDecomposition, s: &VertexSet, q: usize) -> Result<VertexSet> {
    require_strong(g, td)?;
    check_subset(g, s)?;
    set_sep_unchecked(g, td, s, q)
}

pub(crate) fn set_sep_unchecked(g: &Graph, td: &TreeDecomposition, s: &VertexSet, q: usize) -> Result<VertexSet> {
    let gamma = Weighting::indicator(g, s);
    let x = peel(g, &gamma, td, q).1;
    certify_balance(g, &gamma, td, q, &x)?;
    Ok(x)
}

fn check_subset(g: &Graph, s: &VertexSet) -> Result<()> {
    match s.iter().find(|v| !g.contains(**v)) {
        Some(v) => Err(Error::InvalidInput(format!("target set holds unknown vertex {v}"))),
        None => Ok(()),
    }
}

fn certify_balance(g: &Graph, gamma: &Weighting, td: &TreeDecomposition, q: usize, x: &VertexSet) -> Result<()> {
    let size_cap = q * (td.width() + 1);
    if x.len() > size_cap {
        return Err(Error::Certificate {
            name: "separator_size",
            detail: format!("|X| = {} > q(k+1) = {size_cap}", x.len()),
        });
    }
    let bound = gamma.of_graph(g) / Weight::from_integer(q as i64 + 1);
    for c in g.components_avoiding(x) {
        let w = gamma.of(&c);
        if w > bound {
            return Err(Error::Certificate {
                name: "separator_balance",
                detail: format!("component of weight {w} exceeds γ(G)/(q+1) = {bound}"),
            });
        }
    }
    Ok(())
}

/// Groups the components of `g - x_set` into pseudo-components of weight at
/// most `w` such that any two groups together weigh more than `w`.
pub fn pseudo_components(g: &Graph, gamma: &Weighting, x_set: &VertexSet, w: Weight) -> Result<Separation> {
    if w <= Weight::zero() {
        return Err(Error::Parameter(format!("weight cap must be positive, got {w}")));
    }
    check_subset(g, x_set)?;
    let mut comps: Vec<(Weight, VertexSet)> = g.components_avoiding(x_set).into_iter().map(|c| (gamma.of(&c), c)).collect();
    if let Some((cw, c)) = comps.iter().find(|(cw, _)| *cw > w) {
        return Err(Error::Precondition(format!(
            "component containing vertex {} weighs {cw} > {w}",
            c.first().expect("components are non-empty")
        )));
    }
    comps.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.first().cmp(&b.1.first())));
    let mut groups: Vec<(Weight, VertexSet)> = Vec::new();
    for (cw, c) in comps {
        match groups.iter_mut().find(|(gw, _)| *gw + cw <= w) {
            Some(group) => {
                group.0 += cw;
                group.1.extend(c);
            }
            None => groups.push((cw, c)),
        }
    }
    'merge: loop {
        for i in 0..groups.len() {
            for j in i + 1..groups.len() {
                if groups[i].0 + groups[j].0 <= w {
                    let (jw, js) = groups.remove(j);
                    groups[i].0 += jw;
                    groups[i].1.extend(js);
                    continue 'merge;
                }
            }
        }
        break;
    }
    let outside_weight: Weight = groups.iter().map(|g| g.0).sum();
    let m = groups.len();
    let bound = pseudo_component_bound(outside_weight, w, m > 0);
    if m > bound {
        return Err(Error::Certificate { name: "pseudo_components_count", detail: format!("m = {m} > {bound}") });
    }
    for i in 0..m {
        for j in i + 1..m {
            if groups[i].0 + groups[j].0 <= w {
                return Err(Error::Certificate {
                    name: "pseudo_components_pair",
                    detail: format!("parts {i} and {j} weigh {} together, at most {w}", groups[i].0 + groups[j].0),
                });
            }
        }
    }
    let parts = groups.into_iter().map(|(_, c)| c.union(x_set).copied().collect()).collect();
    Ok(Separation { x_set: x_set.clone(), parts })
}

/// `max(⌈2γ/w⌉ - 1, 1)` for non-empty `G - X`, else 0.
pub(crate) fn pseudo_component_bound(outside_weight: Weight, w: Weight, non_empty: bool) -> usize {
    if !non_empty {
        return 0;
    }
    let ceil = (Weight::from_integer(2) * outside_weight / w).ceil().to_integer();
    usize::try_from(ceil - 1).unwrap_or(0).max(1)
}

/// `q := ⌈1/β⌉ - 1`, the node budget used by [`gen_separation`].
pub fn separation_q(beta: Weight) -> usize {
    (Weight::one() / beta).ceil().to_integer() as usize - 1
}

/// Separation into parts whose weight outside `X` is at most `β·γ(G)`,
/// with `|X| <= (⌈1/β⌉-1)(k+1)` and `m <= max(⌈2/β⌉-1, 1)`.
pub fn gen_separation(g: &Graph, gamma: &Weighting, td: &TreeDecomposition, beta: Weight) -> Result<Separation> {
    require_strong(g, td)?;
    gen_separation_unchecked(g, gamma, td, beta)
}

pub(crate) fn gen_separation_unchecked(g: &Graph, gamma: &Weighting, td: &TreeDecomposition, beta: Weight) -> Result<Separation> {
    if beta <= Weight::zero() {
        return Err(Error::Parameter(format!("β must be positive, got {beta}")));
    }
    let total = gamma.of_graph(g);
    let sep = if total.is_zero() {
        let parts = if g.is_empty() { Vec::new() } else { vec![g.vertex_set()] };
        Separation { x_set: VertexSet::new(), parts }
    } else {
        let q = separation_q(beta);
        let x = peel(g, gamma, td, q).1;
        certify_balance(g, gamma, td, q, &x)?;
        pseudo_components(g, gamma, &x, beta * total)?
    };
    sep.check(g)?;
    let q = separation_q(beta);
    let cap = q * (td.width() + 1);
    if sep.x_set.len() > cap {
        return Err(Error::Certificate { name: "gen_separation_size", detail: format!("|X| = {} > {cap}", sep.x_set.len()) });
    }
    let m_cap = pseudo_component_bound(Weight::one(), beta, true);
    if sep.m() > m_cap {
        return Err(Error::Certificate { name: "gen_separation_count", detail: format!("m = {} > {m_cap}", sep.m()) });
    }
    for i in 0..sep.m() {
        let w = gamma.of(&sep.outside(i));
        if w > beta * total {
            return Err(Error::Certificate {
                name: "gen_separation_balance",
                detail: format!("part {i} weighs {w} outside X, above β·γ(G) = {}", beta * total),
            });
        }
    }
    Ok(sep)
}

/// [`gen_separation`] under the 0/1 weighting of `s`, padded with copies of
/// `G[X]` so that at least two parts are returned.
pub fn separation_set_sep(g: &Graph, td: &TreeDecomposition, s: &VertexSet, beta: Weight) -> Result<Separation> {
    require_strong(g, td)?;
    check_subset(g, s)?;
    separation_set_sep_unchecked(g, td, s, beta)
}

pub(crate) fn separation_set_sep_unchecked(g: &Graph, td: &TreeDecomposition, s: &VertexSet, beta: Weight) -> Result<Separation> {
    let mut sep = gen_separation_unchecked(g, &Weighting::indicator(g, s), td, beta)?;
    while sep.parts.len() < 2 {
        sep.parts.push(sep.x_set.clone());
    }
    Ok(sep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::oracle::{min_fill_heuristic, verify_separator};

    fn r(n: i64, d: i64) -> Weight {
        Weight::new(n, d)
    }

    fn edge_path(n: usize) -> TreeDecomposition {
        TreeDecomposition::path((1..n).map(|i| [i - 1, i].into()).collect(), Kind::Strong).unwrap()
    }

    #[test]
    fn q_zero_and_zero_weights_pick_nothing() {
        let g = generate(&Family::Path { n: 9 }, 0).unwrap();
        let td = edge_path(9);
        assert!(tree_dec_sep(&g, &Weighting::uniform(&g), &td, 0).unwrap().is_empty());
        let zero = Weighting::indicator(&g, &VertexSet::new());
        assert!(tree_dec_sep(&g, &zero, &td, 4).unwrap().is_empty());
    }

    #[test]
    fn path_nine_two_nodes() {
        let g = generate(&Family::Path { n: 9 }, 0).unwrap();
        let td = edge_path(9);
        let gamma = Weighting::uniform(&g);
        let z = tree_dec_sep(&g, &gamma, &td, 2).unwrap();
        assert!(z.len() <= 2);
        let x: VertexSet = z.iter().flat_map(|&n| td.bag(n).iter().copied()).collect();
        assert!(verify_separator(&g, &gamma, &x, r(3, 1)));
    }

    #[test]
    fn grid_four_rows() {
        let g = generate(&Family::Grid { rows: 4, cols: 4 }, 0).unwrap();
        let td = crate::fixtures::grid_window_decomposition(4, 4);
        let gamma = Weighting::uniform(&g);
        let x = treewidth_sep(&g, &gamma, &td, 2).unwrap();
        assert!(x.len() <= 10);
        assert!(verify_separator(&g, &gamma, &x, r(16, 3)));
    }

    #[test]
    fn single_bag_takes_the_bag() {
        let g = generate(&Family::Complete { n: 4 }, 0).unwrap();
        let td = TreeDecomposition::single_bag(g.vertex_set(), Kind::Strong);
        assert_eq!(treewidth_sep(&g, &Weighting::uniform(&g), &td, 1).unwrap(), g.vertex_set());
    }

    #[test]
    fn set_sep_on_cycle() {
        let g = generate(&Family::Cycle { n: 9 }, 0).unwrap();
        let td = min_fill_heuristic(&g);
        let s = g.vertex_set();
        let x = set_sep(&g, &td, &s, 2).unwrap();
        assert!(verify_separator(&g, &Weighting::indicator(&g, &s), &x, r(3, 1)));
        assert!(set_sep(&g, &td, &VertexSet::new(), 2).unwrap().is_empty());
    }

    #[test]
    fn four_unit_components() {
        let g = Graph::with_vertices(4);
        let sep = pseudo_components(&g, &Weighting::uniform(&g), &VertexSet::new(), r(2, 1)).unwrap();
        assert_eq!(sep.m(), 2);
        assert_eq!(sep.parts, vec![VertexSet::from([0, 1]), VertexSet::from([2, 3])]);
    }

    #[test]
    fn pseudo_component_edge_cases() {
        let g = generate(&Family::Path { n: 3 }, 0).unwrap();
        let one = pseudo_components(&g, &Weighting::uniform(&g), &VertexSet::new(), r(3, 1)).unwrap();
        assert_eq!(one.m(), 1);
        let none = pseudo_components(&g, &Weighting::uniform(&g), &g.vertex_set(), r(1, 1)).unwrap();
        assert_eq!(none.m(), 0);
        let heavy = pseudo_components(&g, &Weighting::uniform(&g), &VertexSet::new(), r(2, 1));
        assert!(matches!(heavy, Err(Error::Precondition(_))));
    }

    #[test]
    fn beta_at_least_one_is_trivial() {
        let g = generate(&Family::Grid { rows: 3, cols: 3 }, 0).unwrap();
        let td = min_fill_heuristic(&g);
        let sep = gen_separation(&g, &Weighting::uniform(&g), &td, r(1, 1)).unwrap();
        assert!(sep.x_set.is_empty());
        assert_eq!(sep.parts, vec![g.vertex_set()]);
    }

    #[test]
    fn beta_third_on_grid() {
        let g = generate(&Family::Grid { rows: 4, cols: 4 }, 0).unwrap();
        let td = min_fill_heuristic(&g);
        let gamma = Weighting::uniform(&g);
        let sep = gen_separation(&g, &gamma, &td, r(1, 3)).unwrap();
        assert!(sep.m() <= 5);
        for i in 0..sep.m() {
            assert!(gamma.of(&sep.outside(i)) <= r(16, 3));
        }
    }

    #[test]
    fn set_sep_two_thirds_on_cycle() {
        let g = generate(&Family::Cycle { n: 12 }, 0).unwrap();
        let td = min_fill_heuristic(&g);
        assert_eq!(td.width(), 2);
        let s = g.vertex_set();
        let sep = separation_set_sep(&g, &td, &s, r(2, 3)).unwrap();
        assert_eq!(sep.m(), 2);
        assert!(sep.x_set.len() <= 3);
        for i in 0..2 {
            assert!(sep.outside(i).len() <= 8);
        }
    }

    #[test]
    fn target_inside_separator_pads() {
        let g = generate(&Family::Path { n: 5 }, 0).unwrap();
        let td = edge_path(5);
        let sep = separation_set_sep(&g, &td, &[2].into(), r(2, 3)).unwrap();
        assert_eq!(sep.m(), 2);
    }
}
