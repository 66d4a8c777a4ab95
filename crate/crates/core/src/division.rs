//! Divisions of index trees, quotient decompositions, and the builders that
//! use them to bound the order of a decomposition.

use serde::Serialize;

use crate::decomp::{is_slick, smooth_decomposition_with_width, spread_bound_check, validate, Kind, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::slick::slick_main;
use crate::tree::RootedTree;
use crate::Trace;

/// Edge-disjoint subtrees `T_1..T_m` covering a rooted tree, where `T_1`
/// holds the root and each later `T_i` meets the earlier ones only in its
/// root `r_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Division {
    /// Sorted node lists.
    pub parts: Vec<Vec<usize>>,
    /// `r_i`; `roots[0]` is the root of the host tree.
    pub roots: Vec<usize>,
}

impl Division {
    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// The single-part division.
    pub fn whole(tree: &RootedTree) -> Self {
        Division { parts: vec![(0..tree.len()).collect()], roots: vec![tree.root()] }
    }

    /// Checks the definition against `tree`; the error names the first
    /// failing clause.
    pub fn check(&self, tree: &RootedTree) -> std::result::Result<(), String> {
        if self.parts.is_empty() || self.parts.len() != self.roots.len() {
            return Err("division needs one root per part and at least one part".into());
        }
        let len = tree.len();
        let mut member = vec![vec![false; len]; self.m()];
        for (i, part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                return Err(format!("part {i} is empty"));
            }
            for &x in part {
                if x >= len {
                    return Err(format!("part {i} names node {x} outside the tree"));
                }
                member[i][x] = true;
            }
            let tops: Vec<usize> = part.iter().copied().filter(|&x| tree.parent(x).is_none_or(|p| !member[i][p])).collect();
            if tops != [self.roots[i]] {
                return Err(format!("part {i} is not a subtree rooted at {}", self.roots[i]));
            }
        }
        if self.roots[0] != tree.root() {
            return Err("the first part must contain the root of the tree".into());
        }
        let mut covered = vec![false; len];
        covered[tree.root()] = true;
        for (p, c) in tree.edges() {
            let owners = (0..self.m()).filter(|&i| member[i][p] && member[i][c]).count();
            if owners != 1 {
                return Err(format!("tree edge {p}-{c} lies in {owners} parts"));
            }
            covered[c] = true;
        }
        let mut seen = vec![false; len];
        for (i, part) in self.parts.iter().enumerate() {
            for &x in part {
                if seen[x] && !(i > 0 && x == self.roots[i]) {
                    return Err(format!("node {x} of part {i} already lies in an earlier part"));
                }
                seen[x] = true;
            }
            if i > 0 && !self.parts[..i].iter().any(|p| p.binary_search(&self.roots[i]).is_ok()) {
                return Err(format!("root {} of part {i} is not in an earlier part", self.roots[i]));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err("parts do not cover every node".into());
        }
        Ok(())
    }
}

/// Live remainder of a tree while subtrees are peeled off its bottom.
struct Peeler<'a> {
    tree: &'a RootedTree,
    order: Vec<usize>,
    depth: Vec<usize>,
    live: Vec<bool>,
    weight: &'a [u64],
}

impl<'a> Peeler<'a> {
    fn new(tree: &'a RootedTree, weight: &'a [u64]) -> Self {
        Peeler { tree, order: tree.preorder(), depth: tree.depths(), live: vec![true; tree.len()], weight }
    }

    fn sums(&self) -> Vec<u64> {
        let mut sum: Vec<u64> = (0..self.tree.len()).map(|x| if self.live[x] { self.weight[x] } else { 0 }).collect();
        for &x in self.order.iter().rev() {
            if let (true, Some(p)) = (self.live[x], self.tree.parent(x)) {
                sum[p] += sum[x];
            }
        }
        sum
    }

    fn total(&self) -> u64 {
        self.sums()[self.tree.root()]
    }

    fn live_children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.tree.children(v).iter().copied().filter(|&c| self.live[c])
    }

    fn subtree(&self, v: usize, out: &mut Vec<usize>) {
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend(self.live_children(x));
        }
    }

    /// Deepest `v` with `γ(T_v) >= k - 1 + γ(v)`, plus its first children
    /// until their subtrees weigh at least `k - 1`.
    fn find(&self, k: u64) -> (usize, Vec<usize>) {
        let sum = self.sums();
        let v = (0..self.tree.len())
            .filter(|&x| self.live[x] && sum[x] >= k - 1 + self.weight[x])
            .fold(None, |best: Option<usize>, x| match best {
                Some(b) if self.depth[b] >= self.depth[x] => Some(b),
                _ => Some(x),
            })
            .expect("the root qualifies whenever the total weight is at least 2k-2");
        let mut nodes = vec![v];
        let mut acc = 0;
        for c in self.live_children(v) {
            if acc >= k - 1 {
                break;
            }
            acc += sum[c];
            self.subtree(c, &mut nodes);
        }
        nodes.sort_unstable();
        (v, nodes)
    }

    fn remove(&mut self, root: usize, nodes: &[usize]) {
        for &x in nodes {
            if x != root {
                self.live[x] = false;
            }
        }
    }

    fn remainder(&self) -> Vec<usize> {
        (0..self.tree.len()).filter(|&x| self.live[x]).collect()
    }
}

fn assemble(tree: &RootedTree, first: Vec<usize>, peeled: Vec<(usize, Vec<usize>)>) -> Division {
    let mut parts = vec![first];
    let mut roots = vec![tree.root()];
    for (r, nodes) in peeled.into_iter().rev() {
        roots.push(r);
        parts.push(nodes);
    }
    Division { parts, roots }
}

/// A subtree `T'` with `k <= |T'| <= 2k - 2` whose root is its only node
/// adjacent to the rest of the tree. Returns the sorted nodes and the root.
pub fn find_subtree(tree: &RootedTree, k: usize) -> Result<(Vec<usize>, usize)> {
    if k < 2 || k > tree.len() {
        return Err(Error::Parameter(format!("need 2 <= k <= {} nodes, got k = {k}", tree.len())));
    }
    let ones = vec![1u64; tree.len()];
    let (v, nodes) = Peeler::new(tree, &ones).find(k as u64);
    Ok((nodes, v))
}

/// Division into at most `|V(T)|/(k-1)` parts of at most `2k - 2` nodes.
///
/// Parts peeled off the bottom have at least `k` nodes. When the remainder
/// is too large for one part but too small for another peel, it is split in
/// two; if no split keeps both halves at `k` nodes or more, those two parts
/// may fall below `k`.
pub fn partition_tree(tree: &RootedTree, k: usize) -> Result<Division> {
    let n = tree.len();
    if k < 2 || n < k {
        return Err(Error::Parameter(format!("need k >= 2 and at least k nodes, got k = {k} with {n} nodes")));
    }
    let ones = vec![1u64; n];
    let mut peeler = Peeler::new(tree, &ones);
    let mut peeled = Vec::new();
    let k64 = k as u64;
    while peeler.total() + 3 >= 3 * k64 && peeler.total() > 2 * k64 - 2 {
        let (v, nodes) = peeler.find(k64);
        peeler.remove(v, &nodes);
        peeled.push((v, nodes));
    }
    let rest = peeler.total() as usize;
    if rest > 2 * k - 2 {
        let (u, nodes) = split_two(&peeler, k, rest);
        peeler.remove(u, &nodes);
        peeled.push((u, nodes));
    }
    let div = assemble(tree, peeler.remainder(), peeled);
    debug_assert_eq!(div.check(tree), Ok(()));
    Ok(div)
}

/// Splits a remainder of `rest` nodes (`2k-1 <= rest <= 3k-4`) into a
/// subtree `u + children prefix` and the rest, both at most `2k - 2` nodes.
fn split_two(peeler: &Peeler<'_>, k: usize, rest: usize) -> (usize, Vec<usize>) {
    let sum = peeler.sums();
    let mut live: Vec<usize> = (0..peeler.tree.len()).filter(|&x| peeler.live[x]).collect();
    live.sort_by_key(|&x| (std::cmp::Reverse(peeler.depth[x]), x));
    let mut candidates = Vec::new();
    for &u in &live {
        let mut s = 1usize;
        for c in peeler.live_children(u) {
            s += sum[c] as usize;
            candidates.push((u, c, s));
        }
    }
    let exact = (k, (2 * k - 2).min(rest + 1 - k));
    let relaxed = ((rest + 3).saturating_sub(2 * k).max(2), (2 * k - 2).min(rest - 1));
    let within = |(lo, hi): (usize, usize)| candidates.iter().copied().find(|&(_, _, s)| s >= lo && s <= hi);
    let (u, last, _) = within(exact)
        .or_else(|| within(relaxed))
        .expect("the deepest node with enough descendants yields a relaxed split");
    let mut nodes = vec![u];
    for c in peeler.live_children(u) {
        peeler.subtree(c, &mut nodes);
        if c == last {
            break;
        }
    }
    nodes.sort_unstable();
    (u, nodes)
}

fn check_node_weights(tree: &RootedTree, gamma: &[u64], k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Parameter(format!("k must be at least 2, got {k}")));
    }
    if gamma.len() != tree.len() {
        return Err(Error::InvalidInput(format!("{} weights for {} nodes", gamma.len(), tree.len())));
    }
    if let Some((x, w)) = gamma.iter().enumerate().find(|(_, &w)| w < 1 || w > k as u64 - 1) {
        return Err(Error::Precondition(format!("node {x} has weight {w} outside 1..={}", k - 1)));
    }
    let total: u64 = gamma.iter().sum();
    if total < 2 * k as u64 - 2 {
        return Err(Error::Precondition(format!("total weight {total} is below 2k-2 = {}", 2 * k - 2)));
    }
    Ok(())
}

/// Weighted analogue of [`find_subtree`]: `k <= γ(T') <= 4k-6` and
/// `k-1 <= γ(T'-v) <= 3k-5`. Node weights must lie in `1..=k-1` and sum to
/// at least `2k-2`.
pub fn find_weighted_subtree(tree: &RootedTree, gamma: &[u64], k: usize) -> Result<(Vec<usize>, usize)> {
    check_node_weights(tree, gamma, k)?;
    let (v, nodes) = Peeler::new(tree, gamma).find(k as u64);
    Ok((nodes, v))
}

/// Weighted division with `γ(T_1) <= 5k+2`, and for `i >= 2`
/// `k <= γ(T_i) <= 4k-6` and `k-1 <= γ(T_i - r_i) <= 3k-5`. At most
/// `γ(T)/(k-1)` parts.
pub fn partition_weighted_tree(tree: &RootedTree, gamma: &[u64], k: usize) -> Result<Division> {
    partition_weighted_tree_capped(tree, gamma, k, 5 * k + 2)
}

/// As [`partition_weighted_tree`], peeling until `γ(T_1) <= cap`. Requires
/// `cap >= 4k - 6` so that the remainder never drops below `k`.
pub fn partition_weighted_tree_capped(tree: &RootedTree, gamma: &[u64], k: usize, cap: usize) -> Result<Division> {
    check_node_weights(tree, gamma, k)?;
    if cap + 6 < 4 * k {
        return Err(Error::Parameter(format!("cap {cap} is below 4k-6")));
    }
    let mut peeler = Peeler::new(tree, gamma);
    let mut peeled = Vec::new();
    while peeler.total() > cap as u64 {
        let (v, nodes) = peeler.find(k as u64);
        peeler.remove(v, &nodes);
        peeled.push((v, nodes));
    }
    let div = assemble(tree, peeler.remainder(), peeled);
    debug_assert_eq!(div.check(tree), Ok(()));
    Ok(div)
}

/// Node weights of the quotient: `|B_root|` at the root and `|B_y \ B_x|`
/// for a child `y` of `x`.
pub fn introduced_weights(td: &TreeDecomposition) -> Vec<u64> {
    let tree = td.tree();
    (0..td.order())
        .map(|y| match tree.parent(y) {
            Some(x) => td.bag(y).difference(td.bag(x)).count() as u64,
            None => td.bag(y).len() as u64,
        })
        .collect()
}

/// Merges the bags of each division part into one bag on the quotient tree.
pub fn quotient(td: &TreeDecomposition, div: &Division) -> Result<TreeDecomposition> {
    div.check(td.tree()).map_err(|e| Error::InvalidInput(format!("invalid division: {e}")))?;
    Ok(quotient_unchecked(td, div))
}

/// [`quotient`] without checking the division. A broken division yields a
/// broken decomposition.
pub fn quotient_unchecked(td: &TreeDecomposition, div: &Division) -> TreeDecomposition {
    let m = div.m();
    let parents: Vec<Option<usize>> = (0..m)
        .map(|i| (i > 0).then(|| (0..i).find(|&a| div.parts[a].binary_search(&div.roots[i]).is_ok()).unwrap_or(0)))
        .collect();
    let bags = (0..m)
        .map(|i| {
            div.parts[i]
                .iter()
                .filter(|&&x| i == 0 || x != div.roots[i])
                .flat_map(|&x| td.bag(x).iter().copied())
                .collect::<VertexSet>()
        })
        .collect();
    TreeDecomposition::from_parents(&parents, bags, td.kind()).expect("parents precede children")
}

fn certificate(name: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Certificate { name, detail: detail() })
    }
}

fn require_strong(g: &Graph, td: &TreeDecomposition) -> Result<()> {
    if td.kind() != Kind::Strong {
        return Err(Error::InvalidDecomposition(format!("expected a strong decomposition, got {}", td.kind())));
    }
    validate(td, g)?.into_result()
}

/// `order <= max(n/d - c, 1)` evaluated exactly.
fn order_within(order: usize, n: usize, d: usize, c: usize) -> bool {
    order <= 1 || order * d + c * d <= n
}

/// Strong decomposition of width at most `3k-1` and order at most
/// `max(n/k - 1, 1)` from one of width at most `k`.
pub fn small_tree_decomp(g: &Graph, td: &TreeDecomposition, k: usize) -> Result<TreeDecomposition> {
    require_strong(g, td)?;
    if k < td.width().max(1) {
        return Err(Error::Parameter(format!("k = {k} must be at least max(1, width) = {}", td.width().max(1))));
    }
    let n = g.n();
    let out = if n <= 2 * k {
        TreeDecomposition::single_bag(g.vertex_set(), Kind::Strong)
    } else {
        let smooth = smooth_decomposition_with_width(g, td, k)?;
        let div = partition_tree(smooth.tree(), k + 1)?;
        certificate("small_division", div.check(smooth.tree()).is_ok(), || "partition_tree produced an invalid division".into())?;
        quotient_unchecked(&smooth, &div)
    };
    let report = validate(&out, g)?;
    certificate("small_valid", report.is_valid(), || report.to_text())?;
    certificate("small_width", out.width() < 3 * k, || format!("width {} > 3k-1 = {}", out.width(), 3 * k - 1))?;
    certificate("small_order", order_within(out.order(), n, k, 1), || format!("order {} > max(n/k - 1, 1) for n = {n}, k = {k}", out.order()))?;
    Ok(out)
}

/// Slick decomposition of width at most `4ℓ-7` and order at most `n/(ℓ-1)`
/// from a slick one of width at most `ℓ-2`. Requires `n >= 2ℓ-2`.
pub fn make_small(g: &Graph, td: &TreeDecomposition, ell: usize) -> Result<TreeDecomposition> {
    require_strong(g, td)?;
    if ell < 2 {
        return Err(Error::Parameter(format!("ℓ must be at least 2, got {ell}")));
    }
    if td.max_bag_size() + 1 > ell {
        return Err(Error::Parameter(format!("width {} exceeds ℓ-2 = {}", td.width(), ell as i64 - 2)));
    }
    let n = g.n();
    if n + 2 < 2 * ell {
        return Err(Error::Precondition(format!("{n} vertices is below 2ℓ-2 = {}", 2 * ell - 2)));
    }
    if !is_slick(td, g, 1) {
        return Err(Error::Precondition("input decomposition is not slick".into()));
    }
    let compact = td.compacted();
    certificate("make_small_compact_slick", is_slick(&compact, g, 1), || "contraction broke slickness".into())?;
    let gamma = introduced_weights(&compact);
    let div = partition_weighted_tree_capped(compact.tree(), &gamma, ell, 4 * ell - 6)?;
    certificate("make_small_division", div.check(compact.tree()).is_ok(), || "invalid weighted division".into())?;
    let out = quotient_unchecked(&compact, &div);
    let report = validate(&out, g)?;
    certificate("make_small_valid", report.is_valid(), || report.to_text())?;
    certificate("make_small_slick", is_slick(&out, g, 1), || "quotient is not slick".into())?;
    certificate("make_small_width", out.width() + 7 <= 4 * ell, || format!("width {} > 4ℓ-7", out.width()))?;
    certificate("make_small_order", out.order() * (ell - 1) <= n, || format!("order {} > n/(ℓ-1)", out.order()))?;
    Ok(out)
}

/// Slick decomposition of width at most `56k+58` and order at most
/// `max(n/(14k+14), 1)` from a strong one of width at most `k`.
pub fn slick_and_small(g: &Graph, td: &TreeDecomposition, k: usize) -> Result<(TreeDecomposition, Trace)> {
    require_strong(g, td)?;
    if td.width() > k {
        return Err(Error::Parameter(format!("decomposition width {} exceeds k = {k}", td.width())));
    }
    let ell = 14 * k + 15;
    let n = g.n();
    let (out, mut trace) = if n + 3 <= 2 * ell {
        (TreeDecomposition::single_bag(g.vertex_set(), Kind::Strong), Trace::default())
    } else {
        let (slick, trace) = slick_main(g, td, k)?;
        (make_small(g, &slick, ell)?, trace)
    };
    trace.check("slick_small_width", out.width() <= 56 * k + 58, || format!("width {} > 56k+58", out.width()))?;
    trace.check("slick_small_order", order_within(out.order(), n, 14 * k + 14, 0), || format!("order {}", out.order()))?;
    trace.check("slick_small_slick", is_slick(&out, g, 1), || "output is not slick".into())?;
    trace.certificates_checked += 1;
    spread_bound_check(&out, g, 1)?;
    Ok((out, trace))
}
