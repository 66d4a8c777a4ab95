//! Weak tree-decompositions and everything built from them: the spread and
//! degree bounded strong decompositions and tree-partitions.

use crate::decomp::{is_slick, spread_bound_check, validate, validate_as, Kind, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Weight};
use crate::separators::separation_set_sep_unchecked;
use crate::Trace;

enum Attach {
    Root,
    Parent(usize),
    Merge(usize),
}

struct Frame {
    g: Graph,
    td: TreeDecomposition,
    s: VertexSet,
    attach: Attach,
}

/// Anchor-set node `z` of a frame that created it, with the anchor size.
struct Anchor {
    z: usize,
    s_len: usize,
}

/// `(d-1)`-slick weak decomposition of `g`, rooted at the returned node `z`
/// with `S ⊆ B_z`.
///
/// Requires `width(td) <= k - 1`, `d >= 2` and `4k <= |S| <= 12kd`. Bags
/// have at most `18kd` vertices, `Δ(T) <= 6d`, the order is at most
/// `|V(G)|/2k`, `|B_z| <= 3|S|/2 - 2k` and `deg(z) <= |S|/2k - 1`.
pub fn heart(g: &Graph, td: &TreeDecomposition, s: &VertexSet, k: usize, d: usize) -> Result<(TreeDecomposition, usize, Trace)> {
    check_weak_params(g, td, k, d)?;
    if let Some(v) = s.iter().find(|v| !g.contains(**v)) {
        return Err(Error::InvalidInput(format!("anchor set holds unknown vertex {v}")));
    }
    if s.len() < 4 * k || s.len() > 12 * k * d {
        return Err(Error::Precondition(format!("|S| = {} outside [4k, 12kd] = [{}, {}]", s.len(), 4 * k, 12 * k * d)));
    }
    heart_unchecked(g, td, s, k, d)
}

fn check_weak_params(g: &Graph, td: &TreeDecomposition, k: usize, d: usize) -> Result<()> {
    if td.kind() != Kind::Strong {
        return Err(Error::InvalidDecomposition(format!("expected a strong decomposition, got {}", td.kind())));
    }
    validate(td, g)?.into_result()?;
    if d < 2 {
        return Err(Error::Parameter(format!("d must be at least 2, got {d}")));
    }
    if td.width() + 1 > k {
        return Err(Error::Parameter(format!("k = {k} must exceed the decomposition width {}", td.width())));
    }
    Ok(())
}

fn heart_unchecked(g: &Graph, td: &TreeDecomposition, s: &VertexSet, k: usize, d: usize) -> Result<(TreeDecomposition, usize, Trace)> {
    let mut trace = Trace::default();
    let mut bags: Vec<VertexSet> = Vec::new();
    let mut parents: Vec<Option<usize>> = Vec::new();
    let mut anchors: Vec<Anchor> = Vec::new();
    let mut stack = vec![Frame { g: g.clone(), td: td.clone(), s: s.clone(), attach: Attach::Root }];
    let two_thirds = Weight::new(2, 3);

    while let Some(Frame { g, td, s, attach }) = stack.pop() {
        trace.check("heart_anchor_size", s.len() >= 4 * k && s.len() <= 12 * k * d, || {
            format!("|S| = {} outside [{}, {}]", s.len(), 4 * k, 12 * k * d)
        })?;
        let z = match attach {
            Attach::Merge(z) => z,
            Attach::Root | Attach::Parent(_) => {
                let parent = match attach {
                    Attach::Parent(p) => Some(p),
                    _ => None,
                };
                bags.push(VertexSet::new());
                parents.push(parent);
                anchors.push(Anchor { z: bags.len() - 1, s_len: s.len() });
                bags.len() - 1
            }
        };
        let rest = g.n() - s.len();

        if rest <= 18 * k * d {
            trace.heart_case1 += 1;
            bags[z].extend(s.iter().copied());
            if rest > 0 {
                bags.push(g.vertices().filter(|v| !s.contains(v)).collect());
                parents.push(Some(z));
            }
        } else if s.len() <= 12 * k {
            trace.heart_case2 += 1;
            let (s1, s2): (Vec<_>, Vec<_>) = s.iter().partition(|&&v| g.neighbors(v).iter().filter(|w| !s.contains(w)).count() + 2 <= d);
            let mut anchor: VertexSet = VertexSet::new();
            for &v in &s1 {
                anchor.extend(g.neighbors(v).iter().copied().filter(|w| !s.contains(w)));
            }
            for &v in &s2 {
                anchor.insert(v);
                anchor.extend(g.neighbors(v).iter().copied().filter(|w| !s.contains(w)).take(d - 1));
            }
            trace.check("heart_case2_anchor", anchor.len() <= d * s.len(), || format!("|S'| = {} > d|S|", anchor.len()))?;
            let target = (4 * k).max((s.len() + 6 * k).saturating_sub(3 * s1.len()));
            for v in g.vertices() {
                if anchor.len() >= target {
                    break;
                }
                if !s.contains(&v) {
                    anchor.insert(v);
                }
            }
            trace.check("heart_case2_padding", anchor.len() >= target && anchor.len() <= 12 * k * d, || {
                format!("|S'| = {} with target {target}", anchor.len())
            })?;
            bags[z].extend(s.iter().copied());
            let removed: VertexSet = s1.into_iter().collect();
            let keep: VertexSet = g.vertices().filter(|v| !removed.contains(v)).collect();
            trace.check("heart_case2_progress", keep.len() < g.n() || anchor.len() > s.len(), || "no progress".into())?;
            let child_td = td.restricted_compact(&keep);
            stack.push(Frame { g: g.induced_unchecked(&keep), td: child_td, s: anchor, attach: Attach::Parent(z) });
        } else {
            trace.heart_case3 += 1;
            let sep = separation_set_sep_unchecked(&g, &td, &s, two_thirds)?;
            let x = &sep.x_set;
            trace.check("heart_case3_parts", sep.m() == 2, || format!("m = {}", sep.m()))?;
            trace.check("heart_case3_separator", x.len() <= k, || format!("|X| = {} > k = {k}", x.len()))?;
            let anchors_i: Vec<VertexSet> =
                (0..2).map(|i| sep.outside(i).intersection(&s).copied().chain(x.iter().copied()).collect()).collect();
            for (i, si) in anchors_i.iter().enumerate() {
                trace.check("heart_case3_lower", si.len() >= 4 * k, || format!("|S_{}| = {} < 4k", i + 1, si.len()))?;
                trace.check("heart_case3_upper", si.len() <= 12 * k * d, || format!("|S_{}| = {} > 12kd", i + 1, si.len()))?;
                trace.check("heart_case3_shrinks", sep.parts[i].len() < g.n(), || "part is not smaller".into())?;
            }
            let sum = anchors_i[0].len() + anchors_i[1].len();
            trace.check("heart_case3_sum", sum <= s.len() + 2 * k, || format!("|S_1|+|S_2| = {sum} > |S|+2k"))?;
            bags[z].extend(s.iter().copied());
            for (i, si) in anchors_i.into_iter().enumerate().rev() {
                let part = &sep.parts[i];
                stack.push(Frame { g: g.induced_unchecked(part), td: td.restricted_compact(part), s: si, attach: Attach::Merge(z) });
            }
        }
    }

    let out = TreeDecomposition::from_parents(&parents, bags, Kind::Weak)?;
    for a in &anchors {
        let bag = out.bag(a.z).len();
        trace.check("heart_z_bag", 2 * bag + 4 * k <= 3 * a.s_len, || format!("|B_z| = {bag} > 3|S|/2 - 2k for |S| = {}", a.s_len))?;
        let deg = out.tree().children(a.z).len();
        trace.check("heart_z_degree", 2 * k * (deg + 1) <= a.s_len, || format!("deg(z) = {deg} > |S|/2k - 1 for |S| = {}", a.s_len))?;
    }
    let z = out.tree().root();
    let report = validate(&out, g)?;
    trace.check("heart_valid", report.is_valid(), || report.to_text())?;
    trace.check("heart_slick", is_slick(&out, g, d - 1), || format!("not {}-slick", d - 1))?;
    trace.check("heart_anchor_in_root", s.is_subset(out.bag(z)), || "S is not inside B_z".into())?;
    trace.check("heart_bag_size", out.max_bag_size() <= 18 * k * d, || format!("bag of {} > 18kd", out.max_bag_size()))?;
    trace.check("heart_degree", out.degree() <= 6 * d, || format!("Δ(T) = {} > 6d", out.degree()))?;
    trace.check("heart_order", 2 * k * out.order() <= g.n(), || format!("order {} > n/2k", out.order()))?;
    Ok((out, z, trace))
}

fn order_bound_holds(order: usize, n: usize, k: usize) -> bool {
    order <= 1 || 2 * k * order <= n
}

/// `(d-1)`-slick weak decomposition of width at most `18kd`, degree at most
/// `6d` and order at most `max(n/2k, 1)`, given a strong decomposition of
/// width at most `k - 1`.
pub fn weak_tree_decomp_gen(g: &Graph, td: &TreeDecomposition, k: usize, d: usize) -> Result<(TreeDecomposition, Trace)> {
    check_weak_params(g, td, k, d)?;
    let n = g.n();
    let (out, mut trace) = if n < 4 * k {
        (TreeDecomposition::single_bag(g.vertex_set(), Kind::Weak), Trace::default())
    } else {
        let s: VertexSet = g.vertices().take(4 * k).collect();
        let (out, _, trace) = heart_unchecked(g, td, &s, k, d)?;
        (out, trace)
    };
    let report = validate(&out, g)?;
    trace.check("weak_valid", report.is_valid(), || report.to_text())?;
    trace.check("weak_slick", is_slick(&out, g, d - 1), || format!("not {}-slick", d - 1))?;
    trace.check("weak_width", out.width() <= 18 * k * d, || format!("width {} > 18kd", out.width()))?;
    trace.check("weak_degree", out.degree() <= 6 * d, || format!("degree {} > 6d", out.degree()))?;
    trace.check("weak_order", order_bound_holds(out.order(), n, k), || format!("order {} > max(n/2k, 1)", out.order()))?;
    trace.certificates_checked += 1;
    spread_bound_check(&out, g, d - 1)?;
    Ok((out, trace))
}

/// Strong decomposition on the same tree: each child bag additionally takes
/// the parent-bag vertices that have a neighbour among the child's new
/// vertices. Width at most `2w+1` for input width `w`; slickness is kept.
pub fn weak_to_strong(g: &Graph, wtd: &TreeDecomposition) -> Result<TreeDecomposition> {
    validate_as(wtd, g, Kind::Weak)?.into_result()?;
    let tree = wtd.tree();
    let bags = (0..wtd.order())
        .map(|y| {
            let mut bag = wtd.bag(y).clone();
            if let Some(x) = tree.parent(y) {
                let (bx, by) = (wtd.bag(x), wtd.bag(y));
                bag.extend(bx.iter().copied().filter(|&v| g.neighbors_in(v, by).any(|w| !bx.contains(&w))));
            }
            bag
        })
        .collect();
    let out = TreeDecomposition::new(tree.clone(), bags, Kind::Strong)?;
    let report = validate(&out, g)?;
    if !report.is_valid() {
        return Err(Error::Certificate { name: "weak_to_strong_valid", detail: report.to_text() });
    }
    let w = wtd.max_bag_size().saturating_sub(1);
    if out.width() > 2 * w + 1 {
        return Err(Error::Certificate { name: "weak_to_strong_width", detail: format!("width {} > 2·{w}+1", out.width()) });
    }
    if is_slick(wtd, g, 1) && !is_slick(&out, g, 1) {
        return Err(Error::Certificate { name: "weak_to_strong_slick", detail: "slickness was lost".into() });
    }
    Ok(out)
}

/// Slick strong decomposition of width at most `72k+1`, degree at most 12
/// and order at most `max(n/2k, 1)`, given a strong decomposition of width
/// at most `k - 1`. Every vertex has spread at most `deg(v)+1`.
pub fn spread_small_degree(g: &Graph, td: &TreeDecomposition, k: usize) -> Result<(TreeDecomposition, Trace)> {
    let (weak, mut trace) = weak_tree_decomp_gen(g, td, k, 2)?;
    let out = weak_to_strong(g, &weak)?;
    trace.check("combined_slick", is_slick(&out, g, 1), || "output is not slick".into())?;
    trace.check("combined_width", out.width() <= 72 * k + 1, || format!("width {} > 72k+1", out.width()))?;
    trace.check("combined_degree", out.degree() <= 12, || format!("degree {} > 12", out.degree()))?;
    trace.check("combined_order", order_bound_holds(out.order(), g.n(), k), || format!("order {}", out.order()))?;
    trace.certificates_checked += 1;
    spread_bound_check(&out, g, 1)?;
    Ok((out, trace))
}

/// Tree-partition of width at most `18k(Δ+2)`, degree at most `6(Δ+2)` and
/// order at most `max(n/2k, 1)`, given a strong decomposition of width at
/// most `k - 1`.
pub fn tree_partition(g: &Graph, td: &TreeDecomposition, k: usize) -> Result<(TreeDecomposition, Trace)> {
    let d = g.max_degree() + 2;
    let (weak, mut trace) = weak_tree_decomp_gen(g, td, k, d)?;
    let out = weak.with_kind(Kind::Partition);
    let report = validate(&out, g)?;
    trace.check("partition_valid", report.is_valid(), || report.to_text())?;
    trace.check("partition_width", out.width() <= 18 * k * d, || format!("width {} > 18k(Δ+2)", out.width()))?;
    trace.check("partition_degree", out.degree() <= 6 * d, || format!("degree {} > 6(Δ+2)", out.degree()))?;
    trace.check("partition_order", order_bound_holds(out.order(), g.n(), k), || format!("order {}", out.order()))?;
    Ok((out, trace))
}
