//! Slick tree-decompositions of bounded width and degree.
//!
//! A decomposition rooted at `r` is slick when every vertex shared by a
//! parent bag and a child bag has a neighbour in the child bag that is not in
//! the parent bag. Slickness bounds the spread of `v` by `deg(v) + 1`.

use crate::decomp::{is_slick, spread_bound_check, validate, Kind, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Weighting};
use crate::separators::{pseudo_components, set_sep_unchecked};
use crate::Trace;

/// Input to [`alpha_beta`]: a graph, a strong decomposition witnessing its
/// width, the parameters `ℓ` and `t`, and the set `R` that must end up in the
/// root bag.
#[derive(Debug, Clone)]
pub struct SlickContext<'a> {
    g: &'a Graph,
    td: &'a TreeDecomposition,
    ell: usize,
    t: usize,
    r_set: VertexSet,
}

impl<'a> SlickContext<'a> {
    /// Requires `ℓ >= 2(k+1)` for the width `k` of `td` and `t >= 2ℓ`, which
    /// make a separator with `|X| <= ℓ` and at most `t` vertices of any
    /// `(2t+2ℓ)`-set per component available in every subgraph.
    pub fn new(g: &'a Graph, td: &'a TreeDecomposition, ell: usize, t: usize, r_set: VertexSet) -> Result<Self> {
        if td.kind() != Kind::Strong {
            return Err(Error::InvalidDecomposition(format!("expected a strong decomposition, got {}", td.kind())));
        }
        validate(td, g)?.into_result()?;
        let k = td.width();
        if ell < 2 * (k + 1) {
            return Err(Error::Parameter(format!("ℓ = {ell} is below 2(k+1) = {} for width {k}", 2 * (k + 1))));
        }
        if t < 2 * ell {
            return Err(Error::Parameter(format!("t = {t} is below 2ℓ = {}", 2 * ell)));
        }
        if let Some(v) = r_set.iter().find(|v| !g.contains(**v)) {
            return Err(Error::InvalidInput(format!("root set holds unknown vertex {v}")));
        }
        if r_set.len() > 2 * t + 2 * ell {
            return Err(Error::Parameter(format!("|R| = {} exceeds 2t+2ℓ = {}", r_set.len(), 2 * t + 2 * ell)));
        }
        Ok(SlickContext { g, td, ell, t, r_set })
    }

    pub fn max_bag(&self) -> usize {
        2 * self.t + 3 * self.ell
    }

    /// `4 + ⌈4ℓ/t⌉`.
    pub fn max_degree(&self) -> usize {
        4 + (4 * self.ell).div_ceil(self.t)
    }
}

struct Frame {
    g: Graph,
    td: TreeDecomposition,
    r: VertexSet,
    parent: Option<usize>,
}

/// Rooted slick strong decomposition with `R ⊆ B_root`, bags of at most
/// `2t+3ℓ` vertices, `Δ(T) <= 4+⌈4ℓ/t⌉` and root degree one less.
pub fn alpha_beta(ctx: &SlickContext<'_>) -> Result<(TreeDecomposition, Trace)> {
    let (ell, t) = (ctx.ell, ctx.t);
    let base = ctx.max_bag();
    let r_cap = 2 * t + 2 * ell;
    let mut trace = Trace::default();
    let mut bags: Vec<VertexSet> = Vec::new();
    let mut parents: Vec<Option<usize>> = Vec::new();
    let mut stack = vec![Frame { g: ctx.g.clone(), td: ctx.td.clone(), r: ctx.r_set.clone(), parent: None }];

    while let Some(Frame { g, td, mut r, parent }) = stack.pop() {
        let id = bags.len();
        parents.push(parent);
        if g.n() <= base {
            trace.alpha_beta_base += 1;
            bags.push(g.vertex_set());
            continue;
        }
        trace.alpha_beta_recursive += 1;
        trace.check("alpha_beta_seed_size", r.len() <= r_cap, || format!("|R| = {} > {r_cap}", r.len()))?;
        for v in g.vertices() {
            if r.len() == r_cap {
                break;
            }
            r.insert(v);
        }
        let x = set_sep_unchecked(&g, &td, &r, 2)?;
        trace.check("alpha_beta_separator_size", x.len() <= ell, || format!("|X| = {} > ℓ = {ell}", x.len()))?;
        let gamma = Weighting::indicator(&g, &r);
        let sep = pseudo_components(&g, &gamma, &x, (t as i64).into())?;
        let m = sep.m();
        trace.check("alpha_beta_m_at_least_3", m >= 3, || format!("m = {m}"))?;
        let root_cap = ctx.max_degree() - 1;
        trace.check("alpha_beta_root_degree", m <= root_cap, || format!("m = {m} > {root_cap}"))?;

        let mut root_bag = x.clone();
        root_bag.extend(r.iter().copied());
        bags.push(root_bag);

        let mut children = Vec::with_capacity(m);
        for i in 0..m {
            let part = &sep.parts[i];
            let r_i: VertexSet = x.iter().copied().chain(sep.outside(i).intersection(&r).copied()).collect();
            let inner: VertexSet =
                r_i.iter().copied().filter(|&v| g.neighbors_in(v, part).all(|w| r_i.contains(&w))).collect();
            let mut seed: VertexSet = r_i.difference(&inner).copied().collect();
            for &v in r_i.difference(&inner) {
                let w = g.neighbors_in(v, part).find(|w| !r_i.contains(w)).expect("v has a neighbour outside R_i");
                seed.insert(w);
            }
            let keep: VertexSet = part.difference(&inner).copied().collect();
            trace.check("alpha_beta_shrinks", keep.len() < g.n(), || format!("child has {} of {} vertices", keep.len(), g.n()))?;
            trace.check("alpha_beta_child_seed", seed.len() <= r_cap && seed.is_subset(&keep), || {
                format!("|R''| = {} with cap {r_cap}", seed.len())
            })?;
            let child_td = td.restricted_compact(&keep);
            children.push(Frame { g: g.induced_unchecked(&keep), td: child_td, r: seed, parent: Some(id) });
        }
        stack.extend(children.into_iter().rev());
    }

    let out = TreeDecomposition::from_parents(&parents, bags, Kind::Strong)?;
    certify_alpha_beta(ctx, &out, &mut trace)?;
    Ok((out, trace))
}

fn certify_alpha_beta(ctx: &SlickContext<'_>, out: &TreeDecomposition, trace: &mut Trace) -> Result<()> {
    let report = validate(out, ctx.g)?;
    trace.check("alpha_beta_valid", report.is_valid(), || report.to_text())?;
    trace.check("alpha_beta_slick", is_slick(out, ctx.g, 1), || "output is not slick".into())?;
    let root = out.tree().root();
    trace.check("alpha_beta_root_holds_r", ctx.r_set.is_subset(out.bag(root)), || "R is not inside the root bag".into())?;
    let cap = ctx.max_bag();
    trace.check("alpha_beta_bag_size", out.max_bag_size() <= cap, || format!("bag of {} > {cap}", out.max_bag_size()))?;
    let dcap = ctx.max_degree();
    trace.check("alpha_beta_degree", out.degree() <= dcap, || format!("Δ(T) = {} > {dcap}", out.degree()))?;
    let rdeg = out.tree().degree(root);
    trace.check("alpha_beta_root_degree", rdeg < dcap, || format!("root degree {rdeg} >= {dcap}"))?;
    Ok(())
}

/// Slick decomposition of width at most `14k+13` and degree at most 6 from a
/// strong decomposition of width at most `k`.
pub fn slick_main(g: &Graph, td: &TreeDecomposition, k: usize) -> Result<(TreeDecomposition, Trace)> {
    if td.width() > k {
        return Err(Error::Parameter(format!("decomposition width {} exceeds k = {k}", td.width())));
    }
    let ell = 2 * (k + 1);
    let ctx = SlickContext::new(g, td, ell, 2 * ell, VertexSet::new())?;
    let (out, mut trace) = alpha_beta(&ctx)?;
    let cap = 14 * k + 13;
    trace.check("slick_main_width", out.width() <= cap, || format!("width {} > {cap}", out.width()))?;
    trace.check("slick_main_degree", out.degree() <= 6, || format!("degree {} > 6", out.degree()))?;
    trace.certificates_checked += 1;
    spread_bound_check(&out, g, 1)?;
    Ok((out, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::grid_window_decomposition;
    use crate::graph::{generate, Family};
    use crate::oracle::min_fill_heuristic;

    #[test]
    fn small_graph_is_one_bag() {
        let g = generate(&Family::Cycle { n: 8 }, 0).unwrap();
        let td = min_fill_heuristic(&g);
        let ctx = SlickContext::new(&g, &td, 6, 12, VertexSet::new()).unwrap();
        let (out, trace) = alpha_beta(&ctx).unwrap();
        assert_eq!(out.order(), 1);
        assert_eq!(trace.alpha_beta_base, 1);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::with_vertices(1);
        let td = TreeDecomposition::single_bag([0].into(), Kind::Strong);
        let (out, _) = slick_main(&g, &td, 0).unwrap();
        assert_eq!((out.order(), out.width()), (1, 0));
    }

    #[test]
    fn long_cycle_recurses() {
        let g = generate(&Family::Cycle { n: 200 }, 0).unwrap();
        let td = min_fill_heuristic(&g);
        let (out, trace) = slick_main(&g, &td, 2).unwrap();
        assert!(trace.alpha_beta_recursive > 0);
        assert!(out.width() <= 41 && out.degree() <= 6);
        assert!(is_slick(&out, &g, 1));
        assert!(out.spreads().values().all(|&s| s <= 3));
    }

    #[test]
    fn grid_with_prescribed_root_set() {
        let g = generate(&Family::Grid { rows: 12, cols: 12 }, 0).unwrap();
        let td = grid_window_decomposition(12, 12);
        let r: VertexSet = (0..40).collect();
        let ctx = SlickContext::new(&g, &td, 26, 52, r.clone()).unwrap();
        let (out, _) = alpha_beta(&ctx).unwrap();
        assert!(r.is_subset(out.bag(out.tree().root())));
    }

    #[test]
    fn parameters_are_checked() {
        let g = generate(&Family::Grid { rows: 5, cols: 5 }, 0).unwrap();
        let td = grid_window_decomposition(5, 5);
        assert!(matches!(SlickContext::new(&g, &td, 11, 24, VertexSet::new()), Err(Error::Parameter(_))));
        assert!(matches!(SlickContext::new(&g, &td, 12, 23, VertexSet::new()), Err(Error::Parameter(_))));
        assert!(matches!(slick_main(&g, &td, 4), Err(Error::Parameter(_))));
    }
}
