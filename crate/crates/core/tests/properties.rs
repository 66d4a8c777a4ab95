use std::collections::BTreeMap;

use proptest::prelude::*;
use tdrefine::decomp::{is_slick, smooth_decomposition, validate, validate_as};
use tdrefine::division::{partition_tree, quotient, small_tree_decomp};
use tdrefine::graph::{generate, Family, Graph, VertexSet, Weight, Weighting};
use tdrefine::io::{parse_gr, parse_td, write_gr, write_td};
use tdrefine::oracle::{exact_treewidth, is_slick_bruteforce, min_fill_heuristic, spreads_bruteforce, verify_decomposition_bruteforce, verify_separator};
use tdrefine::separators::{gen_separation, pseudo_components, tree_dec_sep, treewidth_sep};
use tdrefine::weak::{weak_to_strong, weak_tree_decomp_gen};
use tdrefine::{Kind, RootedTree, TreeDecomposition};

fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.zip(mask).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
}

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |m| graph_from_mask(n, &m)))
}

/// A graph together with an arbitrary (usually invalid) decomposition over its vertices.
fn graph_and_bags() -> impl Strategy<Value = (Graph, TreeDecomposition)> {
    (small_graph(8), 1..=5usize).prop_flat_map(|(g, nodes)| {
        let n = g.n();
        let parents = (1..nodes).map(|i| 0..i).collect::<Vec<_>>();
        let bags = prop::collection::vec(0u16..(1u16 << n), nodes);
        (Just(g), parents, bags).prop_map(move |(g, ps, bags)| {
            let parents: Vec<Option<usize>> = std::iter::once(None).chain(ps.into_iter().map(Some)).collect();
            let bags = bags.iter().map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect()).collect();
            let td = TreeDecomposition::from_parents(&parents, bags, Kind::Strong).unwrap();
            (g, td)
        })
    })
}

fn union_find_components(g: &Graph) -> Vec<VertexSet> {
    let mut parent: Vec<usize> = (0..g.id_bound()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a.max(b)] = a.min(b);
    }
    let mut groups: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for v in g.vertices() {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().insert(v);
    }
    let mut out: Vec<VertexSet> = groups.into_values().collect();
    out.sort_by_key(|c| *c.first().unwrap());
    out
}

fn random_tree(n: usize) -> impl Strategy<Value = RootedTree> {
    (1..n).map(|i| 0..i).collect::<Vec<_>>().prop_map(|ps| {
        let parents: Vec<Option<usize>> = std::iter::once(None).chain(ps.into_iter().map(Some)).collect();
        RootedTree::from_parents(&parents).unwrap()
    })
}

fn sparse_graph() -> impl Strategy<Value = Graph> {
    (0u64..1000, 5usize..40, 0usize..3).prop_map(|(seed, n, kind)| {
        let family = match kind {
            0 => Family::TreeRandom { n },
            1 => Family::RandomKtreePartial { n, k: 2, p: 0.7 },
            _ => Family::RandomGnm { n, m: n + n / 4 },
        };
        generate(&family, seed).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn validators_agree_with_bruteforce((g, td) in graph_and_bags()) {
        for kind in [Kind::Strong, Kind::Weak, Kind::Partition] {
            let fast = validate_as(&td, &g, kind).unwrap().is_valid();
            let brute = verify_decomposition_bruteforce(&g, &td, kind).holds();
            prop_assert_eq!(fast, brute, "{}", kind);
        }
        for s in 1..=3 {
            prop_assert_eq!(is_slick(&td, &g, s), is_slick_bruteforce(&g, &td, s));
        }
        let brute = spreads_bruteforce(&g, &td);
        for v in g.vertices() {
            prop_assert_eq!(td.spread(v), brute.get(&v).copied().unwrap_or(0));
        }
    }

    #[test]
    fn components_match_union_find(g in small_graph(8), mask in 0u16..256) {
        let s: VertexSet = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
        let h = g.induced_subgraph(&s).unwrap();
        prop_assert_eq!(h.components(), union_find_components(&h));
        prop_assert_eq!(h.vertices().map(|v| h.degree(v)).sum::<usize>(), 2 * h.m());
        for &(u, v) in h.edges() {
            prop_assert!(s.contains(&u) && s.contains(&v) && g.has_edge(u, v));
        }
    }

    #[test]
    fn min_fill_is_valid_and_not_below_treewidth(g in small_graph(9)) {
        let td = min_fill_heuristic(&g);
        prop_assert!(verify_decomposition_bruteforce(&g, &td, Kind::Strong).holds());
        let exact = exact_treewidth(&g).unwrap();
        prop_assert!(td.width() >= exact.treewidth);
        prop_assert_eq!(exact.witness.width(), exact.treewidth);
        prop_assert!(validate(&exact.witness, &g).unwrap().is_valid());
    }

    #[test]
    fn treewidth_separator_bounds(g in sparse_graph(), weights in prop::collection::vec(0i64..5, 40), q in 0usize..5) {
        let td = min_fill_heuristic(&g);
        let gamma = Weighting::new(g.vertices().map(|v| (v, Weight::from(weights[v])))).unwrap();
        let z = tree_dec_sep(&g, &gamma, &td, q).unwrap();
        prop_assert!(z.len() <= q);
        let x = treewidth_sep(&g, &gamma, &td, q).unwrap();
        prop_assert!(x.len() <= q * (td.width() + 1));
        prop_assert!(verify_separator(&g, &gamma, &x, gamma.total() / Weight::from(q as i64 + 1)));
    }

    #[test]
    fn pseudo_components_certificates(g in sparse_graph(), weights in prop::collection::vec(0i64..4, 40), w in 4i64..30) {
        let td = min_fill_heuristic(&g);
        let gamma = Weighting::new(g.vertices().map(|v| (v, Weight::from(weights[v])))).unwrap();
        let w = Weight::from(w);
        let x = (1..).map(|q| treewidth_sep(&g, &gamma, &td, q).unwrap()).find(|x| verify_separator(&g, &gamma, x, w)).unwrap();
        let sep = pseudo_components(&g, &gamma, &x, w).unwrap();
        sep.check(&g).unwrap();
        let outside: Vec<Weight> = (0..sep.m()).map(|i| gamma.of(&sep.outside(i))).collect();
        prop_assert!(outside.iter().all(|&o| o <= w));
        for i in 0..sep.m() {
            for j in i + 1..sep.m() {
                prop_assert!(outside[i] + outside[j] > w);
            }
        }
        let rest: Weight = outside.iter().copied().sum();
        if sep.m() > 1 {
            prop_assert!(Weight::from(sep.m() as i64) * w < Weight::from(2) * rest);
        }
    }

    #[test]
    fn gen_separation_shape(g in sparse_graph(), num in 1i64..4, den in 1i64..6) {
        let td = min_fill_heuristic(&g);
        let gamma = Weighting::uniform(&g);
        let beta = Weight::new(num, den);
        let sep = gen_separation(&g, &gamma, &td, beta).unwrap();
        sep.check(&g).unwrap();
        let q = ((Weight::from(1) / beta).ceil().to_integer() - 1).max(0) as usize;
        prop_assert!(sep.x_set.len() <= q * (td.width() + 1));
        for i in 0..sep.m() {
            prop_assert!(gamma.of(&sep.outside(i)) <= beta * gamma.total());
        }
    }

    #[test]
    fn smooth_has_uniform_bags(g in sparse_graph()) {
        let td = min_fill_heuristic(&g);
        let k = td.width();
        prop_assume!(g.n() > k);
        let s = smooth_decomposition(&g, &td).unwrap();
        prop_assert!(validate(&s, &g).unwrap().is_valid());
        prop_assert!(s.bags().iter().all(|b| b.len() == k + 1));
        prop_assert_eq!(s.order(), g.n() - k);
        for (p, c) in s.tree().edges() {
            prop_assert_eq!(s.bag(c).difference(s.bag(p)).count(), 1);
        }
    }

    #[test]
    fn divisions_are_valid(tree in (2usize..60).prop_flat_map(random_tree), k in 2usize..8) {
        prop_assume!(tree.len() >= k);
        let div = partition_tree(&tree, k).unwrap();
        prop_assert_eq!(div.check(&tree), Ok(()));
        prop_assert!(div.m() == 1 || div.m() * (k - 1) <= tree.len());
    }

    #[test]
    fn small_decomposition_bounds(g in sparse_graph()) {
        let td = min_fill_heuristic(&g);
        let k = td.width().max(1);
        let out = small_tree_decomp(&g, &td, k).unwrap();
        prop_assert!(out.width() < 3 * k);
        prop_assert!(out.order() <= 1 || (out.order() + 1) * k <= g.n());
        let s = smooth_decomposition(&g, &td);
        if let Ok(s) = s {
            if s.order() > k {
                let q = quotient(&s, &partition_tree(s.tree(), k + 1).unwrap()).unwrap();
                prop_assert!(validate(&q, &g).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn io_round_trips((g, td) in graph_and_bags()) {
        let gr = write_gr(&g);
        prop_assert_eq!(write_gr(&parse_gr(&gr).unwrap().graph), gr.clone());
        prop_assume!(g.n() > 0);
        let text = write_td(&td, g.n());
        let back = parse_td(&text, Kind::Strong).unwrap();
        prop_assert_eq!(write_td(&back.td, back.n), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn weak_conversion_keeps_slickness(seed in 0u64..500, n in 100usize..600, d in 2usize..4) {
        let g = generate(&Family::TreeRandom { n }, seed).unwrap();
        let td = min_fill_heuristic(&g);
        let (weak, _) = weak_tree_decomp_gen(&g, &td, td.width() + 1, d).unwrap();
        let strong = weak_to_strong(&g, &weak).unwrap();
        prop_assert!(validate(&strong, &g).unwrap().is_valid());
        prop_assert!(strong.width() <= 2 * weak.width() + 1);
        prop_assert!(is_slick(&weak, &g, 1));
        prop_assert!(is_slick(&strong, &g, 1));
    }
}
