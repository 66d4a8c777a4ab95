//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use tdrefine::bench::{input_decomposition, suite, Case};
use tdrefine::decomp::{is_slick, validate, validate_as};
use tdrefine::division::{slick_and_small, small_tree_decomp};
use tdrefine::fixtures::{cycle_apex_decomposition, grid_row_pair_decomposition, grid_window_decomposition, path_edge_decomposition};
use tdrefine::graph::{generate, Family, Graph, Weight, Weighting};
use tdrefine::io::{write_gr, write_td};
use tdrefine::oracle::{exact_treewidth, is_slick_bruteforce, min_fill_heuristic, spreads_bruteforce, verify_decomposition_bruteforce, verify_separator};
use tdrefine::separators::{pseudo_components, tree_dec_sep, treewidth_sep};
use tdrefine::slick::slick_main;
use tdrefine::weak::{spread_small_degree, tree_partition, weak_to_strong, weak_tree_decomp_gen};
use tdrefine::{Kind, Trace, TreeDecomposition};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

struct Input {
    id: String,
    g: Graph,
    td: TreeDecomposition,
}

fn load(cases: Vec<Case>) -> Vec<Input> {
    cases
        .into_par_iter()
        .map(|c| {
            let g = c.graph().expect("corpus graph");
            let td = input_decomposition(Some(&c.family), &g);
            Input { id: c.id(), g, td }
        })
        .collect()
}

/// Grids up to 10×10, cycles and fans up to 200, random graphs up to 300.
fn main_corpus() -> Vec<Input> {
    let mut cases = suite("standard").unwrap();
    cases.extend([150, 175].map(|n| Case::new(Family::Cycle { n }, 0)));
    cases.extend([150, 175].map(|n| Case::new(Family::Fan { n }, 0)));
    cases.extend(suite("random").unwrap());
    load(cases)
}

fn large_corpus() -> Vec<Input> {
    let mut cases = suite("large").unwrap();
    cases.extend([1000, 2500].map(|n| Case::new(Family::TreeRandom { n }, n as u64)));
    cases.push(Case::new(Family::RandomKtreePartial { n: 4000, k: 3, p: 0.5 }, 3));
    cases.push(Case::new(Family::Grid { rows: 20, cols: 60 }, 0));
    load(cases)
}

fn spread_ok(g: &Graph, td: &TreeDecomposition, s: usize) -> Option<String> {
    let spreads = td.spreads();
    g.vertices()
        .find(|&v| spreads.get(&v).copied().unwrap_or(0) > g.degree(v) / s + 1)
        .map(|v| format!("vertex {v}: spread {} degree {}", spreads[&v], g.degree(v)))
}

fn random_decomposition(rng: &mut ChaCha8Rng, n: usize) -> TreeDecomposition {
    let nodes = rng.gen_range(1..=5);
    let parents: Vec<Option<usize>> = (0..nodes).map(|i| (i > 0).then(|| rng.gen_range(0..i))).collect();
    let bags = (0..nodes).map(|_| (0..n).filter(|_| rng.gen_bool(0.45)).collect()).collect();
    TreeDecomposition::from_parents(&parents, bags, Kind::Strong).unwrap()
}

fn agree(g: &Graph, td: &TreeDecomposition) -> Result<(), String> {
    for kind in [Kind::Strong, Kind::Weak, Kind::Partition] {
        let fast = validate_as(td, g, kind).map_err(|e| e.to_string())?.is_valid();
        let brute = verify_decomposition_bruteforce(g, td, kind).holds();
        ensure!(fast == brute, "{kind} validity: fast {fast}, brute {brute}");
    }
    for s in 1..=3 {
        ensure!(is_slick(td, g, s) == is_slick_bruteforce(g, td, s), "{s}-slickness disagrees");
    }
    let brute = spreads_bruteforce(g, td);
    for v in g.vertices() {
        ensure!(td.spread(v) == brute.get(&v).copied().unwrap_or(0), "spread of {v} disagrees");
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..1000 {
        let n = rng.gen_range(0..=8);
        let p = rng.gen_range(0.1..0.9);
        let mut g = Graph::with_vertices(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let td = if i % 4 == 0 { min_fill_heuristic(&g) } else { random_decomposition(&mut rng, n) };
        agree(&g, &td).map_err(|e| format!("random graph #{i}: {e}"))?;
    }
    let fixtures: Vec<(Graph, TreeDecomposition)> = vec![
        (generate(&Family::Path { n: 8 }, 0).unwrap(), path_edge_decomposition(8)),
        (generate(&Family::Cycle { n: 10 }, 0).unwrap(), cycle_apex_decomposition(10)),
        (generate(&Family::Grid { rows: 4, cols: 4 }, 0).unwrap(), grid_row_pair_decomposition(4, 4)),
        (generate(&Family::Grid { rows: 5, cols: 6 }, 0).unwrap(), grid_window_decomposition(5, 6)),
    ];
    for (g, td) in &fixtures {
        agree(g, td)?;
        let weak = td.clone().with_kind(Kind::Weak);
        agree(g, &weak)?;
    }
    Ok(format!("1000 random graphs and {} fixtures, zero disagreements", fixtures.len()))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    let mut expect = |f: Family, seed: u64, tw: usize| -> Result<(), String> {
        let g = generate(&f, seed).map_err(|e| e.to_string())?;
        let got = exact_treewidth(&g).map_err(|e| e.to_string())?;
        ensure!(got.treewidth == tw, "{f}: treewidth {} expected {tw}", got.treewidth);
        ensure!(got.witness.width() == tw && validate(&got.witness, &g).unwrap().is_valid(), "{f}: bad witness");
        checked += 1;
        Ok(())
    };
    for n in 2..=18 {
        expect(Family::Path { n }, 0, 1)?;
        expect(Family::TreeRandom { n }, n as u64, 1)?;
        expect(Family::Complete { n }, 0, n - 1)?;
    }
    for n in 3..=18 {
        expect(Family::Cycle { n }, 0, 2)?;
    }
    for n in 4..=18 {
        expect(Family::Fan { n }, 0, 2)?;
    }
    expect(Family::Grid { rows: 2, cols: 2 }, 0, 2)?;
    expect(Family::Grid { rows: 3, cols: 3 }, 0, 3)?;
    Ok(format!("{checked} fixtures match"))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut pseudo = 0;
    for i in 0..500 {
        let n = rng.gen_range(1..=40);
        let family = match i % 4 {
            0 => Family::TreeRandom { n },
            1 => Family::RandomGnm { n, m: (n + rng.gen_range(0..n)).min(n * (n - 1) / 2) },
            2 => Family::RandomKtreePartial { n, k: rng.gen_range(1..4), p: 0.7 },
            _ => Family::Grid { rows: n.div_ceil(6), cols: 6.min(n) },
        };
        let g = generate(&family, i).map_err(|e| e.to_string())?;
        let td = min_fill_heuristic(&g);
        let gamma = Weighting::new(g.vertices().map(|v| (v, Weight::new(rng.gen_range(0..6), rng.gen_range(1..4))))).unwrap();
        let q = rng.gen_range(0..6);
        let z = tree_dec_sep(&g, &gamma, &td, q).map_err(|e| e.to_string())?;
        ensure!(z.len() <= q, "#{i} {family}: |Z| = {} > q = {q}", z.len());
        let x: tdrefine::VertexSet = z.iter().flat_map(|&node| td.bag(node).iter().copied()).collect();
        let bound = gamma.total() / Weight::from(q as i64 + 1);
        ensure!(verify_separator(&g, &gamma, &x, bound), "#{i} {family}: a component of G - X exceeds {bound}");

        let x = treewidth_sep(&g, &gamma, &td, 1).map_err(|e| e.to_string())?;
        let heaviest = g.components_avoiding(&x).iter().map(|c| gamma.of(c)).max().unwrap_or_default();
        let w = heaviest + Weight::new(rng.gen_range(0..8), 2);
        if w > Weight::from(0) {
            let sep = pseudo_components(&g, &gamma, &x, w).map_err(|e| e.to_string())?;
            let outside: Vec<Weight> = (0..sep.m()).map(|j| gamma.of(&sep.outside(j))).collect();
            let rest: Weight = outside.iter().copied().sum();
            let cap = if rest == Weight::from(0) && outside.is_empty() { 0 } else { ((Weight::from(2) * rest / w).ceil().to_integer() - 1).max(1) as usize };
            ensure!(sep.m() <= cap, "#{i}: m = {} above bound {cap}", sep.m());
            for a in 0..sep.m() {
                ensure!(outside[a] <= w, "#{i}: part {a} above w");
                for b in a + 1..sep.m() {
                    ensure!(outside[a] + outside[b] > w, "#{i}: parts {a},{b} fit together under w");
                }
            }
            pseudo += 1;
        }
    }
    Ok(format!("500 separator instances and {pseudo} pseudo-component instances, zero violations"))
}

fn run_corpus<T: Send>(corpus: &[Input], f: impl Fn(&Input) -> Result<T, String> + Sync) -> Result<Vec<T>, String> {
    corpus.par_iter().map(|inp| f(inp).map_err(|e| format!("{}: {e}", inp.id))).collect()
}

fn criterion_4(corpus: &[Input]) -> Outcome {
    let start = Instant::now();
    let traces = run_corpus(corpus, |inp| {
        let k = inp.td.width();
        let (out, trace) = slick_main(&inp.g, &inp.td, k).map_err(|e| e.to_string())?;
        ensure!(validate(&out, &inp.g).unwrap().is_valid(), "invalid output");
        ensure!(is_slick(&out, &inp.g, 1), "not slick");
        ensure!(out.width() <= 14 * k + 13, "width {} > {}", out.width(), 14 * k + 13);
        ensure!(out.degree() <= 6, "degree {}", out.degree());
        if let Some(v) = spread_ok(&inp.g, &out, 1) {
            return Err(v);
        }
        Ok(trace)
    })?;
    let secs = start.elapsed().as_secs_f64();
    ensure!(start.elapsed().as_secs() < 60, "took {secs:.1}s");
    let recursive: u64 = traces.iter().map(|t| t.alpha_beta_recursive).sum();
    Ok(format!("{} graphs in {secs:.1}s, {recursive} recursive frames", corpus.len()))
}

fn criterion_5(corpus: &[Input]) -> Outcome {
    run_corpus(corpus, |inp| {
        let k = inp.td.width().max(1);
        let n = inp.g.n();
        let out = small_tree_decomp(&inp.g, &inp.td, k).map_err(|e| e.to_string())?;
        ensure!(validate(&out, &inp.g).unwrap().is_valid(), "invalid output");
        ensure!(out.width() < 3 * k, "width {} > 3k-1 for k = {k}", out.width());
        ensure!(out.order() <= 1 || (out.order() + 1) * k <= n, "order {} > n/k - 1", out.order());
        Ok(())
    })?;
    Ok(format!("{} graphs, zero violations", corpus.len()))
}

fn criterion_6(large: &[Input]) -> Outcome {
    let branches = run_corpus(large, |inp| {
        let k = inp.td.width();
        let n = inp.g.n();
        let (out, trace) = slick_and_small(&inp.g, &inp.td, k).map_err(|e| e.to_string())?;
        ensure!(validate(&out, &inp.g).unwrap().is_valid(), "invalid output");
        ensure!(out.width() <= 56 * k + 58, "width {} > 56k+58", out.width());
        ensure!(out.order() <= (n / (14 * k + 14)).max(1), "order {}", out.order());
        ensure!(is_slick(&out, &inp.g, 1), "not slick");
        if let Some(v) = spread_ok(&inp.g, &out, 1) {
            return Err(v);
        }
        Ok(trace.alpha_beta_base + trace.alpha_beta_recursive > 0)
    })?;
    let fired = branches.iter().filter(|&&b| b).count();
    ensure!(fired > 0, "the recursive branch never fired");
    Ok(format!("{} graphs up to n = 5000, recursive branch on {fired}", large.len()))
}

fn weak_runs(corpus: &[Input]) -> Result<Vec<(Graph, TreeDecomposition, Trace)>, String> {
    let jobs: Vec<(usize, usize)> = (0..corpus.len()).flat_map(|i| [(i, 2), (i, 3)]).collect();
    jobs.into_par_iter()
        .map(|(i, d)| {
            let inp = &corpus[i];
            let (w, t) = weak_tree_decomp_gen(&inp.g, &inp.td, inp.td.width() + 1, d).map_err(|e| format!("{} d={d}: {e}", inp.id))?;
            Ok((inp.g.clone(), w, t))
        })
        .collect()
}

fn criterion_7(weak: &[(Graph, TreeDecomposition, Trace)]) -> Outcome {
    let mut slick_inputs = 0;
    for (g, w, _) in weak {
        let strong = weak_to_strong(g, w).map_err(|e| e.to_string())?;
        ensure!(validate(&strong, g).unwrap().is_valid(), "invalid conversion");
        ensure!(strong.width() <= 2 * w.width() + 1, "width {} > 2·{}+1", strong.width(), w.width());
        if is_slick(w, g, 1) {
            slick_inputs += 1;
            ensure!(is_slick(&strong, g, 1), "slickness lost");
        }
    }
    ensure!(weak.len() >= 200, "only {} weak decompositions", weak.len());
    Ok(format!("{} weak decompositions converted, {slick_inputs} slick inputs stayed slick", weak.len()))
}

fn criterion_8(corpus: &[Input]) -> Result<(String, Vec<Trace>), String> {
    let traces = run_corpus(corpus, |inp| {
        let k = inp.td.width() + 1;
        let n = inp.g.n();
        let (out, trace) = spread_small_degree(&inp.g, &inp.td, k).map_err(|e| e.to_string())?;
        ensure!(validate(&out, &inp.g).unwrap().is_valid(), "invalid output");
        ensure!(out.width() <= 72 * k + 1, "width {}", out.width());
        ensure!(out.degree() <= 12, "degree {}", out.degree());
        ensure!(out.order() <= (n / (2 * k)).max(1), "order {} for n = {n}, k = {k}", out.order());
        if let Some(v) = spread_ok(&inp.g, &out, 1) {
            return Err(v);
        }
        Ok(trace)
    })?;
    Ok((format!("{} graphs, zero violations", corpus.len()), traces))
}

fn criterion_9(corpus: &[Input]) -> Result<(String, Vec<Trace>), String> {
    let traces = run_corpus(corpus, |inp| {
        let k = inp.td.width() + 1;
        let d = inp.g.max_degree() + 2;
        let (tp, trace) = tree_partition(&inp.g, &inp.td, k).map_err(|e| e.to_string())?;
        ensure!(tp.kind() == Kind::Partition, "wrong kind");
        ensure!(validate(&tp, &inp.g).unwrap().is_valid(), "not a valid partition");
        ensure!(verify_decomposition_bruteforce(&inp.g, &tp, Kind::Partition).holds(), "oracle rejects the partition");
        let total: usize = tp.bags().iter().map(|b| b.len()).sum();
        ensure!(total == inp.g.n() && tp.vertices() == inp.g.vertex_set(), "bags do not partition V(G)");
        ensure!(tp.width() <= 18 * k * d, "width {} > 18k(Δ+2)", tp.width());
        ensure!(tp.degree() <= 6 * d, "degree {} > 6(Δ+2)", tp.degree());
        Ok(trace)
    })?;
    Ok((format!("{} graphs, zero violations", corpus.len()), traces))
}

fn criterion_10(traces: &[Trace]) -> Outcome {
    let mut total = Trace::default();
    for t in traces {
        total.absorb(t);
    }
    ensure!(total.heart_case3 > 0, "Case 3 never ran");
    ensure!(total.heart_case2 > 0, "Case 2 never ran");
    ensure!(total.alpha_beta_recursive > 0, "alpha_beta never recursed");
    Ok(format!(
        "{} certificates held over {} heart frames (cases {}/{}/{}) and {} alpha_beta frames",
        total.certificates_checked,
        total.heart_case1 + total.heart_case2 + total.heart_case3,
        total.heart_case1,
        total.heart_case2,
        total.heart_case3,
        total.alpha_beta_base + total.alpha_beta_recursive
    ))
}

fn criterion_11() -> Outcome {
    let g = generate(&Family::Cycle { n: 10 }, 0).unwrap();
    let fixture = cycle_apex_decomposition(10);
    ensure!(fixture.spread(0) == 8, "fixture spread(v_1) = {}", fixture.spread(0));
    let td = min_fill_heuristic(&g);
    let (out, _) = slick_main(&g, &td, td.width()).map_err(|e| e.to_string())?;
    let max = out.spreads().values().copied().max().unwrap_or(0);
    ensure!(max <= 3, "slick max spread {max}");
    let (out2, _) = slick_main(&g, &fixture, fixture.width()).map_err(|e| e.to_string())?;
    let max2 = out2.spreads().values().copied().max().unwrap_or(0);
    ensure!(max2 <= 3, "slick max spread {max2} from the fixture");
    Ok(format!("fixture spread 8, slick max spread {max}"))
}

fn all_outputs(corpus: &[Input]) -> Result<Vec<String>, String> {
    let jobs: Vec<(usize, tdrefine::certify::Mode)> =
        (0..corpus.len()).flat_map(|i| tdrefine::certify::Mode::ALL.map(move |m| (i, m))).collect();
    jobs.into_par_iter()
        .map(|(i, mode)| {
            let inp = &corpus[i];
            let k = mode.default_k(inp.td.width());
            let (out, _) = tdrefine::certify::run(mode, &inp.g, &inp.td, k, 2).map_err(|e| format!("{} {mode}: {e}", inp.id))?;
            Ok(write_td(&out, inp.g.n()))
        })
        .collect()
}

fn criterion_12(corpus: &[Input]) -> Outcome {
    let first = all_outputs(corpus)?;
    let rebuilt = main_corpus();
    ensure!(rebuilt.len() == corpus.len(), "corpus size changed");
    for (a, b) in corpus.iter().zip(&rebuilt) {
        ensure!(write_gr(&a.g) == write_gr(&b.g), "graph {} differs", a.id);
        ensure!(write_td(&a.td, a.g.n()) == write_td(&b.td, b.g.n()), "input decomposition of {} differs", a.id);
    }
    let second = all_outputs(&rebuilt)?;
    ensure!(first == second, "outputs differ between runs");
    let bytes: usize = first.iter().map(String::len).sum();
    Ok(format!("{} outputs ({bytes} bytes) identical across two independent runs", first.len()))
}

fn report(n: u32, title: &str, outcome: &Outcome) -> bool {
    match outcome {
        Ok(detail) => {
            println!("PASS {n:>2} {title}: {detail}");
            true
        }
        Err(why) => {
            println!("FAIL {n:>2} {title}: {why}");
            false
        }
    }
}

fn main() {
    let corpus = main_corpus();
    let large = large_corpus();
    let mut ok = true;
    ok &= report(1, "definitional soundness", &criterion_1());
    ok &= report(2, "exact treewidth fixtures", &criterion_2());
    ok &= report(3, "separator suite", &criterion_3());
    ok &= report(4, "slick, width 14k+13, degree 6", &criterion_4(&corpus));
    ok &= report(5, "small order, width 3k-1", &criterion_5(&corpus));
    ok &= report(6, "slick and small, width 56k+58", &criterion_6(&large));

    let weak = weak_runs(&corpus);
    let c7 = weak.as_ref().map_err(Clone::clone).and_then(|w| criterion_7(w));
    ok &= report(7, "weak to strong, width 2k+1", &c7);
    let c8 = criterion_8(&corpus);
    ok &= report(8, "spread, degree 12, width 72k+1", &c8.as_ref().map(|(s, _)| s.clone()).map_err(Clone::clone));
    let c9 = criterion_9(&corpus);
    ok &= report(9, "tree-partitions", &c9.as_ref().map(|(s, _)| s.clone()).map_err(Clone::clone));

    let c10 = match (&weak, &c8, &c9) {
        (Ok(w), Ok((_, t8)), Ok((_, t9))) => {
            let slick_traces = run_corpus(&corpus, |inp| slick_main(&inp.g, &inp.td, inp.td.width()).map(|(_, t)| t).map_err(|e| e.to_string()));
            slick_traces.and_then(|ts| {
                let all: Vec<Trace> = w.iter().map(|(_, _, t)| t.clone()).chain(t8.iter().cloned()).chain(t9.iter().cloned()).chain(ts).collect();
                criterion_10(&all)
            })
        }
        _ => Err("depends on criteria 7 to 9, which failed".to_string()),
    };
    ok &= report(10, "internal proof certificates", &c10);
    ok &= report(11, "spread lower-bound sanity", &criterion_11());
    ok &= report(12, "determinism", &criterion_12(&corpus));
    if !ok {
        std::process::exit(1);
    }
}
