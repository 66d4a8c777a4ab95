//! Balanced separators from a tree-decomposition.

use tdrefine::graph::{generate, Family, Weight, Weighting};
use tdrefine::oracle::{min_fill_heuristic, verify_separator};
use tdrefine::separators::{gen_separation, pseudo_components, separation_set_sep, treewidth_sep};

fn main() -> tdrefine::Result<()> {
    let g = generate(&Family::Grid { rows: 8, cols: 8 }, 0)?;
    let td = min_fill_heuristic(&g);
    let gamma = Weighting::uniform(&g);

    for q in [1, 2, 4] {
        let x = treewidth_sep(&g, &gamma, &td, q)?;
        let bound = gamma.total() / Weight::from(q as i64 + 1);
        println!("q={q}: |X|={} (≤ {}), components ≤ {bound}: {}", x.len(), q * (td.width() + 1), verify_separator(&g, &gamma, &x, bound));
    }

    let x = treewidth_sep(&g, &gamma, &td, 1)?;
    let groups = pseudo_components(&g, &gamma, &x, Weight::from(32))?;
    println!("pseudo-components with w=32: m={}", groups.m());

    let sep = gen_separation(&g, &gamma, &td, Weight::new(1, 3))?;
    println!("β=1/3: |X|={} m={}", sep.x_set.len(), sep.m());

    let s = g.vertex_set();
    let two = separation_set_sep(&g, &td, &s, Weight::new(2, 3))?;
    println!("β=2/3 on S=V(G): |X|={} part sizes {:?}", two.x_set.len(), two.parts.iter().map(|p| p.len()).collect::<Vec<_>>());
    Ok(())
}
