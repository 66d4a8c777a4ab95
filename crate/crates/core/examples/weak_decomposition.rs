//! Weak decompositions: each edge needs only to be covered by two adjacent
//! bags. Larger `d` gives smaller spread at the cost of width.

use tdrefine::graph::{generate, Family};
use tdrefine::oracle::min_fill_heuristic;
use tdrefine::weak::{weak_to_strong, weak_tree_decomp_gen};

fn main() -> tdrefine::Result<()> {
    let g = generate(&Family::TreeRandom { n: 3000 }, 1)?;
    let td = min_fill_heuristic(&g);
    let k = td.width() + 1;
    for d in [2, 3, 5] {
        let (weak, trace) = weak_tree_decomp_gen(&g, &td, k, d)?;
        let spread = weak.spreads().values().copied().max().unwrap_or(0);
        println!(
            "d={d}: width {} order {} degree {} max spread {spread}; cases {}/{}/{}",
            weak.width(),
            weak.order(),
            weak.degree(),
            trace.heart_case1,
            trace.heart_case2,
            trace.heart_case3
        );
        let strong = weak_to_strong(&g, &weak)?;
        println!("      as strong: width {}", strong.width());
    }
    Ok(())
}
