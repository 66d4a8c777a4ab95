//! Few bags: width at most `3k-1` and order at most `n/k - 1`.

use tdrefine::division::small_tree_decomp;
use tdrefine::graph::{generate, Family};
use tdrefine::oracle::min_fill_heuristic;

fn main() -> tdrefine::Result<()> {
    for f in [Family::Path { n: 100 }, Family::Grid { rows: 8, cols: 8 }, Family::TreeRandom { n: 300 }] {
        let g = generate(&f, 3)?;
        let td = min_fill_heuristic(&g);
        let k = td.width() + 1;
        let out = small_tree_decomp(&g, &td, k)?;
        println!("{f}: k={k}, order {} → {}, width {} (≤ {})", td.order(), out.order(), out.width(), 3 * k - 1);
    }
    Ok(())
}
