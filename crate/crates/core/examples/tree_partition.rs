//! Tree-partitions: disjoint bags, edges only inside a bag or between
//! adjacent bags.

use tdrefine::decomp::validate;
use tdrefine::graph::{generate, Family};
use tdrefine::oracle::min_fill_heuristic;
use tdrefine::weak::tree_partition;

fn main() -> tdrefine::Result<()> {
    for f in [Family::Cycle { n: 500 }, Family::TreeRandom { n: 2000 }, Family::Grid { rows: 12, cols: 12 }] {
        let g = generate(&f, 9)?;
        let td = min_fill_heuristic(&g);
        let k = td.width() + 1;
        let (tp, _) = tree_partition(&g, &td, k)?;
        let d = g.max_degree() + 2;
        println!("{f}: width {} (≤ {}), degree {} (≤ {}), order {}, valid {}", tp.width(), 18 * k * d, tp.degree(), 6 * d, tp.order(), validate(&tp, &g)?.is_valid());
    }
    Ok(())
}
