//! Slick and small at once on a graph large enough for the recursive branch.

use tdrefine::division::slick_and_small;
use tdrefine::graph::{generate, Family};
use tdrefine::oracle::min_fill_heuristic;

fn main() -> tdrefine::Result<()> {
    let g = generate(&Family::RandomKtreePartial { n: 2000, k: 2, p: 0.7 }, 11)?;
    let td = min_fill_heuristic(&g);
    let k = td.width();
    let (out, _) = slick_and_small(&g, &td, k)?;
    println!("n={} k={k}: width {} (≤ {}), order {} (≤ {})", g.n(), out.width(), 56 * k + 58, out.order(), (g.n() / (14 * k + 14)).max(1));
    Ok(())
}
