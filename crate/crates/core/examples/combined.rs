//! Width, tree degree, order and spread bounded simultaneously.

use tdrefine::graph::{generate, Family};
use tdrefine::oracle::min_fill_heuristic;
use tdrefine::weak::spread_small_degree;

fn main() -> tdrefine::Result<()> {
    let g = generate(&Family::RandomKtreePartial { n: 1500, k: 3, p: 0.6 }, 5)?;
    let td = min_fill_heuristic(&g);
    let k = td.width() + 1;
    let (out, _) = spread_small_degree(&g, &td, k)?;
    let worst = g.vertices().map(|v| out.spread(v) as i64 - g.degree(v) as i64).max().unwrap_or(0);
    println!("k={k}: width {} (≤ {}), degree {} (≤ 12), order {} (≤ {})", out.width(), 72 * k + 1, out.degree(), out.order(), (g.n() / (2 * k)).max(1));
    println!("max over v of spread(v) - deg(v): {worst}");
    Ok(())
}
