//! Normalizes a decomposition so that every bag has exactly `k+1` vertices
//! and neighbouring bags differ in one vertex.

use tdrefine::decomp::{smooth_decomposition, validate};
use tdrefine::graph::{generate, Family};
use tdrefine::oracle::min_fill_heuristic;

fn main() -> tdrefine::Result<()> {
    let g = generate(&Family::Grid { rows: 5, cols: 5 }, 0)?;
    let td = min_fill_heuristic(&g);
    let smooth = smooth_decomposition(&g, &td)?;
    println!("min-fill: width {} order {}", td.width(), td.order());
    println!("smooth:   width {} order {} (n - k = {})", smooth.width(), smooth.order(), g.n() - smooth.width());
    let sizes: std::collections::BTreeSet<usize> = smooth.bags().iter().map(|b| b.len()).collect();
    println!("bag sizes {sizes:?}, valid: {}", validate(&smooth, &g)?.is_valid());
    Ok(())
}
