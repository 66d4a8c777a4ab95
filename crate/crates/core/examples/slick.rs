//! Slick decomposition of a long cycle: every vertex ends up in at most
//! `deg(v)+1` bags.

use tdrefine::decomp::is_slick;
use tdrefine::fixtures::cycle_apex_decomposition;
use tdrefine::graph::{generate, Family};
use tdrefine::slick::slick_main;

fn main() -> tdrefine::Result<()> {
    let g = generate(&Family::Cycle { n: 200 }, 0)?;
    let td = cycle_apex_decomposition(200);
    let k = td.width();
    let max_spread = |t: &tdrefine::TreeDecomposition| t.spreads().values().copied().max().unwrap_or(0);
    println!("input: width {k}, max spread {}", max_spread(&td));
    let (out, trace) = slick_main(&g, &td, k)?;
    println!("slick: width {} (≤ {}), degree {} (≤ 6), max spread {}", out.width(), 14 * k + 13, out.degree(), max_spread(&out));
    println!("1-slick: {}, recursive calls {}, base cases {}", is_slick(&out, &g, 1), trace.alpha_beta_recursive, trace.alpha_beta_base);
    Ok(())
}
