//! Generates one graph of every family and prints its size and maximum degree.

use tdrefine::graph::{generate, Family};

fn main() -> tdrefine::Result<()> {
    let families = [
        Family::Path { n: 10 },
        Family::Cycle { n: 10 },
        Family::Grid { rows: 4, cols: 5 },
        Family::Fan { n: 8 },
        Family::Complete { n: 5 },
        Family::RandomGnm { n: 30, m: 45 },
        Family::RandomKtreePartial { n: 30, k: 3, p: 0.6 },
        Family::TreeRandom { n: 30 },
    ];
    for f in &families {
        let g = generate(f, 42)?;
        println!("{f:<32} n={:<4} m={:<4} Δ={}", g.n(), g.m(), g.max_degree());
    }
    Ok(())
}
