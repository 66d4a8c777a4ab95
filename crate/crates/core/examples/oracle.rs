//! Exact treewidth for small graphs compared against min-fill.

use tdrefine::graph::{generate, Family};
use tdrefine::oracle::{exact_treewidth, min_fill_heuristic, verify_decomposition_bruteforce};
use tdrefine::Kind;

fn main() -> tdrefine::Result<()> {
    for f in [
        Family::Path { n: 12 },
        Family::Cycle { n: 12 },
        Family::Grid { rows: 3, cols: 3 },
        Family::Grid { rows: 4, cols: 4 },
        Family::Fan { n: 12 },
        Family::Complete { n: 7 },
        Family::RandomGnm { n: 14, m: 30 },
    ] {
        let g = generate(&f, 0)?;
        let exact = exact_treewidth(&g)?;
        let heur = min_fill_heuristic(&g);
        let ok = verify_decomposition_bruteforce(&g, &exact.witness, Kind::Strong).holds();
        println!("{f:<20} tw={} min-fill={} witness ok={ok}", exact.treewidth, heur.width());
    }
    Ok(())
}
