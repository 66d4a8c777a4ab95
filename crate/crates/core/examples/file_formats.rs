//! Reads and writes the `.gr` and `.td` formats.

use tdrefine::graph::{generate, Family};
use tdrefine::io::{parse_gr, parse_td, write_gr, write_td};
use tdrefine::oracle::min_fill_heuristic;
use tdrefine::Kind;

fn main() -> tdrefine::Result<()> {
    let g = generate(&Family::Fan { n: 6 }, 0)?;
    let gr = write_gr(&g);
    print!("{gr}");
    let td = min_fill_heuristic(&parse_gr(&gr)?.graph);
    let text = write_td(&td, g.n());
    print!("{text}");
    let back = parse_td(&text, Kind::Strong)?;
    assert_eq!(write_td(&back.td, back.n), text);
    println!("c round trip ok");
    Ok(())
}
