//! Validates a hand-made decomposition of a cycle and then breaks it.

use tdrefine::decomp::{is_slick, validate, validate_as};
use tdrefine::fixtures::cycle_apex_decomposition;
use tdrefine::graph::{generate, Family};
use tdrefine::{Kind, TreeDecomposition};

fn main() -> tdrefine::Result<()> {
    let g = generate(&Family::Cycle { n: 10 }, 0)?;
    let td = cycle_apex_decomposition(10);
    println!("width {}, order {}, spread(0) = {}", td.width(), td.order(), td.spread(0));
    println!("{}", validate(&td, &g)?.to_text().trim_end());
    println!("1-slick: {}", is_slick(&td, &g, 1));
    println!("as a partition: {}", validate_as(&td, &g, Kind::Partition)?.to_text().lines().next().unwrap_or(""));

    let (tree, mut bags, kind) = td.into_parts();
    bags[3].remove(&0);
    let broken = TreeDecomposition::new(tree, bags, kind)?;
    println!("{}", validate(&broken, &g)?.to_json());
    Ok(())
}
