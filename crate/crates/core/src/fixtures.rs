//! Hand-made decompositions of the generator families, matching the
//! vertex numbering of [`crate::graph::generate`].

use crate::decomp::{Kind, TreeDecomposition};
use crate::graph::VertexSet;

/// Path of edge bags `{i-1, i}` for the path on `n >= 2` vertices; width 1.
pub fn path_edge_decomposition(n: usize) -> TreeDecomposition {
    assert!(n >= 2, "path needs an edge");
    TreeDecomposition::path((1..n).map(|i| [i - 1, i].into()).collect(), Kind::Strong).expect("path of bags")
}

/// Cycle `C_n` (`n >= 3`): path-decomposition of `C_n - 0` with vertex 0
/// added to all `n - 2` bags, so vertex 0 has spread `n - 2`.
pub fn cycle_apex_decomposition(n: usize) -> TreeDecomposition {
    assert!(n >= 3, "cycle needs three vertices");
    TreeDecomposition::path((1..n - 1).map(|i| [0, i, i + 1].into()).collect(), Kind::Strong).expect("path of bags")
}

/// Grid path-decomposition whose bags are pairs of consecutive rows;
/// width `2·cols - 1`.
pub fn grid_row_pair_decomposition(rows: usize, cols: usize) -> TreeDecomposition {
    assert!(rows >= 2 && cols >= 1, "needs two rows");
    let bags = (0..rows - 1).map(|r| (r * cols..(r + 2) * cols).collect::<VertexSet>()).collect();
    TreeDecomposition::path(bags, Kind::Strong).expect("path of bags")
}

/// Grid path-decomposition sliding a window of `cols + 1` consecutive ids
/// in row-major order; width `cols` (optimal for square grids).
pub fn grid_window_decomposition(rows: usize, cols: usize) -> TreeDecomposition {
    let n = rows * cols;
    if n <= cols + 1 {
        return TreeDecomposition::single_bag((0..n).collect(), Kind::Strong);
    }
    let bags = (0..n - cols).map(|j| (j..=j + cols).collect::<VertexSet>()).collect();
    TreeDecomposition::path(bags, Kind::Strong).expect("path of bags")
}
