//! Constructive refinement of tree-decompositions.
//!
//! Starting from any valid tree-decomposition of a graph (supplied by the
//! caller or produced by the min-fill heuristic in [`oracle`]), the builders
//! in this crate produce decompositions whose width stays within a constant
//! factor of the input width while additionally bounding
//!
//! * the **spread** of every vertex (number of bags containing it),
//! * the **order** (number of bags),
//! * the **degree** of the indexing tree.
//!
//! Every builder self-checks its output against the validators in
//! [`decomp`] and the bound certificates in [`certify`].
//!
//! | builder | width | degree | order | spread |
//! |---|---|---|---|---|
//! | [`slick::slick_main`] | `14k+13` | `6` | | `deg(v)+1` |
//! | [`division::small_tree_decomp`] | `3k-1` | | `max(n/k-1, 1)` | |
//! | [`division::slick_and_small`] | `56k+58` | | `max(n/(14k+14), 1)` | `deg(v)+1` |
//! | [`weak::weak_tree_decomp_gen`] (weak) | `18kd` | `6d` | `max(n/2k, 1)` | `1+deg(v)/(d-1)` |
//! | [`weak::spread_small_degree`] | `72k+1` | `12` | `max(n/2k, 1)` | `deg(v)+1` |
//! | [`weak::tree_partition`] | `18k(Δ+2)` | `6(Δ+2)` | `max(n/2k, 1)` | `1` |

pub mod bench;
pub mod certify;
pub mod cli;
pub mod decomp;
pub mod division;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod separators;
pub mod slick;
pub mod tree;
pub mod weak;

pub use decomp::{Kind, TreeDecomposition};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet, Weight, Weighting};
pub use tree::RootedTree;

/// Counters collected while a builder runs.
///
/// They are reported in the stats records and used by the acceptance suite to
/// confirm that every recursive case was exercised.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Trace {
    pub alpha_beta_base: u64,
    pub alpha_beta_recursive: u64,
    pub heart_case1: u64,
    pub heart_case2: u64,
    pub heart_case3: u64,
    /// Number of internal inequalities checked (all must hold).
    pub certificates_checked: u64,
}

impl Trace {
    pub fn absorb(&mut self, other: &Trace) {
        self.alpha_beta_base += other.alpha_beta_base;
        self.alpha_beta_recursive += other.alpha_beta_recursive;
        self.heart_case1 += other.heart_case1;
        self.heart_case2 += other.heart_case2;
        self.heart_case3 += other.heart_case3;
        self.certificates_checked += other.certificates_checked;
    }

    pub(crate) fn check(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
        self.certificates_checked += 1;
        if ok {
            Ok(())
        } else {
            Err(Error::Certificate { name, detail: detail() })
        }
    }
}
