//! Ground truth at desk scale.
//!
//! [`exact_treewidth`] solves small instances exactly. The `*_bruteforce`
//! checkers are transcribed directly from the definitions and deliberately
//! share nothing with [`crate::decomp`] or [`crate::separators`].
//! [`min_fill_heuristic`] supplies width witnesses for graphs too large for
//! the exact solver.

mod brute;
mod elimination;
mod exact;
mod minfill;

pub use brute::{is_slick_bruteforce, spreads_bruteforce, verify_decomposition_bruteforce, verify_separator, Verdict};
pub use elimination::decomposition_from_ordering;
pub use exact::{exact_treewidth, exact_treewidth_with, ExactTreewidth, OracleBudget};
pub use minfill::{min_fill_heuristic, min_fill_ordering};
