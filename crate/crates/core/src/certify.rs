//! Builder dispatch by mode, the bound each mode guarantees, and the
//! per-run stats record.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::decomp::{is_slick, validate, Kind, TreeDecomposition};
use crate::division::{slick_and_small, small_tree_decomp};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::slick::slick_main;
use crate::weak::{spread_small_degree, tree_partition, weak_tree_decomp_gen};
use crate::Trace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Slick,
    Small,
    SlickSmall,
    Weak,
    Combined,
    Partition,
}

impl Mode {
    pub const ALL: [Mode; 6] = [Mode::Slick, Mode::Small, Mode::SlickSmall, Mode::Weak, Mode::Combined, Mode::Partition];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Slick => "slick",
            Mode::Small => "small",
            Mode::SlickSmall => "slick-small",
            Mode::Weak => "weak",
            Mode::Combined => "combined",
            Mode::Partition => "partition",
        }
    }

    /// Kind of decomposition the mode outputs.
    pub fn kind(self) -> Kind {
        match self {
            Mode::Weak => Kind::Weak,
            Mode::Partition => Kind::Partition,
            _ => Kind::Strong,
        }
    }

    /// `k` to use when the caller gives none: the input width for the modes
    /// taking width at most `k`, one more for those taking width at most `k-1`.
    pub fn default_k(self, input_width: usize) -> usize {
        match self {
            Mode::Slick | Mode::SlickSmall => input_width,
            Mode::Small => input_width.max(1),
            Mode::Weak | Mode::Combined | Mode::Partition => input_width + 1,
        }
    }

    pub fn bounds(self, g: &Graph, k: usize, d: usize) -> Bounds {
        let n = g.n();
        let order_cap = |div: usize, minus: usize| (n / div.max(1)).saturating_sub(minus).max(1);
        match self {
            Mode::Slick => Bounds { width: 14 * k + 13, degree: Some(6), order: None, slick: Some(1) },
            Mode::Small => Bounds { width: (3 * k).saturating_sub(1), degree: None, order: Some(order_cap(k, 1)), slick: None },
            Mode::SlickSmall => Bounds { width: 56 * k + 58, degree: None, order: Some(order_cap(14 * k + 14, 0)), slick: Some(1) },
            Mode::Weak => Bounds { width: 18 * k * d, degree: Some(6 * d), order: Some(order_cap(2 * k, 0)), slick: Some(d.saturating_sub(1).max(1)) },
            Mode::Combined => Bounds { width: 72 * k + 1, degree: Some(12), order: Some(order_cap(2 * k, 0)), slick: Some(1) },
            Mode::Partition => {
                let d = g.max_degree() + 2;
                Bounds { width: 18 * k * d, degree: Some(6 * d), order: Some(order_cap(2 * k, 0)), slick: Some(d - 1) }
            }
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown mode `{s}`")))
    }
}

/// Guaranteed bounds of a mode. `slick: Some(s)` means the output is
/// `s`-slick, so every vertex has spread at most `deg(v)/s + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub width: usize,
    pub degree: Option<usize>,
    pub order: Option<usize>,
    pub slick: Option<usize>,
}

/// Builds the decomposition for `mode`. The builders certify their own
/// bounds; [`certify`] re-checks the result from scratch.
pub fn run(mode: Mode, g: &Graph, td: &TreeDecomposition, k: usize, d: usize) -> Result<(TreeDecomposition, Trace)> {
    match mode {
        Mode::Slick => slick_main(g, td, k),
        Mode::Small => Ok((small_tree_decomp(g, td, k)?, Trace::default())),
        Mode::SlickSmall => slick_and_small(g, td, k),
        Mode::Weak => weak_tree_decomp_gen(g, td, k, d),
        Mode::Combined => spread_small_degree(g, td, k),
        Mode::Partition => tree_partition(g, td, k),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Achieved {
    pub width: usize,
    pub order: usize,
    pub degree: usize,
    pub max_spread: usize,
}

/// Validates `out` as the mode's kind and checks every bound of the mode.
pub fn certify(mode: Mode, g: &Graph, out: &TreeDecomposition, k: usize, d: usize) -> Result<Achieved> {
    let fail = |name: &'static str, detail: String| Err(Error::Certificate { name, detail });
    if out.kind() != mode.kind() {
        return fail("output_kind", format!("{} output for mode {mode}", out.kind()));
    }
    let report = validate(out, g)?;
    if !report.is_valid() {
        return fail("output_valid", report.to_text());
    }
    let b = mode.bounds(g, k, d);
    let spreads = out.spreads();
    let got = Achieved {
        width: out.width(),
        order: out.order(),
        degree: out.degree(),
        max_spread: spreads.values().copied().max().unwrap_or(0),
    };
    if got.width > b.width {
        return fail("output_width", format!("width {} > {}", got.width, b.width));
    }
    if let Some(cap) = b.degree.filter(|&c| got.degree > c) {
        return fail("output_degree", format!("degree {} > {cap}", got.degree));
    }
    if let Some(cap) = b.order.filter(|&c| got.order > c) {
        return fail("output_order", format!("order {} > {cap}", got.order));
    }
    if let Some(s) = b.slick {
        if !is_slick(out, g, s) {
            return fail("output_slick", format!("output is not {s}-slick"));
        }
        if let Some(v) = g.vertices().find(|&v| spreads.get(&v).copied().unwrap_or(0) > g.degree(v) / s + 1) {
            return fail("output_spread", format!("vertex {v} has spread {} with degree {}", spreads[&v], g.degree(v)));
        }
    }
    Ok(got)
}

/// One JSON-lines row per (graph, mode) run.
#[derive(Debug, Clone, Serialize)]
pub struct StatsRecord {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub mode: Mode,
    pub k: usize,
    pub d: usize,
    pub input_width: usize,
    pub achieved: Option<Achieved>,
    pub bounds: Bounds,
    pub wall_ms: Option<f64>,
    pub trace: Trace,
}

impl StatsRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("stats serialize")
    }
}
