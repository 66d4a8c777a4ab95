//! Named graph corpora and the (graph, mode) job runner behind `bench`.

use std::time::Instant;

use rayon::prelude::*;

use crate::certify::{certify, run, Mode, StatsRecord};
use crate::decomp::TreeDecomposition;
use crate::error::{Error, Result};
use crate::fixtures::grid_window_decomposition;
use crate::graph::{generate, Family, Graph};
use crate::oracle::{exact_treewidth, min_fill_heuristic, OracleBudget};

#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub family: Family,
    pub seed: u64,
}

impl Case {
    pub fn new(family: Family, seed: u64) -> Self {
        Case { family, seed }
    }

    pub fn id(&self) -> String {
        if self.family.is_random() {
            format!("{}#{}", self.family, self.seed)
        } else {
            self.family.to_string()
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        generate(&self.family, self.seed)
    }
}

pub const SUITES: [&str; 4] = ["smoke", "standard", "large", "random"];

/// Cases of a named suite.
///
/// * `smoke`: a handful of small graphs of every family.
/// * `standard`: grids up to 10×10, cycles and fans up to 200, random graphs
///   up to 300 vertices.
/// * `large`: graphs of 1000 to 5000 vertices with small treewidth.
/// * `random`: 200 sparse random graphs with 20 to 300 vertices.
pub fn suite(name: &str) -> Result<Vec<Case>> {
    let fixed = |f: Family| Case::new(f, 0);
    Ok(match name {
        "smoke" => vec![
            fixed(Family::Path { n: 40 }),
            fixed(Family::Cycle { n: 60 }),
            fixed(Family::Grid { rows: 6, cols: 6 }),
            fixed(Family::Fan { n: 40 }),
            fixed(Family::Complete { n: 6 }),
            Case::new(Family::TreeRandom { n: 200 }, 1),
            Case::new(Family::RandomGnm { n: 60, m: 70 }, 2),
            Case::new(Family::RandomKtreePartial { n: 150, k: 3, p: 0.6 }, 3),
        ],
        "standard" => {
            let mut cases: Vec<Case> = (2..=10).map(|n| fixed(Family::Grid { rows: n, cols: n })).collect();
            cases.extend([10, 25, 50, 100, 200].map(|n| fixed(Family::Cycle { n })));
            cases.extend([10, 25, 50, 100, 200].map(|n| fixed(Family::Fan { n })));
            cases.extend((0..20).map(|s| Case::new(Family::TreeRandom { n: 50 + 12 * s as usize }, s)));
            cases.extend((0..20).map(|s| Case::new(Family::RandomKtreePartial { n: 40 + 13 * s as usize, k: 2 + s as usize % 3, p: 0.7 }, s)));
            cases
        }
        "large" => vec![
            fixed(Family::Path { n: 5000 }),
            fixed(Family::Cycle { n: 5000 }),
            fixed(Family::Fan { n: 3000 }),
            fixed(Family::Grid { rows: 40, cols: 40 }),
            Case::new(Family::TreeRandom { n: 5000 }, 7),
            Case::new(Family::RandomKtreePartial { n: 3000, k: 2, p: 0.8 }, 8),
        ],
        "random" => (0..200u64)
            .map(|s| {
                let n = 20 + (s as usize * 7) % 281;
                let family = match s % 4 {
                    0 => Family::TreeRandom { n },
                    1 => Family::RandomGnm { n, m: n + n / 10 },
                    2 => Family::RandomKtreePartial { n, k: 2, p: 0.6 },
                    _ => Family::RandomKtreePartial { n, k: 3, p: 0.5 },
                };
                Case::new(family, s)
            })
            .collect(),
        other => return Err(Error::InvalidInput(format!("unknown suite `{other}`; expected one of {}", SUITES.join(", ")))),
    })
}

/// Width witness for `g`: exact under the oracle budget, the window
/// decomposition for grids, min-fill otherwise.
pub fn input_decomposition(family: Option<&Family>, g: &Graph) -> TreeDecomposition {
    if g.n() <= OracleBudget::default().max_vertices {
        if let Ok(exact) = exact_treewidth(g) {
            return exact.witness;
        }
    }
    match family {
        Some(&Family::Grid { rows, cols }) => grid_window_decomposition(rows, cols),
        _ => min_fill_heuristic(g),
    }
}

/// Builds, certifies and reports one job; `k` defaults per mode.
pub fn run_job(id: &str, g: &Graph, td: &TreeDecomposition, mode: Mode, k: Option<usize>, d: usize, timing: bool) -> Result<(TreeDecomposition, StatsRecord)> {
    let k = k.unwrap_or_else(|| mode.default_k(td.width()));
    let start = Instant::now();
    let (out, trace) = run(mode, g, td, k, d)?;
    let achieved = certify(mode, g, &out, k, d)?;
    let record = StatsRecord {
        graph: id.to_string(),
        n: g.n(),
        m: g.m(),
        mode,
        k,
        d,
        input_width: td.width(),
        achieved: Some(achieved),
        bounds: mode.bounds(g, k, d),
        wall_ms: timing.then(|| start.elapsed().as_secs_f64() * 1e3),
        trace,
    };
    Ok((out, record))
}

/// Runs every mode on every case of `suite` in parallel. Records come back
/// in (case, mode) order.
pub fn run_suite(name: &str, modes: &[Mode], d: usize, timing: bool) -> Result<Vec<StatsRecord>> {
    let cases = suite(name)?;
    let inputs: Vec<(Case, Graph, TreeDecomposition)> = cases
        .into_par_iter()
        .map(|c| {
            let g = c.graph()?;
            let td = input_decomposition(Some(&c.family), &g);
            Ok((c, g, td))
        })
        .collect::<Result<_>>()?;
    let jobs: Vec<(usize, Mode)> = (0..inputs.len()).flat_map(|i| modes.iter().map(move |&m| (i, m))).collect();
    jobs.into_par_iter()
        .map(|(i, mode)| {
            let (case, g, td) = &inputs[i];
            run_job(&case.id(), g, td, mode, None, d, timing).map(|(_, r)| r)
        })
        .collect()
}
