use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Kind, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    /// No bag contains the vertex.
    VertexUncovered { vertex: Vertex },
    /// The bags containing the vertex do not induce a subtree.
    VertexDisconnected { vertex: Vertex, nodes: Vec<usize> },
    /// No bag (strong) or adjacent bag pair (weak/partition) covers the edge.
    EdgeUncovered { u: Vertex, v: Vertex },
    /// Tree-partition only: the vertex lies in more than one bag.
    BagsOverlap { vertex: Vertex, nodes: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexUncovered { vertex } => write!(f, "vertex {vertex} is in no bag"),
            Violation::VertexDisconnected { vertex, nodes } => {
                write!(f, "bags containing vertex {vertex} are disconnected: nodes {nodes:?}")
            }
            Violation::EdgeUncovered { u, v } => write!(f, "edge {u}-{v} is not covered"),
            Violation::BagsOverlap { vertex, nodes } => write!(f, "vertex {vertex} lies in several bags: nodes {nodes:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub kind: Kind,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// One line per violation, or a single `valid <kind>` line.
    pub fn to_text(&self) -> String {
        if self.is_valid() {
            return format!("valid {}\n", self.kind);
        }
        self.violations.iter().map(|v| format!("invalid {}: {v}\n", self.kind)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    pub(crate) fn into_result(self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidDecomposition(format!("{} decomposition: {v}", self.kind))),
        }
    }
}

/// Checks `td` against the definition selected by its own kind.
pub fn validate(td: &TreeDecomposition, g: &Graph) -> Result<ValidationReport> {
    validate_as(td, g, td.kind())
}

/// Checks `td` against the definition for `kind`.
///
/// Fails with [`Error::InvalidInput`] when a bag references a vertex that is
/// not in `g`.
pub fn validate_as(td: &TreeDecomposition, g: &Graph, kind: Kind) -> Result<ValidationReport> {
    let occ = td.occupancy();
    if let Some(v) = occ.keys().find(|v| !g.contains(**v)) {
        return Err(Error::InvalidInput(format!("decomposition references vertex {v} which is not in the graph")));
    }
    let tree = td.tree();
    let mut violations = Vec::new();
    let empty = Vec::new();
    for v in g.vertices() {
        let nodes = occ.get(&v).unwrap_or(&empty);
        if nodes.is_empty() {
            violations.push(Violation::VertexUncovered { vertex: v });
            continue;
        }
        if kind == Kind::Partition && nodes.len() > 1 {
            violations.push(Violation::BagsOverlap { vertex: v, nodes: nodes.clone() });
            continue;
        }
        // connected iff exactly one node has its parent outside the set
        let tops = nodes
            .iter()
            .filter(|&&x| tree.parent(x).is_none_or(|p| nodes.binary_search(&p).is_err()))
            .count();
        if tops != 1 {
            violations.push(Violation::VertexDisconnected { vertex: v, nodes: nodes.clone() });
        }
    }
    for &(u, v) in g.edges() {
        let (Some(ou), Some(ov)) = (occ.get(&u), occ.get(&v)) else {
            violations.push(Violation::EdgeUncovered { u, v });
            continue;
        };
        let shared = ou.iter().any(|x| ov.binary_search(x).is_ok());
        let covered = match kind {
            Kind::Strong => shared,
            Kind::Weak | Kind::Partition => {
                shared
                    || ou.iter().any(|&x| tree.parent(x).is_some_and(|p| ov.binary_search(&p).is_ok()))
                    || ov.iter().any(|&y| tree.parent(y).is_some_and(|p| ou.binary_search(&p).is_ok()))
            }
        };
        if !covered {
            violations.push(Violation::EdgeUncovered { u, v });
        }
    }
    Ok(ValidationReport { kind, violations })
}

/// A tree edge and shared vertex that break `s`-slickness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlickWitness {
    pub parent: usize,
    pub child: usize,
    pub vertex: Vertex,
    /// `|(N(v) ∩ B_child) \ B_parent|`, which is below `s`.
    pub new_neighbors: usize,
}

/// First tree edge (by child id) and vertex where `td` fails to be `s`-slick.
pub fn slick_witness(td: &TreeDecomposition, g: &Graph, s: usize) -> Option<SlickWitness> {
    for (x, y) in td.tree().edges() {
        let (bx, by) = (td.bag(x), td.bag(y));
        for &v in bx.intersection(by) {
            let fresh = g.neighbors_in(v, by).filter(|w| !bx.contains(w)).count();
            if fresh < s {
                return Some(SlickWitness { parent: x, child: y, vertex: v, new_neighbors: fresh });
            }
        }
    }
    None
}

/// Whether every shared vertex gains at least `s` new neighbours along every
/// parent-to-child edge.
pub fn is_slick(td: &TreeDecomposition, g: &Graph, s: usize) -> bool {
    slick_witness(td, g, s).is_none()
}

/// Asserts `spread(v) <= floor(deg(v) / s) + 1` for every vertex of `g`.
///
/// On an `s`-slick input this can only fail through an implementation bug,
/// so failures are reported as certificate errors naming the vertex.
pub fn spread_bound_check(td: &TreeDecomposition, g: &Graph, s: usize) -> Result<()> {
    if s == 0 {
        return Err(Error::Parameter("slickness level s must be at least 1".into()));
    }
    let spreads = td.spreads();
    for v in g.vertices() {
        let spread = spreads.get(&v).copied().unwrap_or(0);
        let bound = g.degree(v) / s + 1;
        if spread > bound {
            return Err(Error::Certificate {
                name: "spread_bound",
                detail: format!("vertex {v} has spread {spread} > deg/s + 1 = {bound}"),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cycle_apex_decomposition, grid_row_pair_decomposition};
    use crate::graph::{generate, Family};

    #[test]
    fn grid_row_pairs_valid() {
        let g = generate(&Family::Grid { rows: 4, cols: 4 }, 0).unwrap();
        let td = grid_row_pair_decomposition(4, 4);
        assert!(validate(&td, &g).unwrap().is_valid());
        assert_eq!(td.width(), 2 * 4 - 1);
        for v in g.vertices() {
            assert!(td.spread(v) <= 2);
        }
    }

    #[test]
    fn weak_covers_what_strong_misses() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let td = TreeDecomposition::path(vec![[0, 1].into(), [2].into()], Kind::Strong).unwrap();
        let strong = validate(&td, &g).unwrap();
        assert_eq!(strong.violations, vec![Violation::EdgeUncovered { u: 1, v: 2 }]);
        assert!(validate_as(&td, &g, Kind::Weak).unwrap().is_valid());
    }

    #[test]
    fn disconnected_occupancy_is_reported() {
        let g = generate(&Family::Path { n: 4 }, 0).unwrap();
        let td = TreeDecomposition::path(
            vec![[0, 1].into(), [1, 2].into(), [2, 3].into(), [1].into()],
            Kind::Strong,
        )
        .unwrap();
        let report = validate(&td, &g).unwrap();
        assert!(matches!(report.violations[..], [Violation::VertexDisconnected { vertex: 1, .. }]));
        assert!(report.to_text().contains("vertex 1"));
        assert!(report.to_json().contains("vertex_disconnected"));
    }

    #[test]
    fn partition_overlap_witness() {
        let g = generate(&Family::Path { n: 3 }, 0).unwrap();
        let td = TreeDecomposition::path(vec![[0, 1].into(), [1, 2].into()], Kind::Partition).unwrap();
        let report = validate(&td, &g).unwrap();
        assert_eq!(report.violations, vec![Violation::BagsOverlap { vertex: 1, nodes: vec![0, 1] }]);
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let g = Graph::with_vertices(2);
        let td = TreeDecomposition::single_bag([0, 1, 5].into(), Kind::Strong);
        assert!(matches!(validate(&td, &g), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn disjoint_adjacent_bags_are_slick() {
        let g = generate(&Family::Path { n: 4 }, 0).unwrap();
        let td = TreeDecomposition::path(vec![[0, 1].into(), [2, 3].into()], Kind::Weak).unwrap();
        for s in 1..5 {
            assert!(is_slick(&td, &g, s));
        }
    }

    #[test]
    fn cycle_apex_is_not_slick() {
        let g = generate(&Family::Cycle { n: 6 }, 0).unwrap();
        let td = cycle_apex_decomposition(6);
        assert!(validate(&td, &g).unwrap().is_valid());
        assert_eq!(td.spread(0), 4);
        // bags {0,1,2},{0,2,3},{0,3,4},{0,4,5}: 0 gains nothing going from bag 0 to bag 1
        let w = slick_witness(&td, &g, 1).unwrap();
        assert_eq!((w.parent, w.child, w.vertex, w.new_neighbors), (0, 1, 0, 0));
        assert!(spread_bound_check(&td, &g, 1).is_err());
    }

    #[test]
    fn isolated_vertex_spread() {
        let g = Graph::with_vertices(1);
        let td = TreeDecomposition::single_bag([0].into(), Kind::Strong);
        assert!(spread_bound_check(&td, &g, 1).is_ok());
    }
}
