//! Tree-decompositions, weak tree-decompositions and tree-partitions.
//!
//! All three share one representation: a [`RootedTree`] plus one bag per
//! node. The [`Kind`] flag selects which edge property (and, for partitions,
//! disjointness) the validators enforce.

mod smooth;
mod validate;
pub(crate) mod work;

pub use smooth::{partition_to_decomposition, smooth_decomposition, smooth_decomposition_with_width};
pub use validate::{is_slick, slick_witness, spread_bound_check, validate, validate_as, SlickWitness, ValidationReport, Violation};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Vertex, VertexSet};
use crate::tree::RootedTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Every edge lies inside some bag.
    Strong,
    /// Every edge lies inside the union of two adjacent bags.
    Weak,
    /// Bags partition the vertex set; edges lie inside a bag or across a tree edge.
    Partition,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Strong => "strong",
            Kind::Weak => "weak",
            Kind::Partition => "partition",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(Kind::Strong),
            "weak" => Ok(Kind::Weak),
            "partition" => Ok(Kind::Partition),
            other => Err(Error::InvalidInput(format!("unknown decomposition kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    tree: RootedTree,
    bags: Vec<VertexSet>,
    kind: Kind,
}

impl TreeDecomposition {
    pub fn new(tree: RootedTree, bags: Vec<VertexSet>, kind: Kind) -> Result<Self> {
        if tree.len() != bags.len() {
            return Err(Error::InvalidDecomposition(format!(
                "{} tree nodes but {} bags",
                tree.len(),
                bags.len()
            )));
        }
        Ok(TreeDecomposition { tree, bags, kind })
    }

    /// Builds from parent links (one `None` for the root) and bags.
    pub fn from_parents(parents: &[Option<usize>], bags: Vec<VertexSet>, kind: Kind) -> Result<Self> {
        Self::new(RootedTree::from_parents(parents)?, bags, kind)
    }

    pub fn single_bag(bag: VertexSet, kind: Kind) -> Self {
        TreeDecomposition { tree: RootedTree::single(), bags: vec![bag], kind }
    }

    /// Path-decomposition with the bags in order, rooted at the first one.
    pub fn path(bags: Vec<VertexSet>, kind: Kind) -> Result<Self> {
        let parents: Vec<Option<usize>> = (0..bags.len()).map(|i| i.checked_sub(1)).collect();
        Self::from_parents(&parents, bags, kind)
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn bag(&self, x: usize) -> &VertexSet {
        &self.bags[x]
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Same bags and tree, reinterpreted as another kind.
    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    pub fn into_parts(self) -> (RootedTree, Vec<VertexSet>, Kind) {
        (self.tree, self.bags, self.kind)
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Max bag size minus one, or max bag size for tree-partitions.
    ///
    /// The single empty bag of the empty graph reports width 0.
    pub fn width(&self) -> usize {
        match self.kind {
            Kind::Partition => self.max_bag_size(),
            Kind::Strong | Kind::Weak => self.max_bag_size().saturating_sub(1),
        }
    }

    /// Number of bags containing `v`.
    pub fn spread(&self, v: Vertex) -> usize {
        self.bags.iter().filter(|b| b.contains(&v)).count()
    }

    /// Spread of every vertex that occurs in some bag.
    pub fn spreads(&self) -> BTreeMap<Vertex, usize> {
        let mut out = BTreeMap::new();
        for bag in &self.bags {
            for &v in bag {
                *out.entry(v).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.tree.len()
    }

    /// Maximum degree of the index tree.
    pub fn degree(&self) -> usize {
        self.tree.max_degree()
    }

    pub fn vertices(&self) -> VertexSet {
        self.bags.iter().flatten().copied().collect()
    }

    /// Nodes whose bag contains each vertex, in increasing node order.
    pub fn occupancy(&self) -> BTreeMap<Vertex, Vec<usize>> {
        let mut occ: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        for (x, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                occ.entry(v).or_default().push(x);
            }
        }
        occ
    }

    /// Intersects every bag with `keep`; the tree is unchanged.
    pub fn restricted_to(&self, keep: &VertexSet) -> TreeDecomposition {
        let bags = self.bags.iter().map(|b| b.intersection(keep).copied().collect()).collect();
        TreeDecomposition { tree: self.tree.clone(), bags, kind: self.kind }
    }

    /// Contracts every tree edge whose bags are nested, so that no bag is a
    /// subset of a neighbouring bag. Validity and width are preserved.
    pub fn compacted(&self) -> TreeDecomposition {
        let mut w = work::WorkTree::from_decomposition(self);
        w.contract_nested();
        w.into_decomposition(self.kind)
    }

    /// [`restricted_to`](Self::restricted_to) followed by [`compacted`](Self::compacted).
    pub fn restricted_compact(&self, keep: &VertexSet) -> TreeDecomposition {
        self.restricted_to(keep).compacted()
    }
}
