//! Simple undirected graphs with stable vertex ids.
//!
//! Induced subgraphs keep the ids of the graph they were taken from, so bags
//! built for a subgraph can be merged back into bags of the parent graph.

mod generate;

pub use generate::{generate, Family};

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type VertexSet = BTreeSet<Vertex>;

/// Exact non-negative vertex weight.
pub type Weight = Ratio<i64>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, Vec<Vertex>>,
    // insertion order; used for stable `.gr` output
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        Graph { adj: (0..n).map(|v| (v, Vec::new())).collect(), edges: Vec::new() }
    }

    /// Graph on `0..n` with the given edges. Duplicate edges are ignored.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut g = Graph::with_vertices(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, Vec::new());
        true
    }

    /// Adds the edge `uv`. Returns `false` when it was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
        }
        for x in [u, v] {
            if !self.adj.contains_key(&x) {
                return Err(Error::InvalidInput(format!("unknown vertex {x}")));
            }
        }
        let nu = self.adj.get_mut(&u).unwrap();
        match nu.binary_search(&v) {
            Ok(_) => return Ok(false),
            Err(pos) => nu.insert(pos, v),
        }
        let nv = self.adj.get_mut(&v).unwrap();
        let pos = nv.binary_search(&u).unwrap_err();
        nv.insert(pos, u);
        self.edges.push((u, v));
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Largest vertex id plus one (0 for the empty graph).
    pub fn id_bound(&self) -> usize {
        self.adj.keys().next_back().map_or(0, |&v| v + 1)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    /// Sorted neighbours of `v`; empty for unknown vertices.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.adj.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// Maximum degree, 0 for empty and edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges in insertion order, each reported once.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// `G[s]`, keeping the original vertex ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        if let Some(v) = s.iter().find(|v| !self.contains(**v)) {
            return Err(Error::InvalidInput(format!("unknown vertex {v}")));
        }
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: &VertexSet) -> Graph {
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for &v in s {
            let nb = self.neighbors(v).iter().copied().filter(|w| s.contains(w)).collect();
            adj.insert(v, nb);
        }
        let edges = self.edges.iter().copied().filter(|(u, v)| s.contains(u) && s.contains(v)).collect();
        Graph { adj, edges }
    }

    /// `G - s`.
    pub fn without(&self, s: &VertexSet) -> Graph {
        let keep: VertexSet = self.vertices().filter(|v| !s.contains(v)).collect();
        self.induced_unchecked(&keep)
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::new())
    }

    /// Components of `G - x` without materialising the subgraph.
    pub fn components_avoiding(&self, x: &VertexSet) -> Vec<VertexSet> {
        let mut seen: VertexSet = VertexSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if x.contains(&start) || seen.contains(&start) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in self.neighbors(v) {
                    if !x.contains(&w) && seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// `N(v) ∩ s`, sorted.
    pub fn neighbors_in<'a>(&'a self, v: Vertex, s: &'a VertexSet) -> impl Iterator<Item = Vertex> + 'a {
        self.neighbors(v).iter().copied().filter(move |w| s.contains(w))
    }
}

/// Non-negative rational weight per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Weighting {
    weight: BTreeMap<Vertex, Weight>,
    total: Weight,
}

impl Weighting {
    pub fn new(weights: impl IntoIterator<Item = (Vertex, Weight)>) -> Result<Self> {
        let mut weight = BTreeMap::new();
        let mut total = Weight::zero();
        for (v, w) in weights {
            if w < Weight::zero() {
                return Err(Error::InvalidInput(format!("negative weight {w} on vertex {v}")));
            }
            if let Some(old) = weight.insert(v, w) {
                total -= old;
            }
            total += w;
        }
        Ok(Weighting { weight, total })
    }

    /// Every vertex of `g` weighs 1.
    pub fn uniform(g: &Graph) -> Self {
        let weight: BTreeMap<_, _> = g.vertices().map(|v| (v, Weight::from_integer(1))).collect();
        let total = Weight::from_integer(weight.len() as i64);
        Weighting { weight, total }
    }

    /// Vertices of `s` weigh 1, all others 0.
    pub fn indicator(g: &Graph, s: &VertexSet) -> Self {
        let weight: BTreeMap<_, _> = g
            .vertices()
            .map(|v| (v, Weight::from_integer(i64::from(s.contains(&v)))))
            .collect();
        let total = weight.values().sum();
        Weighting { weight, total }
    }

    /// Weight of `v`; vertices without an entry weigh 0.
    pub fn get(&self, v: Vertex) -> Weight {
        self.weight.get(&v).copied().unwrap_or_else(Weight::zero)
    }

    pub fn total(&self) -> Weight {
        self.total
    }

    /// `γ` of the vertex set.
    pub fn of<'a>(&self, vs: impl IntoIterator<Item = &'a Vertex>) -> Weight {
        vs.into_iter().map(|&v| self.get(v)).sum()
    }

    /// `γ(G')`.
    pub fn of_graph(&self, g: &Graph) -> Weight {
        g.vertices().map(|v| self.get(v)).sum()
    }
}
