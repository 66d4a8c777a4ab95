//! Rooted index trees with dense node ids `0..len`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    // the root is its own parent
    parent: Vec<usize>,
    root: usize,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    /// The one-node tree.
    pub fn single() -> Self {
        RootedTree { parent: vec![0], root: 0, children: vec![Vec::new()] }
    }

    /// Builds a tree from parent links; exactly one entry must be `None`.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        let len = parents.len();
        if len == 0 {
            return Err(Error::InvalidDecomposition("index tree has no nodes".into()));
        }
        let mut root = None;
        let mut parent = vec![0; len];
        let mut children = vec![Vec::new(); len];
        for (x, p) in parents.iter().enumerate() {
            match *p {
                None if root.is_some() => {
                    return Err(Error::InvalidDecomposition("index tree has more than one root".into()));
                }
                None => {
                    root = Some(x);
                    parent[x] = x;
                }
                Some(p) if p >= len || p == x => {
                    return Err(Error::InvalidDecomposition(format!("node {x} has invalid parent {p}")));
                }
                Some(p) => {
                    parent[x] = p;
                    children[p].push(x);
                }
            }
        }
        let root = root.ok_or_else(|| Error::InvalidDecomposition("index tree has no root".into()))?;
        let tree = RootedTree { parent, root, children };
        if tree.preorder().len() != len {
            return Err(Error::InvalidDecomposition("parent links contain a cycle".into()));
        }
        Ok(tree)
    }

    /// Orients an unrooted edge list away from `root`.
    pub fn from_edges(len: usize, edges: &[(usize, usize)], root: usize) -> Result<Self> {
        if len == 0 || root >= len {
            return Err(Error::InvalidDecomposition("root out of range".into()));
        }
        if edges.len() + 1 != len {
            return Err(Error::InvalidDecomposition(format!(
                "a tree on {len} nodes needs {} edges, found {}",
                len - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); len];
        for &(a, b) in edges {
            if a >= len || b >= len || a == b {
                return Err(Error::InvalidDecomposition(format!("bad tree edge {a}-{b}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parents = vec![None; len];
        let mut seen = vec![false; len];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            adj[x].sort_unstable();
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parents[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidDecomposition("tree edges do not connect all nodes".into()));
        }
        Self::from_parents(&parents)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        (x != self.root).then(|| self.parent[x])
    }

    pub fn children(&self, x: usize) -> &[usize] {
        &self.children[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.children[x].len() + usize::from(x != self.root)
    }

    /// `Δ(T)`; 0 for the one-node tree.
    pub fn max_degree(&self) -> usize {
        (0..self.len()).map(|x| self.degree(x)).max().unwrap_or(0)
    }

    /// Tree edges as `(parent, child)` ordered by child id.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).filter(move |&x| x != self.root).map(move |x| (self.parent[x], x))
    }

    pub fn are_adjacent(&self, x: usize, y: usize) -> bool {
        x != y && (self.parent(x) == Some(y) || self.parent(y) == Some(x))
    }

    /// Breadth-first order from the root; parents precede children.
    pub fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.len());
        order.push(self.root);
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            order.extend_from_slice(&self.children[x]);
            i += 1;
            if order.len() > self.len() {
                break;
            }
        }
        order
    }

    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.len()];
        for x in self.preorder() {
            if let Some(p) = self.parent(x) {
                depth[x] = depth[p] + 1;
            }
        }
        depth
    }

    /// `|V(T_x)|` for every node.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1; self.len()];
        for x in self.preorder().into_iter().rev() {
            if let Some(p) = self.parent(x) {
                size[p] += size[x];
            }
        }
        size
    }
}
