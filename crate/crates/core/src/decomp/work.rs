//! Mutable unrooted view of a decomposition used by the normalisers.

use std::collections::{BTreeSet, VecDeque};

use super::{Kind, TreeDecomposition};
use crate::graph::VertexSet;
use crate::tree::RootedTree;

pub(crate) struct WorkTree {
    pub bags: Vec<VertexSet>,
    pub adj: Vec<BTreeSet<usize>>,
    pub alive: Vec<bool>,
    // node that absorbed a contracted node (itself if alive)
    merged_into: Vec<usize>,
    root: usize,
}

impl WorkTree {
    pub fn from_decomposition(td: &TreeDecomposition) -> Self {
        let n = td.order();
        let mut adj = vec![BTreeSet::new(); n];
        for (p, c) in td.tree().edges() {
            adj[p].insert(c);
            adj[c].insert(p);
        }
        WorkTree {
            bags: td.bags().to_vec(),
            adj,
            alive: vec![true; n],
            merged_into: (0..n).collect(),
            root: td.tree().root(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.merged_into[x] != x {
            let next = self.merged_into[x];
            self.merged_into[x] = self.merged_into[next];
            x = next;
        }
        x
    }

    /// Removes `gone` and hands its neighbours to `keep`. Bags are untouched.
    pub fn contract(&mut self, gone: usize, keep: usize) {
        let nbrs = std::mem::take(&mut self.adj[gone]);
        for z in nbrs {
            self.adj[z].remove(&gone);
            if z != keep {
                self.adj[z].insert(keep);
                self.adj[keep].insert(z);
            }
        }
        self.alive[gone] = false;
        self.merged_into[gone] = keep;
        self.bags[gone].clear();
    }

    /// Contracts nested neighbours into the larger bag until none remain.
    pub fn contract_nested(&mut self) {
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
        for x in 0..self.adj.len() {
            for &y in &self.adj[x] {
                if x < y {
                    queue.push_back((x, y));
                }
            }
        }
        while let Some((x, y)) = queue.pop_front() {
            if !self.alive[x] || !self.alive[y] || !self.adj[x].contains(&y) {
                continue;
            }
            let (gone, keep) = if self.bags[y].is_subset(&self.bags[x]) {
                (y, x)
            } else if self.bags[x].is_subset(&self.bags[y]) {
                (x, y)
            } else {
                continue;
            };
            let moved: Vec<usize> = self.adj[gone].iter().copied().filter(|&z| z != keep).collect();
            self.contract(gone, keep);
            for z in moved {
                queue.push_back((keep.min(z), keep.max(z)));
            }
        }
    }

    pub fn alive_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(move |&x| self.alive[x])
    }

    /// Adds a fresh node adjacent to nothing; returns its id.
    pub fn push_node(&mut self, bag: VertexSet) -> usize {
        self.bags.push(bag);
        self.adj.push(BTreeSet::new());
        self.alive.push(true);
        self.merged_into.push(self.alive.len() - 1);
        self.alive.len() - 1
    }

    pub fn link(&mut self, a: usize, b: usize) {
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a].remove(&b);
        self.adj[b].remove(&a);
    }

    /// Renumbers live nodes by increasing old id and roots the result at the
    /// node that absorbed the original root.
    pub fn into_decomposition(mut self, kind: Kind) -> TreeDecomposition {
        let root_old = self.find(self.root);
        let ids: Vec<usize> = self.alive_nodes().collect();
        let mut new_id = vec![usize::MAX; self.alive.len()];
        for (i, &x) in ids.iter().enumerate() {
            new_id[x] = i;
        }
        let mut parents = vec![None; ids.len()];
        let mut seen = vec![false; self.alive.len()];
        seen[root_old] = true;
        let mut queue = VecDeque::from([root_old]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parents[new_id[y]] = Some(new_id[x]);
                    queue.push_back(y);
                }
            }
        }
        let bags = ids.iter().map(|&x| std::mem::take(&mut self.bags[x])).collect();
        let tree = RootedTree::from_parents(&parents).expect("work tree stays connected");
        TreeDecomposition::new(tree, bags, kind).expect("one bag per node")
    }
}
