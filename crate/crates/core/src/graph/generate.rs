use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Deterministic graph families used for fixtures and benchmarks.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    /// `rows × cols` grid; vertex `(r, c)` has id `r * cols + c`.
    Grid { rows: usize, cols: usize },
    /// Path on `n - 1` vertices (ids `1..n`) plus apex `0` adjacent to all.
    Fan { n: usize },
    Complete { n: usize },
    /// Uniform graph with exactly `m` edges.
    RandomGnm { n: usize, m: usize },
    /// Random `k`-tree on `n` vertices, each edge kept with probability `p`.
    RandomKtreePartial { n: usize, k: usize, p: f64 },
    /// Random recursive tree: vertex `i` attaches to a uniform earlier vertex.
    TreeRandom { n: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Grid { .. } => "grid",
            Family::Fan { .. } => "fan",
            Family::Complete { .. } => "complete",
            Family::RandomGnm { .. } => "random_gnm",
            Family::RandomKtreePartial { .. } => "random_ktree_partial",
            Family::TreeRandom { .. } => "tree_random",
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, Family::RandomGnm { .. } | Family::RandomKtreePartial { .. } | Family::TreeRandom { .. })
    }

    /// Builds a family from its name and the generic parameters used by the CLI.
    pub fn from_name(name: &str, n: Option<usize>, m: Option<usize>, k: Option<usize>, p: Option<f64>) -> Result<Family> {
        let need_n = || n.ok_or_else(|| Error::InvalidInput(format!("family `{name}` needs --n")));
        Ok(match name {
            "path" => Family::Path { n: need_n()? },
            "cycle" => Family::Cycle { n: need_n()? },
            "grid" => {
                let n = need_n()?;
                Family::Grid { rows: n, cols: m.unwrap_or(n) }
            }
            "fan" => Family::Fan { n: need_n()? },
            "complete" => Family::Complete { n: need_n()? },
            "random_gnm" => Family::RandomGnm {
                n: need_n()?,
                m: m.ok_or_else(|| Error::InvalidInput("random_gnm needs --m".into()))?,
            },
            "random_ktree_partial" => Family::RandomKtreePartial {
                n: need_n()?,
                k: k.ok_or_else(|| Error::InvalidInput("random_ktree_partial needs --k".into()))?,
                p: p.unwrap_or(0.5),
            },
            "tree_random" => Family::TreeRandom { n: need_n()? },
            other => return Err(Error::InvalidInput(format!("unknown graph family `{other}`"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path { n } | Family::Cycle { n } | Family::Fan { n } | Family::Complete { n } | Family::TreeRandom { n } => {
                write!(f, "{}({n})", self.name())
            }
            Family::Grid { rows, cols } if rows == cols => write!(f, "grid({rows})"),
            Family::Grid { rows, cols } => write!(f, "grid({rows}x{cols})"),
            Family::RandomGnm { n, m } => write!(f, "random_gnm({n},{m})"),
            Family::RandomKtreePartial { n, k, p } => write!(f, "random_ktree_partial({n},{k},{p})"),
        }
    }
}

fn too_small(family: &Family, what: &str) -> Error {
    Error::InvalidInput(format!("{}: {what}", family.name()))
}

/// Generates the graph for `family`. Random families are reproducible from `seed`.
pub fn generate(family: &Family, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *family {
        Family::Path { n } => {
            if n < 1 {
                return Err(too_small(family, "n must be at least 1"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(too_small(family, "n must be at least 3"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Grid { rows, cols } => {
            if rows < 1 || cols < 1 {
                return Err(too_small(family, "dimensions must be at least 1"));
            }
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    let v = r * cols + c;
                    if c + 1 < cols {
                        edges.push((v, v + 1));
                    }
                    if r + 1 < rows {
                        edges.push((v, v + cols));
                    }
                }
            }
            Graph::from_edges(rows * cols, edges)
        }
        Family::Fan { n } => {
            if n < 2 {
                return Err(too_small(family, "n must be at least 2"));
            }
            let path = (2..n).map(|i| (i - 1, i));
            let apex = (1..n).map(|i| (0, i));
            Graph::from_edges(n, path.chain(apex))
        }
        Family::Complete { n } => {
            if n < 1 {
                return Err(too_small(family, "n must be at least 1"));
            }
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        Family::RandomGnm { n, m } => {
            if n < 1 {
                return Err(too_small(family, "n must be at least 1"));
            }
            let max = n * (n - 1) / 2;
            if m > max {
                return Err(too_small(family, &format!("m = {m} exceeds n(n-1)/2 = {max}")));
            }
            let edges: Vec<(Vertex, Vertex)> = if 2 * m > max {
                let mut all: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
                all.shuffle(&mut rng);
                all.truncate(m);
                all
            } else {
                let mut seen = HashSet::new();
                let mut out = Vec::with_capacity(m);
                while out.len() < m {
                    let u = rng.gen_range(0..n);
                    let v = rng.gen_range(0..n);
                    if u != v && seen.insert((u.min(v), u.max(v))) {
                        out.push((u.min(v), u.max(v)));
                    }
                }
                out
            };
            Graph::from_edges(n, edges)
        }
        Family::RandomKtreePartial { n, k, p } => {
            if n < 1 || k < 1 {
                return Err(too_small(family, "n and k must be at least 1"));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(too_small(family, "p must lie in [0, 1]"));
            }
            let mut edges = Vec::new();
            let base = n.min(k + 1);
            for i in 0..base {
                for j in i + 1..base {
                    edges.push((i, j));
                }
            }
            // k-cliques available for attachment
            let mut cliques: Vec<Vec<Vertex>> = Vec::new();
            if n > k {
                for skip in 0..=k {
                    cliques.push((0..=k).filter(|&x| x != skip).collect());
                }
            }
            for v in k + 1..n {
                let c = cliques[rng.gen_range(0..cliques.len())].clone();
                for &u in &c {
                    edges.push((u, v));
                }
                for skip in 0..k {
                    let mut nc: Vec<Vertex> = c.iter().copied().enumerate().filter(|&(i, _)| i != skip).map(|(_, x)| x).collect();
                    nc.push(v);
                    cliques.push(nc);
                }
            }
            let kept = edges.into_iter().filter(|_| rng.gen_bool(p));
            Graph::from_edges(n, kept.collect::<Vec<_>>())
        }
        Family::TreeRandom { n } => {
            if n < 1 {
                return Err(too_small(family, "n must be at least 1"));
            }
            let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
            Graph::from_edges(n, edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_family_sizes() {
        let grid = generate(&Family::Grid { rows: 3, cols: 3 }, 0).unwrap();
        assert_eq!((grid.n(), grid.m()), (9, 12));
        let fan = generate(&Family::Fan { n: 5 }, 0).unwrap();
        assert_eq!((fan.n(), fan.m()), (5, 7));
        let k4 = generate(&Family::Complete { n: 4 }, 0).unwrap();
        assert_eq!(k4.m(), 6);
    }

    #[test]
    fn fan_is_path_plus_apex() {
        let fan = generate(&Family::Fan { n: 5 }, 0).unwrap();
        assert_eq!(fan.degree(0), 4);
        let path = fan.without(&[0].into());
        assert_eq!(path.m(), 3);
        assert_eq!(path.components().len(), 1);
    }

    #[test]
    fn random_families_reproducible() {
        for fam in [
            Family::RandomGnm { n: 30, m: 60 },
            Family::RandomKtreePartial { n: 40, k: 3, p: 0.7 },
            Family::TreeRandom { n: 50 },
        ] {
            assert_eq!(generate(&fam, 7).unwrap(), generate(&fam, 7).unwrap());
        }
        let a = generate(&Family::RandomGnm { n: 30, m: 60 }, 1).unwrap();
        let b = generate(&Family::RandomGnm { n: 30, m: 60 }, 2).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.m(), 60);
    }

    #[test]
    fn ktree_with_all_edges_has_expected_size() {
        // a k-tree on n vertices has k(k+1)/2 + (n-k-1)k edges
        let g = generate(&Family::RandomKtreePartial { n: 20, k: 3, p: 1.0 }, 3).unwrap();
        assert_eq!(g.m(), 6 + 16 * 3);
    }

    #[test]
    fn bad_parameters() {
        assert!(generate(&Family::Path { n: 0 }, 0).is_err());
        assert!(generate(&Family::Cycle { n: 2 }, 0).is_err());
        assert!(generate(&Family::RandomGnm { n: 4, m: 7 }, 0).is_err());
        assert!(Family::from_name("hypercube", Some(3), None, None, None).is_err());
    }
}
