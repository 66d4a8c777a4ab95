//! PACE-style `.gr` and `.td` files.
//!
//! Vertices and bags are 1-indexed on disk and 0-indexed in memory. Lines
//! starting with `c` are comments. Tree edges are written as `parent child`
//! sorted by child, so a written file also records the root.

use std::collections::BTreeSet;

use crate::decomp::{Kind, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A parsed `.gr` file with any non-fatal warnings (duplicate edges).
#[derive(Debug, Clone)]
pub struct GrFile {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

/// A parsed `.td` file; `n` is the vertex count from its header.
#[derive(Debug, Clone)]
pub struct TdFile {
    pub td: TreeDecomposition,
    pub n: usize,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn payload(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let fields: Vec<&str> = l.split_whitespace().collect();
        match fields.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, fields)),
        }
    })
}

fn number(line: usize, field: &str) -> Result<usize> {
    field.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, got `{field}`")))
}

fn one_indexed(line: usize, field: &str, n: usize, what: &str) -> Result<usize> {
    let v = number(line, field)?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("{what} {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_gr(text: &str) -> Result<GrFile> {
    let mut lines = payload(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `p tw` header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "tw" {
        return Err(parse_err(hl, "header must be `p tw <n> <m>`"));
    }
    let (n, m) = (number(hl, header[2])?, number(hl, header[3])?);
    let mut graph = Graph::with_vertices(n);
    let mut warnings = Vec::new();
    let mut count = 0;
    for (ln, fields) in lines {
        if fields.len() != 2 {
            return Err(parse_err(ln, "edge lines hold exactly two vertices"));
        }
        let u = one_indexed(ln, fields[0], n, "vertex")?;
        let v = one_indexed(ln, fields[1], n, "vertex")?;
        if u == v {
            return Err(parse_err(ln, format!("self-loop at vertex {}", u + 1)));
        }
        if !graph.add_edge(u, v)? {
            warnings.push(format!("line {ln}: duplicate edge {} {} ignored", u + 1, v + 1));
        }
        count += 1;
    }
    if count != m {
        return Err(parse_err(hl, format!("header announces {m} edges, found {count}")));
    }
    Ok(GrFile { graph, warnings })
}

/// Edges are written in insertion order, so parsing and writing a file
/// reproduces its edge lines.
pub fn write_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.id_bound(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses a `.td` file. If the tree edges orient consistently as
/// `parent child` (every node is a child at most once), that rooting is kept;
/// otherwise the tree is rooted at bag 1.
pub fn parse_td(text: &str, kind: Kind) -> Result<TdFile> {
    let mut lines = payload(text).peekable();
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `s td` header"))?;
    if header.len() != 5 || header[0] != "s" || header[1] != "td" {
        return Err(parse_err(hl, "header must be `s td <bags> <max-bag> <n>`"));
    }
    let (count, max_bag, n) = (number(hl, header[2])?, number(hl, header[3])?, number(hl, header[4])?);
    if count == 0 {
        return Err(parse_err(hl, "a decomposition needs at least one bag"));
    }
    let mut bags: Vec<Option<VertexSet>> = vec![None; count];
    while let Some((ln, fields)) = lines.next_if(|(_, f)| f[0] == "b") {
        let id = one_indexed(ln, fields.get(1).ok_or_else(|| parse_err(ln, "bag line without id"))?, count, "bag")?;
        if bags[id].is_some() {
            return Err(parse_err(ln, format!("bag {} defined twice", id + 1)));
        }
        let bag = fields[2..].iter().map(|f| one_indexed(ln, f, n, "vertex")).collect::<Result<VertexSet>>()?;
        bags[id] = Some(bag);
    }
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse_err(hl, format!("bag {} is missing", i + 1))))
        .collect::<Result<_>>()?;
    let largest = bags.iter().map(BTreeSet::len).max().unwrap_or(0);
    if largest != max_bag {
        return Err(parse_err(hl, format!("header announces max bag {max_bag}, found {largest}")));
    }
    let mut edges = Vec::with_capacity(count - 1);
    for (ln, fields) in lines {
        if fields.len() != 2 {
            return Err(parse_err(ln, "tree edge lines hold exactly two bag ids"));
        }
        edges.push((one_indexed(ln, fields[0], count, "bag")?, one_indexed(ln, fields[1], count, "bag")?));
    }
    if edges.len() != count - 1 {
        return Err(parse_err(hl, format!("{count} bags need {} tree edges, found {}", count - 1, edges.len())));
    }
    let parents = orient(count, &edges).ok_or_else(|| Error::InvalidDecomposition("tree edges do not form a tree".into()))?;
    Ok(TdFile { td: TreeDecomposition::from_parents(&parents, bags, kind)?, n })
}

fn orient(count: usize, edges: &[(usize, usize)]) -> Option<Vec<Option<usize>>> {
    let mut parents = vec![None; count];
    if edges.iter().all(|&(p, c)| parents[c].replace(p).is_none()) {
        return Some(parents);
    }
    let mut adj = vec![Vec::new(); count];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parents = vec![None; count];
    let mut seen = vec![false; count];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                parents[y] = Some(x);
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s).then_some(parents)
}

/// Canonical `.td` text for a decomposition of a graph on `n` vertices.
pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {n}\n", td.order(), td.max_bag_size());
    for (i, bag) in td.bags().iter().enumerate() {
        out.push_str(&format!("b {}", i + 1));
        for v in bag {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    for (p, c) in td.tree().edges() {
        out.push_str(&format!("{} {}\n", p + 1, c + 1));
    }
    out
}
