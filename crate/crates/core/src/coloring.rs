//! Edge colorings, rainbow-connectivity checking with certificates, and the
//! line-oriented text format for both.
//!
//! The checker decides, for every unordered vertex pair, whether some path
//! with pairwise distinct edge colors joins the pair. Since a rainbow path
//! uses each color at most once it has at most k edges; the search runs
//! breadth-first over (vertex, used-color-set) states, so that bound is a
//! property of the state space rather than an assumption. Witness paths are
//! recorded per pair; a failing coloring yields the lexicographically first
//! bad pair instead.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use crate::power_graph::PowerGraph;

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("invalid coloring: {0}")]
    Invalid(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("group of order {0} is too small; at least 3 elements required")]
    GroupTooSmall(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A total assignment of colors 1..=k to edge indices. k is declared, not
/// inferred, and colors may go unused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    k: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(k: u32, colors: Vec<u32>) -> Result<EdgeColoring, ColoringError> {
        if k < 1 {
            return Err(ColoringError::Invalid("k must be at least 1".into()));
        }
        if let Some(&c) = colors.iter().find(|&&c| c < 1 || c > k) {
            return Err(ColoringError::Invalid(format!(
                "color {c} outside 1..={k}"
            )));
        }
        Ok(EdgeColoring { k, colors })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }
}

/// A witness path (as a vertex sequence) for one unordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub u: usize,
    pub v: usize,
    pub path: Vec<usize>,
}

/// Witness paths for every unordered vertex pair, sorted by (u, v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowCertificate {
    pub witnesses: Vec<PairWitness>,
}

#[derive(Debug, Clone)]
pub enum RainbowCheck {
    Connected(RainbowCertificate),
    /// The lexicographically first pair with no rainbow path.
    Failing { u: usize, v: usize },
}

impl RainbowCheck {
    pub fn is_connected(&self) -> bool {
        matches!(self, RainbowCheck::Connected(_))
    }

    pub fn certificate(self) -> Option<RainbowCertificate> {
        match self {
            RainbowCheck::Connected(cert) => Some(cert),
            RainbowCheck::Failing { .. } => None,
        }
    }
}

/// Checks rainbow connectivity of `coloring` on `graph`, producing either a
/// full certificate or the first failing pair. The coloring must be total.
pub fn is_rainbow_connected(graph: &PowerGraph, coloring: &EdgeColoring) -> RainbowCheck {
    assert_eq!(
        coloring.edge_count(),
        graph.edge_count(),
        "coloring is not total on the edge set"
    );
    let n = graph.vertex_count();
    let mut witnesses = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            match rainbow_path(graph, coloring, u, v) {
                Some(path) => witnesses.push(PairWitness { u, v, path }),
                None => return RainbowCheck::Failing { u, v },
            }
        }
    }
    RainbowCheck::Connected(RainbowCertificate { witnesses })
}

/// Finds a rainbow path from `u` to `v`, shortest first, scanning neighbors
/// in ascending order so the witness is deterministic.
fn rainbow_path(
    graph: &PowerGraph,
    coloring: &EdgeColoring,
    u: usize,
    v: usize,
) -> Option<Vec<usize>> {
    if graph.are_adjacent(u, v) {
        return Some(vec![u, v]);
    }
    // two-edge paths cover almost every pair in a power graph
    for &w in graph.neighbors(u) {
        if graph.are_adjacent(w, v) {
            let c1 = coloring.color(graph.edge_index(u, w).expect("edge"));
            let c2 = coloring.color(graph.edge_index(w, v).expect("edge"));
            if c1 != c2 {
                return Some(vec![u, w, v]);
            }
        }
    }
    if coloring.k() <= 64 {
        bfs_rainbow_bitmask(graph, coloring, u, v)
    } else {
        bfs_rainbow_setmask(graph, coloring, u, v)
    }
}

/// BFS over (vertex, used-color bitmask) states; first reach of `v` is a
/// minimum-length rainbow walk, which is necessarily a simple path.
fn bfs_rainbow_bitmask(
    graph: &PowerGraph,
    coloring: &EdgeColoring,
    u: usize,
    v: usize,
) -> Option<Vec<usize>> {
    // (vertex, mask, parent state index)
    let mut states: Vec<(usize, u64, usize)> = vec![(u, 0, usize::MAX)];
    let mut visited: HashSet<(usize, u64)> = HashSet::from([(u, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(si) = queue.pop_front() {
        let (w, mask, _) = states[si];
        for &z in graph.neighbors(w) {
            let color = coloring.color(graph.edge_index(w, z).expect("edge"));
            let bit = 1u64 << (color - 1);
            if mask & bit != 0 {
                continue;
            }
            let next = (z, mask | bit);
            if z == v {
                let mut path = vec![v];
                let mut cur = si;
                while cur != usize::MAX {
                    path.push(states[cur].0);
                    cur = states[cur].2;
                }
                path.reverse();
                return Some(path);
            }
            if visited.insert(next) {
                states.push((z, mask | bit, si));
                queue.push_back(states.len() - 1);
            }
        }
    }
    None
}

/// Fallback for colorings with more than 64 colors: the used-color set is a
/// sorted vector. Rarely reached, since two-edge paths resolve most pairs.
fn bfs_rainbow_setmask(
    graph: &PowerGraph,
    coloring: &EdgeColoring,
    u: usize,
    v: usize,
) -> Option<Vec<usize>> {
    let mut states: Vec<(usize, Vec<u32>, usize)> = vec![(u, Vec::new(), usize::MAX)];
    let mut visited: HashSet<(usize, Vec<u32>)> = HashSet::from([(u, Vec::new())]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(si) = queue.pop_front() {
        let (w, ref mask, _) = states[si];
        let mask = mask.clone();
        for &z in graph.neighbors(w) {
            let color = coloring.color(graph.edge_index(w, z).expect("edge"));
            if mask.binary_search(&color).is_ok() {
                continue;
            }
            let mut next_mask = mask.clone();
            let pos = next_mask.binary_search(&color).unwrap_err();
            next_mask.insert(pos, color);
            if z == v {
                let mut path = vec![v];
                let mut cur = si;
                while cur != usize::MAX {
                    path.push(states[cur].0);
                    cur = states[cur].2;
                }
                path.reverse();
                return Some(path);
            }
            if visited.insert((z, next_mask.clone())) {
                states.push((z, next_mask, si));
                queue.push_back(states.len() - 1);
            }
        }
    }
    None
}

/// Replays a certificate against the graph and coloring: every pair covered
/// exactly once and in order, every path simple and present in the graph,
/// colors along it pairwise distinct, adjacent pairs witnessed by their edge.
pub fn validate_certificate(
    graph: &PowerGraph,
    coloring: &EdgeColoring,
    cert: &RainbowCertificate,
) -> Result<(), String> {
    let n = graph.vertex_count();
    let mut expect = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            expect.push((u, v));
        }
    }
    if cert.witnesses.len() != expect.len() {
        return Err(format!(
            "certificate has {} witnesses, expected {}",
            cert.witnesses.len(),
            expect.len()
        ));
    }
    for (w, &(u, v)) in cert.witnesses.iter().zip(&expect) {
        if (w.u, w.v) != (u, v) {
            return Err(format!("witness out of order: ({}, {})", w.u, w.v));
        }
        let path = &w.path;
        if path.first() != Some(&u) || path.last() != Some(&v) {
            return Err(format!("path for ({u}, {v}) has wrong endpoints"));
        }
        if graph.are_adjacent(u, v) && path.len() != 2 {
            return Err(format!("adjacent pair ({u}, {v}) must witness its edge"));
        }
        let mut seen_vertices = HashSet::new();
        for &x in path {
            if !seen_vertices.insert(x) {
                return Err(format!("path for ({u}, {v}) repeats vertex {x}"));
            }
        }
        let mut seen_colors = HashSet::new();
        for step in path.windows(2) {
            let edge = graph
                .edge_index(step[0], step[1])
                .ok_or_else(|| format!("path for ({u}, {v}) uses a non-edge"))?;
            if !seen_colors.insert(coloring.color(edge)) {
                return Err(format!("path for ({u}, {v}) repeats a color"));
            }
        }
        if path.len() - 1 > coloring.k() as usize {
            return Err(format!("path for ({u}, {v}) longer than k"));
        }
    }
    Ok(())
}

/// The serialized form of a coloring and optional certificate:
/// a `k=<k> edges=<m>` header, one `u v color` line per edge in edge-index
/// order, then optional `pair u v : v0 v1 ... vl` witness lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringDocument {
    pub k: u32,
    pub edges: Vec<(usize, usize, u32)>,
    pub witnesses: Vec<PairWitness>,
}

impl ColoringDocument {
    pub fn new(
        graph: &PowerGraph,
        coloring: &EdgeColoring,
        cert: Option<&RainbowCertificate>,
    ) -> ColoringDocument {
        let edges = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| (u, v, coloring.color(id)))
            .collect();
        ColoringDocument {
            k: coloring.k(),
            edges,
            witnesses: cert.map(|c| c.witnesses.clone()).unwrap_or_default(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "k={} edges={}", self.k, self.edges.len());
        for &(u, v, c) in &self.edges {
            let _ = writeln!(out, "{u} {v} {c}");
        }
        for w in &self.witnesses {
            let path: Vec<String> = w.path.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "pair {} {} : {}", w.u, w.v, path.join(" "));
        }
        out
    }

    pub fn parse(text: &str) -> Result<ColoringDocument, ColoringError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| ColoringError::Parse("empty document".into()))?;
        let (k, edge_count) = parse_header(header)?;
        let mut edges = Vec::with_capacity(edge_count);
        for _ in 0..edge_count {
            let line = lines
                .next()
                .ok_or_else(|| ColoringError::Parse("missing edge line".into()))?;
            let mut parts = line.split_whitespace();
            let err = || ColoringError::Parse(format!("bad edge line `{line}`"));
            let u = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
            let v = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
            let c = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
            if parts.next().is_some() {
                return Err(err());
            }
            edges.push((u, v, c));
        }
        let mut witnesses = Vec::new();
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            witnesses.push(parse_pair_line(line)?);
        }
        Ok(ColoringDocument { k, edges, witnesses })
    }

    /// Reassembles the coloring over `graph`, requiring the document's edge
    /// list to match the graph's edge indexing exactly.
    pub fn coloring_for(&self, graph: &PowerGraph) -> Result<EdgeColoring, ColoringError> {
        if self.edges.len() != graph.edge_count() {
            return Err(ColoringError::Invalid(format!(
                "document has {} edges, graph has {}",
                self.edges.len(),
                graph.edge_count()
            )));
        }
        let mut colors = Vec::with_capacity(self.edges.len());
        for (id, &(u, v, c)) in self.edges.iter().enumerate() {
            if graph.edge_index(u, v) != Some(id) {
                return Err(ColoringError::Invalid(format!(
                    "edge ({u}, {v}) does not match the graph's edge {id}"
                )));
            }
            colors.push(c);
        }
        EdgeColoring::new(self.k, colors)
    }

    pub fn certificate(&self) -> Option<RainbowCertificate> {
        if self.witnesses.is_empty() {
            None
        } else {
            Some(RainbowCertificate {
                witnesses: self.witnesses.clone(),
            })
        }
    }
}

fn parse_header(line: &str) -> Result<(u32, usize), ColoringError> {
    let err = || ColoringError::Parse(format!("bad header `{line}`"));
    let mut parts = line.split_whitespace();
    let k_part = parts.next().ok_or_else(err)?;
    let e_part = parts.next().ok_or_else(err)?;
    if parts.next().is_some() {
        return Err(err());
    }
    let k = k_part
        .strip_prefix("k=")
        .ok_or_else(err)?
        .parse()
        .map_err(|_| err())?;
    let edges = e_part
        .strip_prefix("edges=")
        .ok_or_else(err)?
        .parse()
        .map_err(|_| err())?;
    Ok((k, edges))
}

fn parse_pair_line(line: &str) -> Result<PairWitness, ColoringError> {
    let err = || ColoringError::Parse(format!("bad pair line `{line}`"));
    let rest = line.strip_prefix("pair ").ok_or_else(err)?;
    let (pair_part, path_part) = rest.split_once(" : ").ok_or_else(err)?;
    let mut pair_tokens = pair_part.split_whitespace();
    let u = pair_tokens
        .next()
        .ok_or_else(err)?
        .parse()
        .map_err(|_| err())?;
    let v = pair_tokens
        .next()
        .ok_or_else(err)?
        .parse()
        .map_err(|_| err())?;
    if pair_tokens.next().is_some() {
        return Err(err());
    }
    let path: Vec<usize> = path_part
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| err()))
        .collect::<Result<_, _>>()?;
    if path.is_empty() {
        return Err(err());
    }
    Ok(PairWitness { u, v, path })
}
