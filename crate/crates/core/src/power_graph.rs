//! The undirected power graph of a finite group.
//!
//! Vertex indices coincide with group element indices. Two distinct
//! vertices are adjacent iff one element is a power of the other, which
//! makes the identity universal and keeps the diameter at most 2. Edges
//! get stable indices in lexicographic (min, max) order; colorings and
//! certificates refer to edges by these indices and never get reordered.

use std::collections::VecDeque;

use crate::coloring::EdgeColoring;
use crate::group::Group;

const NO_EDGE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct PowerGraph {
    n: usize,
    identity: usize,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    edge_ids: Vec<u32>,
    labels: Vec<String>,
}

impl PowerGraph {
    pub fn from_group(g: &Group) -> PowerGraph {
        let n = g.order();
        let mut adj = vec![false; n * n];
        for v in 0..n {
            for u in g.cyclic_subgroup(v) {
                if u != v {
                    adj[u * n + v] = true;
                    adj[v * n + u] = true;
                }
            }
        }
        Self::from_adjacency(n, adj, g.identity(), g.labels().to_vec())
    }

    /// Builds a graph from an explicit edge list. This is the entry point
    /// for running the solver engine on graphs that are not power graphs
    /// (tests, oracle comparisons); self-loops are rejected, duplicate
    /// edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> PowerGraph {
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            assert!(u < n && v < n && u != v, "bad edge ({u}, {v})");
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        let labels = (0..n).map(|v| v.to_string()).collect();
        Self::from_adjacency(n, adj, 0, labels)
    }

    fn from_adjacency(
        n: usize,
        adj: Vec<bool>,
        identity: usize,
        labels: Vec<String>,
    ) -> PowerGraph {
        let mut neighbors = vec![Vec::new(); n];
        let mut edges = Vec::new();
        let mut edge_ids = vec![NO_EDGE; n * n];
        for u in 0..n {
            for v in 0..n {
                if adj[u * n + v] {
                    neighbors[u].push(v);
                    if u < v {
                        edge_ids[u * n + v] = edges.len() as u32;
                        edge_ids[v * n + u] = edges.len() as u32;
                        edges.push((u, v));
                    }
                }
            }
        }
        PowerGraph {
            n,
            identity,
            adj,
            neighbors,
            edges,
            edge_ids,
            labels,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in index order; each pair is (min, max).
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn identity_vertex(&self) -> usize {
        self.identity
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        match self.edge_ids[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    /// Neighbors of `u` in ascending order.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.neighbors[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Largest BFS eccentricity. The graph must be connected.
    pub fn diameter(&self) -> usize {
        let mut diam = 0;
        for start in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.neighbors[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            let ecc = dist.into_iter().max().unwrap_or(0);
            assert_ne!(ecc, usize::MAX, "diameter of a disconnected graph");
            diam = diam.max(ecc);
        }
        diam
    }

    /// Vertices of degree exactly 1, ascending.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to both `u` and `v`, ascending.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        self.neighbors[u]
            .iter()
            .copied()
            .filter(|&w| self.are_adjacent(w, v))
            .collect()
    }

    /// DOT rendering: vertices labeled by element words, edges in index
    /// order, each carrying its color when a coloring is supplied.
    pub fn to_dot(&self, coloring: Option<&EdgeColoring>) -> String {
        let mut out = String::from("graph powergraph {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {} [label=\"{}\"];\n", v, self.labels[v]));
        }
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            match coloring {
                Some(c) => out.push_str(&format!(
                    "  {} -- {} [color={}];\n",
                    u,
                    v,
                    c.color(id)
                )),
                None => out.push_str(&format!("  {} -- {};\n", u, v)),
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn graph(s: &str) -> PowerGraph {
        PowerGraph::from_group(&GroupSpec::parse(s).unwrap().build().unwrap())
    }

    #[test]
    fn cyclic_prime_power_is_complete() {
        let g = graph("Z:4");
        assert!(g.is_complete());
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.diameter(), 1);
    }

    #[test]
    fn klein_four_is_a_star() {
        let g = graph("E2:2");
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(g.pendant_vertices(), vec![1, 2, 3]);
        assert_eq!(g.common_neighbors(1, 2), vec![0]);
        assert_eq!(g.diameter(), 2);
    }

    #[test]
    fn dihedral_six_edge_set() {
        // direct adjacency enumeration: the identity is universal and the
        // two rotations generate each other; reflections are pendant.
        let g = graph("D:6");
        assert_eq!(
            g.edges(),
            &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)]
        );
        assert_eq!(g.pendant_vertices(), vec![3, 4, 5]);
    }

    #[test]
    fn identity_is_universal_and_no_self_loops() {
        for s in ["Z:1", "Z:12", "D:10", "Q:16", "E2:3", "SD:27,7,2"] {
            let g = graph(s);
            let e = g.identity_vertex();
            for v in 0..g.vertex_count() {
                assert!(!g.are_adjacent(v, v), "{s}: self-loop at {v}");
                if v != e {
                    assert!(g.are_adjacent(e, v), "{s}: identity not adjacent to {v}");
                }
            }
            assert!(g.is_connected());
            if g.vertex_count() >= 2 {
                assert!(g.diameter() <= 2, "{s}");
            }
        }
    }

    #[test]
    fn adjacency_matches_naive_power_relation() {
        // independent oracle: u ~ v iff u is some power of v or vice versa,
        // computed by direct repeated multiplication
        for s in ["Z:6", "D:8", "Q:12", "Z:2 x Z:4"] {
            let g0 = GroupSpec::parse(s).unwrap().build().unwrap();
            let pg = PowerGraph::from_group(&g0);
            let is_power_of = |a: usize, b: usize| -> bool {
                let mut acc = g0.identity();
                for _ in 0..g0.order() {
                    acc = g0.mul(acc, b);
                    if acc == a {
                        return true;
                    }
                }
                false
            };
            for u in 0..g0.order() {
                for v in 0..g0.order() {
                    let expect = u != v && (is_power_of(u, v) || is_power_of(v, u));
                    assert_eq!(pg.are_adjacent(u, v), expect, "{s}: ({u}, {v})");
                }
            }
        }
    }

    #[test]
    fn edge_indices_are_lexicographic_and_stable() {
        let g = graph("Q:8");
        let edges = g.edges();
        for w in edges.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (id, &(u, v)) in edges.iter().enumerate() {
            assert_eq!(g.edge_index(u, v), Some(id));
            assert_eq!(g.edge_index(v, u), Some(id));
        }
        assert_eq!(g.edge_index(1, 4), None); // x and y are not powers of each other
    }

    #[test]
    fn generator_classes_have_identical_closed_neighborhoods() {
        for s in ["Z:12", "Q:12", "D:12", "Q:8 x Z:3"] {
            let g0 = GroupSpec::parse(s).unwrap().build().unwrap();
            let pg = PowerGraph::from_group(&g0);
            for x in 0..g0.order() {
                let class = g0.generator_class(x);
                for pair in class.windows(2) {
                    let (a, b) = (pair[0], pair[1]);
                    assert!(pg.are_adjacent(a, b), "{s}: class not a clique");
                    let mut na: Vec<usize> = pg.neighbors(a).to_vec();
                    let mut nb: Vec<usize> = pg.neighbors(b).to_vec();
                    na.push(a);
                    nb.push(b);
                    na.sort_unstable();
                    nb.sort_unstable();
                    assert_eq!(na, nb, "{s}: closed neighborhoods differ in a class");
                }
            }
        }
    }

    #[test]
    fn dot_export_is_deterministic() {
        let g = graph("E2:2");
        let dot = g.to_dot(None);
        assert_eq!(
            dot,
            "graph powergraph {\n  0 [label=\"e\"];\n  1 [label=\"g1\"];\n  2 [label=\"g2\"];\n  3 [label=\"g1g2\"];\n  0 -- 1;\n  0 -- 2;\n  0 -- 3;\n}\n"
        );
        assert_eq!(dot, g.to_dot(None));
    }

    #[test]
    fn from_edge_list_round_trip() {
        let g = PowerGraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (1, 2)]);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());
        assert!(!g.is_complete());
        assert_eq!(g.pendant_vertices(), vec![0, 3]);
        assert_eq!(g.diameter(), 3);
    }
}
