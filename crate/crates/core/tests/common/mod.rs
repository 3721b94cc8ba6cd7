//! Shared oracles for the integration suites. Everything here is
//! deliberately naive and independent of the library's search code: paths
//! are enumerated by plain DFS and colorings by exhaustive odometers.

// each test binary links this module but uses only part of it
#![allow(dead_code)]

use rcpg_core::coloring::EdgeColoring;
use rcpg_core::power_graph::PowerGraph;

/// Every simple path between `u` and `v`, as vertex sequences.
pub fn all_simple_paths(graph: &PowerGraph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![u];
    fn dfs(graph: &PowerGraph, target: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let here = *stack.last().unwrap();
        if here == target {
            out.push(stack.clone());
            return;
        }
        for z in 0..graph.vertex_count() {
            if graph.are_adjacent(here, z) && !stack.contains(&z) {
                stack.push(z);
                dfs(graph, target, stack, out);
                stack.pop();
            }
        }
    }
    dfs(graph, v, &mut stack, &mut out);
    out
}

fn path_is_rainbow(graph: &PowerGraph, coloring: &EdgeColoring, path: &[usize]) -> bool {
    let mut seen = Vec::new();
    for step in path.windows(2) {
        let c = coloring.color(graph.edge_index(step[0], step[1]).unwrap());
        if seen.contains(&c) {
            return false;
        }
        seen.push(c);
    }
    true
}

/// Naive oracle: a coloring is rainbow connected iff every pair is joined
/// by some simple path with pairwise distinct colors.
pub fn naive_rainbow_connected(graph: &PowerGraph, coloring: &EdgeColoring) -> bool {
    let n = graph.vertex_count();
    for u in 0..n {
        for v in (u + 1)..n {
            let ok = all_simple_paths(graph, u, v)
                .iter()
                .any(|p| path_is_rainbow(graph, coloring, p));
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Brute-force oracle for the decision problem: enumerate k^(m-1) colorings
/// (the first edge is pinned to color 1, valid because rainbow connectivity
/// is invariant under permuting colors) and test each naively against the
/// precomputed path lists.
pub fn brute_force_has_rainbow_coloring(graph: &PowerGraph, k: u32) -> bool {
    let m = graph.edge_count();
    let n = graph.vertex_count();
    if m == 0 {
        return n <= 1;
    }
    let mut pair_paths: Vec<Vec<Vec<usize>>> = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pair_paths.push(all_simple_paths(graph, u, v));
        }
    }
    let mut colors = vec![1u32; m];
    loop {
        let coloring = EdgeColoring::new(k, colors.clone()).unwrap();
        let ok = pair_paths.iter().all(|paths| {
            paths.iter().any(|p| path_is_rainbow(graph, &coloring, p))
        });
        if ok {
            return true;
        }
        let mut i = m;
        loop {
            if i == 1 {
                return false;
            }
            i -= 1;
            if colors[i] < k {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
        }
    }
}

/// Deterministic pseudorandom coloring for oracle comparisons.
pub fn scrambled_coloring(m: usize, k: u32, seed: u32) -> EdgeColoring {
    let colors = (0..m as u32)
        .map(|i| (i.wrapping_mul(2654435761).wrapping_add(seed.wrapping_mul(40503)) >> 7) % k + 1)
        .collect();
    EdgeColoring::new(k, colors).unwrap()
}
