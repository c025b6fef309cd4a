//! Naive brute-force reference implementations.
//!
//! These deliberately share no code with the detectors in [`crate::detect`]:
//! they enumerate structures directly by nested loops or unpruned DFS over
//! simple paths, and exist so tests can cross-check the smart searches on
//! small graphs. Keep them dumb.

use crate::graph::EdgeColoredGraph;
use alloc::vec::Vec;

/// True iff some triangle containing `v` has three distinct edge colors,
/// by direct enumeration of all vertex pairs.
pub fn rainbow_triangle_through_naive(g: &EdgeColoredGraph, v: u32) -> bool {
    let n = g.n() as u32;
    for a in 0..n {
        for b in 0..n {
            if a == b || a == v || b == v {
                continue;
            }
            let (Some(c1), Some(c2), Some(c3)) =
                (g.color_of(v, a), g.color_of(a, b), g.color_of(b, v))
            else {
                continue;
            };
            if c1 != c2 && c2 != c3 && c1 != c3 {
                return true;
            }
        }
    }
    false
}

/// True iff some 4-cycle containing `v` is rainbow, by direct enumeration
/// of all ordered vertex triples.
pub fn rainbow_c4_through_naive(g: &EdgeColoredGraph, v: u32) -> bool {
    let n = g.n() as u32;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || a == c || b == c || a == v || b == v || c == v {
                    continue;
                }
                let (Some(c1), Some(c2), Some(c3), Some(c4)) = (
                    g.color_of(v, a),
                    g.color_of(a, b),
                    g.color_of(b, c),
                    g.color_of(c, v),
                ) else {
                    continue;
                };
                if c1 != c2 && c1 != c3 && c1 != c4 && c2 != c3 && c2 != c4 && c3 != c4 {
                    return true;
                }
            }
        }
    }
    false
}

fn is_rainbow(colors: &[u32]) -> bool {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

fn all_paths_from(
    g: &EdgeColoredGraph,
    path: &mut Vec<u32>,
    visited: &mut [bool],
    best: &mut usize,
) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if visited[w as usize] {
            continue;
        }
        visited[w as usize] = true;
        path.push(w);
        let colors: Vec<u32> = path
            .windows(2)
            .map(|e| g.color_of(e[0], e[1]).unwrap())
            .collect();
        if is_rainbow(&colors) && colors.len() > *best {
            *best = colors.len();
        }
        all_paths_from(g, path, visited, best);
        path.pop();
        visited[w as usize] = false;
    }
}

/// Maximum rainbow path length (in edges) over all simple paths,
/// enumerated from every start vertex without pruning.
pub fn max_rainbow_path_len_naive(g: &EdgeColoredGraph) -> usize {
    let mut best = 0;
    for start in 0..g.n() as u32 {
        let mut visited = alloc::vec![false; g.n()];
        visited[start as usize] = true;
        let mut path = alloc::vec![start];
        all_paths_from(g, &mut path, &mut visited, &mut best);
    }
    best
}

fn all_cycles_from(
    g: &EdgeColoredGraph,
    root: u32,
    path: &mut Vec<u32>,
    visited: &mut [bool],
    best: &mut Option<usize>,
) {
    let last = *path.last().unwrap();
    if path.len() >= 3 {
        if let Some(close) = g.color_of(last, root) {
            let mut colors: Vec<u32> = path
                .windows(2)
                .map(|e| g.color_of(e[0], e[1]).unwrap())
                .collect();
            colors.push(close);
            if is_rainbow(&colors) && best.is_none_or(|b| colors.len() > b) {
                *best = Some(colors.len());
            }
        }
    }
    for &w in g.neighbors(last) {
        if w <= root || visited[w as usize] {
            continue;
        }
        visited[w as usize] = true;
        path.push(w);
        all_cycles_from(g, root, path, visited, best);
        path.pop();
        visited[w as usize] = false;
    }
}

/// Maximum rainbow cycle length over all simple cycles, or `None` when the
/// graph has no rainbow cycle. Cycles are enumerated once each, rooted at
/// their minimum vertex, with no color-based pruning.
pub fn max_rainbow_cycle_len_naive(g: &EdgeColoredGraph) -> Option<usize> {
    let mut best = None;
    for root in 0..g.n() as u32 {
        let mut visited = alloc::vec![false; g.n()];
        visited[root as usize] = true;
        let mut path = alloc::vec![root];
        all_cycles_from(g, root, &mut path, &mut visited, &mut best);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn naive_checks_on_a_rainbow_triangle() {
        let g = build_graph(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        assert!(rainbow_triangle_through_naive(&g, 0));
        assert!(!rainbow_c4_through_naive(&g, 0));
        assert_eq!(max_rainbow_path_len_naive(&g), 2);
        assert_eq!(max_rainbow_cycle_len_naive(&g), Some(3));
    }

    #[test]
    fn naive_checks_on_an_alternating_c4() {
        let g = build_graph(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)]).unwrap();
        assert!(!rainbow_c4_through_naive(&g, 0));
        assert_eq!(max_rainbow_cycle_len_naive(&g), None);
        assert_eq!(max_rainbow_path_len_naive(&g), 2);
    }
}
