//! Rainbow substructure search: triangles and 4-cycles through a vertex,
//! global rainbow triangles, exact longest rainbow paths, and rainbow cycles
//! of length at least `k` under a node budget.
//!
//! All searches iterate vertices and neighbors in ascending order, so the
//! same input always yields the same witness. Budgets are counted in
//! search-tree nodes, never wall time, for platform-independent replay.
//! Budget exhaustion is a distinct outcome (`Indeterminate`), never
//! conflated with certified absence.

use crate::graph::{EdgeColoredGraph, GraphError};
use alloc::vec::Vec;
use core::fmt;

// ============================================================================
// Witnesses and budgets
// ============================================================================

/// What a [`RainbowWitness`] certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Triangle,
    C4,
    Path,
    Cycle,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WitnessKind::Triangle => "triangle",
            WitnessKind::C4 => "c4",
            WitnessKind::Path => "path",
            WitnessKind::Cycle => "cycle",
        };
        f.write_str(s)
    }
}

/// A vertex sequence plus edge colors certifying a rainbow structure.
///
/// For closed kinds (triangle, c4, cycle) the color list includes the
/// closing edge, so `colors.len() == vertices.len()`; for paths it is
/// `vertices.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowWitness {
    pub kind: WitnessKind,
    pub vertices: Vec<u32>,
    pub colors: Vec<u32>,
}

/// Reasons a witness fails validation against a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessError {
    WrongShape,
    RepeatedVertex(u32),
    MissingEdge(u32, u32),
    WrongColor {
        u: u32,
        v: u32,
        claimed: u32,
        actual: u32,
    },
    RepeatedColor(u32),
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::WrongShape => write!(f, "vertex/color counts do not match the kind"),
            WitnessError::RepeatedVertex(v) => write!(f, "vertex {v} repeated"),
            WitnessError::MissingEdge(u, v) => write!(f, "edge {{{u},{v}}} not in graph"),
            WitnessError::WrongColor {
                u,
                v,
                claimed,
                actual,
            } => {
                write!(
                    f,
                    "edge {{{u},{v}}} claims color {claimed}, graph has {actual}"
                )
            }
            WitnessError::RepeatedColor(c) => write!(f, "color {c} repeated"),
        }
    }
}

impl core::error::Error for WitnessError {}

impl RainbowWitness {
    /// Number of edges in the witness.
    pub fn length(&self) -> usize {
        self.colors.len()
    }

    fn closed(kind: WitnessKind) -> bool {
        !matches!(kind, WitnessKind::Path)
    }

    /// Builds a witness of `kind` over `vertices`, reading colors from `g`.
    pub fn from_vertices(
        g: &EdgeColoredGraph,
        kind: WitnessKind,
        vertices: Vec<u32>,
    ) -> Result<Self, WitnessError> {
        let p = vertices.len();
        let edge_count = if Self::closed(kind) {
            p
        } else {
            p.saturating_sub(1)
        };
        let mut colors = Vec::with_capacity(edge_count);
        for i in 0..edge_count {
            let u = vertices[i];
            let v = vertices[(i + 1) % p];
            match g.color_of(u, v) {
                Some(c) => colors.push(c),
                None => return Err(WitnessError::MissingEdge(u, v)),
            }
        }
        let w = RainbowWitness {
            kind,
            vertices,
            colors,
        };
        w.validate(g)?;
        Ok(w)
    }

    /// Checks shape, adjacency, color agreement with `g`, and rainbowness.
    pub fn validate(&self, g: &EdgeColoredGraph) -> Result<(), WitnessError> {
        let p = self.vertices.len();
        let shape_ok = match self.kind {
            WitnessKind::Triangle => p == 3 && self.colors.len() == 3,
            WitnessKind::C4 => p == 4 && self.colors.len() == 4,
            WitnessKind::Cycle => p >= 3 && self.colors.len() == p,
            WitnessKind::Path => p >= 2 && self.colors.len() == p - 1,
        };
        if !shape_ok {
            return Err(WitnessError::WrongShape);
        }
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(WitnessError::RepeatedVertex(w[0]));
            }
        }
        for (i, &claimed) in self.colors.iter().enumerate() {
            let u = self.vertices[i];
            let v = self.vertices[(i + 1) % p];
            match g.color_of(u, v) {
                None => return Err(WitnessError::MissingEdge(u, v)),
                Some(actual) if actual != claimed => {
                    return Err(WitnessError::WrongColor {
                        u,
                        v,
                        claimed,
                        actual,
                    })
                }
                Some(_) => {}
            }
        }
        let mut cs = self.colors.clone();
        cs.sort_unstable();
        for w in cs.windows(2) {
            if w[0] == w[1] {
                return Err(WitnessError::RepeatedColor(w[0]));
            }
        }
        Ok(())
    }
}

/// A node-count limit for backtracking searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    node_limit: u64,
}

impl SearchBudget {
    /// A budget of `node_limit` search-tree nodes. Must be positive.
    pub fn nodes(node_limit: u64) -> Self {
        assert!(node_limit > 0, "budget must allow at least one node");
        SearchBudget { node_limit }
    }

    /// Effectively unbounded (u64::MAX nodes).
    pub fn unlimited() -> Self {
        SearchBudget {
            node_limit: u64::MAX,
        }
    }

    pub fn node_limit(&self) -> u64 {
        self.node_limit
    }
}

/// Errors for detector preconditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DetectError {
    VertexOutOfRange {
        vertex: u32,
        n: usize,
    },
    /// Longest-path search requires at least one edge.
    NoEdges,
    /// Cycle search requires `k >= 3`.
    BadK {
        k: usize,
    },
}

impl fmt::Display for DetectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetectError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range (n = {n})")
            }
            DetectError::NoEdges => write!(f, "graph has no edges"),
            DetectError::BadK { k } => write!(f, "cycle length bound {k} must be at least 3"),
        }
    }
}

impl core::error::Error for DetectError {}

impl From<GraphError> for DetectError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::VertexOutOfRange { vertex, n } => {
                DetectError::VertexOutOfRange { vertex, n }
            }
            _ => unreachable!("unexpected graph error"),
        }
    }
}

// ============================================================================
// Exhaustive small-structure detectors
// ============================================================================

/// The lexicographically-first rainbow triangle, if any exists.
pub fn find_rainbow_triangle(g: &EdgeColoredGraph) -> Option<RainbowWitness> {
    let n = g.n() as u32;
    for i in 0..n {
        for j in (i + 1)..n {
            let Some(cij) = g.color_of(i, j) else {
                continue;
            };
            for k in (j + 1)..n {
                let (Some(cjk), Some(cik)) = (g.color_of(j, k), g.color_of(i, k)) else {
                    continue;
                };
                if cij != cjk && cjk != cik && cij != cik {
                    return Some(RainbowWitness {
                        kind: WitnessKind::Triangle,
                        vertices: alloc::vec![i, j, k],
                        colors: alloc::vec![cij, cjk, cik],
                    });
                }
            }
        }
    }
    None
}

/// A rainbow triangle containing `v`, searched exhaustively over neighbor
/// pairs in ascending order.
pub fn rainbow_triangle_through(
    g: &EdgeColoredGraph,
    v: u32,
) -> Result<Option<RainbowWitness>, DetectError> {
    g.check_vertex(v)?;
    let nv = g.neighbors(v);
    for (ai, &a) in nv.iter().enumerate() {
        let cva = g.color_of(v, a).expect("adjacent");
        for &b in &nv[ai + 1..] {
            let cvb = g.color_of(v, b).expect("adjacent");
            let Some(cab) = g.color_of(a, b) else {
                continue;
            };
            if cva != cvb && cva != cab && cvb != cab {
                return Ok(Some(RainbowWitness {
                    kind: WitnessKind::Triangle,
                    vertices: alloc::vec![v, a, b],
                    colors: alloc::vec![cva, cab, cvb],
                }));
            }
        }
    }
    Ok(None)
}

/// A rainbow 4-cycle containing `v`, searched exhaustively over ordered
/// triples completing a 4-cycle, in ascending order.
pub fn rainbow_c4_through(
    g: &EdgeColoredGraph,
    v: u32,
) -> Result<Option<RainbowWitness>, DetectError> {
    g.check_vertex(v)?;
    for &a in g.neighbors(v) {
        let cva = g.color_of(v, a).expect("adjacent");
        for &b in g.neighbors(a) {
            if b == v {
                continue;
            }
            let cab = g.color_of(a, b).expect("adjacent");
            if cab == cva {
                continue;
            }
            for &c in g.neighbors(b) {
                if c == v || c == a {
                    continue;
                }
                let cbc = g.color_of(b, c).expect("adjacent");
                let Some(ccv) = g.color_of(c, v) else {
                    continue;
                };
                if cbc != cva && cbc != cab && ccv != cva && ccv != cab && ccv != cbc {
                    return Ok(Some(RainbowWitness {
                        kind: WitnessKind::C4,
                        vertices: alloc::vec![v, a, b, c],
                        colors: alloc::vec![cva, cab, cbc, ccv],
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// A rainbow 4-cycle anywhere in the graph, rooted at its minimum vertex.
pub fn find_rainbow_c4(g: &EdgeColoredGraph, budget: SearchBudget) -> CycleSearch {
    // Exactly-length-4 special case of the cycle search; kept separate since
    // several hypotheses need "no rainbow C4" as a certified side condition.
    let mut nodes: u64 = 0;
    let n = g.n() as u32;
    for r in 0..n {
        for &a in g.neighbors(r) {
            if a <= r {
                continue;
            }
            let cra = g.color_of(r, a).expect("adjacent");
            for &b in g.neighbors(a) {
                if b <= r || b == a {
                    continue;
                }
                let cab = g.color_of(a, b).expect("adjacent");
                if cab == cra {
                    continue;
                }
                for &c in g.neighbors(b) {
                    if c <= r || c == a {
                        continue;
                    }
                    nodes += 1;
                    if nodes > budget.node_limit() {
                        return CycleSearch::Indeterminate;
                    }
                    let cbc = g.color_of(b, c).expect("adjacent");
                    let Some(ccr) = g.color_of(c, r) else {
                        continue;
                    };
                    if cbc != cra && cbc != cab && ccr != cra && ccr != cab && ccr != cbc {
                        return CycleSearch::Found(RainbowWitness {
                            kind: WitnessKind::C4,
                            vertices: alloc::vec![r, a, b, c],
                            colors: alloc::vec![cra, cab, cbc, ccr],
                        });
                    }
                }
            }
        }
    }
    CycleSearch::Absent
}

// ============================================================================
// Longest rainbow path
// ============================================================================

/// Result of the exact longest-rainbow-path search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathSearch {
    /// The search tree was closed: this is a maximum-length rainbow path.
    Exact(RainbowWitness),
    /// Budget exhausted; carries the best path found so far.
    Indeterminate(RainbowWitness),
}

impl PathSearch {
    pub fn witness(&self) -> &RainbowWitness {
        match self {
            PathSearch::Exact(w) | PathSearch::Indeterminate(w) => w,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, PathSearch::Exact(_))
    }
}

struct PathSearcher<'g> {
    g: &'g EdgeColoredGraph,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    visited: Vec<bool>,
    path: Vec<u32>,
    path_colors: Vec<u32>,
    used: ColorBag,
    best: Vec<u32>,
    best_colors: Vec<u32>,
    total_colors: usize,
    cap: usize,
}

/// Membership structure over the graph's color set, used instead of a
/// hash set so searches stay allocation-light and deterministic.
struct ColorBag {
    sorted: Vec<u32>,
    used: Vec<bool>,
    count: usize,
}

impl ColorBag {
    fn new(g: &EdgeColoredGraph) -> Self {
        let sorted: Vec<u32> = g.color_set().iter().collect();
        let used = alloc::vec![false; sorted.len()];
        ColorBag {
            sorted,
            used,
            count: 0,
        }
    }

    fn index(&self, c: u32) -> usize {
        self.sorted.binary_search(&c).expect("color of graph")
    }

    fn contains(&self, c: u32) -> bool {
        self.used[self.index(c)]
    }

    fn insert(&mut self, c: u32) {
        let i = self.index(c);
        debug_assert!(!self.used[i]);
        self.used[i] = true;
        self.count += 1;
    }

    fn remove(&mut self, c: u32) {
        let i = self.index(c);
        debug_assert!(self.used[i]);
        self.used[i] = false;
        self.count -= 1;
    }
}

impl<'g> PathSearcher<'g> {
    fn extend(&mut self) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let len = self.path_colors.len();
        if len > self.best_colors.len() {
            self.best = self.path.clone();
            self.best_colors = self.path_colors.clone();
        }
        if self.best_colors.len() == self.cap {
            return;
        }
        // Bound: the path can gain at most min(unvisited vertices,
        // unused colors) further edges.
        let unvisited = self.g.n() - self.path.len();
        let unused = self.total_colors - self.used.count;
        if len + unvisited.min(unused) <= self.best_colors.len() {
            return;
        }
        let last = *self.path.last().expect("nonempty path");
        for &w in self.g.neighbors(last) {
            if self.exhausted {
                return;
            }
            if self.visited[w as usize] {
                continue;
            }
            let c = self.g.color_of(last, w).expect("adjacent");
            if self.used.contains(c) {
                continue;
            }
            self.visited[w as usize] = true;
            self.path.push(w);
            self.path_colors.push(c);
            self.used.insert(c);
            self.extend();
            self.used.remove(c);
            self.path_colors.pop();
            self.path.pop();
            self.visited[w as usize] = false;
        }
    }
}

/// Exact maximum-length rainbow path via backtracking over
/// (vertex, used-color-set) states with an incumbent bound.
///
/// If the budget exhausts before the search tree is closed, returns
/// [`PathSearch::Indeterminate`] carrying the best path found.
pub fn longest_rainbow_path(
    g: &EdgeColoredGraph,
    budget: SearchBudget,
) -> Result<PathSearch, DetectError> {
    if g.edge_count() == 0 {
        return Err(DetectError::NoEdges);
    }
    let total_colors = g.distinct_colors();
    let mut s = PathSearcher {
        g,
        budget: budget.node_limit(),
        nodes: 0,
        exhausted: false,
        visited: alloc::vec![false; g.n()],
        path: Vec::new(),
        path_colors: Vec::new(),
        used: ColorBag::new(g),
        best: Vec::new(),
        best_colors: Vec::new(),
        total_colors,
        cap: total_colors.min(g.n() - 1),
    };
    for start in 0..g.n() as u32 {
        if s.exhausted || s.best_colors.len() == s.cap {
            break;
        }
        s.visited[start as usize] = true;
        s.path.push(start);
        s.extend();
        s.path.pop();
        s.visited[start as usize] = false;
    }
    let witness = RainbowWitness {
        kind: WitnessKind::Path,
        vertices: s.best,
        colors: s.best_colors,
    };
    debug_assert!(witness.validate(g).is_ok());
    if s.exhausted {
        Ok(PathSearch::Indeterminate(witness))
    } else {
        Ok(PathSearch::Exact(witness))
    }
}

// ============================================================================
// Rainbow cycles of length >= k
// ============================================================================

/// Result of a budgeted rainbow-cycle search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleSearch {
    Found(RainbowWitness),
    /// The full search tree was closed: no such cycle exists.
    Absent,
    /// Budget exhausted before the tree was closed.
    Indeterminate,
}

impl CycleSearch {
    pub fn found(&self) -> Option<&RainbowWitness> {
        match self {
            CycleSearch::Found(w) => Some(w),
            _ => None,
        }
    }
}

struct CycleSearcher<'g> {
    g: &'g EdgeColoredGraph,
    k: usize,
    root: u32,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    visited: Vec<bool>,
    path: Vec<u32>,
    path_colors: Vec<u32>,
    used: ColorBag,
    total_colors: usize,
    found: Option<RainbowWitness>,
}

impl<'g> CycleSearcher<'g> {
    /// Extends rainbow paths rooted at `root` through vertices larger than
    /// `root` (every cycle is discovered exactly once, at its minimum
    /// vertex), checking the closing edge whenever the length suffices.
    fn extend(&mut self) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let edges = self.path_colors.len();
        let last = *self.path.last().expect("nonempty path");
        if edges >= self.k - 1 {
            if let Some(c) = self.g.color_of(last, self.root) {
                if !self.used.contains(c) {
                    let mut colors = self.path_colors.clone();
                    colors.push(c);
                    self.found = Some(RainbowWitness {
                        kind: WitnessKind::Cycle,
                        vertices: self.path.clone(),
                        colors,
                    });
                    return;
                }
            }
        }
        // Bound: closing a cycle needs one more fresh color than the
        // remaining extensions, and every extension needs a fresh vertex.
        let unused_colors = self.total_colors - self.used.count;
        let unvisited = self
            .g
            .n()
            .saturating_sub(self.root as usize) // vertices >= root
            .saturating_sub(self.path.len()); // minus those on the path
        if unused_colors == 0 || edges + unvisited + 1 < self.k {
            return;
        }
        let max_reachable = edges + unvisited.min(unused_colors - 1) + 1;
        if max_reachable < self.k {
            return;
        }
        for &w in self.g.neighbors(last) {
            if self.exhausted || self.found.is_some() {
                return;
            }
            if w <= self.root || self.visited[w as usize] {
                continue;
            }
            let c = self.g.color_of(last, w).expect("adjacent");
            if self.used.contains(c) {
                continue;
            }
            self.visited[w as usize] = true;
            self.path.push(w);
            self.path_colors.push(c);
            self.used.insert(c);
            self.extend();
            self.used.remove(c);
            self.path_colors.pop();
            self.path.pop();
            self.visited[w as usize] = false;
        }
    }
}

/// Searches for a rainbow cycle of length at least `k`.
///
/// Exhaustive when the budget is not exhausted, so `Absent` certifies that
/// no such cycle exists. Rainbow-path backtracking is rooted at each vertex
/// in ascending order with a closing-edge color check.
pub fn find_rainbow_cycle_at_least(
    g: &EdgeColoredGraph,
    k: usize,
    budget: SearchBudget,
) -> Result<CycleSearch, DetectError> {
    if k < 3 {
        return Err(DetectError::BadK { k });
    }
    if g.n() < k || g.distinct_colors() < k {
        return Ok(CycleSearch::Absent);
    }
    let total_colors = g.distinct_colors();
    let mut nodes_spent: u64 = 0;
    for root in 0..g.n() as u32 {
        let mut s = CycleSearcher {
            g,
            k,
            root,
            budget: budget.node_limit() - nodes_spent,
            nodes: 0,
            exhausted: false,
            visited: alloc::vec![false; g.n()],
            path: Vec::new(),
            path_colors: Vec::new(),
            used: ColorBag::new(g),
            total_colors,
            found: None,
        };
        s.visited[root as usize] = true;
        s.path.push(root);
        s.extend();
        nodes_spent += s.nodes;
        if let Some(w) = s.found {
            debug_assert!(w.validate(g).is_ok());
            return Ok(CycleSearch::Found(w));
        }
        if s.exhausted {
            return Ok(CycleSearch::Indeterminate);
        }
    }
    Ok(CycleSearch::Absent)
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use alloc::vec;
    use alloc::vec::Vec;

    fn rainbow_k3() -> EdgeColoredGraph {
        build_graph(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap()
    }

    fn mono_complete(n: u32) -> EdgeColoredGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v, 0));
            }
        }
        build_graph(n as usize, &edges).unwrap()
    }

    fn rainbow_complete(n: u32) -> EdgeColoredGraph {
        let mut edges = Vec::new();
        let mut c = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v, c));
                c += 1;
            }
        }
        build_graph(n as usize, &edges).unwrap()
    }

    fn proper_k33() -> EdgeColoredGraph {
        let mut edges = Vec::new();
        for i in 0..3u32 {
            for j in 0..3u32 {
                edges.push((i, 3 + j, (i + j) % 3));
            }
        }
        build_graph(6, &edges).unwrap()
    }

    /// K4 colored by its three perfect matchings.
    fn matching_k4() -> EdgeColoredGraph {
        build_graph(
            4,
            &[
                (0, 1, 0),
                (2, 3, 0),
                (0, 2, 1),
                (1, 3, 1),
                (0, 3, 2),
                (1, 2, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn global_triangle_search() {
        let w = find_rainbow_triangle(&rainbow_k3()).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2]);
        w.validate(&rainbow_k3()).unwrap();
        assert!(find_rainbow_triangle(&mono_complete(4)).is_none());
        assert!(find_rainbow_triangle(&proper_k33()).is_none());
    }

    #[test]
    fn triangle_through_vertex() {
        let g = rainbow_k3();
        let w = rainbow_triangle_through(&g, 1).unwrap().unwrap();
        assert_eq!(w.vertices, vec![1, 0, 2]);
        w.validate(&g).unwrap();
        assert!(rainbow_triangle_through(&mono_complete(4), 0)
            .unwrap()
            .is_none());

        // Every triangle of the matching-colored K4 takes one edge from each
        // matching, hence is rainbow; check against full enumeration.
        let g = matching_k4();
        let w = rainbow_triangle_through(&g, 2).unwrap().unwrap();
        w.validate(&g).unwrap();
        assert!(w.vertices.contains(&2));
        let mut rainbow_triangles = 0;
        for i in 0..4u32 {
            for j in (i + 1)..4 {
                for k in (j + 1)..4 {
                    let (a, b, c) = (
                        g.color_of(i, j).unwrap(),
                        g.color_of(j, k).unwrap(),
                        g.color_of(i, k).unwrap(),
                    );
                    if a != b && b != c && a != c {
                        rainbow_triangles += 1;
                    }
                }
            }
        }
        assert_eq!(rainbow_triangles, 4);
    }

    #[test]
    fn triangle_through_checks_range() {
        assert_eq!(
            rainbow_triangle_through(&rainbow_k3(), 9),
            Err(DetectError::VertexOutOfRange { vertex: 9, n: 3 })
        );
    }

    #[test]
    fn c4_through_vertex() {
        let g = build_graph(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4)]).unwrap();
        let w = rainbow_c4_through(&g, 0).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        w.validate(&g).unwrap();

        let alternating = build_graph(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)]).unwrap();
        assert!(rainbow_c4_through(&alternating, 0).unwrap().is_none());

        let g = rainbow_complete(5);
        let w = rainbow_c4_through(&g, 3).unwrap().unwrap();
        assert!(w.vertices.contains(&3));
        w.validate(&g).unwrap();
    }

    #[test]
    fn global_c4_search_certifies_absence() {
        let alternating = build_graph(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)]).unwrap();
        assert_eq!(
            find_rainbow_c4(&alternating, SearchBudget::unlimited()),
            CycleSearch::Absent
        );
        let g = rainbow_complete(5);
        match find_rainbow_c4(&g, SearchBudget::unlimited()) {
            CycleSearch::Found(w) => w.validate(&g).unwrap(),
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn longest_path_on_small_cases() {
        let path = build_graph(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 3)]).unwrap();
        let res = longest_rainbow_path(&path, SearchBudget::unlimited()).unwrap();
        assert!(res.is_exact());
        assert_eq!(res.witness().length(), 3);

        let res = longest_rainbow_path(&mono_complete(4), SearchBudget::unlimited()).unwrap();
        assert_eq!(res.witness().length(), 1);

        let res = longest_rainbow_path(&rainbow_complete(5), SearchBudget::unlimited()).unwrap();
        assert_eq!(res.witness().length(), 4);
    }

    #[test]
    fn longest_path_requires_edges() {
        let empty = build_graph(3, &[]).unwrap();
        assert_eq!(
            longest_rainbow_path(&empty, SearchBudget::unlimited()),
            Err(DetectError::NoEdges)
        );
    }

    #[test]
    fn longest_path_budget_exhaustion_is_indeterminate() {
        let g = rainbow_complete(6);
        match longest_rainbow_path(&g, SearchBudget::nodes(3)).unwrap() {
            PathSearch::Indeterminate(w) => {
                w.validate(&g).unwrap();
            }
            PathSearch::Exact(_) => panic!("three nodes cannot close the tree on K6"),
        }
    }

    #[test]
    fn cycle_search_on_small_cases() {
        let g = rainbow_complete(5);
        match find_rainbow_cycle_at_least(&g, 4, SearchBudget::unlimited()).unwrap() {
            CycleSearch::Found(w) => {
                assert!(w.length() >= 4);
                w.validate(&g).unwrap();
            }
            other => panic!("expected cycle, got {other:?}"),
        }
        assert_eq!(
            find_rainbow_cycle_at_least(&mono_complete(5), 3, SearchBudget::unlimited()).unwrap(),
            CycleSearch::Absent
        );
        let alternating = build_graph(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)]).unwrap();
        assert_eq!(
            find_rainbow_cycle_at_least(&alternating, 4, SearchBudget::unlimited()).unwrap(),
            CycleSearch::Absent
        );
    }

    #[test]
    fn cycle_search_rejects_small_k() {
        assert_eq!(
            find_rainbow_cycle_at_least(&rainbow_k3(), 2, SearchBudget::unlimited()),
            Err(DetectError::BadK { k: 2 })
        );
    }

    #[test]
    fn cycle_k3_agrees_with_triangle_when_no_longer_cycle_needed() {
        let g = rainbow_k3();
        match find_rainbow_cycle_at_least(&g, 3, SearchBudget::unlimited()).unwrap() {
            CycleSearch::Found(w) => assert_eq!(w.length(), 3),
            other => panic!("expected triangle-length cycle, got {other:?}"),
        }
    }

    #[test]
    fn witness_validation_catches_lies() {
        let g = rainbow_k3();
        let bad = RainbowWitness {
            kind: WitnessKind::Triangle,
            vertices: vec![0, 1, 2],
            colors: vec![1, 2, 9],
        };
        assert!(matches!(
            bad.validate(&g),
            Err(WitnessError::WrongColor { .. })
        ));
        let repeated = RainbowWitness {
            kind: WitnessKind::Path,
            vertices: vec![0, 1, 0],
            colors: vec![1, 1],
        };
        assert!(matches!(
            repeated.validate(&g),
            Err(WitnessError::RepeatedVertex(0))
        ));
    }
}
