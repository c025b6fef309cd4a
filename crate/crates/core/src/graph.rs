//! Immutable edge-colored graph model with construction, validation,
//! induced subgraphs, and the `.ecg` text format.
//!
//! Vertices are dense `0..n-1`; colors are arbitrary non-negative integers
//! (not required to be contiguous). A graph is immutable after construction,
//! so it can be shared freely between concurrent campaign workers.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Edge list entry `(u, v, color)` normalized so that `u < v`.
pub type ColoredEdge = (u32, u32, u32);

// ============================================================================
// Errors
// ============================================================================

/// Errors raised while constructing a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: u32 },
    /// The same unordered pair appears twice, regardless of colors.
    DuplicateEdge { u: u32, v: u32 },
    /// A vertex id is not in `0..n`.
    VertexOutOfRange { vertex: u32, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u},{v}}}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range (n = {n})")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Errors raised while parsing the `.ecg` text format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// Malformed input; `line` is the 1-based physical line number.
    Syntax { line: usize, message: String },
    /// The edge list was well-formed text but not a valid graph.
    Graph(GraphError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            ParseError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ParseError {}

impl From<GraphError> for ParseError {
    fn from(e: GraphError) -> Self {
        ParseError::Graph(e)
    }
}

// ============================================================================
// Vertex and color sets
// ============================================================================

/// A sorted, duplicate-free list of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet(Vec<u32>);

impl FromIterator<u32> for VertexSet {
    /// Builds a set from arbitrary input, sorting and deduplicating.
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut v: Vec<u32> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// The full vertex set `0..n` of a graph of order `n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n as u32).collect())
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|v| other.contains(*v))
                .collect(),
        )
    }

    /// Checks that every id is a vertex of a graph of order `n`.
    pub fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.0.iter().find(|&&v| v as usize >= n) {
            Some(&v) => Err(GraphError::VertexOutOfRange { vertex: v, n }),
            None => Ok(()),
        }
    }
}

/// A sorted, duplicate-free list of color ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColorSet(Vec<u32>);

impl FromIterator<u32> for ColorSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut v: Vec<u32> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ColorSet(v)
    }
}

impl ColorSet {
    pub fn empty() -> Self {
        ColorSet(Vec::new())
    }

    pub fn contains(&self, c: u32) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn union(&self, other: &ColorSet) -> ColorSet {
        ColorSet::from_iter(self.iter().chain(other.iter()))
    }

    pub fn intersect(&self, other: &ColorSet) -> ColorSet {
        ColorSet(
            self.0
                .iter()
                .copied()
                .filter(|c| other.contains(*c))
                .collect(),
        )
    }

    pub fn minus(&self, other: &ColorSet) -> ColorSet {
        ColorSet(
            self.0
                .iter()
                .copied()
                .filter(|c| !other.contains(*c))
                .collect(),
        )
    }

    /// Set difference with a single color.
    pub fn without(&self, c: u32) -> ColorSet {
        ColorSet(self.0.iter().copied().filter(|&x| x != c).collect())
    }
}

// ============================================================================
// EdgeColoredGraph
// ============================================================================

/// An immutable simple graph with one color per edge.
///
/// Equality is label-sensitive: two graphs are equal iff they have the same
/// order and the same colored edge set. Canonical-form deduplication (color
/// renaming) lives in the generators, not here.
#[derive(Clone, Debug)]
pub struct EdgeColoredGraph {
    n: usize,
    /// Sorted by `(u, v)` with `u < v` per edge.
    edges: Vec<ColoredEdge>,
    /// Sorted adjacency lists.
    neighbors: Vec<Vec<u32>>,
    /// Dense color lookup, `n * n` entries; `None` means no edge.
    color: Vec<Option<u32>>,
    /// Per-vertex color degree, computed eagerly at construction.
    color_degrees: Vec<usize>,
    /// Minimum over `color_degrees`; 0 when `n == 0`.
    min_color_degree: usize,
}

impl PartialEq for EdgeColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for EdgeColoredGraph {}

/// Builds a graph from `(u, v, color)` triples.
///
/// Edge insertion order is irrelevant: the edge list is normalized and
/// sorted, so permutations of the input yield equal graphs.
pub fn build_graph(
    n: usize,
    colored_edges: &[(u32, u32, u32)],
) -> Result<EdgeColoredGraph, GraphError> {
    let mut edges: Vec<ColoredEdge> = Vec::with_capacity(colored_edges.len());
    for &(u, v, c) in colored_edges {
        if u as usize >= n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n });
        }
        if v as usize >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        edges.push((a, b, c));
    }
    edges.sort_unstable();
    for w in edges.windows(2) {
        if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
            return Err(GraphError::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }
    }

    let mut neighbors = alloc::vec![Vec::new(); n];
    let mut color = alloc::vec![None; n * n];
    for &(u, v, c) in &edges {
        neighbors[u as usize].push(v);
        neighbors[v as usize].push(u);
        color[u as usize * n + v as usize] = Some(c);
        color[v as usize * n + u as usize] = Some(c);
    }
    for list in &mut neighbors {
        list.sort_unstable();
    }

    let color_degrees: Vec<usize> = (0..n)
        .map(|v| {
            let mut cs: Vec<u32> = neighbors[v]
                .iter()
                .map(|&u| color[v * n + u as usize].expect("adjacent"))
                .collect();
            cs.sort_unstable();
            cs.dedup();
            cs.len()
        })
        .collect();
    let min_color_degree = color_degrees.iter().copied().min().unwrap_or(0);

    Ok(EdgeColoredGraph {
        n,
        edges,
        neighbors,
        color,
        color_degrees,
        min_color_degree,
    })
}

impl EdgeColoredGraph {
    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v)`, each with `u < v`.
    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.color_of(u, v).is_some()
    }

    /// Color of edge `uv`, or `None` when the edge is absent.
    pub fn color_of(&self, u: u32, v: u32) -> Option<u32> {
        if u as usize >= self.n || v as usize >= self.n || u == v {
            return None;
        }
        self.color[u as usize * self.n + v as usize]
    }

    pub fn check_vertex(&self, v: u32) -> Result<(), GraphError> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Cached per-vertex color degrees.
    pub fn color_degree_slice(&self) -> &[usize] {
        &self.color_degrees
    }

    /// Cached minimum color degree (0 for the empty graph).
    pub fn min_color_degree_cached(&self) -> usize {
        self.min_color_degree
    }

    /// The set of all colors appearing on edges.
    pub fn color_set(&self) -> ColorSet {
        ColorSet::from_iter(self.edges.iter().map(|&(_, _, c)| c))
    }

    /// Number of distinct colors on edges.
    pub fn distinct_colors(&self) -> usize {
        self.color_set().len()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True when the graph has no triangle at all (colors ignored).
    pub fn is_triangle_free(&self) -> bool {
        for &(u, v, _) in &self.edges {
            let nu = self.neighbors(u);
            for &w in self.neighbors(v) {
                if w != u && nu.binary_search(&w).is_ok() {
                    return false;
                }
            }
        }
        true
    }
}

// ============================================================================
// Subgraphs and complements
// ============================================================================

/// The subgraph induced by `S`, with vertices relabeled `0..|S|-1`
/// preserving the sorted order of `S`. Colors are unchanged.
pub fn induced_subgraph(
    g: &EdgeColoredGraph,
    s: &VertexSet,
) -> Result<EdgeColoredGraph, GraphError> {
    s.check_range(g.n())?;
    let ids = s.as_slice();
    let mut edges = Vec::new();
    for (new_u, &u) in ids.iter().enumerate() {
        for (new_v, &v) in ids.iter().enumerate().skip(new_u + 1) {
            if let Some(c) = g.color_of(u, v) {
                edges.push((new_u as u32, new_v as u32, c));
            }
        }
    }
    build_graph(ids.len(), &edges)
}

/// `V(G) \ T`.
pub fn complement_vertices(g: &EdgeColoredGraph, t: &VertexSet) -> Result<VertexSet, GraphError> {
    t.check_range(g.n())?;
    Ok(VertexSet::from_iter(
        (0..g.n() as u32).filter(|&v| !t.contains(v)),
    ))
}

// ============================================================================
// .ecg text format
// ============================================================================

/// Parses the `.ecg` text format.
///
/// Format (version 1): a header line `ecg 1 <n> <m>`, then exactly `m`
/// edge lines `<u> <v> <c>` of 0-indexed decimal integers. Lines starting
/// with `#` are comments; blank lines are ignored. The parser is tolerant
/// of extra whitespace; [`serialize_ecg`] emits the canonical form.
pub fn parse_ecg(text: &str) -> Result<EdgeColoredGraph, ParseError> {
    let syntax = |line: usize, message: String| ParseError::Syntax { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| {
        syntax(
            1,
            String::from("empty input, expected `ecg 1 <n> <m>` header"),
        )
    })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "ecg" {
        return Err(syntax(
            header_line,
            String::from("expected header `ecg 1 <n> <m>`"),
        ));
    }
    if toks[1] != "1" {
        return Err(syntax(
            header_line,
            format!("unsupported format version `{}`", toks[1]),
        ));
    }
    let n: usize = toks[2]
        .parse()
        .map_err(|_| syntax(header_line, format!("invalid vertex count `{}`", toks[2])))?;
    let m: usize = toks[3]
        .parse()
        .map_err(|_| syntax(header_line, format!("invalid edge count `{}`", toks[3])))?;

    let mut edges: Vec<(u32, u32, u32)> = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(syntax(
                line_no,
                format!("declared m={m}, found extra edge line"),
            ));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(syntax(
                line_no,
                format!("expected `<u> <v> <c>`, found {} fields", toks.len()),
            ));
        }
        let mut nums = [0u32; 3];
        for (slot, tok) in nums.iter_mut().zip(&toks) {
            *slot = tok
                .parse()
                .map_err(|_| syntax(line_no, format!("invalid integer `{tok}`")))?;
        }
        edges.push((nums[0], nums[1], nums[2]));
        last_line = line_no;
    }
    if edges.len() != m {
        return Err(syntax(
            last_line + 1,
            format!("declared m={m}, found {}", edges.len()),
        ));
    }
    Ok(build_graph(n, &edges)?)
}

/// Serializes to the canonical `.ecg` form: single spaces, edges sorted by
/// `(min endpoint, max endpoint)`, trailing newline.
pub fn serialize_ecg(g: &EdgeColoredGraph) -> String {
    let mut out = format!("ecg 1 {} {}\n", g.n(), g.edge_count());
    for &(u, v, c) in g.edges() {
        out.push_str(&format!("{u} {v} {c}\n"));
    }
    out
}

// ============================================================================
// Tests
// ============================================================================
