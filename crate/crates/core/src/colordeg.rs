//! Color-degree machinery: `d^c(v)`, the minimum color degree, representative
//! neighborhoods, and color sets between vertex sets.
//!
//! The per-vertex table is computed once at graph construction and cached,
//! since every detector and every hypothesis check reads it.

use crate::graph::{ColorSet, EdgeColoredGraph, GraphError, VertexSet};
use alloc::vec::Vec;
use core::fmt;

/// Errors for color-degree queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColorDegreeError {
    VertexOutOfRange {
        vertex: u32,
        n: usize,
    },
    /// The minimum over an empty vertex set is undefined.
    EmptyGraph,
    /// `colors_between` requires disjoint vertex sets.
    OverlappingSets {
        vertex: u32,
    },
}

impl fmt::Display for ColorDegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorDegreeError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range (n = {n})")
            }
            ColorDegreeError::EmptyGraph => write!(f, "graph has no vertices"),
            ColorDegreeError::OverlappingSets { vertex } => {
                write!(f, "vertex sets overlap at {vertex}")
            }
        }
    }
}

impl core::error::Error for ColorDegreeError {}

impl From<GraphError> for ColorDegreeError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::VertexOutOfRange { vertex, n } => {
                ColorDegreeError::VertexOutOfRange { vertex, n }
            }
            // Only range errors can arise from set validation.
            _ => unreachable!("unexpected graph error"),
        }
    }
}

/// Per-vertex color degrees plus the minimum, copied from the graph's cache.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorDegreeTable {
    pub per_vertex: Vec<usize>,
    pub min_color_degree: usize,
}

/// Builds the table for a graph (reads the construction-time cache).
pub fn color_degree_table(g: &EdgeColoredGraph) -> ColorDegreeTable {
    ColorDegreeTable {
        per_vertex: g.color_degree_slice().to_vec(),
        min_color_degree: g.min_color_degree_cached(),
    }
}

/// `d^c(v)`: the number of distinct colors on edges incident to `v`.
pub fn color_degree(g: &EdgeColoredGraph, v: u32) -> Result<usize, ColorDegreeError> {
    g.check_vertex(v)?;
    Ok(g.color_degree_slice()[v as usize])
}

/// `min over v of d^c(v)`; 0 when some vertex is isolated.
pub fn min_color_degree(g: &EdgeColoredGraph) -> Result<usize, ColorDegreeError> {
    if g.n() == 0 {
        return Err(ColorDegreeError::EmptyGraph);
    }
    Ok(g.min_color_degree_cached())
}

/// A representative neighborhood `N^c(v)`: a subset of `N(v)` of size
/// `d^c(v)` in which every incident color appears exactly once.
///
/// Tie-breaking is deterministic: for each color, the lowest-indexed
/// neighbor carrying it is chosen.
pub fn representative_neighborhood(
    g: &EdgeColoredGraph,
    v: u32,
) -> Result<VertexSet, ColorDegreeError> {
    g.check_vertex(v)?;
    let mut seen = ColorSet::empty();
    let mut reps = Vec::new();
    for &u in g.neighbors(v) {
        let c = g.color_of(v, u).expect("adjacent");
        if !seen.contains(c) {
            seen = seen.union(&ColorSet::from_iter([c]));
            reps.push(u);
        }
    }
    Ok(VertexSet::from_iter(reps))
}

/// `N_{C'}(v, S)`: representatives of `v` whose edge color lies in `colors`,
/// restricted to `S`.
pub fn restricted_representatives(
    g: &EdgeColoredGraph,
    v: u32,
    colors: &ColorSet,
    s: &VertexSet,
) -> Result<VertexSet, ColorDegreeError> {
    s.check_range(g.n())?;
    let reps = representative_neighborhood(g, v)?;
    Ok(VertexSet::from_iter(reps.iter().filter(|&u| {
        s.contains(u) && colors.contains(g.color_of(v, u).expect("adjacent"))
    })))
}

/// `C(V1, V2)`: colors on edges with one end in each set.
pub fn colors_between(
    g: &EdgeColoredGraph,
    v1: &VertexSet,
    v2: &VertexSet,
) -> Result<ColorSet, ColorDegreeError> {
    v1.check_range(g.n())?;
    v2.check_range(g.n())?;
    if let Some(v) = v1.iter().find(|&v| v2.contains(v)) {
        return Err(ColorDegreeError::OverlappingSets { vertex: v });
    }
    let mut colors = Vec::new();
    for x in v1.iter() {
        for &y in g.neighbors(x) {
            if v2.contains(y) {
                colors.push(g.color_of(x, y).expect("adjacent"));
            }
        }
    }
    Ok(ColorSet::from_iter(colors))
}
