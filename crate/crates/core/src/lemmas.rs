//! Proof machinery as executable predicates and witness extractors: the
//! dependence property of a vertex set, the orientation it induces, and
//! common fresh neighborhoods of a template edge.

use crate::colordeg::{min_color_degree, representative_neighborhood};
use crate::detect::{RainbowWitness, WitnessKind};
use crate::graph::{ColorSet, EdgeColoredGraph, GraphError, VertexSet};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// Errors for the lemma operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaError {
    VertexOutOfRange {
        vertex: u32,
        n: usize,
    },
    /// The pivot must lie outside the base set.
    PivotInA {
        vertex: u32,
    },
    /// Every base vertex must be adjacent to the pivot, or the defining
    /// condition is ill-posed.
    PivotNotAdjacent {
        vertex: u32,
    },
    /// The base set fails the dependence property at this edge.
    NotDependent {
        u: u32,
        v: u32,
    },
    /// Minimum out-degree over an empty base set is undefined.
    EmptySet,
    /// The template is not a K2 or a rainbow triangle, or `uv` is not one
    /// of its edges.
    BadTemplate,
}

impl fmt::Display for LemmaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range (n = {n})")
            }
            LemmaError::PivotInA { vertex } => write!(f, "pivot {vertex} lies in the base set"),
            LemmaError::PivotNotAdjacent { vertex } => {
                write!(f, "base vertex {vertex} not adjacent to the pivot")
            }
            LemmaError::NotDependent { u, v } => {
                write!(f, "edge {{{u},{v}}} violates the dependence property")
            }
            LemmaError::EmptySet => write!(f, "base set is empty"),
            LemmaError::BadTemplate => write!(f, "template must be a K2 or rainbow triangle"),
        }
    }
}

impl core::error::Error for LemmaError {}

impl From<GraphError> for LemmaError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::VertexOutOfRange { vertex, n } => {
                LemmaError::VertexOutOfRange { vertex, n }
            }
            _ => unreachable!("unexpected graph error"),
        }
    }
}

// ============================================================================
// Dependence property and orientation
// ============================================================================

fn check_pivot_setup(g: &EdgeColoredGraph, a: &VertexSet, v: u32) -> Result<(), LemmaError> {
    a.check_range(g.n())?;
    g.check_vertex(v)?;
    if a.contains(v) {
        return Err(LemmaError::PivotInA { vertex: v });
    }
    for x in a.iter() {
        if !g.has_edge(v, x) {
            return Err(LemmaError::PivotNotAdjacent { vertex: x });
        }
    }
    Ok(())
}

/// First edge inside `a` whose color is outside `{c(vx), c(vy)}`, if any.
fn first_dependence_violation(g: &EdgeColoredGraph, a: &VertexSet, v: u32) -> Option<(u32, u32)> {
    let ids = a.as_slice();
    for (i, &x) in ids.iter().enumerate() {
        for &y in &ids[i + 1..] {
            if let Some(cxy) = g.color_of(x, y) {
                let cvx = g.color_of(v, x).expect("pivot adjacent");
                let cvy = g.color_of(v, y).expect("pivot adjacent");
                if cxy != cvx && cxy != cvy {
                    return Some((x, y));
                }
            }
        }
    }
    None
}

/// True iff every edge `xy` inside `a` satisfies `c(xy) ∈ {c(vx), c(vy)}`.
///
/// A base set that is independent in the graph satisfies this vacuously.
pub fn has_dependence_property(
    g: &EdgeColoredGraph,
    a: &VertexSet,
    v: u32,
) -> Result<bool, LemmaError> {
    check_pivot_setup(g, a, v)?;
    Ok(first_dependence_violation(g, a, v).is_none())
}

/// The directed graph on a dependent base set: each inside edge `xy` with
/// `x < y` points `y -> x` when `c(xy) = c(vx)`, and `x -> y` otherwise.
///
/// With the dependence property the "otherwise" branch means
/// `c(xy) = c(vy)`, so out-arcs from a vertex carry colors different from
/// its pivot edge; the lower-endpoint convention resolves the case where
/// both pivot edges share the inside edge's color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependenceOrientation {
    pub base: VertexSet,
    pub pivot: u32,
    /// Arcs `(from, to)`, sorted.
    pub arcs: Vec<(u32, u32)>,
    /// Out-degree per base vertex.
    pub outdeg: BTreeMap<u32, usize>,
}

/// Orients the edges inside a dependent set by the color rule above.
pub fn orient_dependence_set(
    g: &EdgeColoredGraph,
    a: &VertexSet,
    v: u32,
) -> Result<DependenceOrientation, LemmaError> {
    check_pivot_setup(g, a, v)?;
    if let Some((x, y)) = first_dependence_violation(g, a, v) {
        return Err(LemmaError::NotDependent { u: x, v: y });
    }
    let ids = a.as_slice();
    let mut arcs = Vec::new();
    let mut outdeg: BTreeMap<u32, usize> = ids.iter().map(|&x| (x, 0)).collect();
    for (i, &x) in ids.iter().enumerate() {
        for &y in &ids[i + 1..] {
            if let Some(cxy) = g.color_of(x, y) {
                let cvx = g.color_of(v, x).expect("pivot adjacent");
                let arc = if cxy == cvx { (y, x) } else { (x, y) };
                *outdeg.get_mut(&arc.0).expect("base vertex") += 1;
                arcs.push(arc);
            }
        }
    }
    arcs.sort_unstable();
    let orientation = DependenceOrientation {
        base: a.clone(),
        pivot: v,
        arcs,
        outdeg,
    };
    debug_assert_eq!(
        orientation.outdeg.values().sum::<usize>(),
        orientation.arcs.len()
    );
    debug_assert!(
        a.is_empty() || orientation.outdeg.values().any(|&deg| 2 * deg < a.len()),
        "pigeonhole: some vertex has out-degree at most (|A|-1)/2"
    );
    Ok(orientation)
}

/// A vertex of minimum out-degree (lowest index on ties) and its out-degree.
///
/// Any orientation of a simple graph on `|A|` vertices has a vertex of
/// out-degree at most `(|A|-1)/2`, so the returned count always satisfies
/// that bound.
pub fn min_outdegree_witness(d: &DependenceOrientation) -> Result<(u32, usize), LemmaError> {
    let mut best: Option<(u32, usize)> = None;
    for (&x, &deg) in &d.outdeg {
        match best {
            Some((_, b)) if deg >= b => {}
            _ => best = Some((x, deg)),
        }
    }
    let (x, deg) = best.ok_or(LemmaError::EmptySet)?;
    debug_assert!(2 * deg <= d.base.len().saturating_sub(1));
    Ok((x, deg))
}

// ============================================================================
// Common fresh neighborhood
// ============================================================================

/// The common fresh neighborhood of a template edge, together with its
/// guaranteed size bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreshNeighborhood {
    /// Vertices adjacent to both template endpoints through representative
    /// edges whose colors avoid the template, outside the template itself.
    pub set: VertexSet,
    /// `2*delta_c - n` for a K2 template, `2*delta_c - n - 3` for a rainbow
    /// triangle. May be negative; `set` is guaranteed at least this large.
    pub bound: i64,
    /// Whether `2*delta_c > n` holds. The nonemptiness conclusion is only
    /// promised under this extra condition, which is recorded separately so
    /// both readings of the hypothesis can be tested.
    pub strong_hypothesis: bool,
}

/// Computes `S = N_{C(G)\C(T)}(u) ∩ N_{C(G)\C(T)}(v)` restricted to
/// `V(G) \ V(T)`, using the deterministic representative rule.
///
/// `template` must be a K2 (a 2-vertex path witness) or a rainbow triangle
/// that validates against `g`, and `uv` must be one of its edges.
pub fn common_fresh_neighborhood(
    g: &EdgeColoredGraph,
    template: &RainbowWitness,
    u: u32,
    v: u32,
) -> Result<FreshNeighborhood, LemmaError> {
    let is_k2 = template.kind == WitnessKind::Path && template.vertices.len() == 2;
    let is_triangle = template.kind == WitnessKind::Triangle;
    if !(is_k2 || is_triangle) || template.validate(g).is_err() {
        return Err(LemmaError::BadTemplate);
    }
    let tv = &template.vertices;
    let edge_of_template = if is_k2 {
        (tv[0] == u && tv[1] == v) || (tv[0] == v && tv[1] == u)
    } else {
        u != v && tv.contains(&u) && tv.contains(&v)
    };
    if !edge_of_template {
        return Err(LemmaError::BadTemplate);
    }

    let template_colors = ColorSet::from_iter(template.colors.iter().copied());
    let fresh = g.color_set().minus(&template_colors);
    let template_vertices = VertexSet::from_iter(tv.iter().copied());

    let restricted = |x: u32| -> VertexSet {
        let reps = representative_neighborhood(g, x).expect("vertex of template");
        VertexSet::from_iter(reps.iter().filter(|&w| {
            !template_vertices.contains(w) && fresh.contains(g.color_of(x, w).expect("adjacent"))
        }))
    };
    let set = restricted(u).intersect(&restricted(v));

    let delta = min_color_degree(g).map_err(|_| LemmaError::BadTemplate)? as i64;
    let n = g.n() as i64;
    let bound = if is_k2 {
        2 * delta - n
    } else {
        2 * delta - n - 3
    };
    Ok(FreshNeighborhood {
        set,
        bound,
        strong_hypothesis: 2 * delta > n,
    })
}

// ============================================================================
// Tests
// ============================================================================
