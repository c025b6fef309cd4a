//! Instance factories: seeded random colorings, proper bipartite colorings,
//! matching-based K4 colorings, targeted minimum-color-degree colorings of
//! complete graphs, and exhaustive exception mining for tiny graphs.
//!
//! All randomness comes from SplitMix64, a small fixed generator, combined
//! with multiply-shift range reduction. Both are pinned here so that a
//! campaign is replayable from `(GenSpec, seed)` alone, on any platform,
//! forever. Do not swap the generator.

use crate::detect::find_rainbow_triangle;
use crate::graph::{build_graph, EdgeColoredGraph};
use alloc::vec::Vec;
use core::fmt;

// ============================================================================
// Seeded PRNG
// ============================================================================

/// SplitMix64: `z = (x += 0x9E3779B97F4A7C15); mix(z)`.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..bound` via the multiply-shift reduction
    /// `(x * bound) >> 64`. Deterministic and branch-free; the modulo bias
    /// is negligible for the desk-scale bounds used here.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        (((self.next_u64() as u128) * (bound as u128)) >> 64) as u64
    }
}

// ============================================================================
// GenSpec
// ============================================================================

/// Instance family selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenFamily {
    /// K_n with each edge colored independently uniformly from the palette.
    CompleteRandom,
    /// G(n, p) with independent uniform edge colors.
    GnpRandom,
    /// K_{m,m} with the Latin-square coloring `c(i, m+j) = (i+j) mod m`.
    ProperBipartite,
    /// K4 colored by its three perfect matchings.
    MatchingK4,
    /// K_n colored so that the minimum color degree is at least a target.
    TargetedDelta,
}

impl GenFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            GenFamily::CompleteRandom => "complete_random",
            GenFamily::GnpRandom => "gnp_random",
            GenFamily::ProperBipartite => "proper_bipartite",
            GenFamily::MatchingK4 => "matching_k4",
            GenFamily::TargetedDelta => "targeted_delta",
        }
    }

    pub fn parse(s: &str) -> Option<GenFamily> {
        Some(match s {
            "complete_random" => GenFamily::CompleteRandom,
            "gnp_random" => GenFamily::GnpRandom,
            "proper_bipartite" => GenFamily::ProperBipartite,
            "matching_k4" => GenFamily::MatchingK4,
            "targeted_delta" => GenFamily::TargetedDelta,
            _ => return None,
        })
    }
}

/// A fully-specified generation request. Identical specs (including the
/// seed) always produce identical graphs, bit for bit.
#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub family: GenFamily,
    /// Number of vertices (must be even for `ProperBipartite`, 4 for
    /// `MatchingK4`).
    pub n: u32,
    /// Edge probability, `GnpRandom` only.
    pub p: f64,
    /// Palette size for the random families.
    pub palette: u32,
    /// Minimum color degree target, `TargetedDelta` only.
    pub target_delta: u32,
    pub seed: u64,
}

impl GenSpec {
    pub fn complete_random(n: u32, palette: u32, seed: u64) -> Self {
        GenSpec {
            family: GenFamily::CompleteRandom,
            n,
            p: 0.0,
            palette,
            target_delta: 0,
            seed,
        }
    }

    pub fn gnp_random(n: u32, p: f64, palette: u32, seed: u64) -> Self {
        GenSpec {
            family: GenFamily::GnpRandom,
            n,
            p,
            palette,
            target_delta: 0,
            seed,
        }
    }

    pub fn proper_bipartite(n: u32) -> Self {
        GenSpec {
            family: GenFamily::ProperBipartite,
            n,
            p: 0.0,
            palette: 0,
            target_delta: 0,
            seed: 0,
        }
    }

    pub fn matching_k4() -> Self {
        GenSpec {
            family: GenFamily::MatchingK4,
            n: 4,
            p: 0.0,
            palette: 0,
            target_delta: 0,
            seed: 0,
        }
    }

    pub fn targeted_delta(n: u32, target_delta: u32, seed: u64) -> Self {
        GenSpec {
            family: GenFamily::TargetedDelta,
            n,
            p: 0.0,
            palette: 0,
            target_delta,
            seed,
        }
    }

    /// The same spec with a different seed.
    pub fn with_seed(&self, seed: u64) -> Self {
        let mut s = self.clone();
        s.seed = seed;
        s
    }
}

/// Errors for the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenError {
    BadParams {
        reason: &'static str,
    },
    /// The targeted repair loop exceeded its iteration cap. This signals a
    /// bug in the repair argument, not bad input.
    RepairFailed,
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::BadParams { reason } => write!(f, "bad generator parameters: {reason}"),
            GenError::RepairFailed => write!(f, "targeted repair loop failed to converge"),
        }
    }
}

impl core::error::Error for GenError {}

/// Dispatches on the family. The per-trial seed lives in the spec.
pub fn generate(spec: &GenSpec) -> Result<EdgeColoredGraph, GenError> {
    match spec.family {
        GenFamily::CompleteRandom => random_coloring_complete(spec.n, spec.palette, spec.seed),
        GenFamily::GnpRandom => gnp_random_coloring(spec.n, spec.p, spec.palette, spec.seed),
        GenFamily::ProperBipartite => {
            if spec.n == 0 || !spec.n.is_multiple_of(2) {
                return Err(GenError::BadParams {
                    reason: "bipartite order must be even",
                });
            }
            proper_bipartite_coloring(spec.n / 2)
        }
        GenFamily::MatchingK4 => {
            if spec.n != 4 {
                return Err(GenError::BadParams {
                    reason: "matching family is K4 only",
                });
            }
            Ok(matching_k4_coloring())
        }
        GenFamily::TargetedDelta => targeted_min_color_degree(spec.n, spec.target_delta, spec.seed),
    }
}

// ============================================================================
// Random families
// ============================================================================

/// K_n with each edge colored independently uniformly from `0..palette`.
/// Edges consume randomness in lexicographic `(u, v)` order.
pub fn random_coloring_complete(
    n: u32,
    palette: u32,
    seed: u64,
) -> Result<EdgeColoredGraph, GenError> {
    if n < 2 {
        return Err(GenError::BadParams {
            reason: "complete family needs n >= 2",
        });
    }
    if palette == 0 {
        return Err(GenError::BadParams {
            reason: "palette must be positive",
        });
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::with_capacity((n as usize) * (n as usize - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v, rng.below(palette as u64) as u32));
        }
    }
    Ok(build_graph(n as usize, &edges).expect("valid complete graph"))
}

/// G(n, p) with uniform edge colors. Each pair consumes one presence draw;
/// present pairs consume one further color draw.
pub fn gnp_random_coloring(
    n: u32,
    p: f64,
    palette: u32,
    seed: u64,
) -> Result<EdgeColoredGraph, GenError> {
    if n == 0 {
        return Err(GenError::BadParams {
            reason: "gnp family needs n >= 1",
        });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadParams {
            reason: "edge probability must be in [0, 1]",
        });
    }
    if palette == 0 {
        return Err(GenError::BadParams {
            reason: "palette must be positive",
        });
    }
    // Integer threshold so presence never depends on float comparison modes.
    let threshold = (p * 18_446_744_073_709_551_616.0) as u128; // p * 2^64
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if (rng.next_u64() as u128) < threshold {
                edges.push((u, v, rng.below(palette as u64) as u32));
            }
        }
    }
    Ok(build_graph(n as usize, &edges).expect("valid gnp graph"))
}

/// K_{m,m} with the Latin-square coloring `c(i, m+j) = (i+j) mod m`: every
/// vertex has color degree exactly `m` and the graph is triangle-free.
pub fn proper_bipartite_coloring(m: u32) -> Result<EdgeColoredGraph, GenError> {
    if m == 0 {
        return Err(GenError::BadParams {
            reason: "bipartite half-order must be positive",
        });
    }
    let mut edges = Vec::with_capacity((m * m) as usize);
    for i in 0..m {
        for j in 0..m {
            edges.push((i, m + j, (i + j) % m));
        }
    }
    Ok(build_graph(2 * m as usize, &edges).expect("valid bipartite graph"))
}

/// K4 colored by its three perfect matchings, one color per matching.
/// Every triangle picks one edge from each matching, so all four triangles
/// are rainbow.
pub fn matching_k4_coloring() -> EdgeColoredGraph {
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
    .expect("valid K4")
}

// ============================================================================
// Targeted minimum color degree
// ============================================================================

/// K_n colored so that the minimum color degree is at least `t`.
///
/// Each vertex `v` owns the private palette `v*t .. v*t + t`. Every edge
/// `uv` first gets a seeded random pick from `private(u) ∪ private(v)`;
/// a repair pass then recolors edges at deficient vertices with unused
/// private colors. Recoloring edge `uv` whose color repeats at `v` with a
/// fresh private color of `v` raises `d^c(v)` and never lowers `d^c(u)`
/// (private colors of `v` appear only on edges at `v`), so the total color
/// degree strictly increases and the loop terminates.
pub fn targeted_min_color_degree(n: u32, t: u32, seed: u64) -> Result<EdgeColoredGraph, GenError> {
    if n < 2 {
        return Err(GenError::BadParams {
            reason: "targeted family needs n >= 2",
        });
    }
    if t == 0 || t > n - 1 {
        return Err(GenError::BadParams {
            reason: "need 1 <= target <= n - 1",
        });
    }
    let private = |v: u32, i: u32| v * t + i;
    let mut rng = SplitMix64::new(seed);
    let mut color = alloc::vec![alloc::vec![0u32; n as usize]; n as usize];
    for u in 0..n {
        for v in (u + 1)..n {
            let pick = rng.below(2 * t as u64) as u32;
            let c = if pick < t {
                private(u, pick)
            } else {
                private(v, pick - t)
            };
            color[u as usize][v as usize] = c;
            color[v as usize][u as usize] = c;
        }
    }

    let distinct_at = |color: &Vec<Vec<u32>>, v: u32| -> Vec<u32> {
        let mut cs: Vec<u32> = (0..n)
            .filter(|&u| u != v)
            .map(|u| color[v as usize][u as usize])
            .collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    };

    let cap = 10 * (n as u64) * (t as u64);
    let mut iterations = 0u64;
    loop {
        let deficient = (0..n).find(|&v| (distinct_at(&color, v).len() as u32) < t);
        let Some(v) = deficient else { break };
        iterations += 1;
        if iterations > cap {
            return Err(GenError::RepairFailed);
        }
        // Lowest neighbor whose edge color repeats at v; one exists by
        // pigeonhole since d^c(v) < t <= deg(v).
        let mut counts: Vec<(u32, u32)> = Vec::new();
        for u in 0..n {
            if u == v {
                continue;
            }
            let c = color[v as usize][u as usize];
            match counts.iter_mut().find(|e| e.0 == c) {
                Some(e) => e.1 += 1,
                None => counts.push((c, 1)),
            }
        }
        let u = (0..n)
            .filter(|&u| u != v)
            .find(|&u| {
                let c = color[v as usize][u as usize];
                counts.iter().any(|&(cc, k)| cc == c && k >= 2)
            })
            .ok_or(GenError::RepairFailed)?;
        let used = distinct_at(&color, v);
        let fresh = (0..t)
            .map(|i| private(v, i))
            .find(|c| used.binary_search(c).is_err())
            .ok_or(GenError::RepairFailed)?;
        color[v as usize][u as usize] = fresh;
        color[u as usize][v as usize] = fresh;
    }

    let mut edges = Vec::with_capacity((n as usize) * (n as usize - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v, color[u as usize][v as usize]));
        }
    }
    let g = build_graph(n as usize, &edges).expect("valid complete graph");
    debug_assert!(g.min_color_degree_cached() >= t as usize);
    Ok(g)
}

// ============================================================================
// Canonical color form and exception mining
// ============================================================================

/// Relabels colors by first occurrence along the sorted edge list, so two
/// colorings that differ only by renaming colors collapse to one graph.
pub fn canonical_colors(g: &EdgeColoredGraph) -> EdgeColoredGraph {
    let mut mapping: Vec<(u32, u32)> = Vec::new();
    let mut edges = Vec::with_capacity(g.edge_count());
    for &(u, v, c) in g.edges() {
        let id = match mapping.iter().find(|e| e.0 == c) {
            Some(e) => e.1,
            None => {
                let id = mapping.len() as u32;
                mapping.push((c, id));
                id
            }
        };
        edges.push((u, v, id));
    }
    build_graph(g.n(), &edges).expect("relabeling preserves validity")
}

/// Enumerates every coloring of `edges` up to color renaming (restricted
/// growth strings) with at most `palette_max` colors, invoking `f` on each.
pub fn for_each_canonical_coloring<F: FnMut(&EdgeColoredGraph)>(
    n: usize,
    edges: &[(u32, u32)],
    palette_max: u32,
    f: &mut F,
) {
    let mut colors = alloc::vec![0u32; edges.len()];
    fn rec<F: FnMut(&EdgeColoredGraph)>(
        n: usize,
        edges: &[(u32, u32)],
        palette_max: u32,
        colors: &mut Vec<u32>,
        i: usize,
        max_used: u32,
        f: &mut F,
    ) {
        if i == edges.len() {
            let colored: Vec<(u32, u32, u32)> = edges
                .iter()
                .zip(colors.iter())
                .map(|(&(u, v), &c)| (u, v, c))
                .collect();
            f(&build_graph(n, &colored).expect("valid enumeration"));
            return;
        }
        // Restricted growth: the first edge is color 0, later edges may
        // reuse a seen color or open the next one.
        let ceiling = if i == 0 {
            0
        } else {
            (max_used + 1).min(palette_max - 1)
        };
        for c in 0..=ceiling {
            colors[i] = c;
            rec(n, edges, palette_max, colors, i + 1, max_used.max(c), f);
        }
    }
    if edges.is_empty() {
        f(&build_graph(n, &[]).expect("empty graph"));
        return;
    }
    rec(n, edges, palette_max, &mut colors, 0, 0, f);
}

/// Exhaustively scans all colorings of K4 and K4 minus an edge (palette up
/// to 6, canonical up to color renaming) and returns every coloring with
/// minimum color degree at least 2 and no rainbow triangle.
///
/// These are exactly the small exceptional families where the half-order
/// color-degree bound is tight, so the list is never empty.
pub fn mine_k4_exceptions() -> Vec<EdgeColoredGraph> {
    let k4: Vec<(u32, u32)> = alloc::vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    // K4 minus the lexicographically-last edge.
    let k4_minus_e: Vec<(u32, u32)> = alloc::vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
    let mut out = Vec::new();
    for edges in [&k4, &k4_minus_e] {
        for_each_canonical_coloring(4, edges, 6, &mut |g| {
            if g.min_color_degree_cached() >= 2 && find_rainbow_triangle(g).is_none() {
                out.push(g.clone());
            }
        });
    }
    out
}

// ============================================================================
// Tests
// ============================================================================
