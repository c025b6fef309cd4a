//! Theorem catalog, hypothesis/conclusion evaluation, and the campaign
//! runner over generated instances.
//!
//! Hypotheses are evaluated with exact integer arithmetic (the strict and
//! non-strict inequalities exactly as each statement prints them), never
//! floating point. Conclusions dispatch to the detectors; `Violated` is
//! only reported from a certified-absence search, and every violation is
//! re-checked from its serialized payload with an unlimited budget before
//! it enters a report.

use crate::detect::{
    find_rainbow_c4, find_rainbow_cycle_at_least, find_rainbow_triangle, longest_rainbow_path,
    rainbow_c4_through, rainbow_triangle_through, CycleSearch, PathSearch, SearchBudget,
};
use crate::generate::{generate, GenSpec};
use crate::graph::{parse_ecg, serialize_ecg, EdgeColoredGraph};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

// ============================================================================
// Catalog
// ============================================================================

/// The verifiable statements, each pairing a hypothesis predicate with a
/// conclusion predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    /// delta_c > n/2 forces a rainbow triangle.
    RtHalf,
    /// delta_c >= n/2 forces a rainbow triangle unless the graph is the
    /// balanced complete bipartite graph, K4, or K4 minus an edge.
    RtExcept,
    /// Complete graph, delta_c >= (n+1)/2: every vertex lies in a rainbow
    /// triangle.
    RtCompleteVertex,
    /// delta_c > (3n-3)/4: every vertex lies in a rainbow triangle.
    RtVertex,
    /// Triangle-free, delta_c > n/3 + 1: a rainbow 4-cycle exists.
    C4Trifree,
    /// delta_c > 3n/4: every vertex lies in a rainbow 4-cycle.
    C4Vertex,
    /// Per-vertex color degree >= d >= 3n/4 + 1 forces a rainbow cycle of
    /// length at least d - 3n/4 + 2.
    LongcycLw,
    /// delta_c > n/2 + 2 forces a rainbow cycle of length at least 4.
    /// Known-gapped original bound; mining target only.
    LongcycCkryOrig,
    /// delta_c > (n+5)/2 forces a rainbow cycle of length at least 4.
    LongcycCkryFixed,
    /// No rainbow 4-cycle and delta_c > (n+3k-3)/2 force a rainbow cycle of
    /// length at least k (k >= 5).
    LongcycTangjaiFixed,
    /// Complete graph, k >= 6, n >= 8k-18, delta_c > (n-1)/2 + k force a
    /// rainbow cycle of length at least k.
    MainComplete,
    /// delta_c >= t >= 7 forces a rainbow path of length at least
    /// ceil(2t/3) + 1.
    PathLb,
    /// delta_c > (n+k)/2 forces a rainbow cycle of length at least k.
    /// Open conjecture; mining target only.
    ConjCkry,
}

pub const ALL_THEOREMS: [TheoremId; 13] = [
    TheoremId::RtHalf,
    TheoremId::RtExcept,
    TheoremId::RtCompleteVertex,
    TheoremId::RtVertex,
    TheoremId::C4Trifree,
    TheoremId::C4Vertex,
    TheoremId::LongcycLw,
    TheoremId::LongcycCkryOrig,
    TheoremId::LongcycCkryFixed,
    TheoremId::LongcycTangjaiFixed,
    TheoremId::MainComplete,
    TheoremId::PathLb,
    TheoremId::ConjCkry,
];

impl TheoremId {
    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::RtHalf => "RT_HALF",
            TheoremId::RtExcept => "RT_EXCEPT",
            TheoremId::RtCompleteVertex => "RT_COMPLETE_VERTEX",
            TheoremId::RtVertex => "RT_VERTEX",
            TheoremId::C4Trifree => "C4_TRIFREE",
            TheoremId::C4Vertex => "C4_VERTEX",
            TheoremId::LongcycLw => "LONGCYC_LW",
            TheoremId::LongcycCkryOrig => "LONGCYC_CKRY_ORIG",
            TheoremId::LongcycCkryFixed => "LONGCYC_CKRY_FIXED",
            TheoremId::LongcycTangjaiFixed => "LONGCYC_TANGJAI_FIXED",
            TheoremId::MainComplete => "MAIN_COMPLETE",
            TheoremId::PathLb => "PATH_LB",
            TheoremId::ConjCkry => "CONJ_CKRY",
        }
    }

    pub fn parse(s: &str) -> Option<TheoremId> {
        ALL_THEOREMS.iter().copied().find(|t| t.name() == s)
    }

    /// Statements whose stated bound is known gapped or open: campaigns may
    /// mine them for counterexamples but must never assert them true.
    pub fn mining_target_only(&self) -> bool {
        matches!(self, TheoremId::LongcycCkryOrig | TheoremId::ConjCkry)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Statement parameters; each theorem reads the ones it needs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Params {
    /// Cycle length target.
    pub k: Option<u32>,
    /// Path color-degree threshold.
    pub t: Option<u32>,
    /// Per-vertex color-degree bound.
    pub d: Option<u32>,
}

impl Params {
    pub fn none() -> Self {
        Params::default()
    }

    pub fn k(k: u32) -> Self {
        Params {
            k: Some(k),
            ..Params::default()
        }
    }

    pub fn t(t: u32) -> Self {
        Params {
            t: Some(t),
            ..Params::default()
        }
    }

    pub fn d(d: u32) -> Self {
        Params {
            d: Some(d),
            ..Params::default()
        }
    }
}

/// Errors from hypothesis/conclusion evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyError {
    MissingParam {
        theorem: &'static str,
        param: &'static str,
    },
    /// The budget exhausted while certifying a side condition (currently
    /// only rainbow-C4-freeness).
    IndeterminateSideCondition,
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::MissingParam { theorem, param } => {
                write!(f, "{theorem} needs parameter `{param}`")
            }
            VerifyError::IndeterminateSideCondition => {
                write!(f, "budget exhausted while certifying a side condition")
            }
        }
    }
}

impl core::error::Error for VerifyError {}

// ============================================================================
// Hypotheses
// ============================================================================

/// True when the graph is K_{n/2,n/2}: balanced complete bipartite.
fn is_balanced_complete_bipartite(g: &EdgeColoredGraph) -> bool {
    let n = g.n();
    if n == 0 || !n.is_multiple_of(2) || g.edge_count() != (n / 2) * (n / 2) {
        return false;
    }
    // 2-color by BFS; K_{m,m} is connected so one sweep suffices.
    let mut side = alloc::vec![None::<bool>; n];
    side[0] = Some(false);
    let mut queue = alloc::vec![0u32];
    while let Some(v) = queue.pop() {
        let sv = side[v as usize].expect("assigned before queueing");
        for &w in g.neighbors(v) {
            match side[w as usize] {
                None => {
                    side[w as usize] = Some(!sv);
                    queue.push(w);
                }
                Some(sw) if sw == sv => return false,
                Some(_) => {}
            }
        }
    }
    if side.iter().any(|s| s.is_none()) {
        return false; // disconnected
    }
    let left = side.iter().filter(|s| **s == Some(false)).count();
    if left != n / 2 {
        return false;
    }
    // Every cross pair present: edge count was checked, bipartite-ness
    // rules out inside edges, so the counts pin it down.
    true
}

fn require(p: Option<u32>, theorem: &'static str, param: &'static str) -> Result<u32, VerifyError> {
    p.ok_or(VerifyError::MissingParam { theorem, param })
}

/// Evaluates a theorem's hypothesis on a concrete instance, exactly as the
/// statement prints it (strict vs non-strict, side conditions included).
#[allow(clippy::int_plus_one)] // comparisons transcribe the stated bounds
pub fn check_hypothesis(
    g: &EdgeColoredGraph,
    theorem: TheoremId,
    params: &Params,
    budget: SearchBudget,
) -> Result<bool, VerifyError> {
    let n = g.n() as i64;
    if n == 0 {
        return Ok(false);
    }
    let delta = g.min_color_degree_cached() as i64;
    Ok(match theorem {
        TheoremId::RtHalf => n >= 3 && 2 * delta > n,
        TheoremId::RtExcept => {
            n >= 3
                && 2 * delta >= n
                && !(g.n() == 4 && g.is_complete())
                && !(g.n() == 4 && g.edge_count() == 5)
                && !is_balanced_complete_bipartite(g)
        }
        TheoremId::RtCompleteVertex => g.is_complete() && n >= 3 && 2 * delta >= n + 1,
        TheoremId::RtVertex => n >= 3 && 4 * delta > 3 * n - 3,
        TheoremId::C4Trifree => g.is_triangle_free() && 3 * delta > n + 3,
        TheoremId::C4Vertex => n >= 3 && 4 * delta > 3 * n,
        TheoremId::LongcycLw => {
            let d = require(params.d, "LONGCYC_LW", "d")? as i64;
            n >= 8 && delta >= d && 4 * d >= 3 * n + 4
        }
        TheoremId::LongcycCkryOrig => 2 * delta > n + 4,
        TheoremId::LongcycCkryFixed => 2 * delta > n + 5,
        TheoremId::LongcycTangjaiFixed => {
            let k = require(params.k, "LONGCYC_TANGJAI_FIXED", "k")? as i64;
            if k < 5 || 2 * delta <= n + 3 * k - 3 {
                false
            } else {
                match find_rainbow_c4(g, budget) {
                    CycleSearch::Found(_) => false,
                    CycleSearch::Absent => true,
                    CycleSearch::Indeterminate => {
                        return Err(VerifyError::IndeterminateSideCondition)
                    }
                }
            }
        }
        TheoremId::MainComplete => {
            let k = require(params.k, "MAIN_COMPLETE", "k")? as i64;
            g.is_complete() && k >= 6 && n >= 8 * k - 18 && 2 * delta > n - 1 + 2 * k
        }
        TheoremId::PathLb => {
            let t = require(params.t, "PATH_LB", "t")? as i64;
            t >= 7 && delta >= t
        }
        TheoremId::ConjCkry => {
            let k = require(params.k, "CONJ_CKRY", "k")? as i64;
            k >= 1 && 2 * delta > n + k
        }
    })
}

// ============================================================================
// Conclusions
// ============================================================================

/// Conclusion check outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Verified,
    /// Certified: the conclusion's structure does not exist.
    Violated,
    /// Budget exhausted before the search tree closed.
    Indeterminate,
}

impl Conclusion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Conclusion::Verified => "verified",
            Conclusion::Violated => "violated",
            Conclusion::Indeterminate => "indeterminate",
        }
    }
}

fn cycle_conclusion(g: &EdgeColoredGraph, k: usize, budget: SearchBudget) -> Conclusion {
    match find_rainbow_cycle_at_least(g, k.max(3), budget).expect("k >= 3") {
        CycleSearch::Found(_) => Conclusion::Verified,
        CycleSearch::Absent => Conclusion::Violated,
        CycleSearch::Indeterminate => Conclusion::Indeterminate,
    }
}

/// The required cycle length of the degree-driven long-cycle statement:
/// the least integer at least `d - 3n/4 + 2`.
pub fn lw_cycle_target(n: i64, d: i64) -> usize {
    let num = 4 * d - 3 * n + 8;
    (num.div_euclid(4) + if num.rem_euclid(4) == 0 { 0 } else { 1 }).max(3) as usize
}

/// The guaranteed rainbow path length for a color-degree threshold `t`:
/// `ceil(2t/3) + 1`.
pub fn path_lb_target(t: i64) -> usize {
    ((2 * t + 2) / 3 + 1) as usize
}

/// Evaluates a theorem's conclusion on a concrete instance.
///
/// Per-vertex and global triangle/4-cycle conclusions are exhaustive, so
/// their negative answers are always certified. Long-cycle and path
/// conclusions are budgeted.
pub fn check_conclusion(
    g: &EdgeColoredGraph,
    theorem: TheoremId,
    params: &Params,
    budget: SearchBudget,
) -> Result<Conclusion, VerifyError> {
    Ok(match theorem {
        TheoremId::RtHalf | TheoremId::RtExcept => {
            if find_rainbow_triangle(g).is_some() {
                Conclusion::Verified
            } else {
                Conclusion::Violated
            }
        }
        TheoremId::RtCompleteVertex | TheoremId::RtVertex => {
            let all = (0..g.n() as u32)
                .all(|v| rainbow_triangle_through(g, v).expect("in range").is_some());
            if all {
                Conclusion::Verified
            } else {
                Conclusion::Violated
            }
        }
        TheoremId::C4Trifree => match find_rainbow_c4(g, budget) {
            CycleSearch::Found(_) => Conclusion::Verified,
            CycleSearch::Absent => Conclusion::Violated,
            CycleSearch::Indeterminate => Conclusion::Indeterminate,
        },
        TheoremId::C4Vertex => {
            let all =
                (0..g.n() as u32).all(|v| rainbow_c4_through(g, v).expect("in range").is_some());
            if all {
                Conclusion::Verified
            } else {
                Conclusion::Violated
            }
        }
        TheoremId::LongcycLw => {
            let d = require(params.d, "LONGCYC_LW", "d")? as i64;
            cycle_conclusion(g, lw_cycle_target(g.n() as i64, d), budget)
        }
        TheoremId::LongcycCkryOrig | TheoremId::LongcycCkryFixed => cycle_conclusion(g, 4, budget),
        TheoremId::LongcycTangjaiFixed => {
            let k = require(params.k, "LONGCYC_TANGJAI_FIXED", "k")?;
            cycle_conclusion(g, k as usize, budget)
        }
        TheoremId::MainComplete => {
            let k = require(params.k, "MAIN_COMPLETE", "k")?;
            cycle_conclusion(g, k as usize, budget)
        }
        TheoremId::PathLb => {
            let t = require(params.t, "PATH_LB", "t")? as i64;
            let target = path_lb_target(t);
            match longest_rainbow_path(g, budget) {
                Err(_) => Conclusion::Violated, // no edges: no path at all
                Ok(PathSearch::Exact(w)) => {
                    if w.length() >= target {
                        Conclusion::Verified
                    } else {
                        Conclusion::Violated
                    }
                }
                Ok(PathSearch::Indeterminate(w)) => {
                    // A long-enough path witnesses the conclusion even when
                    // the search tree did not close.
                    if w.length() >= target {
                        Conclusion::Verified
                    } else {
                        Conclusion::Indeterminate
                    }
                }
            }
        }
        TheoremId::ConjCkry => {
            let k = require(params.k, "CONJ_CKRY", "k")?;
            cycle_conclusion(g, (k as usize).max(3), budget)
        }
    })
}

// ============================================================================
// Campaigns
// ============================================================================

/// A fully-specified campaign: `trials` instances are drawn from `template`
/// with per-trial seeds `base_seed + index` (wrapping).
#[derive(Clone, Debug)]
pub struct CampaignSpec {
    pub theorem: TheoremId,
    pub params: Params,
    pub template: GenSpec,
    pub trials: u64,
    pub base_seed: u64,
    pub budget: SearchBudget,
}

/// One certified counterexample. The payload re-parses and re-fails the
/// conclusion check deterministically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub seed: u64,
    pub ecg: String,
    pub note: String,
}

/// Outcome of one campaign trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrialOutcome {
    /// Hypothesis or a side condition unmet; the instance does not count
    /// toward the conclusion totals.
    Skipped,
    /// A side condition could not be certified within budget.
    SideConditionIndeterminate,
    Verified,
    Indeterminate,
    Violated(Violation),
}

/// Campaign outcome counts plus the violation payloads.
///
/// Invariant: `hypothesis_met = verified + indeterminate + violations.len()`.
#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub params: Params,
    pub generator: GenSpec,
    pub trials: u64,
    pub hypothesis_met: u64,
    pub verified: u64,
    pub indeterminate: u64,
    pub violations: Vec<Violation>,
    pub budget: SearchBudget,
    pub base_seed: u64,
    /// Wall-clock milliseconds, filled in by callers that measure; kept at
    /// zero by the pure runner so reports stay byte-reproducible.
    pub timing_ms: u64,
}

/// Evaluates a single trial of a campaign. Pure: the outcome depends only
/// on `(spec, index)`.
pub fn evaluate_trial(spec: &CampaignSpec, index: u64) -> TrialOutcome {
    let seed = spec.base_seed.wrapping_add(index);
    let instance = match generate(&spec.template.with_seed(seed)) {
        Ok(g) => g,
        Err(_) => return TrialOutcome::Skipped,
    };
    match check_hypothesis(&instance, spec.theorem, &spec.params, spec.budget) {
        Ok(true) => {}
        Ok(false) => return TrialOutcome::Skipped,
        Err(VerifyError::IndeterminateSideCondition) => {
            return TrialOutcome::SideConditionIndeterminate
        }
        Err(_) => return TrialOutcome::Skipped,
    }
    match check_conclusion(&instance, spec.theorem, &spec.params, spec.budget) {
        Err(_) => TrialOutcome::Skipped,
        Ok(Conclusion::Verified) => TrialOutcome::Verified,
        Ok(Conclusion::Indeterminate) => TrialOutcome::Indeterminate,
        Ok(Conclusion::Violated) => {
            let ecg = serialize_ecg(&instance);
            // Fresh full-budget re-check from the serialized payload, so no
            // violation enters a report unless it reproduces.
            let reparsed = parse_ecg(&ecg).expect("own serialization");
            let recheck = check_conclusion(
                &reparsed,
                spec.theorem,
                &spec.params,
                SearchBudget::unlimited(),
            );
            match recheck {
                Ok(Conclusion::Violated) => TrialOutcome::Violated(Violation {
                    seed,
                    ecg,
                    note: alloc::format!(
                        "theorem={} n={} delta_c={} conclusion=violated",
                        spec.theorem.name(),
                        instance.n(),
                        instance.min_color_degree_cached()
                    ),
                }),
                _ => TrialOutcome::Indeterminate,
            }
        }
    }
}

/// Folds per-trial outcomes (in trial order) into a report.
pub fn aggregate(spec: &CampaignSpec, outcomes: Vec<TrialOutcome>) -> TheoremReport {
    let mut report = TheoremReport {
        theorem: spec.theorem,
        params: spec.params,
        generator: spec.template.clone(),
        trials: spec.trials,
        hypothesis_met: 0,
        verified: 0,
        indeterminate: 0,
        violations: Vec::new(),
        budget: spec.budget,
        base_seed: spec.base_seed,
        timing_ms: 0,
    };
    for outcome in outcomes {
        match outcome {
            TrialOutcome::Skipped | TrialOutcome::SideConditionIndeterminate => {}
            TrialOutcome::Verified => {
                report.hypothesis_met += 1;
                report.verified += 1;
            }
            TrialOutcome::Indeterminate => {
                report.hypothesis_met += 1;
                report.indeterminate += 1;
            }
            TrialOutcome::Violated(v) => {
                report.hypothesis_met += 1;
                report.violations.push(v);
            }
        }
    }
    debug_assert_eq!(
        report.hypothesis_met,
        report.verified + report.indeterminate + report.violations.len() as u64
    );
    report
}

/// Runs a campaign sequentially. Deterministic given the spec; a parallel
/// driver can reproduce the same report by evaluating trials independently
/// and aggregating in trial order.
pub fn run_campaign(spec: &CampaignSpec) -> TheoremReport {
    let outcomes = (0..spec.trials).map(|i| evaluate_trial(spec, i)).collect();
    aggregate(spec, outcomes)
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{proper_bipartite_coloring, random_coloring_complete};
    use crate::graph::build_graph;
    use alloc::vec::Vec;

    fn complete_with<F: Fn(u32, u32) -> u32>(n: u32, color: F) -> EdgeColoredGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v, color(u, v)));
            }
        }
        build_graph(n as usize, &edges).unwrap()
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in ALL_THEOREMS {
            assert_eq!(TheoremId::parse(t.name()), Some(t));
        }
        assert_eq!(TheoremId::parse("NOPE"), None);
    }

    #[test]
    fn vertex_triangle_hypothesis_boundary_is_exact() {
        // Fabricated color-degree values via rainbow-ish graphs are
        // awkward; the bound itself is pure arithmetic, so check it through
        // instances with known delta_c.
        let rainbow9 = complete_with(9, |u, v| u * 9 + v); // delta_c = 8 > 24/4
        assert!(check_hypothesis(
            &rainbow9,
            TheoremId::RtVertex,
            &Params::none(),
            SearchBudget::unlimited()
        )
        .unwrap());

        // delta_c = 5, n = 8: 20 <= 21 fails; delta_c = 6: 24 > 21 holds.
        let g5 = crate::generate::targeted_min_color_degree(8, 5, 11).unwrap();
        let g6 = crate::generate::targeted_min_color_degree(8, 6, 11).unwrap();
        let h5 = g5.min_color_degree_cached() == 5
            && !check_hypothesis(
                &g5,
                TheoremId::RtVertex,
                &Params::none(),
                SearchBudget::unlimited(),
            )
            .unwrap();
        let h6 = g6.min_color_degree_cached() >= 6
            && check_hypothesis(
                &g6,
                TheoremId::RtVertex,
                &Params::none(),
                SearchBudget::unlimited(),
            )
            .unwrap();
        // The targeted generator guarantees >= t; equality holds for these
        // seeds and is asserted so the boundary stays pinned.
        assert!(h5, "expected delta_c exactly 5 and hypothesis false");
        assert!(h6);

        // Integer boundary: at n = 9 the threshold is exactly 6, and the
        // inequality is strict, so delta_c = 6 does not qualify.
        let g6 = crate::generate::targeted_min_color_degree(9, 6, 0).unwrap();
        assert_eq!(g6.min_color_degree_cached(), 6);
        assert!(!check_hypothesis(
            &g6,
            TheoremId::RtVertex,
            &Params::none(),
            SearchBudget::unlimited()
        )
        .unwrap());
    }

    #[test]
    fn exception_family_is_excluded_from_rt_except() {
        let g = proper_bipartite_coloring(3).unwrap();
        // delta_c = 3 = n/2 meets the non-strict bound, but the balanced
        // complete bipartite shape is excluded.
        assert!(!check_hypothesis(
            &g,
            TheoremId::RtExcept,
            &Params::none(),
            SearchBudget::unlimited()
        )
        .unwrap());
        // And its conclusion is indeed violated (no triangle at all).
        assert_eq!(
            check_conclusion(
                &g,
                TheoremId::RtExcept,
                &Params::none(),
                SearchBudget::unlimited()
            )
            .unwrap(),
            Conclusion::Violated
        );
    }

    #[test]
    fn main_complete_hypothesis_arithmetic() {
        let g = crate::generate::targeted_min_color_degree(30, 21, 3).unwrap();
        assert!(check_hypothesis(
            &g,
            TheoremId::MainComplete,
            &Params::k(6),
            SearchBudget::unlimited()
        )
        .unwrap());
        // n = 30 < 8*7 - 18 = 38 fails for k = 7.
        assert!(!check_hypothesis(
            &g,
            TheoremId::MainComplete,
            &Params::k(7),
            SearchBudget::unlimited()
        )
        .unwrap());
        assert_eq!(
            check_hypothesis(
                &g,
                TheoremId::MainComplete,
                &Params::none(),
                SearchBudget::unlimited()
            ),
            Err(VerifyError::MissingParam {
                theorem: "MAIN_COMPLETE",
                param: "k"
            })
        );
    }

    #[test]
    fn path_lb_threshold_gates_small_t() {
        let mono = complete_with(5, |_, _| 0);
        assert!(!check_hypothesis(
            &mono,
            TheoremId::PathLb,
            &Params::t(1),
            SearchBudget::unlimited()
        )
        .unwrap());
        assert_eq!(path_lb_target(7), 6);
        assert_eq!(path_lb_target(8), 7);
        assert_eq!(path_lb_target(9), 7);
    }

    #[test]
    fn lw_cycle_target_rounds_up() {
        // d = 3n/4 + 1 gives a bound of 3 exactly.
        assert_eq!(lw_cycle_target(8, 7), 3);
        assert_eq!(lw_cycle_target(8, 8), 4);
        assert_eq!(lw_cycle_target(12, 10), 3);
    }

    #[test]
    fn balanced_bipartite_recognizer() {
        assert!(is_balanced_complete_bipartite(
            &proper_bipartite_coloring(3).unwrap()
        ));
        assert!(!is_balanced_complete_bipartite(&complete_with(4, |_, _| 0)));
        // Same edge count as K_{2,2} but wrong shape: triangle plus a
        // pendant edge.
        let g = build_graph(4, &[(0, 1, 0), (1, 2, 1), (0, 2, 2), (2, 3, 3)]).unwrap();
        assert!(!is_balanced_complete_bipartite(&g));
    }

    #[test]
    fn conclusions_on_known_instances() {
        let rainbow5 = complete_with(5, |u, v| u * 5 + v);
        assert_eq!(
            check_conclusion(
                &rainbow5,
                TheoremId::RtHalf,
                &Params::none(),
                SearchBudget::unlimited()
            )
            .unwrap(),
            Conclusion::Verified
        );
        let mono = complete_with(5, |_, _| 0);
        assert_eq!(
            check_conclusion(
                &mono,
                TheoremId::RtHalf,
                &Params::none(),
                SearchBudget::unlimited()
            )
            .unwrap(),
            Conclusion::Violated
        );
        assert_eq!(
            check_conclusion(
                &rainbow5,
                TheoremId::C4Vertex,
                &Params::none(),
                SearchBudget::unlimited()
            )
            .unwrap(),
            Conclusion::Verified
        );
    }

    #[test]
    fn tangjai_side_condition_uses_certified_search() {
        // A rainbow C4 in the instance makes the hypothesis false.
        let rainbow8 = complete_with(8, |u, v| u * 8 + v);
        assert!(!check_hypothesis(
            &rainbow8,
            TheoremId::LongcycTangjaiFixed,
            &Params::k(5),
            SearchBudget::unlimited()
        )
        .unwrap());
    }

    #[test]
    fn campaign_counts_partition() {
        let spec = CampaignSpec {
            theorem: TheoremId::RtVertex,
            params: Params::none(),
            template: GenSpec::targeted_delta(10, 8, 0),
            trials: 25,
            base_seed: 7,
            budget: SearchBudget::nodes(1_000_000),
        };
        let report = run_campaign(&spec);
        assert_eq!(report.trials, 25);
        assert_eq!(
            report.hypothesis_met,
            report.verified + report.indeterminate + report.violations.len() as u64
        );
        // Targeted instances meet the hypothesis by construction.
        assert_eq!(report.hypothesis_met, 25);
        assert_eq!(report.violations.len(), 0);
    }

    #[test]
    fn campaign_is_deterministic() {
        let spec = CampaignSpec {
            theorem: TheoremId::RtHalf,
            params: Params::none(),
            template: GenSpec::complete_random(8, 12, 0),
            trials: 40,
            base_seed: 99,
            budget: SearchBudget::nodes(100_000),
        };
        let a = run_campaign(&spec);
        let b = run_campaign(&spec);
        assert_eq!(a, b);
    }

    #[test]
    fn violations_reproduce_from_their_payload() {
        // Low-palette random complete graphs sometimes meet the weak CKRY
        // bound while lacking rainbow C4s entirely; mine a few trials and
        // re-check every reported violation from its payload.
        let spec = CampaignSpec {
            theorem: TheoremId::LongcycCkryOrig,
            params: Params::none(),
            template: GenSpec::complete_random(9, 9, 0),
            trials: 200,
            base_seed: 1,
            budget: SearchBudget::nodes(1_000_000),
        };
        let report = run_campaign(&spec);
        for v in &report.violations {
            let g = crate::graph::parse_ecg(&v.ecg).unwrap();
            assert_eq!(
                check_conclusion(&g, spec.theorem, &spec.params, SearchBudget::unlimited())
                    .unwrap(),
                Conclusion::Violated
            );
        }
        let _ = random_coloring_complete(5, 3, 0).unwrap();
    }
}
