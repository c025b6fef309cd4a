//! Counterexample and tightness mining.
//!
//! Exhaustive mode walks every labeled graph on up to six vertices and
//! every coloring up to color renaming; random mode samples seeded
//! complete-graph colorings. Either way, a reported violation is a
//! hypothesis-met instance whose conclusion failed a certified search, and
//! the miner additionally tracks the tightness frontier: the largest
//! minimum color degree seen on any instance (hypothesis met or not) whose
//! conclusion is certified false.

use crate::detect::SearchBudget;
use crate::generate::{for_each_canonical_coloring, generate, GenSpec};
use crate::graph::{serialize_ecg, EdgeColoredGraph};
use crate::verify::{
    check_conclusion, check_hypothesis, Conclusion, Params, TheoremId, VerifyError, Violation,
};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Enumeration strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MineMode {
    /// Every edge subset of K_n for each n in range, every canonical
    /// coloring with at most `palette_max` colors. Space-bounded.
    Exhaustive,
    /// Seeded random complete colorings cycling over the n range.
    Random,
}

impl MineMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            MineMode::Exhaustive => "exhaustive",
            MineMode::Random => "random",
        }
    }

    pub fn parse(s: &str) -> Option<MineMode> {
        match s {
            "exhaustive" => Some(MineMode::Exhaustive),
            "random" => Some(MineMode::Random),
            _ => None,
        }
    }
}

/// A fully-specified mining run.
#[derive(Clone, Debug)]
pub struct MineSpec {
    pub theorem: TheoremId,
    pub params: Params,
    pub n_min: u32,
    pub n_max: u32,
    pub palette_max: u32,
    pub mode: MineMode,
    /// Random mode only: number of sampled colorings.
    pub trials: u64,
    /// Random mode only: base seed; trial `i` uses `base_seed + i`.
    pub base_seed: u64,
    pub budget: SearchBudget,
}

/// The extremal certified conclusion failure seen during a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessProbe {
    /// Largest minimum color degree among certified conclusion failures,
    /// regardless of hypothesis status.
    pub delta_c: usize,
    pub n: usize,
    pub hypothesis_met: bool,
    pub ecg: String,
    pub seed: u64,
}

/// Mining outcome: campaign-style counts plus the tightness frontier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiningReport {
    pub theorem: TheoremId,
    pub params: Params,
    pub mode: MineMode,
    pub n_min: u32,
    pub n_max: u32,
    pub palette_max: u32,
    /// Number of colorings examined.
    pub trials: u64,
    pub hypothesis_met: u64,
    pub verified: u64,
    pub indeterminate: u64,
    /// Hypothesis-met instances with certified conclusion failure.
    pub violations: Vec<Violation>,
    pub tightness: Option<TightnessProbe>,
    pub budget: SearchBudget,
    pub base_seed: u64,
    pub timing_ms: u64,
}

/// Errors for the miner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MineError {
    /// Exhaustive enumeration is limited to n <= 6 and palette <= 4.
    SpaceTooLarge {
        n_max: u32,
        palette_max: u32,
    },
    BadParams {
        reason: &'static str,
    },
}

impl fmt::Display for MineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MineError::SpaceTooLarge { n_max, palette_max } => write!(
                f,
                "exhaustive space too large (n_max = {n_max}, palette_max = {palette_max}; \
                 limits are 6 and 4)"
            ),
            MineError::BadParams { reason } => write!(f, "bad mining parameters: {reason}"),
        }
    }
}

impl core::error::Error for MineError {}

/// Counts and findings accumulated over a slice of a mining run. Partials
/// merged in trial order reproduce the sequential run exactly, which is how
/// the parallel driver stays byte-deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinePartial {
    pub trials: u64,
    pub hypothesis_met: u64,
    pub verified: u64,
    pub indeterminate: u64,
    pub violations: Vec<Violation>,
    pub tightness: Option<TightnessProbe>,
}

impl MinePartial {
    fn new() -> Self {
        MinePartial {
            trials: 0,
            hypothesis_met: 0,
            verified: 0,
            indeterminate: 0,
            violations: Vec::new(),
            tightness: None,
        }
    }

    fn observe(&mut self, spec: &MineSpec, g: &EdgeColoredGraph, seed: u64, source: &str) {
        self.trials += 1;
        let hypothesis = match check_hypothesis(g, spec.theorem, &spec.params, spec.budget) {
            Ok(h) => h,
            Err(VerifyError::IndeterminateSideCondition) => return,
            Err(_) => return,
        };
        let conclusion = match check_conclusion(g, spec.theorem, &spec.params, spec.budget) {
            Ok(c) => c,
            Err(_) => return,
        };
        if hypothesis {
            self.hypothesis_met += 1;
            match conclusion {
                Conclusion::Verified => self.verified += 1,
                Conclusion::Indeterminate => self.indeterminate += 1,
                Conclusion::Violated => {
                    // Certified violations must reproduce at full budget.
                    let confirmed =
                        check_conclusion(g, spec.theorem, &spec.params, SearchBudget::unlimited())
                            == Ok(Conclusion::Violated);
                    if confirmed {
                        self.violations.push(Violation {
                            seed,
                            ecg: serialize_ecg(g),
                            note: format!(
                                "theorem={} source={} n={} delta_c={} conclusion=violated",
                                spec.theorem.name(),
                                source,
                                g.n(),
                                g.min_color_degree_cached()
                            ),
                        });
                    } else {
                        self.indeterminate += 1;
                    }
                }
            }
        }
        if conclusion == Conclusion::Violated {
            let delta = g.min_color_degree_cached();
            let better = self.tightness.as_ref().is_none_or(|t| delta > t.delta_c);
            if better {
                self.tightness = Some(TightnessProbe {
                    delta_c: delta,
                    n: g.n(),
                    hypothesis_met: hypothesis,
                    ecg: serialize_ecg(g),
                    seed,
                });
            }
        }
    }
}

/// All unordered vertex pairs of `0..n`, lexicographic.
fn all_pairs(n: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Parameter validation shared by the sequential and parallel drivers.
pub fn validate_spec(spec: &MineSpec) -> Result<(), MineError> {
    if spec.n_min > spec.n_max || spec.n_max == 0 {
        return Err(MineError::BadParams {
            reason: "empty n range",
        });
    }
    if spec.palette_max == 0 {
        return Err(MineError::BadParams {
            reason: "palette_max must be positive",
        });
    }
    match spec.mode {
        MineMode::Exhaustive if spec.n_max > 6 || spec.palette_max > 4 => {
            Err(MineError::SpaceTooLarge {
                n_max: spec.n_max,
                palette_max: spec.palette_max,
            })
        }
        MineMode::Random if spec.trials == 0 => Err(MineError::BadParams {
            reason: "random mode needs trials >= 1",
        }),
        _ => Ok(()),
    }
}

/// Random-mode trials `lo..hi` of the full run. Partials from a disjoint
/// cover of `0..trials`, merged in order, equal the sequential run.
pub fn mine_random_partial(spec: &MineSpec, lo: u64, hi: u64) -> MinePartial {
    let mut state = MinePartial::new();
    let span = (spec.n_max - spec.n_min + 1) as u64;
    for i in lo..hi {
        let seed = spec.base_seed.wrapping_add(i);
        let n = spec.n_min + (i % span) as u32;
        if n < 2 {
            continue;
        }
        // Cycle palettes 1..=palette_max so sparse-color instances (the
        // interesting ones for cycle theorems) keep appearing.
        let palette = 1 + (i / span % spec.palette_max as u64) as u32;
        let template = GenSpec::complete_random(n, palette, seed);
        if let Ok(g) = generate(&template) {
            state.observe(spec, &g, seed, "complete_random");
        }
    }
    state
}

/// Folds partials (in trial order) into a report.
pub fn merge_partials(spec: &MineSpec, partials: Vec<MinePartial>) -> MiningReport {
    let mut state = MinePartial::new();
    for p in partials {
        state.trials += p.trials;
        state.hypothesis_met += p.hypothesis_met;
        state.verified += p.verified;
        state.indeterminate += p.indeterminate;
        state.violations.extend(p.violations);
        // Strictly-better replacement keeps the earliest maximal probe,
        // matching the sequential scan.
        if let Some(t) = p.tightness {
            if state
                .tightness
                .as_ref()
                .is_none_or(|cur| t.delta_c > cur.delta_c)
            {
                state.tightness = Some(t);
            }
        }
    }
    MiningReport {
        theorem: spec.theorem,
        params: spec.params,
        mode: spec.mode,
        n_min: spec.n_min,
        n_max: spec.n_max,
        palette_max: spec.palette_max,
        trials: state.trials,
        hypothesis_met: state.hypothesis_met,
        verified: state.verified,
        indeterminate: state.indeterminate,
        violations: state.violations,
        tightness: state.tightness,
        budget: spec.budget,
        base_seed: spec.base_seed,
        timing_ms: 0,
    }
}

/// Runs a mining campaign; see [`MineSpec`].
pub fn mine_counterexamples(spec: &MineSpec) -> Result<MiningReport, MineError> {
    validate_spec(spec)?;
    match spec.mode {
        MineMode::Exhaustive => {
            let mut state = MinePartial::new();
            for n in spec.n_min..=spec.n_max {
                let pairs = all_pairs(n);
                let total = pairs.len();
                // Edge subsets by bitmask, ascending.
                for mask in 0u32..(1u32 << total) {
                    let subset: Vec<(u32, u32)> = pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    for_each_canonical_coloring(n as usize, &subset, spec.palette_max, &mut |g| {
                        state.observe(spec, g, 0, "exhaustive");
                    });
                }
            }
            Ok(merge_partials(spec, alloc::vec![state]))
        }
        MineMode::Random => {
            let partial = mine_random_partial(spec, 0, spec.trials);
            Ok(merge_partials(spec, alloc::vec![partial]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_k4_confirms_the_boundary() {
        // Strictly above n/2 nothing fails; at delta_c = n/2 = 2 the K4
        // exception colorings show up as the tightness frontier.
        let spec = MineSpec {
            theorem: TheoremId::RtHalf,
            params: Params::none(),
            n_min: 4,
            n_max: 4,
            palette_max: 4,
            mode: MineMode::Exhaustive,
            trials: 0,
            base_seed: 0,
            budget: SearchBudget::unlimited(),
        };
        let report = mine_counterexamples(&spec).unwrap();
        assert!(report.violations.is_empty());
        let tightness = report.tightness.expect("triangle-free colorings exist");
        assert_eq!(tightness.delta_c, 2);
        assert!(!tightness.hypothesis_met);
    }

    #[test]
    fn exhaustive_space_guard() {
        let spec = MineSpec {
            theorem: TheoremId::RtHalf,
            params: Params::none(),
            n_min: 3,
            n_max: 7,
            palette_max: 3,
            mode: MineMode::Exhaustive,
            trials: 0,
            base_seed: 0,
            budget: SearchBudget::unlimited(),
        };
        assert!(matches!(
            mine_counterexamples(&spec),
            Err(MineError::SpaceTooLarge { .. })
        ));
    }

    #[test]
    fn monochromatic_instances_never_violate() {
        // Hypothesis-unmet instances are not violations even though their
        // conclusions fail.
        let spec = MineSpec {
            theorem: TheoremId::RtHalf,
            params: Params::none(),
            n_min: 5,
            n_max: 5,
            palette_max: 1,
            mode: MineMode::Random,
            trials: 20,
            base_seed: 3,
            budget: SearchBudget::unlimited(),
        };
        let report = mine_counterexamples(&spec).unwrap();
        assert_eq!(report.hypothesis_met, 0);
        assert!(report.violations.is_empty());
        assert!(report.tightness.is_some());
    }

    /// The tightness frontier for the per-vertex triangle statement at
    /// n = 5 must match an independent recomputation over the same
    /// enumeration: the largest delta_c with some vertex in no rainbow
    /// triangle. Recorded in the report, asserted here against the oracle.
    #[test]
    fn tightness_probe_matches_enumeration_oracle() {
        let spec = MineSpec {
            theorem: TheoremId::RtVertex,
            params: Params::none(),
            n_min: 5,
            n_max: 5,
            palette_max: 3,
            mode: MineMode::Exhaustive,
            trials: 0,
            base_seed: 0,
            budget: SearchBudget::unlimited(),
        };
        let report = mine_counterexamples(&spec).unwrap();
        let probe = report.tightness.expect("low palettes starve triangles");

        let mut pairs = Vec::new();
        for u in 0..5u32 {
            for v in (u + 1)..5 {
                pairs.push((u, v));
            }
        }
        let mut oracle_max = 0usize;
        for mask in 0u32..(1 << pairs.len()) {
            let subset: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            for_each_canonical_coloring(5, &subset, 3, &mut |g| {
                let fails = (0..5).any(|v| !crate::oracle::rainbow_triangle_through_naive(g, v));
                if fails && g.min_color_degree_cached() > oracle_max {
                    oracle_max = g.min_color_degree_cached();
                }
            });
        }
        assert_eq!(probe.delta_c, oracle_max);
    }

    #[test]
    fn mining_is_deterministic() {
        let spec = MineSpec {
            theorem: TheoremId::LongcycCkryOrig,
            params: Params::none(),
            n_min: 7,
            n_max: 9,
            palette_max: 8,
            mode: MineMode::Random,
            trials: 60,
            base_seed: 17,
            budget: SearchBudget::nodes(200_000),
        };
        let a = mine_counterexamples(&spec).unwrap();
        let b = mine_counterexamples(&spec).unwrap();
        assert_eq!(a, b);
    }
}
