//! Worker-pool drivers for campaigns and random mining.
//!
//! Trials are pure functions of `(spec, index)`, so the pool just splits
//! the index range into contiguous chunks and merges results in trial
//! order. Reports are byte-identical for every job count.

use rainbow_core::mine::{self, MinePartial, MineSpec, MiningReport};
use rainbow_core::verify::{aggregate, evaluate_trial, CampaignSpec, TheoremReport, TrialOutcome};

fn chunk_bounds(total: u64, jobs: u64) -> Vec<(u64, u64)> {
    let jobs = jobs.clamp(1, total.max(1));
    let base = total / jobs;
    let extra = total % jobs;
    let mut bounds = Vec::new();
    let mut lo = 0;
    for i in 0..jobs {
        let len = base + u64::from(i < extra);
        bounds.push((lo, lo + len));
        lo += len;
    }
    bounds
}

pub fn run_campaign_jobs(spec: &CampaignSpec, jobs: u64) -> TheoremReport {
    if jobs <= 1 || spec.trials <= 1 {
        return rainbow_core::verify::run_campaign(spec);
    }
    let bounds = chunk_bounds(spec.trials, jobs);
    let mut outcomes: Vec<Vec<TrialOutcome>> = Vec::with_capacity(bounds.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(lo, hi)| {
                scope.spawn(move || {
                    (lo..hi)
                        .map(|i| evaluate_trial(spec, i))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for handle in handles {
            outcomes.push(handle.join().expect("worker panicked"));
        }
    });
    aggregate(spec, outcomes.into_iter().flatten().collect())
}

pub fn run_mine_jobs(spec: &MineSpec, jobs: u64) -> Result<MiningReport, mine::MineError> {
    mine::validate_spec(spec)?;
    // Exhaustive enumeration stays sequential: it is desk-scale by
    // construction and order-sensitive.
    if jobs <= 1 || spec.mode == mine::MineMode::Exhaustive || spec.trials <= 1 {
        return mine::mine_counterexamples(spec);
    }
    let bounds = chunk_bounds(spec.trials, jobs);
    let mut partials: Vec<MinePartial> = Vec::with_capacity(bounds.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || mine::mine_random_partial(spec, lo, hi)))
            .collect();
        for handle in handles {
            partials.push(handle.join().expect("worker panicked"));
        }
    });
    Ok(mine::merge_partials(spec, partials))
}
