//! Command-line front-end: graph inspection, rainbow substructure search,
//! path audits, instance generation, verification campaigns, and mining.
//!
//! Exit code contract: 0 = success/verified, 1 = finding (a violation or a
//! certified absence), 2 = usage or input error, 3 = indeterminate (budget
//! exhausted). Machine-readable results go to stdout (JSON for
//! verify/mine/audit, line format for check/find); prose goes to stderr.

mod parallel;

use clap::{Args, Parser, Subcommand};
use rainbow_core::audit::{audit_path, CycleStatus};
use rainbow_core::detect::{
    find_rainbow_c4, find_rainbow_cycle_at_least, find_rainbow_triangle, longest_rainbow_path,
    rainbow_c4_through, rainbow_triangle_through, CycleSearch, PathSearch, RainbowWitness,
    SearchBudget, WitnessKind,
};
use rainbow_core::generate::{generate, GenFamily, GenSpec};
use rainbow_core::graph::{parse_ecg, serialize_ecg, EdgeColoredGraph};
use rainbow_core::mine::{MineMode, MineSpec};
use rainbow_core::report::{audit_report_json, mining_report_json, theorem_report_json};
use rainbow_core::verify::{CampaignSpec, Params, TheoremId};
use std::io::{Read, Write};
use std::process::ExitCode;
use std::time::Instant;

const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "rainbow",
    version,
    about = "Rainbow substructure analysis for edge-colored graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the minimum color degree and the per-vertex color-degree table.
    Check {
        /// Input .ecg file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Search for a rainbow substructure and print a witness or a verdict.
    Find {
        /// Structure to search for.
        #[arg(long, value_parser = ["triangle", "c4", "path", "cycle"])]
        what: String,
        /// Restrict to structures through this vertex (triangle and c4).
        #[arg(long)]
        through: Option<u32>,
        /// Minimum cycle length (cycle only).
        #[arg(long)]
        k: Option<usize>,
        /// Search budget in nodes.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Audit a rainbow path against the long-cycle machinery.
    Audit {
        /// Comma-separated vertex list, e.g. `0,3,1,4`.
        #[arg(long)]
        path: String,
        /// Cycle length target.
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Generate an instance and write it as .ecg.
    Gen(GenArgs),
    /// Run a verification campaign and write a JSON report.
    Verify(VerifyArgs),
    /// Mine for counterexamples and tightness frontiers.
    Mine(MineArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_parser = ["complete_random", "gnp_random", "proper_bipartite", "matching_k4", "targeted_delta"])]
    family: String,
    /// Number of vertices.
    #[arg(long, default_value_t = 4)]
    n: u32,
    /// Edge probability (gnp_random).
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Palette size (random families).
    #[arg(long, default_value_t = 8)]
    palette: u32,
    /// Minimum color degree target (targeted_delta).
    #[arg(long)]
    target_delta: Option<u32>,
    /// Seed; RAINBOW_SEED applies when the flag is absent.
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (stdout when absent).
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem id, e.g. RT_VERTEX or MAIN_COMPLETE.
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    /// Instance family for the campaign.
    #[arg(long, default_value = "targeted_delta", value_parser = ["complete_random", "gnp_random", "proper_bipartite", "matching_k4", "targeted_delta"])]
    family: String,
    #[arg(long, default_value_t = 12)]
    n: u32,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 8)]
    palette: u32,
    /// Minimum color degree target; derived from the hypothesis when absent.
    #[arg(long)]
    target_delta: Option<u32>,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker pool size; the report does not depend on it.
    #[arg(long, default_value_t = 1)]
    jobs: u64,
    /// Record wall-clock milliseconds in the report. Off by default so
    /// repeated runs are byte-identical.
    #[arg(long)]
    timing: bool,
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Args)]
struct MineArgs {
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long, value_parser = ["exhaustive", "random"])]
    mode: String,
    #[arg(long, default_value_t = 3)]
    n_min: u32,
    #[arg(long, default_value_t = 5)]
    n_max: u32,
    #[arg(long, default_value_t = 3)]
    palette_max: u32,
    /// Sampled colorings (random mode).
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    jobs: u64,
    #[arg(long)]
    timing: bool,
    #[arg(short, long)]
    output: Option<String>,
}

/// CLI-level failure carrying the exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("rainbow: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Check { input } => cmd_check(&input),
        Command::Find {
            what,
            through,
            k,
            budget,
            input,
        } => cmd_find(&what, through, k, budget, &input),
        Command::Audit {
            path,
            k,
            budget,
            input,
        } => cmd_audit(&path, k, budget, &input),
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Mine(args) => cmd_mine(args),
    }
}

// ============================================================================
// Shared helpers
// ============================================================================

/// Writes to stdout, dying quietly when the consumer has closed the pipe
/// (`rainbow ... | head` must not panic).
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
    {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("rainbow: writing stdout: {e}");
        std::process::exit(2);
    }
}

fn outln(text: &str) {
    out(text);
    out("\n");
}

fn read_graph(input: &str) -> Result<EdgeColoredGraph, Failure> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| Failure::usage(format!("reading {input}: {e}")))?
    };
    parse_ecg(&text).map_err(|e| Failure::usage(format!("parsing {input}: {e}")))
}

fn write_output(path: &Option<String>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            std::fs::write(p, content).map_err(|e| Failure::usage(format!("writing {p}: {e}")))
        }
        None => {
            out(content);
            Ok(())
        }
    }
}

fn effective_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("RAINBOW_SEED") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::usage(format!("RAINBOW_SEED is not an integer: `{v}`"))),
        Err(_) => Ok(0),
    }
}

fn parse_budget(nodes: u64) -> Result<SearchBudget, Failure> {
    if nodes == 0 {
        return Err(Failure::usage("budget must be positive"));
    }
    Ok(SearchBudget::nodes(nodes))
}

fn parse_theorem(name: &str) -> Result<TheoremId, Failure> {
    TheoremId::parse(name).ok_or_else(|| {
        Failure::usage(format!(
            "unknown theorem `{name}`; known ids: {}",
            rainbow_core::verify::ALL_THEOREMS
                .iter()
                .map(|t| t.name())
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })
}

fn vertex_line(w: &RainbowWitness) -> String {
    w.vertices
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

// ============================================================================
// check / find / audit
// ============================================================================

fn cmd_check(input: &str) -> Result<u8, Failure> {
    let g = read_graph(input)?;
    if g.n() == 0 {
        return Err(Failure::usage("graph has no vertices"));
    }
    outln(&format!("delta_c {}", g.min_color_degree_cached()));
    for (v, dc) in g.color_degree_slice().iter().enumerate() {
        outln(&format!("dc {v} {dc}"));
    }
    Ok(0)
}

fn cmd_find(
    what: &str,
    through: Option<u32>,
    k: Option<usize>,
    budget: u64,
    input: &str,
) -> Result<u8, Failure> {
    let g = read_graph(input)?;
    let budget = parse_budget(budget)?;
    let check_vertex = |v: u32| {
        if (v as usize) < g.n() {
            Ok(v)
        } else {
            Err(Failure::usage(format!(
                "vertex {v} out of range (n = {})",
                g.n()
            )))
        }
    };
    match what {
        "triangle" => {
            let witness = match through {
                Some(v) => rainbow_triangle_through(&g, check_vertex(v)?).expect("vertex checked"),
                None => find_rainbow_triangle(&g),
            };
            match witness {
                Some(w) => {
                    outln(&vertex_line(&w));
                    Ok(0)
                }
                None => {
                    outln("certified absent");
                    Ok(1)
                }
            }
        }
        "c4" => {
            let outcome = match through {
                Some(v) => {
                    match rainbow_c4_through(&g, check_vertex(v)?).expect("vertex checked") {
                        Some(w) => CycleSearch::Found(w),
                        None => CycleSearch::Absent,
                    }
                }
                None => find_rainbow_c4(&g, budget),
            };
            report_cycle_outcome(outcome)
        }
        "path" => {
            if through.is_some() {
                return Err(Failure::usage("--through applies to triangle and c4 only"));
            }
            match longest_rainbow_path(&g, budget) {
                Err(e) => Err(Failure::usage(format!("{e}"))),
                Ok(PathSearch::Exact(w)) => {
                    outln(&vertex_line(&w));
                    Ok(0)
                }
                Ok(PathSearch::Indeterminate(w)) => {
                    outln(&format!("indeterminate {}", vertex_line(&w)));
                    Ok(3)
                }
            }
        }
        "cycle" => {
            if through.is_some() {
                return Err(Failure::usage("--through applies to triangle and c4 only"));
            }
            let k = k.ok_or_else(|| Failure::usage("--what cycle needs --k"))?;
            match find_rainbow_cycle_at_least(&g, k, budget) {
                Err(e) => Err(Failure::usage(format!("{e}"))),
                Ok(outcome) => report_cycle_outcome(outcome),
            }
        }
        _ => unreachable!("clap restricts the value set"),
    }
}

fn report_cycle_outcome(outcome: CycleSearch) -> Result<u8, Failure> {
    match outcome {
        CycleSearch::Found(w) => {
            outln(&vertex_line(&w));
            Ok(0)
        }
        CycleSearch::Absent => {
            outln("certified absent");
            Ok(1)
        }
        CycleSearch::Indeterminate => {
            outln("indeterminate");
            Ok(3)
        }
    }
}

fn cmd_audit(path: &str, k: usize, budget: u64, input: &str) -> Result<u8, Failure> {
    let g = read_graph(input)?;
    let budget = parse_budget(budget)?;
    let vertices: Result<Vec<u32>, _> = path.split(',').map(|t| t.trim().parse()).collect();
    let vertices =
        vertices.map_err(|_| Failure::usage(format!("invalid --path vertex list `{path}`")))?;
    let witness = RainbowWitness::from_vertices(&g, WitnessKind::Path, vertices)
        .map_err(|e| Failure::usage(format!("--path is not a rainbow path: {e}")))?;
    let report = audit_path(&g, &witness, k, budget).map_err(|e| Failure::usage(format!("{e}")))?;
    out(&audit_report_json(&report));
    // A failing check on a certified cycle-free instance is a finding;
    // with the side search indeterminate it stays inconclusive.
    Ok(if report.all_checks_pass() || !report.applicable {
        0
    } else if report.cycle_search == CycleStatus::Absent {
        1
    } else {
        3
    })
}

// ============================================================================
// gen
// ============================================================================

fn build_genspec(
    family: &str,
    n: u32,
    p: f64,
    palette: u32,
    target_delta: Option<u32>,
    seed: u64,
) -> Result<GenSpec, Failure> {
    let family = GenFamily::parse(family)
        .ok_or_else(|| Failure::usage(format!("unknown family `{family}`")))?;
    Ok(match family {
        GenFamily::CompleteRandom => GenSpec::complete_random(n, palette, seed),
        GenFamily::GnpRandom => GenSpec::gnp_random(n, p, palette, seed),
        GenFamily::ProperBipartite => GenSpec::proper_bipartite(n),
        GenFamily::MatchingK4 => GenSpec::matching_k4(),
        GenFamily::TargetedDelta => {
            let t = target_delta
                .ok_or_else(|| Failure::usage("targeted_delta needs --target-delta"))?;
            GenSpec::targeted_delta(n, t, seed)
        }
    })
}

fn cmd_gen(args: GenArgs) -> Result<u8, Failure> {
    let seed = effective_seed(args.seed)?;
    let spec = build_genspec(
        &args.family,
        args.n,
        args.p,
        args.palette,
        args.target_delta,
        seed,
    )?;
    let g = generate(&spec).map_err(|e| Failure::usage(format!("{e}")))?;
    write_output(&args.output, &serialize_ecg(&g))?;
    Ok(0)
}

// ============================================================================
// verify / mine
// ============================================================================

/// Smallest color-degree target that satisfies the theorem's bound at
/// order `n`, used when `--target-delta` is absent.
fn derived_target(theorem: TheoremId, params: &Params, n: u32) -> Result<u32, Failure> {
    let n = n as i64;
    let need_k = || {
        params
            .k
            .map(i64::from)
            .ok_or_else(|| Failure::usage("this theorem needs --k"))
    };
    let t = match theorem {
        TheoremId::RtHalf | TheoremId::RtExcept => n / 2 + 1,
        TheoremId::RtCompleteVertex => (n + 1).div_euclid(2) + i64::from((n + 1) % 2 != 0),
        TheoremId::RtVertex => (3 * n - 3) / 4 + 1,
        TheoremId::C4Trifree => (n + 3) / 3 + 1,
        TheoremId::C4Vertex => 3 * n / 4 + 1,
        TheoremId::LongcycLw => params
            .d
            .map(i64::from)
            .ok_or_else(|| Failure::usage("LONGCYC_LW needs --d"))?,
        TheoremId::LongcycCkryOrig => (n + 4) / 2 + 1,
        TheoremId::LongcycCkryFixed => (n + 5) / 2 + 1,
        TheoremId::LongcycTangjaiFixed => (n + 3 * need_k()? - 3) / 2 + 1,
        TheoremId::MainComplete => (n - 1 + 2 * need_k()?) / 2 + 1,
        TheoremId::PathLb => params
            .t
            .map(i64::from)
            .ok_or_else(|| Failure::usage("PATH_LB needs --t"))?,
        TheoremId::ConjCkry => (n + need_k()?) / 2 + 1,
    };
    if t < 1 || t > n - 1 {
        return Err(Failure::usage(format!(
            "derived color-degree target {t} is infeasible at n = {n}; raise --n or pass --target-delta"
        )));
    }
    Ok(t as u32)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let theorem = parse_theorem(&args.theorem)?;
    let params = Params {
        k: args.k,
        t: args.t,
        d: args.d,
    };
    let seed = effective_seed(args.seed)?;
    let budget = parse_budget(args.budget)?;
    if args.trials == 0 {
        return Err(Failure::usage("--trials must be positive"));
    }
    let target_delta = match (&args.family[..], args.target_delta) {
        ("targeted_delta", None) => Some(derived_target(theorem, &params, args.n)?),
        (_, t) => t,
    };
    let template = build_genspec(
        &args.family,
        args.n,
        args.p,
        args.palette,
        target_delta,
        seed,
    )?;
    let spec = CampaignSpec {
        theorem,
        params,
        template,
        trials: args.trials,
        base_seed: seed,
        budget,
    };

    let start = Instant::now();
    let mut report = parallel::run_campaign_jobs(&spec, args.jobs);
    if args.timing {
        report.timing_ms = start.elapsed().as_millis() as u64;
    }
    eprintln!(
        "{}: {} trials, {} hypothesis met, {} verified, {} indeterminate, {} violations",
        theorem.name(),
        report.trials,
        report.hypothesis_met,
        report.verified,
        report.indeterminate,
        report.violations.len()
    );
    if theorem.mining_target_only() {
        eprintln!(
            "note: {} is a mining target; violations are expected findings",
            theorem.name()
        );
    }
    let json = theorem_report_json(&report);
    write_output(&args.output, &json)?;
    Ok(if !report.violations.is_empty() {
        1
    } else if report.indeterminate > 0 {
        3
    } else {
        0
    })
}

fn cmd_mine(args: MineArgs) -> Result<u8, Failure> {
    let theorem = parse_theorem(&args.theorem)?;
    let params = Params {
        k: args.k,
        t: args.t,
        d: args.d,
    };
    let seed = effective_seed(args.seed)?;
    let budget = parse_budget(args.budget)?;
    let mode = MineMode::parse(&args.mode).expect("clap restricts the value set");
    let spec = MineSpec {
        theorem,
        params,
        n_min: args.n_min,
        n_max: args.n_max,
        palette_max: args.palette_max,
        mode,
        trials: args.trials,
        base_seed: seed,
        budget,
    };
    let start = Instant::now();
    let mut report =
        parallel::run_mine_jobs(&spec, args.jobs).map_err(|e| Failure::usage(format!("{e}")))?;
    if args.timing {
        report.timing_ms = start.elapsed().as_millis() as u64;
    }
    eprintln!(
        "{}: {} colorings examined, {} hypothesis met, {} violations",
        theorem.name(),
        report.trials,
        report.hypothesis_met,
        report.violations.len()
    );
    match &report.tightness {
        Some(t) => eprintln!(
            "tightness frontier: conclusion certified false at delta_c = {} (n = {}, hypothesis {})",
            t.delta_c,
            t.n,
            if t.hypothesis_met { "met" } else { "unmet" }
        ),
        None => eprintln!("tightness frontier: no certified conclusion failure observed"),
    }
    let json = mining_report_json(&report);
    write_output(&args.output, &json)?;
    Ok(if !report.violations.is_empty() {
        1
    } else if report.indeterminate > 0 {
        3
    } else {
        0
    })
}
