//! Deterministic JSON serialization for reports.
//!
//! Reports are emitted with a fixed field order and no whitespace, so
//! identical runs produce byte-identical files. The writer is hand-rolled
//! on purpose: the schema is small and frozen, and nothing here may ever
//! depend on hash iteration order or a serializer's formatting choices.

use crate::audit::{PathAuditReport, CLAIM_CHECK_NAMES, LEMMA_CHECK_NAMES};
use crate::generate::{GenFamily, GenSpec};
use crate::mine::MiningReport;
use crate::verify::{Params, TheoremReport, Violation};
use alloc::string::String;
use core::fmt::Write;

/// Escapes a string for a JSON literal.
fn push_json_string(out: &mut String, s: &str) {
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

fn push_u32_array(out: &mut String, xs: impl Iterator<Item = u32>) {
    out.push('[');
    for (i, x) in xs.enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{x}");
    }
    out.push(']');
}

fn push_params(out: &mut String, params: &Params) {
    out.push('{');
    let mut first = true;
    let mut field = |out: &mut String, name: &str, value: Option<u32>| {
        if let Some(v) = value {
            if !first {
                out.push(',');
            }
            first = false;
            let _ = write!(out, "\"{name}\":{v}");
        }
    };
    field(out, "k", params.k);
    field(out, "t", params.t);
    field(out, "d", params.d);
    out.push('}');
}

fn push_genspec(out: &mut String, spec: &GenSpec) {
    out.push('{');
    let _ = write!(out, "\"family\":\"{}\"", spec.family.as_str());
    match spec.family {
        GenFamily::CompleteRandom => {
            let _ = write!(out, ",\"n\":{},\"palette\":{}", spec.n, spec.palette);
        }
        GenFamily::GnpRandom => {
            let _ = write!(
                out,
                ",\"n\":{},\"p\":{},\"palette\":{}",
                spec.n, spec.p, spec.palette
            );
        }
        GenFamily::ProperBipartite => {
            let _ = write!(out, ",\"n\":{}", spec.n);
        }
        GenFamily::MatchingK4 => {}
        GenFamily::TargetedDelta => {
            let _ = write!(
                out,
                ",\"n\":{},\"target_delta\":{}",
                spec.n, spec.target_delta
            );
        }
    }
    out.push('}');
}

fn push_violations(out: &mut String, violations: &[Violation]) {
    out.push('[');
    for (i, v) in violations.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{{\"seed\":{},\"ecg\":", v.seed);
        push_json_string(out, &v.ecg);
        out.push_str(",\"note\":");
        push_json_string(out, &v.note);
        out.push('}');
    }
    out.push(']');
}

/// Serializes a campaign report. Field order is frozen; do not add fields.
pub fn theorem_report_json(r: &TheoremReport) -> String {
    let mut out = String::new();
    out.push_str("{\"schema\":\"rainbow-report/1\",\"theorem\":\"");
    out.push_str(r.theorem.name());
    out.push_str("\",\"params\":");
    push_params(&mut out, &r.params);
    out.push_str(",\"generator\":");
    push_genspec(&mut out, &r.generator);
    let _ = write!(
        out,
        ",\"trials\":{},\"counts\":{{\"hypothesis_met\":{},\"verified\":{},\"indeterminate\":{},\"violations\":{}}},\"violations\":",
        r.trials,
        r.hypothesis_met,
        r.verified,
        r.indeterminate,
        r.violations.len()
    );
    push_violations(&mut out, &r.violations);
    let _ = write!(
        out,
        ",\"budget\":{},\"seeds\":{{\"base\":{}}},\"timing_ms\":{}}}",
        r.budget.node_limit(),
        r.base_seed,
        r.timing_ms
    );
    out.push('\n');
    out
}

/// Serializes a mining report in the same envelope, with the mining
/// enumeration described in the generator slot.
pub fn mining_report_json(r: &MiningReport) -> String {
    let mut out = String::new();
    out.push_str("{\"schema\":\"rainbow-report/1\",\"theorem\":\"");
    out.push_str(r.theorem.name());
    out.push_str("\",\"params\":");
    push_params(&mut out, &r.params);
    let _ = write!(
        out,
        ",\"generator\":{{\"mode\":\"{}\",\"n_min\":{},\"n_max\":{},\"palette_max\":{}}}",
        r.mode.as_str(),
        r.n_min,
        r.n_max,
        r.palette_max
    );
    let _ = write!(
        out,
        ",\"trials\":{},\"counts\":{{\"hypothesis_met\":{},\"verified\":{},\"indeterminate\":{},\"violations\":{}}},\"violations\":",
        r.trials,
        r.hypothesis_met,
        r.verified,
        r.indeterminate,
        r.violations.len()
    );
    push_violations(&mut out, &r.violations);
    let _ = write!(
        out,
        ",\"budget\":{},\"seeds\":{{\"base\":{}}},\"timing_ms\":{}}}",
        r.budget.node_limit(),
        r.base_seed,
        r.timing_ms
    );
    out.push('\n');
    out
}

/// Serializes a path audit report.
pub fn audit_report_json(r: &PathAuditReport) -> String {
    let mut out = String::new();
    out.push_str("{\"schema\":\"rainbow-audit/1\",\"path\":");
    push_u32_array(&mut out, r.path.iter().copied());
    let _ = write!(
        out,
        ",\"k\":{},\"reversed\":{},\"cycle_search\":\"{}\",\"applicable\":{}",
        r.k,
        r.reversed,
        r.cycle_search.as_str(),
        r.applicable
    );
    out.push_str(",\"sets\":{");
    let sets: [(&str, &crate::graph::ColorSet); 8] = [
        ("a1", &r.a1),
        ("a2", &r.a2),
        ("b1", &r.b1),
        ("b2", &r.b2),
        ("b3", &r.b3),
        ("c0", &r.c0),
        ("c1", &r.c1),
        ("c2", &r.c2),
    ];
    for (i, (name, set)) in sets.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "\"{name}\":");
        push_u32_array(&mut out, set.iter());
    }
    out.push_str(",\"d\":");
    push_u32_array(&mut out, r.d.iter());
    let _ = write!(
        out,
        "}},\"epsilons\":{{\"eps1\":{},\"eps2\":{},\"eps3\":{}}}",
        r.eps1, r.eps2, r.eps3
    );
    out.push_str(",\"lemma_checks\":{");
    for (i, (name, status)) in LEMMA_CHECK_NAMES
        .iter()
        .zip(r.lemma_checks.iter())
        .enumerate()
    {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "\"{name}\":\"{}\"", status.as_str());
    }
    out.push_str("},\"claim_checks\":{");
    for (i, (name, status)) in CLAIM_CHECK_NAMES
        .iter()
        .zip(r.claim_checks.iter())
        .enumerate()
    {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "\"{name}\":\"{}\"", status.as_str());
    }
    out.push_str("},\"inequalities\":[");
    for (i, ineq) in r.inequalities.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{{\"label\":\"{}\",\"chain\":[", ineq.label);
        for (j, v) in ineq.chain.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            let _ = write!(out, "{v}");
        }
        let _ = write!(out, "],\"holds\":{}}}", ineq.holds);
    }
    out.push_str("],\"flags\":[");
    for (i, flag) in r.flags.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        push_json_string(&mut out, flag);
    }
    out.push_str("]}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::SearchBudget;
    use crate::verify::TheoremId;
    use alloc::string::ToString;

    #[test]
    fn string_escaping() {
        let mut out = String::new();
        push_json_string(&mut out, "a\"b\\c\nd\te\u{1}");
        assert_eq!(out, "\"a\\\"b\\\\c\\nd\\te\\u0001\"");
    }

    #[test]
    fn report_shape_is_stable() {
        let report = TheoremReport {
            theorem: TheoremId::RtVertex,
            params: Params::none(),
            generator: GenSpec::targeted_delta(12, 9, 0),
            trials: 2,
            hypothesis_met: 2,
            verified: 2,
            indeterminate: 0,
            violations: alloc::vec![],
            budget: SearchBudget::nodes(1000),
            base_seed: 42,
            timing_ms: 0,
        };
        let json = theorem_report_json(&report);
        assert_eq!(
            json,
            "{\"schema\":\"rainbow-report/1\",\"theorem\":\"RT_VERTEX\",\"params\":{},\
             \"generator\":{\"family\":\"targeted_delta\",\"n\":12,\"target_delta\":9},\
             \"trials\":2,\"counts\":{\"hypothesis_met\":2,\"verified\":2,\"indeterminate\":0,\
             \"violations\":0},\"violations\":[],\"budget\":1000,\"seeds\":{\"base\":42},\
             \"timing_ms\":0}\n"
                .to_string()
        );
    }

    #[test]
    fn violations_embed_payloads() {
        let report = TheoremReport {
            theorem: TheoremId::RtHalf,
            params: Params::k(4),
            generator: GenSpec::complete_random(4, 2, 0),
            trials: 1,
            hypothesis_met: 1,
            verified: 0,
            indeterminate: 0,
            violations: alloc::vec![Violation {
                seed: 7,
                ecg: "ecg 1 2 1\n0 1 0\n".to_string(),
                note: "n=2".to_string(),
            }],
            budget: SearchBudget::unlimited(),
            base_seed: 7,
            timing_ms: 0,
        };
        let json = theorem_report_json(&report);
        assert!(json.contains("\"params\":{\"k\":4}"));
        assert!(json.contains("\"ecg\":\"ecg 1 2 1\\n0 1 0\\n\""));
        assert!(json.contains("\"violations\":1"));
        assert!(json.ends_with("}\n"));
    }
}
