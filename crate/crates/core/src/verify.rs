//! The `verify-all` suite: every check the binary can run, by name.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cli::report;
use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::obstruction::{
    e6_case_checks, e7_obstruction, equal_sum_quadruples, quadrangle_holds,
    root_string_obstruction, Facts, IncidenceGraph,
};
use crate::rootsys::{RootSystem, TypeLabel, Weight};
use crate::witness::{classical_minuscule_witness, Diagonal};

pub const CHECKS: [&str; 6] = [
    "classification",
    "witnesses",
    "root-string",
    "e6",
    "e7",
    "lemmas",
];

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Run only this check.
    pub only: Option<String>,
    pub max_rank: usize,
    /// Use these points for the E6 checks instead of the computed weights.
    pub e6_fixture: Option<Vec<Weight>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Whether `(type, rank, i)` appears in the list of minuscule fundamental
/// weights.
pub fn expected_minuscule(t: TypeLabel, rank: usize, i: usize) -> bool {
    match t {
        TypeLabel::A => true,
        TypeLabel::B => i == rank,
        TypeLabel::C => i == 1,
        TypeLabel::D => i == 1 || i + 1 == rank || i == rank,
        TypeLabel::E => matches!((rank, i), (6, 1) | (6, 6) | (7, 7)),
        TypeLabel::F | TypeLabel::G => false,
    }
}

/// Classical minuscule `(type, rank, i)` with rank at most `max_rank`.
pub fn classical_minuscule_cases(max_rank: usize) -> Vec<(TypeLabel, usize, usize)> {
    let mut out = Vec::new();
    for t in [TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D] {
        for r in t.legal_ranks(max_rank) {
            for i in 1..=r {
                if expected_minuscule(t, r, i) {
                    out.push((t, r, i));
                }
            }
        }
    }
    out
}

pub fn run(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    if let Some(name) = &opts.only {
        if !CHECKS.contains(&name.as_str()) {
            return Err(Error::Parse(format!(
                "unknown check {name:?}; known: {}",
                CHECKS.join(", ")
            )));
        }
    }
    let mut out = Vec::new();
    for name in CHECKS {
        if opts.only.as_deref().is_some_and(|o| o != name) {
            continue;
        }
        let outcome = match name {
            "classification" => check_classification(opts.max_rank),
            "witnesses" => check_witnesses(opts.max_rank),
            "root-string" => check_root_strings(opts.max_rank),
            "e6" => check_e6(opts.e6_fixture.as_deref()),
            "e7" => check_e7(),
            _ => check_lemmas(opts.max_rank),
        };
        let (passed, detail) = match outcome {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        out.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        });
    }
    Ok(out)
}

pub fn render(results: &[CheckResult]) -> String {
    let mut s = String::new();
    for r in results {
        s.push_str(&format!(
            "{} {:<15} {}\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        ));
    }
    s
}

fn check_classification(max_rank: usize) -> Result<(bool, String)> {
    let rows = report(max_rank)?;
    let wrong: Vec<String> = rows
        .iter()
        .filter(|r| r.minuscule != expected_minuscule(r.type_label, r.rank, r.index))
        .map(|r| format!("{}{} ϖ{}", r.type_label, r.rank, r.index))
        .collect();
    let minuscule = rows.iter().filter(|r| r.minuscule).count();
    Ok(if wrong.is_empty() {
        (
            true,
            format!("{} fundamental weights, {minuscule} minuscule", rows.len()),
        )
    } else {
        (false, format!("mismatch at {}", wrong.join(", ")))
    })
}

fn check_witnesses(max_rank: usize) -> Result<(bool, String)> {
    let cases = classical_minuscule_cases(max_rank);
    let mut bad = Vec::new();
    for &(t, r, i) in &cases {
        let rs = RootSystem::build(t, r)?;
        let ok = classical_minuscule_witness(t, r, &rs.fundamental_weight(i)?)
            .is_ok_and(|w| w.verified());
        if !ok {
            bad.push(format!("{t}{r} ϖ{i}"));
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} witnesses, failed: [{}]", cases.len(), bad.join(", ")),
    ))
}

fn check_root_strings(max_rank: usize) -> Result<(bool, String)> {
    let mut count = 0;
    let mut bad = Vec::new();
    for t in TypeLabel::ALL {
        for r in t.legal_ranks(max_rank) {
            let rs = RootSystem::build(t, r)?;
            for i in 1..=r {
                let w = rs.fundamental_weight(i)?;
                if rs.is_minuscule(&w)? {
                    continue;
                }
                count += 1;
                if !root_string_obstruction(&rs, &w).is_ok_and(|c| c.verified) {
                    bad.push(format!("{t}{r} ϖ{i}"));
                }
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{count} certificates, failed: [{}]", bad.join(", ")),
    ))
}

fn check_e6(fixture: Option<&[Weight]>) -> Result<(bool, String)> {
    let weights = match fixture {
        Some(w) => w.to_vec(),
        None => {
            let rs = RootSystem::build(TypeLabel::E, 6)?;
            rs.weight_system(&rs.fundamental_weight(1)?)?.weights
        }
    };
    let cert = e6_case_checks(&IncidenceGraph::from_weights(weights));
    let Facts::E6CaseAnalysis(f) = &cert.facts else {
        unreachable!()
    };
    let support: BTreeSet<usize> = f.hull.support();
    let detail = format!(
        "incidence={} rank={} triples={} failures={} hull={:?} max_facet={}",
        f.incidence.all(),
        f.difference_rank,
        f.triple_count,
        f.failures.len(),
        f.hull.histogram,
        f.hull.max_facet_size,
    );
    Ok((cert.verified && support == BTreeSet::from([6, 10]), detail))
}

fn check_e7() -> Result<(bool, String)> {
    let cert = e7_obstruction(&RootSystem::build(TypeLabel::E, 7)?)?;
    let Facts::E7Hyperplane(f) = &cert.facts else {
        unreachable!()
    };
    let detail = format!(
        "self_dual={} hull={:?} max_facet={}",
        f.self_dual, f.hull.histogram, f.hull.max_facet_size
    );
    Ok((
        cert.verified && f.hull.support() == BTreeSet::from([7, 12]),
        detail,
    ))
}

/// Quadrangle relations on witnesses with at most 64 weights, and
/// `s² = -1` on every self-dual witness.
fn check_lemmas(max_rank: usize) -> Result<(bool, String)> {
    let minus_one = -&GaussianRational::one();
    let mut quads = 0usize;
    let mut bad = Vec::new();
    for (t, r, i) in classical_minuscule_cases(max_rank) {
        let rs = RootSystem::build(t, r)?;
        let w = classical_minuscule_witness(t, r, &rs.fundamental_weight(i)?)?;
        let ok = match &w.diag {
            Diagonal::Gaussian { group, .. } => {
                let squares = group.iter().all(|s| s * s == minus_one);
                let mut q_ok = true;
                if group.len() <= 64 {
                    for q in equal_sum_quadruples(&w.weights) {
                        quads += 1;
                        q_ok &= quadrangle_holds(&w.weights, group, q)?;
                    }
                }
                squares && q_ok
            }
            Diagonal::Quotient { group, .. } => {
                let mut q_ok = true;
                if group.len() <= 64 {
                    for q in equal_sum_quadruples(&w.weights) {
                        quads += 1;
                        q_ok &= quadrangle_holds(&w.weights, group, q)?;
                    }
                }
                q_ok
            }
        };
        if !ok {
            bad.push(format!("{t}{r} ϖ{i}"));
        }
    }
    Ok((
        bad.is_empty(),
        format!("{quads} quadruples, failed: [{}]", bad.join(", ")),
    ))
}
