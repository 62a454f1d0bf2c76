use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::checks::{find_check, list_checks, Check, Mode, Verdict};
use super::family::generate_family;
use super::instance::Instance;
use super::witness::Witness;
use crate::algebra::SizeGuard;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub mode: Mode,
    pub instance: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Wall-clock time, recorded only when timing is requested so that
    /// reports stay byte-identical across runs.
    pub millis: u64,
}

impl CheckResult {
    /// A failed strict check.
    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Fail && self.mode == Mode::Strict
    }

    /// A counterexample from a report-mode check.
    pub fn is_finding(&self) -> bool {
        self.verdict == Verdict::Fail && self.mode == Mode::Report
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub findings: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub family: String,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    pub status: String,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }

    /// Results that failed, strict failures first.
    pub fn counterexamples(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.verdict == Verdict::Fail)
    }
}

/// How a run treats checks and findings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct SuiteOptions {
    pub guard: SizeGuard,
    /// Count report-mode findings as failures.
    pub fail_on_findings: bool,
    pub timing: bool,
}

/// Resolves `all`, `strict`, `report` or a comma-separated id list.
pub fn select_checks(selection: &str) -> Result<Vec<&'static Check>> {
    let registry = list_checks().iter();
    match selection.trim().to_ascii_lowercase().as_str() {
        "all" | "" => Ok(registry.collect()),
        "strict" => Ok(registry.filter(|c| c.mode == Mode::Strict).collect()),
        "report" => Ok(registry.filter(|c| c.mode == Mode::Report).collect()),
        _ => selection
            .split(',')
            .map(|id| find_check(id).ok_or_else(|| Error::UnknownCheck(id.trim().to_string())))
            .collect(),
    }
}

fn evaluate(check: &Check, instance: &Instance, timing: bool) -> CheckResult {
    let start = Instant::now();
    let outcome = check.evaluate(instance);
    CheckResult {
        check: check.id.to_string(),
        mode: check.mode,
        instance: instance.descriptor(),
        verdict: outcome.verdict,
        witness: outcome.witness,
        detail: outcome.detail,
        millis: if timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
    }
}

pub fn run_check(id: &str, instance: &Instance) -> Result<CheckResult> {
    let check = find_check(id).ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
    Ok(evaluate(check, instance, false))
}

pub fn build_instances(family: &str, guard: SizeGuard) -> Result<Vec<Instance>> {
    generate_family(family, guard)?
        .par_iter()
        .map(|m| Instance::new(m, guard))
        .collect()
}

/// Evaluates every selected check on every prepared instance, in family
/// order and then registry order.
pub fn run_on_instances(
    family: &str,
    selection: &str,
    instances: &[Instance],
    options: SuiteOptions,
) -> Result<CheckReport> {
    let checks = select_checks(selection)?;
    let results: Vec<CheckResult> = instances
        .par_iter()
        .flat_map_iter(|instance| {
            checks
                .iter()
                .map(|check| evaluate(check, instance, options.timing))
                .collect::<Vec<_>>()
        })
        .collect();

    let mut summary = Summary::default();
    for r in &results {
        match r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::NotApplicable => summary.not_applicable += 1,
            Verdict::Fail if r.mode == Mode::Report => {
                summary.findings += 1;
                if options.fail_on_findings {
                    summary.fail += 1;
                }
            }
            Verdict::Fail => summary.fail += 1,
        }
    }
    Ok(CheckReport {
        suite: selection.trim().to_string(),
        family: family.trim().to_string(),
        results,
        status: if summary.fail == 0 {
            "passed"
        } else {
            "failed"
        }
        .to_string(),
        summary,
    })
}

pub fn run_suite(family: &str, selection: &str, options: SuiteOptions) -> Result<CheckReport> {
    select_checks(selection)?;
    let instances = build_instances(family, options.guard)?;
    run_on_instances(family, selection, &instances, options)
}
