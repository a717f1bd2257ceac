//! Seeded suite runner over the registered law checks.
//!
//! The runner is deterministic: the same seed yields the same inputs, the
//! same verdicts, and byte-identical reports. A certified-false verdict
//! aborts the run immediately and surfaces the counterexample.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{registry, CaseInputs, CheckOptions, CheckResult, LawCheck, Verdict};
use crate::dyadic::{Dyadic, Precision};
use crate::error::{Error, Result};

/// Configuration for one suite run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: u32,
    pub start_bits: u32,
    pub max_bits: u32,
    /// Empty means every registered check.
    pub selection: Vec<String>,
}

impl SuiteConfig {
    pub fn new(seed: u64, samples: u32, max_bits: u32) -> SuiteConfig {
        SuiteConfig {
            seed,
            samples,
            start_bits: 64.min(max_bits),
            max_bits,
            selection: Vec::new(),
        }
    }
}

/// One executed check instance.
#[derive(Debug, Clone)]
pub struct CaseRecord {
    pub check: &'static str,
    pub inputs: CaseInputs,
    pub result: CheckResult,
}

/// Aggregate over all instances of one check.
#[derive(Debug, Clone)]
pub struct CheckSummary {
    pub name: &'static str,
    pub cases: u32,
    pub certified: u32,
    pub inconclusive: u32,
    pub failed: u32,
    pub min_margin: Option<Dyadic>,
    pub max_bits_used: u32,
}

/// Full result of a suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub seed: u64,
    pub samples: u32,
    pub start_bits: u32,
    pub max_bits: u32,
    pub summaries: Vec<CheckSummary>,
    pub cases: Vec<CaseRecord>,
    pub counterexample: Option<CaseRecord>,
}

impl SuiteReport {
    pub fn total_inconclusive(&self) -> u32 {
        self.summaries.iter().map(|s| s.inconclusive).sum()
    }

    pub fn total_failed(&self) -> u32 {
        self.summaries.iter().map(|s| s.failed).sum()
    }

    pub fn all_certified(&self) -> bool {
        self.total_inconclusive() == 0 && self.total_failed() == 0
    }

    /// Line-oriented text rendering: one tally line per check plus a final
    /// status line. Deterministic for a given report.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite: seed={} samples={} start_bits={} max_bits={}\n",
            self.seed, self.samples, self.start_bits, self.max_bits
        ));
        for s in &self.summaries {
            let margin = match &s.min_margin {
                Some(m) => m.to_sci_string(6),
                None => "-".to_string(),
            };
            out.push_str(&format!(
                "check {}: cases={} certified={} inconclusive={} failed={} min_margin={} max_bits_used={}\n",
                s.name, s.cases, s.certified, s.inconclusive, s.failed, margin, s.max_bits_used
            ));
        }
        match &self.counterexample {
            Some(c) => out.push_str(&format!(
                "result: COUNTEREXAMPLE check={} inputs={} margin={}\n",
                c.check,
                c.inputs,
                c.result.margin.to_sci_string(6)
            )),
            None if self.total_inconclusive() > 0 => out.push_str(&format!(
                "result: inconclusive={} at cap\n",
                self.total_inconclusive()
            )),
            None => out.push_str("result: all-certified\n"),
        }
        out
    }

    /// Structured rendering with per-case records; margins are decimal
    /// strings, dyadic values round-trip exactly.
    pub fn to_json(&self) -> Value {
        let case_json = |c: &CaseRecord| {
            json!({
                "check": c.check,
                "inputs": c.inputs.to_string(),
                "verdict": c.result.verdict.to_string(),
                "margin": c.result.margin.to_sci_string(6),
                "precision_bits": c.result.precision_used.bits(),
            })
        };
        json!({
            "seed": self.seed,
            "samples": self.samples,
            "start_bits": self.start_bits,
            "max_bits": self.max_bits,
            "checks": self.summaries.iter().map(|s| json!({
                "name": s.name,
                "cases": s.cases,
                "certified": s.certified,
                "inconclusive": s.inconclusive,
                "failed": s.failed,
                "min_margin": s.min_margin.as_ref().map(|m| m.to_sci_string(6)),
                "max_bits_used": s.max_bits_used,
            })).collect::<Vec<_>>(),
            "cases": self.cases.iter().map(case_json).collect::<Vec<_>>(),
            "counterexample": self.counterexample.as_ref().map(case_json),
        })
    }
}

/// Runs every selected check against `samples` random admissible inputs.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    if config.samples < 1 {
        return Err(Error::Parameter("samples must be at least 1".into()));
    }
    let opts = CheckOptions::new(Precision::try_new(config.start_bits)?, config.max_bits)?;
    let checks: Vec<Box<dyn LawCheck>> = if config.selection.is_empty() {
        registry()
    } else {
        let mut picked = Vec::new();
        for name in &config.selection {
            let check = super::find(name).ok_or_else(|| {
                Error::Parameter(format!(
                    "unknown check {name:?}; known: {}",
                    super::names().join(", ")
                ))
            })?;
            picked.push(check);
        }
        picked
    };

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut summaries = Vec::new();
    let mut cases = Vec::new();
    let mut counterexample = None;

    'outer: for check in &checks {
        let mut summary = CheckSummary {
            name: check.name(),
            cases: 0,
            certified: 0,
            inconclusive: 0,
            failed: 0,
            min_margin: None,
            max_bits_used: 0,
        };
        for _ in 0..config.samples {
            let inputs = check.sample(&mut rng);
            let result = check.run(&inputs, &opts)?;
            summary.cases += 1;
            summary.max_bits_used = summary.max_bits_used.max(result.precision_used.bits());
            summary.min_margin = Some(match summary.min_margin.take() {
                Some(m) => m.min(result.margin.clone()),
                None => result.margin.clone(),
            });
            let record = CaseRecord {
                check: check.name(),
                inputs,
                result,
            };
            match record.result.verdict {
                Verdict::CertifiedTrue => summary.certified += 1,
                Verdict::Inconclusive => summary.inconclusive += 1,
                Verdict::CertifiedFalse => {
                    summary.failed += 1;
                    counterexample = Some(record.clone());
                    cases.push(record);
                    summaries.push(summary);
                    break 'outer;
                }
            }
            cases.push(record);
        }
        summaries.push(summary);
    }

    Ok(SuiteReport {
        seed: config.seed,
        samples: config.samples,
        start_bits: config.start_bits,
        max_bits: config.max_bits,
        summaries,
        cases,
        counterexample,
    })
}
