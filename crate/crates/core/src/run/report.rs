use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::universe::{BuiltUniverse, Kind};
use super::{EXIT_FAIL, EXIT_PASS};
use crate::capacitor::{verify_capacitor, verify_corollary_main, verify_theorem_main, CapacitorViolation, CorollaryReport, LedgerEntry};
use crate::error::Result;
use crate::hulls::{is_complete, is_injective_polarity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Capacitor,
    Theorem,
    Corollary,
    Completion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunFlags {
    /// Run a single check; all of them when absent.
    pub only: Option<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionRow {
    pub object: String,
    pub size: Option<usize>,
    /// Complete relative to `H`.
    pub complete: bool,
    /// Injective in the positive monopole.
    pub injective: bool,
    pub completion: Option<String>,
    pub unit: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CapacitorVerdict {
    pub valid: bool,
    pub violations: Vec<CapacitorViolation>,
    pub existence_failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TheoremOutcome {
    Checked { passed: usize, ledger: Vec<LedgerEntry> },
    Unavailable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub kind: Kind,
    pub objects: usize,
    pub arrows: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub capacitor: Option<CapacitorVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_main: Option<TheoremOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corollary: Option<CorollaryReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub completions: Option<Vec<CompletionRow>>,
    /// Kept out of the rendered report so that output is reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.capacitor.as_ref().is_none_or(|c| c.valid)
            && self.theorem_main.as_ref().is_none_or(|t| match t {
                TheoremOutcome::Checked { passed, ledger } => *passed == ledger.len(),
                TheoremOutcome::Unavailable { .. } => false,
            })
            && self
                .corollary
                .as_ref()
                .is_none_or(|c| c.enough_injectives && c.complete_are_injective && c.injective_iff_complete)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

fn completion_table(u: &BuiltUniverse) -> Result<Vec<CompletionRow>> {
    let spec = &u.spec;
    let c = spec.category();
    let relative = spec.monopole.restrict(&spec.h)?;
    let polarity = spec.monopole.as_polarity();
    c.objects()
        .map(|x| {
            let entry = spec.family.get(x).copied().flatten();
            Ok(CompletionRow {
                object: c.object_name(x).to_string(),
                size: u.concrete.as_ref().map(|k| k.sizes[x]),
                complete: is_complete(&relative, x)?,
                injective: is_injective_polarity(&polarity, x)?,
                completion: entry.map(|e| c.object_name(c.tgt(e.unit)).to_string()),
                unit: entry.map(|e| c.arrow_name(e.unit).to_string()),
            })
        })
        .collect()
}

pub fn run_verification(u: &BuiltUniverse, flags: RunFlags) -> Result<RunReport> {
    let start = Instant::now();
    let wants = |check: Check| flags.only.is_none_or(|o| o == check);
    let spec = &u.spec;
    let c = spec.category();
    let capacitor = if wants(Check::Capacitor) || wants(Check::Theorem) {
        let report = verify_capacitor(spec);
        Some(CapacitorVerdict {
            valid: report.is_valid(),
            existence_failures: report.existence_failures().into_iter().map(|x| c.object_name(x).to_string()).collect(),
            violations: report.violations,
        })
    } else {
        None
    };
    let theorem_main = if wants(Check::Theorem) {
        Some(if capacitor.as_ref().is_some_and(|v| v.valid) {
            let ledger = verify_theorem_main(spec)?;
            TheoremOutcome::Checked {
                passed: ledger.passed(),
                ledger: ledger.entries,
            }
        } else {
            TheoremOutcome::Unavailable {
                reason: "capacitor is not valid".into(),
            }
        })
    } else {
        None
    };
    Ok(RunReport {
        kind: u.kind,
        objects: c.object_count(),
        arrows: c.arrow_count(),
        capacitor: capacitor.filter(|_| wants(Check::Capacitor)),
        theorem_main,
        corollary: if wants(Check::Corollary) { Some(verify_corollary_main(spec)?) } else { None },
        completions: if wants(Check::Completion) { Some(completion_table(u)?) } else { None },
        elapsed: start.elapsed(),
    })
}

pub fn render(report: &RunReport, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
        Format::Text => Ok(render_text(report)),
    }
}

fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "universe: {} ({} objects, {} arrows)", r.kind, r.objects, r.arrows);
    if let Some(cap) = &r.capacitor {
        let _ = writeln!(out, "capacitor: {}", if cap.valid { "valid" } else { "invalid" });
        if !cap.existence_failures.is_empty() {
            let _ = writeln!(out, "  no completion for: {}", cap.existence_failures.join(", "));
        }
        for v in &cap.violations {
            let _ = writeln!(out, "  {}", serde_json::to_string(v).unwrap_or_default());
        }
    }
    match &r.theorem_main {
        Some(TheoremOutcome::Checked { passed, ledger }) => {
            let _ = writeln!(out, "theorem_main: {passed}/{}", ledger.len());
            for e in ledger.iter().filter(|e| !e.holds) {
                let _ = writeln!(out, "  ({}) fails: {}", e.item, e.witness.as_deref().unwrap_or("no witness"));
            }
        }
        Some(TheoremOutcome::Unavailable { reason }) => {
            let _ = writeln!(out, "theorem_main: unavailable ({reason})");
        }
        None => {}
    }
    if let Some(c) = &r.corollary {
        let _ = writeln!(
            out,
            "corollary: enough_injectives={} complete_are_injective={} injective_iff_complete={} equivalent={}",
            c.enough_injectives, c.complete_are_injective, c.injective_iff_complete, c.equivalent
        );
    }
    if let Some(rows) = &r.completions {
        let _ = writeln!(out, "completions:");
        for row in rows {
            let hull = match (&row.completion, &row.unit) {
                (Some(t), Some(u)) => format!("{t} via {u}"),
                _ => "none".into(),
            };
            let _ = writeln!(
                out,
                "  {} -> {} (complete={}, injective={})",
                row.object, hull, row.complete, row.injective
            );
        }
    }
    out
}
