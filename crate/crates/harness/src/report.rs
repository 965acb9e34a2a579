//! Text and JSON rendering. JSON keys keep insertion order, so output is byte-stable.

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use crate::checks::{CheckReport, Outcome, Verdict};
use crate::fuzz::CampaignReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

/// An ordered list of named observations about one instance, plus the checks run on it.
#[derive(Clone, Debug, Default)]
pub struct Analysis {
    pub items: Vec<(String, Value)>,
    pub checks: Vec<CheckReport>,
}

impl Analysis {
    pub fn put(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.items.push((key.into(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.items.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn to_value(&self) -> Value {
        let items: Map<String, Value> = self.items.iter().cloned().collect();
        json!({
            "analysis": items,
            "checks": self.checks.iter().map(check_value).collect::<Vec<_>>(),
        })
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(plain).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn outcome_label(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "FAIL",
        Outcome::HypothesisUnmet => "hypothesis unmet",
    }
}

pub fn check_value(r: &CheckReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn verdict_lines(out: &mut String, label: &str, vs: &[Verdict]) {
    for v in vs {
        out.push_str(&format!("  {label} {}: {}\n", v.name, v.value));
    }
}

pub fn check_text(r: &CheckReport) -> String {
    let mut out = format!("check {}: {}\n", r.check, outcome_label(r.outcome));
    out.push_str(&format!("  digest {}\n", r.digest));
    verdict_lines(&mut out, "hypothesis", &r.hypotheses);
    verdict_lines(&mut out, "conclusion", &r.conclusions);
    verdict_lines(&mut out, "fact", &r.facts);
    for doc in &r.counterexample {
        out.push_str(&format!("  counterexample {}\n", doc.to_json_compact()));
    }
    out
}

pub fn render_check(r: &CheckReport, fmt: ReportFormat) -> String {
    match fmt {
        ReportFormat::Text => check_text(r),
        ReportFormat::Json => pretty(&check_value(r)),
    }
}

pub fn render_analysis(a: &Analysis, fmt: ReportFormat) -> String {
    match fmt {
        ReportFormat::Json => pretty(&a.to_value()),
        ReportFormat::Text => {
            let mut out = String::new();
            for (k, v) in &a.items {
                out.push_str(&format!("{k}: {}\n", plain(v)));
            }
            for r in &a.checks {
                out.push_str(&check_text(r));
            }
            out
        }
    }
}

pub fn render_campaign(c: &CampaignReport, fmt: ReportFormat) -> String {
    match fmt {
        ReportFormat::Json => pretty(&serde_json::to_value(c).expect("reports serialize")),
        ReportFormat::Text => {
            let mut out = format!(
                "fuzz {}: seed {}, trials {}, dim-max {}\n",
                c.lemma, c.seed, c.trials, c.dim_max
            );
            out.push_str(&format!("hypothesis met: {}\n", c.hypothesis_met));
            out.push_str(&format!("passed: {}\n", c.passed));
            out.push_str(&format!("failed: {}\n", c.failed));
            out.push_str(&format!("errors: {}\n", c.errors.len()));
            out.push_str(&format!("digest: {}\n", c.digest));
            for e in &c.errors {
                out.push_str(&format!("error in trial {}: {}\n", e.trial, e.message));
            }
            for r in &c.failures {
                out.push_str(&check_text(r));
            }
            if c.lemma == "z3-search" {
                out.push_str(&format!("irreducible found: {}\n", c.found.len()));
                for r in &c.found {
                    out.push_str(&check_text(r));
                }
            }
            out
        }
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
