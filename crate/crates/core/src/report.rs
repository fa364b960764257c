//! Check reports with a stable text rendering (sorted keys) and JSON.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::oracle::{EquivalenceVerdict, Tier};

/// Outcome of one check. Every outcome carries a conclusiveness flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub name: String,
    pub passed: bool,
    pub conclusive: bool,
    pub tier: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// The check stands in for a stronger condition it cannot certify.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub partial: bool,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl Outcome {
    pub fn from_verdict(name: impl Into<String>, v: &EquivalenceVerdict) -> Self {
        let (tier, level, witness) = match &v.tier {
            Tier::ExactIso => ("exact_iso", None, None),
            Tier::ExactGroupoid => ("exact_groupoid", None, None),
            Tier::NecessaryPass { level } => ("necessary_pass", Some(*level), None),
            Tier::Fail { witness } => ("fail", None, Some(witness.clone())),
        };
        Outcome {
            name: name.into(),
            passed: v.is_pass(),
            conclusive: v.conclusive,
            tier: tier.into(),
            level,
            witness,
            partial: false,
            details: BTreeMap::new(),
        }
    }

    /// A decided yes/no check.
    pub fn decided(name: impl Into<String>, passed: bool, witness: Option<String>) -> Self {
        Outcome {
            name: name.into(),
            passed,
            conclusive: true,
            tier: if passed { "pass" } else { "fail" }.into(),
            level: None,
            witness,
            partial: false,
            details: BTreeMap::new(),
        }
    }

    /// A check that could not be decided (budget, truncation).
    pub fn inconclusive(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Outcome {
            name: name.into(),
            passed: false,
            conclusive: false,
            tier: "inconclusive".into(),
            level: None,
            witness: Some(reason.into()),
            partial: false,
            details: BTreeMap::new(),
        }
    }

    pub fn with_level(mut self, level: usize) -> Self {
        self.level = Some(level);
        self
    }
    pub fn partial(mut self) -> Self {
        self.partial = true;
        self
    }
    pub fn detail(mut self, key: &str, value: impl Serialize) -> Self {
        self.details.insert(key.into(), serde_json::to_value(value).expect("serializable detail"));
        self
    }

    pub fn is_failure(&self) -> bool {
        self.conclusive && !self.passed
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub command: String,
    pub outcomes: Vec<Outcome>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Value>,
}

impl CheckReport {
    pub fn new(command: impl Into<String>) -> Self {
        CheckReport { command: command.into(), outcomes: Vec::new(), notes: Vec::new(), data: BTreeMap::new() }
    }

    pub fn push(&mut self, o: Outcome) {
        self.outcomes.push(o);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn data(&mut self, key: &str, value: impl Serialize) {
        self.data.insert(key.into(), serde_json::to_value(value).expect("serializable data"));
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.outcomes.extend(other.outcomes);
        self.notes.extend(other.notes);
        self.data.extend(other.data);
    }

    /// 0: every outcome a conclusive pass; 1: some conclusive failure;
    /// 2: otherwise inconclusive.
    pub fn exit_code(&self) -> i32 {
        if self.outcomes.iter().any(Outcome::is_failure) {
            1
        } else if self.outcomes.iter().any(|o| !o.conclusive) {
            2
        } else {
            0
        }
    }

    pub fn all_passed(&self) -> bool {
        self.exit_code() == 0
    }

    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("json") + "\n"
    }

    /// Indented `key: value` text with keys in sorted order; lists use `-`.
    pub fn to_text(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut out = String::new();
        render(&v, 0, &mut out);
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => {
            if s.is_empty() || s.contains(['\n', ':', '#']) || s.starts_with(['-', ' ', '"']) || s.ends_with(' ') {
                serde_json::to_string(s).unwrap()
            } else {
                s.clone()
            }
        }
        other => other.to_string(),
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(m) if !m.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(val, indent + 1, out);
                    }
                    Value::Array(a) if !a.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(val, indent + 1, out);
                    }
                    Value::Object(_) => out.push_str(&format!("{pad}{k}: {{}}\n")),
                    Value::Array(_) => out.push_str(&format!("{pad}{k}: []\n")),
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(m) if !m.is_empty() => {
                        let mut inner = String::new();
                        render(item, indent + 1, &mut inner);
                        // first line carries the dash
                        let body = inner.trim_start_matches(' ');
                        out.push_str(&format!("{pad}- {body}"));
                    }
                    Value::Array(a) if !a.is_empty() => {
                        out.push_str(&format!("{pad}-\n"));
                        render(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_is_sorted_and_stable() {
        let mut r = CheckReport::new("check-segal");
        r.push(Outcome::from_verdict("xi_2", &EquivalenceVerdict::exact_iso()));
        r.push(Outcome::decided("hoequiv", false, Some("[u]".into())).detail("classes", 3));
        let t = r.to_text();
        assert!(t.starts_with("command: check-segal\noutcomes:\n  - conclusive: true\n"));
        assert!(t.contains("    witness: \"[u]\"") || t.contains("    witness: [u]"));
        assert_eq!(t, r.clone().to_text());
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn exit_codes() {
        let mut r = CheckReport::new("x");
        r.push(Outcome::from_verdict("a", &EquivalenceVerdict::exact_iso()));
        assert_eq!(r.exit_code(), 0);
        r.push(Outcome::from_verdict("b", &EquivalenceVerdict::necessary(1)));
        assert_eq!(r.exit_code(), 2);
        r.push(Outcome::from_verdict("c", &EquivalenceVerdict::fail("no")));
        assert_eq!(r.exit_code(), 1);
    }
}
