//! Run reports in JSON and text form.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};
use weakhopf::exactlin::Field;
use weakhopf::report::{AxiomReport, Check};

use crate::doc::witness_json;

/// Keys of the dimensions table, in output order for the text format.
pub const DIMENSIONS: [&str; 6] = ["H", "H_t", "A", "A#H", "(A#H)#H*", "commutant"];

#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub input_digest: Vec<String>,
    pub field: Field,
    /// `(suite, check)` in execution order.
    pub checks: Vec<(String, Check)>,
    pub dimensions: BTreeMap<&'static str, usize>,
    pub flags: BTreeMap<String, bool>,
    /// Command-specific JSON members.
    pub extra: BTreeMap<String, Value>,
    pub timing_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: &str, field: Field) -> RunReport {
        RunReport {
            command: command.into(),
            input_digest: Vec::new(),
            field,
            checks: Vec::new(),
            dimensions: BTreeMap::new(),
            flags: BTreeMap::new(),
            extra: BTreeMap::new(),
            timing_ms: None,
        }
    }

    pub fn push(&mut self, suite: &str, check: Check) {
        self.checks.push((suite.into(), check));
    }

    /// Appends a suite; returns whether it passed.
    pub fn suite(&mut self, suite: &str, report: AxiomReport) -> bool {
        let ok = report.passed();
        for c in report.checks {
            self.push(suite, c);
        }
        for (k, v) in report.flags {
            self.flags.insert(k, v);
        }
        ok
    }

    pub fn dim(&mut self, key: &'static str, value: usize) {
        debug_assert!(DIMENSIONS.contains(&key));
        self.dimensions.insert(key, value);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, c)| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn checks_json(&self) -> Value {
        Value::Array(
            self.checks
                .iter()
                .map(|(suite, c)| {
                    json!({
                        "suite": suite,
                        "name": c.name,
                        "passed": c.passed,
                        "witness": c.witness.as_ref().map(witness_json),
                    })
                })
                .collect(),
        )
    }

    pub fn to_json(&self) -> Value {
        let dims: serde_json::Map<String, Value> = DIMENSIONS
            .iter()
            .map(|k| (k.to_string(), self.dimensions.get(k).map_or(Value::Null, |d| json!(d))))
            .collect();
        let mut out = json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "field": self.field.to_string(),
            "checks": self.checks_json(),
            "dimensions": dims,
            "flags": self.flags,
            "verdict": if self.passed() { "pass" } else { "fail" },
        });
        let obj = out.as_object_mut().expect("object literal");
        for (k, v) in &self.extra {
            obj.insert(k.clone(), v.clone());
        }
        if let Some(t) = self.timing_ms {
            obj.insert("timing_ms".into(), json!(t));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        for d in &self.input_digest {
            let _ = writeln!(s, "input: {d}");
        }
        let _ = writeln!(s, "field: {}", self.field);
        for (suite, c) in &self.checks {
            match (&c.passed, &c.witness) {
                (true, _) => {
                    let _ = writeln!(s, "PASS {suite}/{}", c.name);
                }
                (false, Some(w)) => {
                    let _ = writeln!(s, "FAIL {suite}/{} {w}", c.name);
                }
                (false, None) => {
                    let _ = writeln!(s, "FAIL {suite}/{}", c.name);
                }
            }
        }
        let dims: Vec<String> = DIMENSIONS
            .iter()
            .filter_map(|k| self.dimensions.get(k).map(|d| format!("{k}={d}")))
            .collect();
        if !dims.is_empty() {
            let _ = writeln!(s, "dimensions: {}", dims.join(" "));
        }
        for (k, v) in &self.flags {
            let _ = writeln!(s, "{k}: {v}");
        }
        for (k, v) in &self.extra {
            let _ = writeln!(s, "{k}: {v}");
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(s, "timing_ms: {t}");
        }
        let _ = writeln!(s, "verdict: {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}
