//! Run reports: one entry per check, printable as JSON or text.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// What was established, in a form another run can compare byte for byte.
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: Value) -> Self {
        Check {
            name: name.into(),
            status: Status::from_bool(ok),
            detail,
            witness: None,
        }
    }

    pub fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    /// Wall-clock milliseconds per check; only when asked for, since they
    /// break byte-identical reruns.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, u128>>,
    pub version: String,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.into(),
            inputs: BTreeMap::new(),
            checks: Vec::new(),
            timings: None,
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn with_timings(mut self) -> Self {
        self.timings = Some(BTreeMap::new());
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Runs `f`, records its checks and, if enabled, its time.
    pub fn timed(&mut self, label: &str, f: impl FnOnce() -> Vec<Check>) {
        let start = Instant::now();
        let checks = f();
        if let Some(t) = &mut self.timings {
            t.insert(label.into(), start.elapsed().as_millis());
        }
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value prints")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} (kn {})\n", self.command, self.version);
        for (k, v) in &self.inputs {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for c in &self.checks {
            out.push_str(&format!("{} {}: {}\n", c.status.label(), c.name, c.detail));
            if let Some(w) = &c.witness {
                out.push_str(&format!("    witness: {w}\n"));
            }
        }
        if let Some(t) = &self.timings {
            for (k, ms) in t {
                out.push_str(&format!("  time {k}: {ms} ms\n"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_keys_are_sorted_and_stable() {
        let mut r = RunReport::new("demo").input("zeta", 1).input("alpha", "x");
        r.push(Check::new("one", true, json!({"b": 1, "a": 2})));
        let s = r.to_json();
        assert!(s.find("\"alpha\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        assert_eq!(s, r.to_json());
        assert!(!s.contains("timings"));
    }
}
