//! Verification reports shared by the check routines and the CLI.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::exact_arith::{render_rational, Rational};

/// JSON schema version stamped on every report.
pub const SCHEMA_VERSION: u32 = 1;

/// Failures kept per report; the status is decided before truncation.
pub const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub n: i64,
    pub m: Option<i64>,
    pub expected: String,
    pub actual: String,
    pub context: String,
}

impl Failure {
    pub fn at(n: i64, expected: impl ToString, actual: impl ToString, context: impl Into<String>) -> Self {
        Self {
            n,
            m: None,
            expected: expected.to_string(),
            actual: actual.to_string(),
            context: context.into(),
        }
    }

    pub fn pair(
        n: i64,
        m: i64,
        expected: impl ToString,
        actual: impl ToString,
        context: impl Into<String>,
    ) -> Self {
        Self {
            m: Some(m),
            ..Self::at(n, expected, actual, context)
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "n": self.n,
            "expected": self.expected,
            "actual": self.actual,
            "context": self.context,
        });
        if let Some(m) = self.m {
            obj["m"] = json!(m);
        }
        obj
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub proposition: String,
    pub params: BTreeMap<String, String>,
    pub max_n: u64,
    pub failures: Vec<Failure>,
    /// Total number of failed checks, including ones not recorded.
    pub failure_count: usize,
    pub checks: u64,
    pub elapsed_ms: u64,
    pub skipped: bool,
    started: Option<Instant>,
}

impl Report {
    pub fn new(proposition: impl Into<String>, max_n: u64) -> Self {
        Self {
            proposition: proposition.into(),
            params: BTreeMap::new(),
            max_n,
            failures: Vec::new(),
            failure_count: 0,
            checks: 0,
            elapsed_ms: 0,
            skipped: false,
            started: Some(Instant::now()),
        }
    }

    pub fn with_params(mut self, a: &Rational, b: &Rational) -> Self {
        self.params.insert("a".into(), render_rational(a));
        self.params.insert("b".into(), render_rational(b));
        self
    }

    pub fn with_param(mut self, key: &str, value: impl Into<String>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }

    /// Records one check; `failure` is only built when `ok` is false.
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) -> bool {
        self.checks += 1;
        if !ok {
            self.record(failure());
        }
        ok
    }

    pub fn record(&mut self, failure: Failure) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(failure);
        }
    }

    /// Folds another report's checks and failures into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(f);
            }
        }
    }

    pub fn skip(mut self) -> Self {
        self.skipped = true;
        self
    }

    /// Stops the clock.
    pub fn finish(mut self) -> Self {
        if let Some(start) = self.started.take() {
            self.elapsed_ms = start.elapsed().as_millis() as u64;
        }
        self
    }

    pub fn status(&self) -> Status {
        if self.failure_count > 0 {
            Status::Fail
        } else if self.skipped {
            Status::Skipped
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    /// JSON object with sorted keys (serde_json's default map is ordered).
    pub fn to_json(&self, with_timing: bool) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "proposition": self.proposition,
            "params": self.params,
            "max_n": self.max_n,
            "status": self.status(),
            "checks": self.checks,
            "failures": self.failures.iter().map(Failure::to_json).collect::<Vec<_>>(),
            "elapsed_ms": if with_timing { self.elapsed_ms } else { 0 },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int_rational;

    #[test]
    fn status_tracks_failures() {
        let mut r = Report::new("2.8", 10).with_params(&int_rational(2), &int_rational(1));
        assert!(r.check(true, || unreachable!()));
        assert_eq!(r.status(), Status::Pass);
        r.check(false, || Failure::at(3, 4, 5, "trace"));
        assert_eq!(r.status(), Status::Fail);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.checks, 2);
    }

    #[test]
    fn failures_are_capped_but_counted() {
        let mut r = Report::new("x", 0);
        for n in 0..50 {
            r.check(false, || Failure::at(n, 0, 1, ""));
        }
        assert_eq!(r.failures.len(), MAX_RECORDED_FAILURES);
        assert_eq!(r.failure_count, 50);
    }

    #[test]
    fn json_shape_is_sorted_and_stable() {
        let r = Report::new("2.8", 100)
            .with_params(&int_rational(2), &int_rational(1))
            .finish();
        let text = serde_json::to_string(&r.to_json(false)).unwrap();
        assert_eq!(
            text,
            r#"{"checks":0,"elapsed_ms":0,"failures":[],"max_n":100,"params":{"a":"2","b":"1"},"proposition":"2.8","schema":1,"status":"pass"}"#
        );
    }

    #[test]
    fn pairwise_failure_carries_m() {
        let f = Failure::pair(1, 2, "0", "1", "commutator");
        let v = f.to_json();
        assert_eq!(v["m"], json!(2));
        assert!(Failure::at(1, 0, 0, "").to_json().get("m").is_none());
    }
}
