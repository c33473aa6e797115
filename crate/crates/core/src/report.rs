//! Check reports: instance counts, failures with replayable instance ids,
//! and a note on the level at which a check compares structures.

use serde::Serialize;

use crate::exactmath::{format_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    pub detail: String,
}

impl Failure {
    pub fn new(instance: impl Into<String>, detail: impl Into<String>) -> Self {
        Failure {
            instance: instance.into(),
            lhs: None,
            rhs: None,
            detail: detail.into(),
        }
    }

    pub fn unequal(instance: impl Into<String>, lhs: &Rational, rhs: &Rational, detail: impl Into<String>) -> Self {
        Failure {
            instance: instance.into(),
            lhs: Some(format_rational(lhs)),
            rhs: Some(format_rational(rhs)),
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub scope_note: String,
    /// Informational output that does not decide pass or fail.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<serde_json::Value>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, scope_note: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            instances: 0,
            failures: Vec::new(),
            scope_note: scope_note.into(),
            notes: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Counts one instance and keeps its failure, if any.
    pub fn record(&mut self, failure: Option<Failure>) {
        self.instances += 1;
        self.failures.extend(failure);
    }

    /// Records an exact comparison of two rationals.
    pub fn compare(&mut self, instance: &str, lhs: &Rational, rhs: &Rational, detail: &str) {
        let fail = (lhs != rhs).then(|| Failure::unequal(instance, lhs, rhs, detail));
        self.record(fail);
    }

    pub fn require(&mut self, instance: &str, ok: bool, detail: impl FnOnce() -> String) {
        let fail = (!ok).then(|| Failure::new(instance, detail()));
        self.record(fail);
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn report_json_shape() {
        let mut r = CheckReport::new("ext-cardinality", "object/cardinality level");
        r.compare("a", &rat(2, 1), &rat(2, 1), "");
        r.compare("b", &rat(1, 2), &rat(2, 4), "");
        r.compare("c", &rat(-3, 1), &rat(1, 1), "sides differ");
        assert_eq!(r.instances, 3);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["failures"][0]["instance"], "c");
        assert_eq!(v["failures"][0]["lhs"], "-3/1");
        assert_eq!(v["scope_note"], "object/cardinality level");
        assert!(!r.passed());
    }
}
