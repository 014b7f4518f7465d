//! Structured results for verification suites: a report is a named run with
//! a pass/fail status and an exact listing of every mismatching entry.

use crate::spinspace::{SparseOperator, TensorVector};
use serde::Serialize;
use std::time::Instant;

/// One differing matrix or vector entry, with both sides rendered exactly.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Mismatch {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    pub row: String,
    pub col: String,
    pub lhs: String,
    pub rhs: String,
}

/// Result of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub model: Option<String>,
    #[serde(rename = "N")]
    pub n: Option<usize>,
    pub status: String,
    pub elapsed_ms: u64,
    pub mismatches: Vec<Mismatch>,
}

impl Report {
    /// Time a closure producing mismatches and wrap the outcome.
    pub fn run(
        suite: &str,
        model: Option<&str>,
        n: Option<usize>,
        body: impl FnOnce() -> Vec<Mismatch>,
    ) -> Report {
        let start = Instant::now();
        let mismatches = body();
        Report {
            suite: suite.to_string(),
            model: model.map(|s| s.to_string()),
            n,
            status: if mismatches.is_empty() {
                "pass".to_string()
            } else {
                "fail".to_string()
            },
            elapsed_ms: start.elapsed().as_millis() as u64,
            mismatches,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialization")
    }
}

/// Compare two operators entrywise; every differing entry becomes a mismatch.
pub fn op_mismatches(
    relation: Option<&str>,
    lhs: &SparseOperator,
    rhs: &SparseOperator,
) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let diff = lhs.sub(rhs);
    for (row, col, _) in diff.entries() {
        out.push(Mismatch {
            relation: relation.map(|s| s.to_string()),
            row: row.to_string(),
            col: col.to_string(),
            lhs: lhs.entry(&row, &col).to_string(),
            rhs: rhs.entry(&row, &col).to_string(),
        });
    }
    out
}

/// Compare two vectors entrywise.
pub fn vec_mismatches(
    relation: Option<&str>,
    lhs: &TensorVector,
    rhs: &TensorVector,
) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let diff = lhs.sub(rhs);
    for (w, _) in diff.iter() {
        out.push(Mismatch {
            relation: relation.map(|s| s.to_string()),
            row: w.to_string(),
            col: "-".to_string(),
            lhs: lhs.get(w).to_string(),
            rhs: rhs.get(w).to_string(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{MultiPoly, RatFunc, VarSet};
    use crate::spinspace::SpinWord;

    #[test]
    fn report_shape() {
        let r = Report::run("demo", Some("osc"), Some(2), Vec::new);
        assert!(r.passed());
        let v = r.to_json();
        assert_eq!(v["suite"], "demo");
        assert_eq!(v["model"], "osc");
        assert_eq!(v["N"], 2);
        assert_eq!(v["status"], "pass");
        assert!(v["mismatches"].as_array().unwrap().is_empty());
    }

    #[test]
    fn mismatch_listing() {
        let vs = VarSet::chain(1);
        let id = crate::spinspace::SparseOperator::identity(&vs, 1);
        let mut other = id.clone();
        other.set(
            SpinWord::parse("1"),
            SpinWord::parse("1"),
            RatFunc::from_poly(MultiPoly::t(&vs, 1)),
        );
        let ms = op_mismatches(Some("demo"), &id, &other);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].row, "1");
        assert_eq!(ms[0].lhs, "1");
        assert_eq!(ms[0].rhs, "t1");
    }
}
