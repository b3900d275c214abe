//! Machine-readable reports and their JSON/text rendering.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use locdual::groebner::Submodule;
use locdual::ring::{Polynomial, RingMatrix, RingVector};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub ring: String,
    pub inputs: BTreeMap<String, Value>,
    pub seed: u64,
    pub certified: bool,
    pub result: Value,
    pub witnesses: Vec<Value>,
    /// Theorem checks; any `false` is reported with exit code 1.
    pub verdicts: BTreeMap<String, bool>,
    pub timings_ms: BTreeMap<String, f64>,
}

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    TheoremFailure = 1,
    InputError = 2,
}

impl Report {
    pub fn status(&self) -> Status {
        if self.result.get("error").is_some() {
            Status::InputError
        } else if self.verdicts.values().all(|&v| v) {
            Status::Ok
        } else {
            Status::TheoremFailure
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The JSON value with `timings_ms` removed, for reproducibility checks.
    pub fn without_timings(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        if let Value::Object(m) = &mut v {
            m.remove("timings_ms");
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} over {} (seed {})\n", self.command, self.ring, self.seed);
        for (k, v) in &self.inputs {
            out.push_str(&format!("  input {k}: {}\n", compact(v)));
        }
        out.push_str(&format!("  certified: {}\n", self.certified));
        if let Value::Object(m) = &self.result {
            for (k, v) in m {
                out.push_str(&format!("  {k}: {}\n", compact(v)));
            }
        }
        for w in &self.witnesses {
            out.push_str(&format!("  witness: {}\n", compact(w)));
        }
        for (k, v) in &self.verdicts {
            out.push_str(&format!("  [{}] {k}\n", if *v { "pass" } else { "FAIL" }));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn poly_json(p: &Polynomial) -> Value {
    Value::String(p.to_string())
}

pub fn vector_json(v: &RingVector) -> Value {
    Value::Array(v.entries().iter().map(poly_json).collect())
}

/// Rows of a matrix.
pub fn matrix_json(m: &RingMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_json(&m.row(i))).collect())
}

fn lead_cmp(a: &Polynomial, b: &Polynomial) -> Ordering {
    match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => a.ring().order().cmp(y, x),
        (x, y) => x.is_none().cmp(&y.is_none()),
    }
}

/// A generator set, largest leading monomial first.
pub fn sorted_polys_json(ps: &[Polynomial]) -> Value {
    let mut v = ps.to_vec();
    v.sort_by(lead_cmp);
    polys_json(&v)
}

/// Generators of a submodule, reduced and sorted: polynomials for ideals,
/// column vectors otherwise (ordered by first nonzero position).
pub fn submodule_json(s: &Submodule) -> Value {
    let reduced = s.reduced();
    if reduced.rank() == 1 {
        return sorted_polys_json(&reduced.ideal_generators());
    }
    let mut gens = reduced.generators();
    let key = |v: &RingVector| v.entries().iter().position(|e| !e.is_zero()).unwrap_or(usize::MAX);
    gens.sort_by(|a, b| {
        let (i, j) = (key(a), key(b));
        i.cmp(&j).then_with(|| if i == usize::MAX { Ordering::Equal } else { lead_cmp(a.get(i), b.get(i)) })
    });
    Value::Array(gens.iter().map(vector_json).collect())
}

pub fn polys_json(ps: &[Polynomial]) -> Value {
    Value::Array(ps.iter().map(poly_json).collect())
}

pub fn error_value(kind: &str, message: &str) -> Value {
    json!({ "error": kind, "message": message })
}
