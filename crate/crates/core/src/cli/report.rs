//! Machine reports (`darboux-report/1`) and the human rendering derived
//! from them.
//!
//! A report is a JSON object with sorted keys. Rationals are strings
//! (`"3/2"`), vectors are arrays of rationals, subspaces are arrays of
//! basis vectors in reduced echelon form, and index sets are 1-based.

use serde_json::{json, Map, Value};

use crate::linalg::{format_rat, Mat, Subspace};
use crate::normal_form::{DarbouxReport, Splitting};
use crate::verifier::{Classification, Params, Verdict, Witness};

pub const SCHEMA: &str = "darboux-report/1";

pub fn vector(v: &[crate::linalg::Rat]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_rat(x))).collect())
}

pub fn subspace(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| vector(v)).collect())
}

pub fn matrix(m: &Mat) -> Value {
    Value::Array(m.row_vectors().iter().map(|v| vector(v)).collect())
}

pub fn params(p: &Params) -> Value {
    serde_json::to_value(p).expect("params serialize")
}

fn witness(w: &Witness) -> Value {
    match w {
        Witness::Vector(v) => json!({ "vector": vector(v) }),
        Witness::Subspace(s) => json!({ "subspace": subspace(s) }),
        Witness::Note(n) => json!({ "note": n }),
    }
}

pub fn verdict(v: &Verdict) -> Value {
    let clauses: Vec<Value> = v
        .clauses
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("name".into(), json!(c.name));
            m.insert("citation".into(), json!(c.citation));
            m.insert("passed".into(), json!(c.passed));
            if let Some(w) = &c.witness {
                m.insert("witness".into(), witness(w));
            }
            Value::Object(m)
        })
        .collect();
    json!({
        "kind": v.kind.name(),
        "accepted": v.accepted,
        "params": params(&v.params),
        "clauses": clauses,
    })
}

pub fn classification(c: &Classification) -> Value {
    json!({
        "requested": c.requested.map_or("unknown", |k| k.name()),
        "accepted": c.accepted(),
        "accepted_kinds": c.accepted_kinds().iter().map(|k| k.name()).collect::<Vec<_>>(),
        "verdicts": c.verdicts.iter().map(verdict).collect::<Vec<_>>(),
    })
}

fn splitting(s: &Splitting) -> Value {
    json!({
        "parts": s.parts.iter().map(subspace).collect::<Vec<_>>(),
        "d": subspace(&s.d),
    })
}

pub fn darboux(r: &DarbouxReport) -> Value {
    let t = &r.template;
    let mut tpl = Map::new();
    tpl.insert("kind".into(), json!(t.kind().name()));
    tpl.insert("dim".into(), json!(t.dim()));
    tpl.insert("k".into(), json!(t.k()));
    tpl.insert("n".into(), json!(t.n()));
    tpl.insert("r".into(), json!(t.r_alpha()));
    tpl.insert("d".into(), json!(t.d()));
    if let Some(sets) = r.index_sets() {
        let one_based: Vec<Vec<usize>> = sets
            .iter()
            .map(|s| s.iter().map(|i| i + 1).collect())
            .collect();
        tpl.insert("index_sets".into(), json!(one_based));
    }
    let mut m = Map::new();
    m.insert("verified".into(), json!(r.verified));
    m.insert("template".into(), Value::Object(tpl));
    m.insert("frame".into(), matrix(r.frame.matrix()));
    if let Some(reeb) = &r.reeb {
        m.insert(
            "reeb".into(),
            Value::Array(reeb.iter().map(|v| vector(v)).collect()),
        );
    }
    if let Some(f) = &r.reeb_freedom {
        m.insert("reeb_freedom".into(), subspace(f));
    }
    if let Some(s) = &r.splitting {
        m.insert("splitting".into(), splitting(s));
    }
    Value::Object(m)
}

/// Wraps a command body with the schema tag and command name.
pub fn envelope(command: &str, body: Value) -> Value {
    let mut m = match body {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("result".into(), other);
            m
        }
    };
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    Value::Object(m)
}

pub fn machine(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.is_empty() => Some("none".into()),
        Value::Array(a)
            if a.iter()
                .all(|x| matches!(x, Value::String(_) | Value::Number(_))) =>
        {
            Some(format!(
                "({})",
                a.iter()
                    .map(|x| scalar(x).unwrap_or_default())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        }
        _ => None,
    }
}

fn render(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                render(out, k, x, indent + 1);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                render(out, &format!("[{}]", i + 1), x, indent + 1);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

/// Indented `key: value` outline of a machine report.
pub fn human(report: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(m) = report {
        for (k, v) in m {
            if k != "schema" {
                render(&mut out, k, v, 0);
            }
        }
    }
    out
}
