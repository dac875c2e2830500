//! Outcome assembly and rendering for the command line.
//!
//! Every subcommand produces an [`Outcome`]: an exit code, a human
//! text rendering, and a JSON value. The JSON carries a versioned
//! envelope (`schema: 1`) and is byte-deterministic for a fixed
//! (file, flags, seed) triple: maps are emitted with sorted keys and
//! no structure depends on iteration order or file paths.

use crate::ast::{Diagnostic, Severity};
use quantakit::enriched::{Distributor, QCategory, QFunctor};
use quantakit::laws::LawReport;
use quantakit::matrixcalc::QMatrix;
use serde_json::{json, Map, Value};
use std::fmt::Write as _;

pub struct Outcome {
    pub exit: i32,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    /// Wrap a verb's result in the versioned envelope; `body` fields
    /// are merged next to `schema`, `verb` and `ok`.
    pub fn new(exit: i32, verb: &str, text: impl Into<String>, body: Value) -> Outcome {
        let mut obj = Map::new();
        obj.insert("schema".into(), json!(1));
        obj.insert("verb".into(), json!(verb));
        obj.insert("ok".into(), json!(exit == 0));
        if let Value::Object(fields) = body {
            for (k, v) in fields {
                obj.insert(k, v);
            }
        }
        Outcome { exit, text: text.into(), json: Value::Object(obj) }
    }
}

/// Diagnostics for stderr, one `path:line:col: severity: message`
/// line each, with the fix hint indented below.
pub fn render_diagnostics(path: &str, diags: &[Diagnostic]) -> String {
    let mut out = String::new();
    for d in diags {
        let sev = match d.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        let _ = writeln!(out, "{path}:{}:{}: {sev}: {}", d.span.line, d.span.col, d.message);
        if let Some(h) = &d.hint {
            let _ = writeln!(out, "  hint: {h}");
        }
    }
    out
}

pub fn functor_value(f: &QFunctor) -> Value {
    let map: Vec<Value> = (0..f.dom().object_count())
        .map(|a| json!([f.dom().name(a), f.cod().name(f.apply(a))]))
        .collect();
    json!({
        "dom": f.dom().objects().names,
        "cod": f.cod().objects().names,
        "map": map,
    })
}

pub fn functor_text(f: &QFunctor) -> String {
    let mut out = String::new();
    for a in 0..f.dom().object_count() {
        let _ = writeln!(out, "  {} -> {}", f.dom().name(a), f.cod().name(f.apply(a)));
    }
    out
}

pub fn dist_value(phi: &Distributor) -> Value {
    let q = phi.base();
    let entries: Vec<Value> = (0..phi.cod().object_count())
        .flat_map(|b| {
            (0..phi.dom().object_count()).map(move |a| (b, a))
        })
        .map(|(b, a)| {
            json!([phi.cod().name(b), phi.dom().name(a), q.arrow_label(phi.entry(b, a))])
        })
        .collect();
    json!({
        "dom": phi.dom().objects().names,
        "cod": phi.cod().objects().names,
        "entries": entries,
    })
}

pub fn dist_text(phi: &Distributor) -> String {
    let q = phi.base();
    let mut out = String::new();
    for b in 0..phi.cod().object_count() {
        for a in 0..phi.dom().object_count() {
            let _ = writeln!(
                out,
                "  ({}, {}) -> {}",
                phi.cod().name(b),
                phi.dom().name(a),
                q.arrow_label(phi.entry(b, a))
            );
        }
    }
    out
}

pub fn category_value(cat: &QCategory) -> Value {
    let q = cat.base();
    let objects: Vec<Value> = (0..cat.object_count())
        .map(|a| json!([cat.name(a), q.object_name(cat.type_of(a))]))
        .collect();
    let homs: Vec<Value> = (0..cat.object_count())
        .flat_map(|a1| (0..cat.object_count()).map(move |a0| (a1, a0)))
        .map(|(a1, a0)| {
            json!([cat.name(a1), cat.name(a0), q.arrow_label(cat.hom_arrow(a1, a0))])
        })
        .collect();
    json!({ "objects": objects, "homs": homs })
}

pub fn category_text(cat: &QCategory) -> String {
    let q = cat.base();
    let mut out = String::new();
    for a in 0..cat.object_count() {
        let _ = writeln!(out, "  object {} : {}", cat.name(a), q.object_name(cat.type_of(a)));
    }
    for a1 in 0..cat.object_count() {
        for a0 in 0..cat.object_count() {
            let _ = writeln!(
                out,
                "  hom {} {} = {}",
                cat.name(a1),
                cat.name(a0),
                q.arrow_label(cat.hom_arrow(a1, a0))
            );
        }
    }
    out
}

pub fn matrix_value(m: &QMatrix) -> Value {
    let q = m.base();
    let entries: Vec<Value> = (0..m.cod().len())
        .flat_map(|y| (0..m.dom().len()).map(move |x| (y, x)))
        .map(|(y, x)| {
            json!([m.cod().names[y], m.dom().names[x], q.arrow_label(m.entry(y, x))])
        })
        .collect();
    json!({
        "dom": m.dom().names,
        "cod": m.cod().names,
        "entries": entries,
    })
}

pub fn matrix_text(m: &QMatrix) -> String {
    let q = m.base();
    let mut out = String::new();
    for y in 0..m.cod().len() {
        for x in 0..m.dom().len() {
            let _ = writeln!(
                out,
                "  ({}, {}) -> {}",
                m.cod().names[y],
                m.dom().names[x],
                q.arrow_label(m.entry(y, x))
            );
        }
    }
    out
}

pub fn laws_value(rep: &LawReport) -> Value {
    let rows: Vec<Value> = rep
        .rows
        .iter()
        .map(|r| {
            json!({
                "law": r.law,
                "anchor": r.anchor,
                "instance": r.instance,
                "pass": r.pass,
                "detail": r.detail,
            })
        })
        .collect();
    let failures = rep.rows.iter().filter(|r| !r.pass).count();
    json!({
        "rows": rows,
        "warnings": rep.warnings,
        "checks": rep.rows.len(),
        "failures": failures,
    })
}

pub fn laws_text(rep: &LawReport) -> String {
    let mut out = String::new();
    let wide = rep.rows.iter().map(|r| r.law.len()).max().unwrap_or(0);
    for r in &rep.rows {
        let flag = if r.pass { "pass" } else { "FAIL" };
        let _ = write!(out, "{flag}  {:wide$}  {}", r.law, r.instance);
        if let Some(d) = &r.detail {
            let _ = write!(out, " -- {d}");
        }
        out.push('\n');
    }
    for w in &rep.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    let failures = rep.rows.iter().filter(|r| !r.pass).count();
    let _ = writeln!(out, "{} checks, {} failures", rep.rows.len(), failures);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::Span;

    #[test]
    fn envelope_merges_body_next_to_schema() {
        let o = Outcome::new(0, "validate", "ok\n", json!({"categories": 2}));
        assert_eq!(o.json["schema"], 1);
        assert_eq!(o.json["verb"], "validate");
        assert_eq!(o.json["ok"], true);
        assert_eq!(o.json["categories"], 2);
    }

    #[test]
    fn json_is_byte_deterministic() {
        let mk = || {
            Outcome::new(1, "colim", "", json!({"at": "x", "b": [1, 2], "a": {"z": 1, "y": 2}}))
        };
        assert_eq!(mk().json.to_string(), mk().json.to_string());
        // Keys come out sorted, independent of insertion order.
        assert_eq!(
            json!({"b": 1, "a": 2}).to_string(),
            "{\"a\":2,\"b\":1}"
        );
    }

    #[test]
    fn diagnostics_render_with_positions_and_hints() {
        let d = Diagnostic::error(Span { line: 3, col: 7, len: 2 }, "unknown element `z`")
            .with_hint("elements: `0`, `1`");
        let s = render_diagnostics("f.qk", &[d]);
        assert_eq!(s, "f.qk:3:7: error: unknown element `z`\n  hint: elements: `0`, `1`\n");
    }
}
