//! JSON rendering of index reports.
//!
//! Objects use sorted keys and floats use the shortest representation that
//! round-trips, so identical inputs give byte-identical output. Exact values
//! and copy counts are decimal strings.

use serde_json::{json, Value};
use sierpinski_core::closed::{Breakdown, EdgeTerms, IndexReport};
use sierpinski_core::index::{IndexValue, Mode};

pub fn index_value(v: &IndexValue) -> Value {
    match v {
        IndexValue::Float(x) => json!(x),
        IndexValue::Exact(n) => Value::String(n.to_string()),
    }
}

fn edge_terms(e: &EdgeTerms) -> Value {
    let terms: Vec<Value> = e
        .terms
        .iter()
        .map(|c| {
            json!({
                "class": format!("{}{}", c.class.0, c.class.1),
                "count": c.count.to_string(),
                "degrees": [c.degrees.0, c.degrees.1],
                "value": index_value(&c.value),
            })
        })
        .collect();
    json!({
        "edge": [e.edge.0, e.edge.1],
        "terms": terms,
        "value": index_value(&e.value),
    })
}

pub fn breakdown(b: &Breakdown) -> Value {
    match b {
        Breakdown::Sierpinski(s) => json!({
            "edges": s.edges.iter().map(edge_terms).collect::<Vec<_>>(),
            "total": index_value(&s.total),
        }),
        Breakdown::PolymericBase(p) => json!({
            "hub": index_value(&p.hub),
            "lifted": p.lifted.iter().map(edge_terms).collect::<Vec<_>>(),
            "total": index_value(&p.total),
        }),
        Breakdown::Polymeric(p) => json!({
            "beta": p.beta.iter().map(index_value).collect::<Vec<_>>(),
            "w4": p.w4.iter().map(edge_terms).collect::<Vec<_>>(),
            "w7": p.w7.iter().map(edge_terms).collect::<Vec<_>>(),
            "total": index_value(&p.total),
        }),
        Breakdown::None => Value::Null,
    }
}

/// `{variant, t, alpha, value, breakdown?, exact?}`. In exact mode `value`
/// is the nearest double (or `null` beyond the double range) and `exact`
/// carries every digit.
pub fn report_json(report: &IndexReport, with_breakdown: bool) -> Value {
    let mut doc = json!({
        "variant": report.variant.symbol(),
        "t": report.t,
        "alpha": report.params.alpha(),
        "value": report.value.to_f64(),
    });
    let map = doc.as_object_mut().unwrap();
    if with_breakdown {
        map.insert("breakdown".into(), breakdown(&report.breakdown));
    }
    if report.params.mode() == Mode::Exact {
        map.insert("exact".into(), index_value(&report.value));
    }
    doc
}

pub fn to_text(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("JSON values always serialize");
    s.push('\n');
    s
}
