//! JSON and text renderings. Monomials and Lyndon words serialize as
//! comma-joined index strings (the empty monomial as `""`); coefficients and
//! exponents stay exact through `serde_json`'s arbitrary-precision numbers.

use std::collections::BTreeMap;

use loopbraid::{CheckReport, Letter, NormalForm, ReducedPoly, WeldedAuto, Word};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

pub fn bigint_number(b: &BigInt) -> Value {
    Value::Number(b.to_string().parse::<Number>().unwrap())
}

pub fn word_key(w: &[Letter]) -> String {
    w.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn poly_json(p: &ReducedPoly) -> Value {
    let mut map = Map::new();
    for (m, c) in p.iter() {
        map.insert(word_key(m.letters()), bigint_number(c));
    }
    Value::Object(map)
}

pub fn auto_json(a: &WeldedAuto) -> Value {
    json!({
        "n": a.rank(),
        "perm": a.perm(),
        "conj": (1..=a.rank() as Letter)
            .map(|i| poly_json(a.conjugator(i)))
            .collect::<Vec<_>>(),
    })
}

fn coords_json(coords: &[(Letter, BTreeMap<Word, BigInt>)]) -> Value {
    Value::Array(
        coords
            .iter()
            .map(|(i, vector)| {
                let mut map = Map::new();
                for (w, e) in vector {
                    map.insert(word_key(w), bigint_number(e));
                }
                json!({ "i": i, "vector": Value::Object(map) })
            })
            .collect(),
    )
}

pub fn normal_form_json(nf: &NormalForm) -> Value {
    json!({
        "n": nf.rank(),
        "levels": nf
            .levels()
            .iter()
            .map(|level| {
                json!({
                    "m": level.m,
                    "residual": poly_json(&level.residual),
                    "coords": coords_json(&level.coords),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn report_json(r: &CheckReport) -> Value {
    json!({
        "name": r.name,
        "params": r.parameters,
        "passed": r.passed,
        "details": r.details,
    })
}

pub fn normal_form_text(nf: &NormalForm) -> String {
    if nf.is_trivial() {
        return "identity".to_string();
    }
    let mut out = Vec::new();
    for level in nf.levels() {
        out.push(format!("m={}: residual {}", level.m, level.residual));
        for (i, vector) in &level.coords {
            if vector.is_empty() {
                continue;
            }
            let parts: Vec<String> = vector
                .iter()
                .map(|(w, e)| format!("[{}]^{}", word_key(w), e))
                .collect();
            out.push(format!("  u{i}: {}", parts.join(" ")));
        }
    }
    out.join("\n")
}
