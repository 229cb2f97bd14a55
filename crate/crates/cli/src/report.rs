//! Text and JSON rendering of analysis results. Output is deterministic for
//! fixed input: JSON objects serialize with sorted keys and no timing data.

use mckay_quiver::dims::{AuslanderReport, DimensionResult};
use mckay_quiver::invariants::{InvariantReport, Relation};
use mckay_quiver::CoactionPair;
use serde_json::{json, Value};

pub fn dimension_json(result: &DimensionResult) -> Value {
    match result {
        DimensionResult::Finite(n) => json!({ "kind": "finite", "value": n }),
        DimensionResult::Infinite(border) => {
            json!({ "kind": "infinite", "witness": border.as_str() })
        }
    }
}

pub fn dimension_text(result: &DimensionResult) -> String {
    match result {
        DimensionResult::Finite(n) => format!("finite, dimension {n}"),
        DimensionResult::Infinite(border) => {
            format!(
                "infinite (witness: {} avoids the identity)",
                border.as_str()
            )
        }
    }
}

pub fn auslander_json(report: &AuslanderReport) -> Value {
    json!({
        "iso": report.is_isomorphism,
        "order_method": report.order_method,
        "coverage_method": report.coverage_method,
    })
}

pub fn auslander_text(report: &AuslanderReport) -> String {
    format!(
        "auslander isomorphism: {} (order method: {}, coverage method: {})",
        report.is_isomorphism, report.order_method, report.coverage_method
    )
}

fn relation_json(rel: &Relation) -> Value {
    let side = |terms: &[(usize, (usize, usize))]| -> Value {
        Value::Array(
            terms
                .iter()
                .map(|(coeff, (r, c))| json!({ "coeff": coeff, "pos": [r, c] }))
                .collect(),
        )
    };
    json!({
        "lhs": side(&rel.lhs),
        "rhs": side(&rel.rhs),
        "sum": [rel.sum.0, rel.sum.1],
        "text": rel.to_string(),
    })
}

pub fn invariants_json(report: &InvariantReport) -> Value {
    let basis: Vec<Value> = report
        .basis
        .iter()
        .map(|b| {
            json!({
                "pos": [b.position.0, b.position.1],
                "degree": b.degree,
                "monomial": b.monomial,
            })
        })
        .collect();
    json!({
        "basis": basis,
        "degrees": report.degrees,
        "regular": report.is_regular,
        "order_method": report.order_method,
        "basis_method": report.basis_method,
        "relation_bound": report.relation_bound,
        "relations": report.relations.iter().map(relation_json).collect::<Vec<_>>(),
        "series": report.series,
        "singularity": report.singularity,
    })
}

pub fn invariants_text(report: &InvariantReport) -> String {
    let bound = report.relation_bound;
    let mut out = String::new();
    let basis = report
        .basis
        .iter()
        .map(|b| {
            format!(
                "({},{}) deg {} = {}",
                b.position.0, b.position.1, b.degree, b.monomial
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    out.push_str(&format!("basis: {basis}\n"));
    let degrees = report
        .degrees
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(";");
    out.push_str(&format!("basis degrees: {degrees}\n"));
    out.push_str(&format!(
        "invariant ring regular: {} (order method: {}, basis method: {})\n",
        report.is_regular, report.order_method, report.basis_method
    ));
    if report.relations.is_empty() {
        out.push_str(&format!("relations (coefficients <= {bound}): none\n"));
    } else {
        let rels = report
            .relations
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        out.push_str(&format!("relations (coefficients <= {bound}): {rels}\n"));
    }
    let series = report
        .series
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push_str(&format!(
        "hilbert series (deg <= {}): {series}\n",
        report.series.len() - 1
    ));
    if let Some(note) = &report.singularity {
        out.push_str(&format!("singularity: {note}\n"));
    }
    out
}

pub fn pair_summary_text(pair: &CoactionPair) -> String {
    format!("order: {}\nm: {}\n", pair.group().order(), pair.m())
}
