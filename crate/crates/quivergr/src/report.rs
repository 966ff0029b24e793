//! Report documents.
//!
//! Reports are built as `serde_json::Value` trees, whose objects keep their keys
//! sorted, and every list is emitted in canonical order. The same inputs therefore give
//! byte-identical output regardless of the thread count.

use std::fmt::Write as _;

use num_bigint::BigInt;
use quivergr_core::{
    CensusBlock, CensusEntry, CensusReport, CombinatorialLocus, Counterexample, CountingPolynomial,
    DimVector, Error, QComparison, SubrepPoint, TubeData,
};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::format::InputDocument;

pub const TOOL_NAME: &str = env!("CARGO_PKG_NAME");
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn digest(doc: &InputDocument) -> String {
    let hash = Sha256::digest(doc.canonical_json().as_bytes());
    format!("sha256:{}", hex::encode(hash))
}

pub fn tool() -> Value {
    json!({ "name": TOOL_NAME, "version": TOOL_VERSION })
}

pub fn input(doc: &InputDocument) -> Value {
    let vertices = &doc.quiver.vertices;
    let dims: Vec<usize> = vertices
        .iter()
        .map(|v| doc.representation.dims[v])
        .collect();
    json!({
        "digest": digest(doc),
        "name": doc.metadata.as_ref().and_then(|m| m.name.clone()),
        "vertices": vertices,
        "dims": dims,
    })
}

pub fn dim_vector(e: &DimVector) -> Value {
    json!(e.as_slice())
}

/// A point as the RREF bases of its vertex subspaces, one list of rows per vertex.
pub fn point(p: &SubrepPoint<u32>) -> Value {
    Value::Array(
        p.spaces
            .iter()
            .map(|s| json!(s.basis().to_rows()))
            .collect(),
    )
}

fn comb_flags(flags: Option<(bool, bool)>) -> Value {
    match flags {
        Some((contains_lower, inside_upper)) => json!({
            "contains_lower": contains_lower,
            "inside_upper": inside_upper,
        }),
        None => Value::Null,
    }
}

pub fn entry(x: &CensusEntry<u32>) -> Value {
    json!({
        "point": point(&x.point),
        "hom_dim": x.hom_dim,
        "ext_dim": x.ext_dim,
        "transverse": x.homologically_transverse(),
    })
}

pub fn census_block(b: &CensusBlock<u32>) -> Value {
    json!({
        "e": dim_vector(&b.e),
        "expected_dim": b.expected_dim,
        "total_points": b.total_points(),
        "transverse_points": b.transverse_points(),
        "entries": b.entries.iter().map(entry).collect::<Vec<_>>(),
    })
}

pub fn census(report: &CensusReport<u32>) -> Value {
    json!({
        "q": report.modulus,
        "total_points": report.total_points(),
        "transverse_points": report.transverse_points(),
        "blocks": report.blocks.iter().map(census_block).collect::<Vec<_>>(),
    })
}

pub fn transverse(report: &CensusReport<u32>) -> Value {
    let blocks: Vec<Value> = report
        .blocks
        .iter()
        .map(|b| {
            let points: Vec<Value> = b
                .entries
                .iter()
                .filter(|x| x.homologically_transverse())
                .map(|x| point(&x.point))
                .collect();
            json!({
                "e": dim_vector(&b.e),
                "expected_dim": b.expected_dim,
                "total_points": b.total_points(),
                "transverse_points": points.len(),
                "points": points,
            })
        })
        .collect();
    json!({
        "q": report.modulus,
        "total_points": report.total_points(),
        "transverse_points": report.transverse_points(),
        "blocks": blocks,
    })
}

pub fn tube_data(t: &TubeData) -> Value {
    json!({
        "quasi_socle_dim": dim_vector(&t.quasi_socle_dim),
        "tube_rank": t.tube_rank,
        "quasi_length": t.quasi_length,
        "l": t.l,
        "k": t.k,
        "ray_dims": t.ray_dims.iter().map(dim_vector).collect::<Vec<_>>(),
        "lower_index": t.lower_index(),
        "upper_index": t.upper_index(),
        "vacuous_window": t.vacuous_window(),
    })
}

pub fn locus(q: u32, locus: &CombinatorialLocus) -> Value {
    json!({
        "q": q,
        "rigid": locus.rigid,
        "tube": locus.tube.as_ref().map(tube_data),
        "lower": locus.lower.as_ref().map(point),
        "upper": locus.upper.as_ref().map(point),
    })
}

pub fn error(q: u32, e: &Error) -> Value {
    json!({
        "q": q,
        "error": {
            "kind": if e.is_internal() { "internal" } else { "input" },
            "message": e.to_string(),
        },
    })
}

pub fn counterexample(c: &Counterexample) -> Value {
    json!({
        "q": c.q,
        "e": dim_vector(&c.e),
        "point": point(&c.point),
        "ext_dim": c.ext_dim,
        "comb_flags": comb_flags(c.comb_flags),
        "in_homological": c.ext_dim == 0,
        "in_combinatorial": c.ext_dim != 0,
    })
}

/// One prime of a locus comparison, restricted to the dimension vectors `keep` selects.
pub fn comparison(c: &QComparison, keep: impl Fn(&DimVector) -> bool) -> (Value, bool) {
    let dims: Vec<_> = c.per_dimension.iter().filter(|d| keep(&d.e)).collect();
    let verdict = dims.iter().all(|d| d.equal());
    let dimensions: Vec<Value> = dims
        .iter()
        .map(|d| {
            json!({
                "e": dim_vector(&d.e),
                "combinatorial": d.combinatorial.len(),
                "homological": d.homological.len(),
                "equal": d.equal(),
            })
        })
        .collect();
    let counterexamples: Vec<Value> = c
        .counterexamples
        .iter()
        .filter(|x| keep(&x.e))
        .map(counterexample)
        .collect();
    let mut value = locus(c.q, &c.locus);
    let obj = value.as_object_mut().expect("locus is an object");
    obj.insert("verdict".into(), json!(verdict));
    obj.insert("dimensions".into(), json!(dimensions));
    obj.insert("counterexamples".into(), json!(counterexamples));
    (value, verdict)
}

fn integer(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn counting(e: &DimVector, cp: &CountingPolynomial) -> Value {
    json!({
        "e": dim_vector(e),
        "polynomial": cp.polynomial.to_string(),
        "coefficients": cp.polynomial.coefficients().iter().map(integer).collect::<Vec<_>>(),
        "samples": cp.samples,
        "check": cp.check,
        "euler_characteristic": integer(&cp.euler_characteristic),
        "estimated_dimension": cp.estimated_dimension,
    })
}

pub fn not_polynomial(e: &DimVector, counts: &[(u32, u64)]) -> Value {
    json!({
        "e": dim_vector(e),
        "polynomial": Value::Null,
        "error": "count not polynomial on sampled range",
        "counts": counts,
    })
}

pub fn to_json(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("values serialize");
    s.push('\n');
    s
}

fn fmt_vector(v: &Value) -> String {
    match v.as_array() {
        Some(xs) => {
            let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        }
        None => v.to_string(),
    }
}

fn fmt_point(v: &Value) -> String {
    let Some(spaces) = v.as_array() else {
        return v.to_string();
    };
    let parts: Vec<String> = spaces
        .iter()
        .map(|s| {
            let rows: Vec<String> = s
                .as_array()
                .into_iter()
                .flatten()
                .map(|r| {
                    let xs: Vec<String> = r
                        .as_array()
                        .into_iter()
                        .flatten()
                        .map(|x| x.to_string())
                        .collect();
                    xs.join(" ")
                })
                .collect();
            if rows.is_empty() {
                "0".to_string()
            } else {
                format!("<{}>", rows.join("; "))
            }
        })
        .collect();
    parts.join(" | ")
}

fn field<'a>(v: &'a Value, key: &str) -> &'a Value {
    v.get(key).unwrap_or(&Value::Null)
}

/// `field` as text, so that width and alignment flags apply.
fn text(v: &Value, key: &str) -> String {
    match field(v, key) {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn push_error(out: &mut String, run: &Value) -> bool {
    if let Some(err) = run.get("error") {
        let _ = writeln!(
            out,
            "q = {}: {} error: {}",
            text(run, "q"),
            field(err, "kind").as_str().unwrap_or("?"),
            field(err, "message").as_str().unwrap_or("?")
        );
        true
    } else {
        false
    }
}

/// Plain-text rendering of a report produced by [`crate::run`].
pub fn to_table(report: &Value) -> String {
    let mut out = String::new();
    let input = field(report, "input");
    let _ = writeln!(
        out,
        "{} {}  {}  dims {}  {}",
        field(field(report, "tool"), "name")
            .as_str()
            .unwrap_or(TOOL_NAME),
        field(field(report, "tool"), "version")
            .as_str()
            .unwrap_or(TOOL_VERSION),
        field(report, "command").as_str().unwrap_or(""),
        fmt_vector(field(input, "dims")),
        field(input, "digest").as_str().unwrap_or(""),
    );
    let results = field(report, "results");
    match field(report, "command").as_str() {
        Some("census") | Some("transverse") => {
            for run in field(results, "fields").as_array().into_iter().flatten() {
                let _ = writeln!(
                    out,
                    "\nq = {}: {} points, {} transverse",
                    text(run, "q"),
                    text(run, "total_points"),
                    text(run, "transverse_points")
                );
                let _ = writeln!(
                    out,
                    "{:<16} {:>8} {:>8} {:>10}",
                    "e", "<e,d-e>", "points", "transverse"
                );
                for b in field(run, "blocks").as_array().into_iter().flatten() {
                    let _ = writeln!(
                        out,
                        "{:<16} {:>8} {:>8} {:>10}",
                        fmt_vector(field(b, "e")),
                        text(b, "expected_dim"),
                        text(b, "total_points"),
                        text(b, "transverse_points")
                    );
                    for x in field(b, "entries").as_array().into_iter().flatten() {
                        let _ = writeln!(
                            out,
                            "    hom {} ext {}  {}",
                            text(x, "hom_dim"),
                            text(x, "ext_dim"),
                            fmt_point(field(x, "point"))
                        );
                    }
                    for p in field(b, "points").as_array().into_iter().flatten() {
                        let _ = writeln!(out, "    {}", fmt_point(p));
                    }
                }
            }
        }
        Some("tube") | Some("check") => {
            for run in field(results, "fields").as_array().into_iter().flatten() {
                out.push('\n');
                if push_error(&mut out, run) {
                    continue;
                }
                let tube = field(run, "tube");
                if tube.is_null() {
                    let _ = writeln!(
                        out,
                        "q = {}: rigid, combinatorial locus is all of Gr",
                        field(run, "q")
                    );
                } else {
                    let _ = writeln!(
                        out,
                        "q = {}: dim R0 {}, p = {}, quasi-length {}, l = {}, k = {}{}",
                        text(run, "q"),
                        fmt_vector(field(tube, "quasi_socle_dim")),
                        text(tube, "tube_rank"),
                        text(tube, "quasi_length"),
                        text(tube, "l"),
                        text(tube, "k"),
                        if field(tube, "vacuous_window").as_bool() == Some(true) {
                            ", empty excluded window"
                        } else {
                            ""
                        }
                    );
                    let _ = writeln!(out, "  lower {}", fmt_point(field(run, "lower")));
                    let _ = writeln!(out, "  upper {}", fmt_point(field(run, "upper")));
                }
                if let Some(dims) = field(run, "dimensions").as_array() {
                    let _ = writeln!(
                        out,
                        "{:<16} {:>13} {:>11} {:>6}",
                        "e", "combinatorial", "homological", "equal"
                    );
                    for d in dims {
                        let _ = writeln!(
                            out,
                            "{:<16} {:>13} {:>11} {:>6}",
                            fmt_vector(field(d, "e")),
                            text(d, "combinatorial"),
                            text(d, "homological"),
                            text(d, "equal")
                        );
                    }
                    for c in field(run, "counterexamples")
                        .as_array()
                        .into_iter()
                        .flatten()
                    {
                        let _ = writeln!(
                            out,
                            "  counterexample e {} ext {}  {}",
                            fmt_vector(field(c, "e")),
                            text(c, "ext_dim"),
                            fmt_point(field(c, "point"))
                        );
                    }
                }
            }
            if let Some(v) = results.get("verdict") {
                let _ = writeln!(out, "\nverdict: {v}");
            }
        }
        Some("chi") => {
            let _ = writeln!(
                out,
                "\n{:<16} {:<24} {:>6} {:>6}",
                "e", "count", "chi", "degree"
            );
            for x in field(results, "polynomials")
                .as_array()
                .into_iter()
                .flatten()
            {
                match field(x, "polynomial").as_str() {
                    Some(poly) => {
                        let _ = writeln!(
                            out,
                            "{:<16} {:<24} {:>6} {:>6}",
                            fmt_vector(field(x, "e")),
                            poly,
                            text(x, "euler_characteristic"),
                            text(x, "estimated_dimension")
                        );
                    }
                    None => {
                        let _ = writeln!(
                            out,
                            "{:<16} not polynomial, counts {}",
                            fmt_vector(field(x, "e")),
                            text(x, "counts")
                        );
                    }
                }
            }
        }
        _ => {}
    }
    out
}
