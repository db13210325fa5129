//! JSON documents for objects and morphisms.
//!
//! Rationals are strings (`"-3/7"`), maps are `{"rows", "cols", "entries"}`
//! with row-major entry grids, and subspaces are lists of spanning columns.
//! Subspaces are canonicalized on load, so any spanning set is accepted.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::categories::{A1Object, A2Morphism, A2Object, CMorphism, CObject};
use crate::exactlin::{LinearMap, Matrix, ParseRationalError, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    CObject(CObject),
    A2Object(A2Object),
    A1Object(A1Object),
    CMorphism(CMorphism),
    A2Morphism(A2Morphism),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::CObject(_) => "c-object",
            Document::A2Object(_) => "a2-object",
            Document::A1Object(_) => "a1-object",
            Document::CMorphism(_) => "c-morphism",
            Document::A2Morphism(_) => "a2-morphism",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {source}")]
    Rational {
        field: String,
        source: ParseRationalError,
    },
    #[error("{field}: {message}")]
    Dimension { field: String, message: String },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

type SubspaceRepr = Vec<Vec<String>>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CObjectRepr {
    ambient: usize,
    a1: SubspaceRepr,
    a2: SubspaceRepr,
    b1: SubspaceRepr,
    b2: SubspaceRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct A2ObjectRepr {
    n_minus: usize,
    n_zero: usize,
    n_plus: usize,
    delta_minus: MapRepr,
    gamma_minus: MapRepr,
    delta_plus: MapRepr,
    gamma_plus: MapRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct A1ObjectRepr {
    m: usize,
    n: usize,
    u: MapRepr,
    v: MapRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CMorphismRepr {
    source: CObjectRepr,
    target: CObjectRepr,
    map: MapRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct A2MorphismRepr {
    source: A2ObjectRepr,
    target: A2ObjectRepr,
    e_minus: MapRepr,
    e_zero: MapRepr,
    e_plus: MapRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
#[allow(clippy::large_enum_variant)]
enum DocumentRepr {
    #[serde(rename = "c-object")]
    CObject(CObjectRepr),
    #[serde(rename = "a2-object")]
    A2Object(A2ObjectRepr),
    #[serde(rename = "a1-object")]
    A1Object(A1ObjectRepr),
    #[serde(rename = "c-morphism")]
    CMorphism(CMorphismRepr),
    #[serde(rename = "a2-morphism")]
    A2Morphism(A2MorphismRepr),
}

fn rational(field: &str, s: &str) -> Result<Rational, ParseError> {
    s.parse().map_err(|source| ParseError::Rational {
        field: field.to_string(),
        source,
    })
}

fn dimension(field: &str, message: String) -> ParseError {
    ParseError::Dimension {
        field: field.to_string(),
        message,
    }
}

fn grid(field: &str, rows: &[Vec<String>]) -> Result<Vec<Vec<Rational>>, ParseError> {
    rows.iter()
        .map(|row| row.iter().map(|s| rational(field, s)).collect())
        .collect()
}

fn map_from(field: &str, repr: &MapRepr) -> Result<LinearMap, ParseError> {
    if repr.entries.len() != repr.rows {
        return Err(dimension(
            field,
            format!("declared {} rows, found {}", repr.rows, repr.entries.len()),
        ));
    }
    let matrix = Matrix::from_rows(repr.cols, grid(field, &repr.entries)?)
        .map_err(|e| dimension(field, e.to_string()))?;
    Ok(LinearMap::new(matrix))
}

fn subspace_from(
    field: &str,
    ambient: usize,
    columns: &SubspaceRepr,
) -> Result<Subspace, ParseError> {
    let matrix = Matrix::from_columns(ambient, grid(field, columns)?).map_err(|_| {
        dimension(
            field,
            format!("every column must have {ambient} entries (the ambient dimension)"),
        )
    })?;
    Ok(Subspace::span(&matrix))
}

fn c_object_from(prefix: &str, r: &CObjectRepr) -> Result<CObject, ParseError> {
    let f = |name: &str| format!("{prefix}{name}");
    Ok(CObject::new(
        r.ambient,
        subspace_from(&f("a1"), r.ambient, &r.a1)?,
        subspace_from(&f("a2"), r.ambient, &r.a2)?,
        subspace_from(&f("b1"), r.ambient, &r.b1)?,
        subspace_from(&f("b2"), r.ambient, &r.b2)?,
    ))
}

fn a2_object_from(prefix: &str, r: &A2ObjectRepr) -> Result<A2Object, ParseError> {
    let f = |name: &str| format!("{prefix}{name}");
    Ok(A2Object::with_dims(
        [r.n_minus, r.n_zero, r.n_plus],
        map_from(&f("delta_minus"), &r.delta_minus)?,
        map_from(&f("gamma_minus"), &r.gamma_minus)?,
        map_from(&f("delta_plus"), &r.delta_plus)?,
        map_from(&f("gamma_plus"), &r.gamma_plus)?,
    ))
}

fn strings(row: &[Rational]) -> Vec<String> {
    row.iter().map(ToString::to_string).collect()
}

fn map_repr(f: &LinearMap) -> MapRepr {
    let m = f.matrix();
    MapRepr {
        rows: m.rows(),
        cols: m.cols(),
        entries: m.row_vecs().iter().map(|r| strings(r)).collect(),
    }
}

fn subspace_repr(s: &Subspace) -> SubspaceRepr {
    s.basis().column_vecs().iter().map(|c| strings(c)).collect()
}

fn c_object_repr(x: &CObject) -> CObjectRepr {
    CObjectRepr {
        ambient: x.ambient_dim(),
        a1: subspace_repr(x.a1()),
        a2: subspace_repr(x.a2()),
        b1: subspace_repr(x.b1()),
        b2: subspace_repr(x.b2()),
    }
}

fn a2_object_repr(e: &A2Object) -> A2ObjectRepr {
    let [n_minus, n_zero, n_plus] = e.dims();
    A2ObjectRepr {
        n_minus,
        n_zero,
        n_plus,
        delta_minus: map_repr(e.delta_minus()),
        gamma_minus: map_repr(e.gamma_minus()),
        delta_plus: map_repr(e.delta_plus()),
        gamma_plus: map_repr(e.gamma_plus()),
    }
}

fn document_repr(doc: &Document) -> DocumentRepr {
    match doc {
        Document::CObject(x) => DocumentRepr::CObject(c_object_repr(x)),
        Document::A2Object(e) => DocumentRepr::A2Object(a2_object_repr(e)),
        Document::A1Object(a) => DocumentRepr::A1Object(A1ObjectRepr {
            m: a.m(),
            n: a.n(),
            u: map_repr(a.u()),
            v: map_repr(a.v()),
        }),
        Document::CMorphism(f) => DocumentRepr::CMorphism(CMorphismRepr {
            source: c_object_repr(f.source()),
            target: c_object_repr(f.target()),
            map: map_repr(f.map()),
        }),
        Document::A2Morphism(f) => DocumentRepr::A2Morphism(A2MorphismRepr {
            source: a2_object_repr(f.source()),
            target: a2_object_repr(f.target()),
            e_minus: map_repr(f.e_minus()),
            e_zero: map_repr(f.e_zero()),
            e_plus: map_repr(f.e_plus()),
        }),
    }
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    let repr: DocumentRepr = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok(match &repr {
        DocumentRepr::CObject(r) => Document::CObject(c_object_from("", r)?),
        DocumentRepr::A2Object(r) => Document::A2Object(a2_object_from("", r)?),
        DocumentRepr::A1Object(r) => Document::A1Object(A1Object::new(
            r.m,
            r.n,
            map_from("u", &r.u)?,
            map_from("v", &r.v)?,
        )),
        DocumentRepr::CMorphism(r) => Document::CMorphism(CMorphism::new(
            c_object_from("source.", &r.source)?,
            c_object_from("target.", &r.target)?,
            map_from("map", &r.map)?,
        )),
        DocumentRepr::A2Morphism(r) => Document::A2Morphism(A2Morphism::new(
            a2_object_from("source.", &r.source)?,
            a2_object_from("target.", &r.target)?,
            map_from("e_minus", &r.e_minus)?,
            map_from("e_zero", &r.e_zero)?,
            map_from("e_plus", &r.e_plus)?,
        )),
    })
}

/// Canonical text form: two-space indentation, arrays of scalars on one
/// line, trailing newline.
pub fn serialize(doc: &Document) -> String {
    let value = serde_json::to_value(document_repr(doc)).expect("document reprs are plain data");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| " ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (key, val)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 2), Value::String(key.clone()));
                write_value(val, indent + 2, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(indent));
        }
        Value::Array(items) if !items.is_empty() && !items.iter().all(is_scalar) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                write_value(item, indent + 2, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(indent));
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            let _ = write!(out, "[{}]", parts.join(", "));
        }
        other => out.push_str(&other.to_string()),
    }
}
