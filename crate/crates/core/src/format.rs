//! JSON interchange formats. Rationals are strings `"p"` or `"p/q"`.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::cones::SingularityContent;
use crate::lattice::{format_rational, parse_rational, AffineExpression, LatticeError, LatticePoint, Rational};
use crate::laurent::{Factor, FactorAssignment, LaurentError, LaurentPoly, LaurentPolynomial, SymbolicLaurentPolynomial};
use crate::monodromy::{Matrix, MonodromyMatrix};
use crate::mutation::{MutationData, MutationGraph};
use crate::periods::DifferentialOperator;
use crate::polygon::FanoPolygon;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unexpected document shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Rational(#[from] LatticeError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

fn shape(msg: impl Into<String>) -> FormatError {
    FormatError::Shape(msg.into())
}

fn q(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

/// Accepts a string `"p/q"` or a JSON integer.
pub fn rational_from_json(v: &Value) -> Result<Rational, FormatError> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) => n.as_i64().map(crate::lattice::int).ok_or_else(|| shape(format!("non-integer number {n}"))),
        _ => Err(shape(format!("expected a rational, got {v}"))),
    }
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value, FormatError> {
    v.get(name).ok_or_else(|| shape(format!("missing field \"{name}\"")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, FormatError> {
    v.as_array().ok_or_else(|| shape(format!("{what} must be an array")))
}

pub fn point_to_json(p: LatticePoint) -> Value {
    json!([p.x, p.y])
}

pub fn point_from_json(v: &Value) -> Result<LatticePoint, FormatError> {
    let a = array(v, "a lattice point")?;
    match a.as_slice() {
        [x, y] => Ok(LatticePoint::new(
            x.as_i64().ok_or_else(|| shape("coordinates must be integers"))?,
            y.as_i64().ok_or_else(|| shape("coordinates must be integers"))?,
        )),
        _ => Err(shape("a lattice point has two coordinates")),
    }
}

pub fn polygon_to_json(p: &FanoPolygon) -> Value {
    json!({ "vertices": p.vertices().iter().map(|v| point_to_json(*v)).collect::<Vec<_>>() })
}

/// Vertex list of `{"vertices": [[x, y], ...]}`; validation is left to the caller.
pub fn vertices_from_json(v: &Value) -> Result<Vec<LatticePoint>, FormatError> {
    array(field(v, "vertices")?, "vertices")?.iter().map(point_from_json).collect()
}

pub fn laurent_to_json(f: &LaurentPolynomial) -> Value {
    Value::Array(f.terms().iter().map(|(e, c)| json!({ "exp": point_to_json(*e), "coeff": q(c) })).collect())
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPolynomial, FormatError> {
    let mut f = LaurentPoly::new();
    for t in array(v, "a Laurent polynomial")? {
        f.add_term(point_from_json(field(t, "exp")?)?, rational_from_json(field(t, "coeff")?)?);
    }
    Ok(f)
}

fn affine_to_json(c: &AffineExpression, names: &[String]) -> Value {
    let lin: Map<String, Value> = c.terms().iter().map(|(id, x)| (names[*id].clone(), q(x))).collect();
    json!({ "const": q(&c.constant), "lin": lin })
}

pub fn symbolic_to_json(f: &SymbolicLaurentPolynomial) -> Value {
    let terms: Vec<Value> = f
        .poly
        .terms()
        .iter()
        .map(|(e, c)| json!({ "exp": point_to_json(*e), "coeff": affine_to_json(c, &f.params) }))
        .collect();
    json!({ "params": f.params, "terms": terms })
}

pub fn content_to_json(c: &SingularityContent) -> Value {
    let basket: Vec<Value> = c.basket.iter().map(|b| json!({ "r": b.r, "a": b.a, "height": b.height, "width": b.width })).collect();
    json!({ "k": c.k, "basket": basket })
}

pub fn mutation_data_to_json(d: &MutationData) -> Value {
    json!({ "u": point_to_json(d.u), "F": point_to_json(d.f) })
}

pub fn mutation_data_from_json(v: &Value) -> Result<(LatticePoint, LatticePoint), FormatError> {
    Ok((point_from_json(field(v, "u")?)?, point_from_json(field(v, "F")?)?))
}

pub fn graph_to_json(g: &MutationGraph) -> Value {
    let nodes: Vec<Value> = g.nodes.iter().map(polygon_to_json).collect();
    let arrows: Vec<Value> = g
        .arrows
        .iter()
        .map(|a| json!({ "from": a.from, "to": a.to, "u": point_to_json(a.data.u), "F": point_to_json(a.data.f) }))
        .collect();
    json!({ "nodes": nodes, "arrows": arrows, "complete": g.complete, "depth": g.depth })
}

pub fn matrix_to_json(m: &MonodromyMatrix) -> Value {
    let rows: Vec<Value> = m.matrix.rows().iter().map(|r| Value::Array(r.iter().map(q).collect())).collect();
    json!({ "basis": m.basis, "matrix": rows })
}

pub fn matrix_from_json(v: &Value) -> Result<MonodromyMatrix, FormatError> {
    let basis: Vec<String> = array(field(v, "basis")?, "basis")?
        .iter()
        .map(|b| b.as_str().map(str::to_owned).ok_or_else(|| shape("basis labels must be strings")))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<Rational>> = array(field(v, "matrix")?, "matrix")?
        .iter()
        .map(|r| array(r, "a matrix row")?.iter().map(rational_from_json).collect())
        .collect::<Result<_, _>>()?;
    if rows.len() != basis.len() || rows.iter().any(|r| r.len() != basis.len()) {
        return Err(shape("matrix must be square with one row per basis label"));
    }
    Ok(MonodromyMatrix { basis, matrix: Matrix::from_rows(rows) })
}

pub fn operator_to_json(op: &DifferentialOperator) -> Value {
    let coeffs: Vec<Value> = op.coeffs.iter().map(|p| Value::Array(p.iter().map(q).collect())).collect();
    json!({ "order": op.order(), "coeffs": coeffs })
}

pub fn operator_from_json(v: &Value) -> Result<DifferentialOperator, FormatError> {
    let coeffs: Vec<Vec<Rational>> = array(field(v, "coeffs")?, "coeffs")?
        .iter()
        .map(|p| array(p, "a coefficient polynomial")?.iter().map(rational_from_json).collect())
        .collect::<Result<_, _>>()?;
    if let Some(order) = v.get("order").and_then(Value::as_u64) {
        if order as usize + 1 != coeffs.len() {
            return Err(shape("order does not match the number of coefficient polynomials"));
        }
    }
    DifferentialOperator::new(coeffs).map_err(|e| shape(e.to_string()))
}

pub fn sequence_to_json(s: &[Rational]) -> Value {
    json!({ "coeffs": s.iter().map(q).collect::<Vec<_>>() })
}

pub fn sequence_from_json(v: &Value) -> Result<Vec<Rational>, FormatError> {
    array(field(v, "coeffs")?, "coeffs")?.iter().map(rational_from_json).collect()
}

/// `{"edges": [[{"gamma": "1", "eta": "1"}, ...], ...]}`, aligned with the
/// polygon's edges.
pub fn assignment_from_json(v: &Value) -> Result<FactorAssignment, FormatError> {
    let edges = array(field(v, "edges")?, "edges")?
        .iter()
        .map(|e| {
            array(e, "an edge's factors")?
                .iter()
                .map(|f| Ok(Factor::new(rational_from_json(field(f, "gamma")?)?, rational_from_json(field(f, "eta")?)?)?))
                .collect::<Result<Vec<_>, FormatError>>()
        })
        .collect::<Result<_, _>>()?;
    Ok(FactorAssignment { edges })
}
