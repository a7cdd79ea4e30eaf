//! JSON encodings: matrices as arrays of arrays, groups as
//! `{"free_rank": n, "torsion": [d1, ...]}`. Integers that do not fit in an
//! `i64` are written as decimal strings; both forms are accepted on input.

use serde_json::{json, Value};

use super::group::FinAbGroup;
use super::hom::GroupHom;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn scalar_to_json<Z: Scalar>(x: &Z) -> Value {
    match x.small() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn scalar_from_json<Z: Scalar>(v: &Value) -> Result<Z> {
    match v {
        Value::Number(n) => n.as_i64().map(Z::of).ok_or_else(|| Error::Json(format!("{n} is not an integer"))),
        Value::String(s) => s.parse::<Z>().map_err(|_| Error::Json(format!("{s:?} is not an integer"))),
        other => Err(Error::Json(format!("expected integer, got {other}"))),
    }
}

pub fn vector_to_json<Z: Scalar>(v: &[Z]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn matrix_to_json<Z: Scalar>(m: &Matrix<Z>) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(m.row(i))).collect())
}

/// Parses an array of arrays. An empty array is the 0x0 matrix.
pub fn matrix_from_json<Z: Scalar>(v: &Value) -> Result<Matrix<Z>> {
    let rows = v.as_array().ok_or_else(|| Error::Json("matrix must be an array of rows".into()))?;
    let parsed = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Json("matrix row must be an array".into()))?
                .iter()
                .map(scalar_from_json)
                .collect::<Result<Vec<Z>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed).map_err(|e| Error::Json(e.to_string()))
}

pub fn group_to_json<Z: Scalar>(g: &FinAbGroup<Z>) -> Value {
    json!({ "free_rank": g.free_rank(), "torsion": vector_to_json(g.torsion()) })
}

pub fn group_from_json<Z: Scalar>(v: &Value) -> Result<FinAbGroup<Z>> {
    let free_rank =
        v.get("free_rank").and_then(Value::as_u64).ok_or_else(|| Error::Json("missing free_rank".into()))?;
    let torsion = v
        .get("torsion")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing torsion".into()))?
        .iter()
        .map(scalar_from_json)
        .collect::<Result<Vec<Z>>>()?;
    FinAbGroup::new(free_rank as usize, torsion).map_err(|e| Error::Json(e.to_string()))
}

/// `{"source": [orders], "target": [orders], "matrix": [[...]]}`
pub fn hom_to_json<Z: Scalar>(h: &GroupHom<Z>) -> Value {
    json!({
        "source": vector_to_json(h.source().orders()),
        "target": vector_to_json(h.target().orders()),
        "matrix": matrix_to_json(h.matrix()),
    })
}
