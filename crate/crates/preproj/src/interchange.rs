//! JSON interchange formats.
//!
//! A module is the object
//! `{ "n": int, "dims": [..], "right": [matrix..], "left": [matrix..] }`
//! where a matrix is an array of rows, each entry an integer or a
//! reduced fraction string `"p/q"` with positive `q`; matrices without
//! entries serialize as `[]`. `right[k]` is the map from vertex `k+1`
//! to `k+2`, `left[k]` the map from `k+2` to `k+1` (0-based array over
//! the 1-based vertex list). Parsing validates shapes against `dims`,
//! rejects unreduced or zero-denominator fractions, and re-checks the
//! preprojective relation.
//!
//! A tableau is `{ "shape": [ints], "rows": [[ints]] }`.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::Rational;
use crate::rep::GradedRep;
use crate::tableaux::Tableau;

fn rational_to_value(r: &Rational) -> Value {
    if r.is_integer() {
        if let Some(i) = r.to_i64() {
            return json!(i);
        }
    }
    json!(r.to_string())
}

fn rational_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(Rational::from_int(i))
            } else {
                Err(Error::invalid(format!(
                    "matrix entries must be integers or fraction strings, got {num}"
                )))
            }
        }
        Value::String(s) => Rational::parse_strict(s),
        other => Err(Error::invalid(format!("bad matrix entry {other}"))),
    }
}

fn matrix_to_value(m: &RatMatrix) -> Value {
    if m.rows() == 0 || m.cols() == 0 {
        return json!([]);
    }
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| {
            Value::Array(
                (0..m.cols())
                    .map(|c| rational_to_value(m.entry(r, c)))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

fn matrix_from_value(v: &Value, rows: usize, cols: usize, what: &str) -> Result<RatMatrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::invalid(format!("{what} must be an array of rows")))?;
    if rows == 0 || cols == 0 {
        if !arr.is_empty() {
            return Err(Error::invalid(format!(
                "{what} must be [] for an empty {rows}x{cols} matrix"
            )));
        }
        return Ok(RatMatrix::zeros(rows, cols));
    }
    if arr.len() != rows {
        return Err(Error::invalid(format!(
            "{what} has {} rows, expected {rows}",
            arr.len()
        )));
    }
    let mut parsed = Vec::with_capacity(rows * cols);
    for row in arr {
        let row = row
            .as_array()
            .ok_or_else(|| Error::invalid(format!("{what} rows must be arrays")))?;
        if row.len() != cols {
            return Err(Error::invalid(format!(
                "{what} has a row of length {}, expected {cols}",
                row.len()
            )));
        }
        for entry in row {
            parsed.push(rational_from_value(entry)?);
        }
    }
    let mut it = parsed.into_iter();
    Ok(RatMatrix::from_fn(rows, cols, |_, _| it.next().unwrap()))
}

pub fn module_to_value(m: &GradedRep) -> Value {
    let n = m.n();
    let right: Vec<Value> = (1..n.max(2) - 1)
        .map(|j| matrix_to_value(m.right_map(j)))
        .collect();
    let left: Vec<Value> = (2..n)
        .map(|j| matrix_to_value(m.left_map(j)))
        .collect();
    json!({
        "n": n,
        "dims": m.dims(),
        "right": right,
        "left": left,
    })
}

pub fn module_to_string(m: &GradedRep) -> String {
    module_to_value(m).to_string()
}

fn get_field<'v>(obj: &'v Map<String, Value>, key: &str) -> Result<&'v Value> {
    obj.get(key)
        .ok_or_else(|| Error::invalid(format!("missing field {key:?}")))
}

fn usize_array(v: &Value, what: &str) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| Error::invalid(format!("{what} must be an array")))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|u| u as usize)
                .ok_or_else(|| Error::invalid(format!("{what} must hold nonnegative integers")))
        })
        .collect()
}

/// Parses and fully validates the module format, including the
/// preprojective relation; the failing vertex appears in the error.
pub fn parse_module_value(v: &Value) -> Result<GradedRep> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::invalid("module file must be a JSON object"))?;
    let n = get_field(obj, "n")?
        .as_u64()
        .ok_or_else(|| Error::invalid("field \"n\" must be an integer"))? as usize;
    if n < 2 {
        return Err(Error::invalid("field \"n\" must be at least 2"));
    }
    let dims = usize_array(get_field(obj, "dims")?, "dims")?;
    if dims.len() != n - 1 {
        return Err(Error::invalid(format!(
            "dims has length {}, expected {}",
            dims.len(),
            n - 1
        )));
    }
    let arrows = n - 2;
    let right_vals = get_field(obj, "right")?
        .as_array()
        .ok_or_else(|| Error::invalid("field \"right\" must be an array"))?;
    let left_vals = get_field(obj, "left")?
        .as_array()
        .ok_or_else(|| Error::invalid("field \"left\" must be an array"))?;
    if right_vals.len() != arrows || left_vals.len() != arrows {
        return Err(Error::invalid(format!(
            "expected {arrows} rightward and leftward matrices"
        )));
    }
    let mut right = Vec::with_capacity(arrows);
    let mut left = Vec::with_capacity(arrows);
    for j in 1..=arrows {
        right.push(matrix_from_value(
            &right_vals[j - 1],
            dims[j],
            dims[j - 1],
            &format!("map ({j} -> {})", j + 1),
        )?);
        left.push(matrix_from_value(
            &left_vals[j - 1],
            dims[j - 1],
            dims[j],
            &format!("map ({} -> {j})", j + 1),
        )?);
    }
    GradedRep::new(n, dims, right, left)
}

pub fn parse_module_str(text: &str) -> Result<GradedRep> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::invalid(format!("malformed JSON: {e}")))?;
    parse_module_value(&value)
}

pub fn tableau_to_value(t: &Tableau) -> Value {
    json!({
        "shape": t.shape(),
        "rows": t.rows(),
    })
}

pub fn tableau_to_string(t: &Tableau) -> String {
    tableau_to_value(t).to_string()
}

pub fn parse_tableau_value(n: usize, v: &Value) -> Result<Tableau> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::invalid("tableau file must be a JSON object"))?;
    let shape = usize_array(get_field(obj, "shape")?, "shape")?;
    let rows: Vec<Vec<usize>> = get_field(obj, "rows")?
        .as_array()
        .ok_or_else(|| Error::invalid("field \"rows\" must be an array"))?
        .iter()
        .map(|row| usize_array(row, "rows"))
        .collect::<Result<_>>()?;
    let parsed = Tableau::new(n, rows)?;
    if parsed.shape() != shape.as_slice() {
        return Err(Error::invalid(format!(
            "declared shape {shape:?} does not match rows of shape {:?}",
            parsed.shape()
        )));
    }
    Ok(parsed)
}

pub fn parse_tableau_str(n: usize, text: &str) -> Result<Tableau> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::invalid(format!("malformed JSON: {e}")))?;
    parse_tableau_value(n, &value)
}
