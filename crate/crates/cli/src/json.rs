//! JSON encodings of scalars and matrices.
//!
//! A scalar is written as the 4-array `[a, b, c, d]` of rational strings for
//! `a + b√2 + (c + d√2)i`. On input a bare integer or rational string is
//! accepted as well.

use crate::error::{CliError, CliResult};
use serde_json::Value;
use spinhol::{Matrix, Scalar};

pub fn scalar_to_json(s: &Scalar) -> Value {
    Value::Array(s.to_components().into_iter().map(Value::String).collect())
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(m.row(i))).collect())
}

fn component(v: &Value, path: &str) -> CliResult<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        _ => Err(CliError::parse(format!("{path}: expected an integer or rational string, got {v}"))),
    }
}

pub fn scalar_from_json(v: &Value, path: &str) -> CliResult<Scalar> {
    let bad = |e: spinhol::Error| CliError::parse(format!("{path}: {e}"));
    match v {
        Value::Array(parts) => {
            let parts = parts
                .iter()
                .enumerate()
                .map(|(i, p)| component(p, &format!("{path}[{i}]")))
                .collect::<CliResult<Vec<_>>>()?;
            Scalar::parse_components(&parts).map_err(bad)
        }
        other => component(other, path)?.parse::<Scalar>().map_err(bad),
    }
}

pub fn array<'a>(v: &'a Value, path: &str) -> CliResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| CliError::parse(format!("{path}: expected an array")))
}

pub fn vector_from_json(v: &Value, path: &str) -> CliResult<Vec<Scalar>> {
    array(v, path)?.iter().enumerate().map(|(i, x)| scalar_from_json(x, &format!("{path}[{i}]"))).collect()
}

pub fn matrix_from_json(v: &Value, path: &str) -> CliResult<Matrix> {
    let rows = array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, r)| vector_from_json(r, &format!("{path}[{i}]")))
        .collect::<CliResult<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(rows).map_err(|e| CliError::parse(format!("{path}: {e}")))
}

pub fn index(v: &Value, dim: usize, path: &str) -> CliResult<usize> {
    let i = v.as_u64().ok_or_else(|| CliError::parse(format!("{path}: expected a non-negative integer index")))?;
    let i = usize::try_from(i).map_err(|_| CliError::parse(format!("{path}: index too large")))?;
    if i >= dim {
        return Err(CliError::parse(format!("{path}: index {i} out of range for dimension {dim}")));
    }
    Ok(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn scalar_literals() {
        let s = scalar_from_json(&json!(["1/2", 0, "-3", "1"]), "x").unwrap();
        assert_eq!(s.to_components(), ["1/2", "0", "-3", "1"].map(String::from));
        assert_eq!(scalar_to_json(&s), json!(["1/2", "0", "-3", "1"]));
        assert_eq!(scalar_from_json(&json!(-4), "x").unwrap(), Scalar::from_i64(-4));
        assert_eq!(scalar_from_json(&json!("2/6"), "x").unwrap(), Scalar::frac(1, 3));
        assert!(scalar_from_json(&json!(["1", "2"]), "x").is_err());
        assert!(scalar_from_json(&json!(1.5), "x").is_err());
        assert!(scalar_from_json(&json!("1/0"), "x").is_err());
    }

    #[test]
    fn indices() {
        assert_eq!(index(&json!(2), 3, "i").unwrap(), 2);
        let err = index(&json!(3), 3, "brackets[0][1]").unwrap_err();
        assert!(err.to_string().contains("brackets[0][1]"));
        assert!(index(&json!(-1), 3, "i").is_err());
    }
}
