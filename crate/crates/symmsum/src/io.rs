//! Matrix file parsing and serialization.
//!
//! Matrices travel as JSON objects {"rows": n, "cols": m, "entries":
//! [[...], ...]} with row-major entry rows. An entry is an integer, a
//! float, or a string "p/q" for an exact rational. A file whose
//! entries are all integers or rational strings parses into the exact
//! ring; any float entry forces the whole matrix onto the float ring
//! (rational strings are then divided out as floats).

use crate::error::Error;
use crate::matrix::Matrix;
use crate::ring::Rational;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::str::FromStr;

/// A parsed matrix file: exact rational or float, never mixed.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixFile {
    Exact(Matrix<Rational>),
    Float(Matrix<f64>),
}

impl MatrixFile {
    pub fn rows(&self) -> usize {
        match self {
            MatrixFile::Exact(m) => m.rows(),
            MatrixFile::Float(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            MatrixFile::Exact(m) => m.cols(),
            MatrixFile::Float(m) => m.cols(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, MatrixFile::Exact(_))
    }

    /// The exact matrix, or an error if the file used floats.
    pub fn into_exact(self) -> Result<Matrix<Rational>, Error> {
        match self {
            MatrixFile::Exact(m) => Ok(m),
            MatrixFile::Float(_) => Err(Error::invalid(
                "operation needs exact entries, but the file contains floats".to_string(),
            )),
        }
    }

    /// The matrix as floats, converting exact entries if needed.
    pub fn into_float(self) -> Matrix<f64> {
        match self {
            MatrixFile::Exact(m) => m.map(|x| x.to_f64().unwrap_or(f64::NAN)),
            MatrixFile::Float(m) => m,
        }
    }
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let p = BigInt::from_str(num)
        .map_err(|_| Error::Parse(format!("bad rational numerator in {:?}", s)))?;
    let q = BigInt::from_str(den)
        .map_err(|_| Error::Parse(format!("bad rational denominator in {:?}", s)))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {:?}", s)));
    }
    Ok(Rational::new(p, q))
}

enum Entry {
    Int(i64),
    Big(BigInt),
    Ratio(Rational),
    Float(f64),
}

fn parse_entry(v: &Value) -> Result<Entry, Error> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Entry::Int(i))
            } else if let Some(f) = n.as_f64() {
                Ok(Entry::Float(f))
            } else {
                // Out-of-range integer (beyond i64); keep it exact.
                Ok(Entry::Big(
                    BigInt::from_str(&n.to_string())
                        .map_err(|_| Error::Parse(format!("bad number {}", n)))?,
                ))
            }
        }
        Value::String(s) => Ok(Entry::Ratio(parse_rational(s)?)),
        other => Err(Error::Parse(format!(
            "matrix entry must be a number or \"p/q\" string, got {}",
            other
        ))),
    }
}

/// Parses the JSON matrix format from a string.
pub fn parse_matrix_str(text: &str) -> Result<MatrixFile, Error> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {}", e)))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("matrix file must be a JSON object".to_string()))?;
    let rows = obj
        .get("rows")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing or invalid \"rows\"".to_string()))?
        as usize;
    let cols = obj
        .get("cols")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing or invalid \"cols\"".to_string()))?
        as usize;
    let entry_rows = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing or invalid \"entries\"".to_string()))?;
    if entry_rows.len() != rows {
        return Err(Error::Parse(format!(
            "expected {} entry rows, found {}",
            rows,
            entry_rows.len()
        )));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for row in entry_rows {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("each entry row must be an array".to_string()))?;
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "expected {} entries per row, found {}",
                cols,
                row.len()
            )));
        }
        for v in row {
            entries.push(parse_entry(v)?);
        }
    }
    let any_float = entries.iter().any(|e| matches!(e, Entry::Float(_)));
    if any_float {
        let floats = entries
            .into_iter()
            .map(|e| match e {
                Entry::Int(i) => i as f64,
                Entry::Big(b) => b.to_f64().unwrap_or(f64::NAN),
                Entry::Ratio(r) => r.to_f64().unwrap_or(f64::NAN),
                Entry::Float(f) => f,
            })
            .collect();
        Ok(MatrixFile::Float(Matrix::new(rows, cols, floats)?))
    } else {
        let exacts = entries
            .into_iter()
            .map(|e| match e {
                Entry::Int(i) => Rational::from_integer(BigInt::from(i)),
                Entry::Big(b) => Rational::from_integer(b),
                Entry::Ratio(r) => r,
                Entry::Float(_) => unreachable!("float ruled out above"),
            })
            .collect();
        Ok(MatrixFile::Exact(Matrix::new(rows, cols, exacts)?))
    }
}

fn rational_entry(x: &Rational) -> Value {
    if x.denom().is_one() {
        match x.numer().to_i64() {
            Some(i) => json!(i),
            None => json!(x.numer().to_string()),
        }
    } else {
        json!(x.to_string())
    }
}

/// Serializes an exact matrix to the JSON file format, using plain
/// integers where possible and "p/q" strings otherwise.
pub fn exact_matrix_to_json(m: &Matrix<Rational>) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                (0..m.cols())
                    .map(|j| rational_entry(&m[(i, j)]))
                    .collect(),
            )
        })
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

/// Serializes a float matrix to the JSON file format.
pub fn float_matrix_to_json(m: &Matrix<f64>) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| json!(m[(i, j)])).collect()))
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}
