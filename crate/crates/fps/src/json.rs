//! JSON interchange.
//!
//! The series schema shared by every module and the CLI:
//!
//! ```text
//! {"mode":"exact"|"float","order":N,"coeffs":[[re,im],...]}
//! ```
//!
//! Exact-mode re/im are strings "p/q"; float-mode re/im are numbers.
//! Exact values round-trip bit-identically. CSV export is one coefficient
//! per line, `n,re,im`.

use crate::coeff::{to_complex64, Complex64, GaussRational};
use crate::error::{Error, Result};
use crate::invert::LeftInverseReport;
use crate::matrix::CompMatrix;
use crate::series::Series;
use num::rational::BigRational;
use num::Complex;
use serde_json::{json, Value};
use std::str::FromStr;

/// Coefficient mode tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(Error::Json(format!("unknown mode {other:?}"))),
        }
    }
}

/// A series of either coefficient mode, as read from or written to JSON.
#[derive(Clone, Debug, PartialEq)]
pub enum DynSeries {
    Exact(Series<GaussRational>),
    Float(Series<Complex64>),
}

impl DynSeries {
    pub fn mode(&self) -> Mode {
        match self {
            DynSeries::Exact(_) => Mode::Exact,
            DynSeries::Float(_) => Mode::Float,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            DynSeries::Exact(s) => s.order(),
            DynSeries::Float(s) => s.order(),
        }
    }

    /// Truncates or zero-pads to exactly `order`.
    pub fn resized(&self, order: usize) -> DynSeries {
        match self {
            DynSeries::Exact(s) => DynSeries::Exact(s.resized(order)),
            DynSeries::Float(s) => DynSeries::Float(s.resized(order)),
        }
    }

    pub fn as_exact(&self) -> Result<&Series<GaussRational>> {
        match self {
            DynSeries::Exact(s) => Ok(s),
            DynSeries::Float(_) => Err(Error::ModeMismatch),
        }
    }

    pub fn as_float(&self) -> Result<&Series<Complex64>> {
        match self {
            DynSeries::Float(s) => Ok(s),
            DynSeries::Exact(_) => Err(Error::ModeMismatch),
        }
    }

    /// Lossy conversion of exact coefficients to floats; float series pass
    /// through unchanged.
    pub fn to_float(&self) -> Series<Complex64> {
        match self {
            DynSeries::Float(s) => s.clone(),
            DynSeries::Exact(s) => {
                Series::new(s.coeffs().iter().map(to_complex64).collect())
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            DynSeries::Exact(s) => json!({
                "mode": "exact",
                "order": s.order(),
                "coeffs": s.coeffs().iter().map(exact_pair).collect::<Vec<_>>(),
            }),
            DynSeries::Float(s) => json!({
                "mode": "float",
                "order": s.order(),
                "coeffs": s
                    .coeffs()
                    .iter()
                    .map(|c| json!([c.re, c.im]))
                    .collect::<Vec<_>>(),
            }),
        }
    }

    pub fn from_json(value: &Value) -> Result<DynSeries> {
        let object = value
            .as_object()
            .ok_or_else(|| Error::Json("series must be a JSON object".into()))?;
        let mode: Mode = object
            .get("mode")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Json("missing or non-string \"mode\"".into()))?
            .parse()?;
        let order = object
            .get("order")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("missing or non-integer \"order\"".into()))?
            as usize;
        let coeffs = object
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing or non-array \"coeffs\"".into()))?;
        if coeffs.len() != order + 1 {
            return Err(Error::Json(format!(
                "order {} wants {} coefficients, found {}",
                order,
                order + 1,
                coeffs.len()
            )));
        }
        match mode {
            Mode::Exact => {
                let parsed: Result<Vec<GaussRational>> =
                    coeffs.iter().map(parse_exact_pair).collect();
                Ok(DynSeries::Exact(Series::new(parsed?)))
            }
            Mode::Float => {
                let parsed: Result<Vec<Complex64>> =
                    coeffs.iter().map(parse_float_pair).collect();
                Ok(DynSeries::Float(Series::new(parsed?)))
            }
        }
    }

    pub fn from_json_str(text: &str) -> Result<DynSeries> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        DynSeries::from_json(&value)
    }

    /// One coefficient per line: `n,re,im`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match self {
            DynSeries::Exact(s) => {
                for (n, c) in s.coeffs().iter().enumerate() {
                    out.push_str(&format!("{n},{},{}\n", rational_str(&c.re), rational_str(&c.im)));
                }
            }
            DynSeries::Float(s) => {
                for (n, c) in s.coeffs().iter().enumerate() {
                    out.push_str(&format!("{n},{},{}\n", c.re, c.im));
                }
            }
        }
        out
    }
}

fn rational_str(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn exact_pair(c: &GaussRational) -> Value {
    json!([rational_str(&c.re), rational_str(&c.im)])
}

fn parse_rational(v: &Value) -> Result<BigRational> {
    let text = v
        .as_str()
        .ok_or_else(|| Error::Json("exact coefficients are \"p/q\" strings".into()))?;
    BigRational::from_str(text)
        .map_err(|e| Error::Json(format!("bad rational {text:?}: {e}")))
}

fn parse_exact_pair(v: &Value) -> Result<GaussRational> {
    let pair = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Json("each coefficient is a [re, im] pair".into()))?;
    Ok(Complex::new(parse_rational(&pair[0])?, parse_rational(&pair[1])?))
}

fn parse_float_pair(v: &Value) -> Result<Complex64> {
    let pair = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Json("each coefficient is a [re, im] pair".into()))?;
    let re = pair[0]
        .as_f64()
        .ok_or_else(|| Error::Json("float coefficients are numbers".into()))?;
    let im = pair[1]
        .as_f64()
        .ok_or_else(|| Error::Json("float coefficients are numbers".into()))?;
    Ok(Complex::new(re, im))
}

/// Matrix JSON: `{"rows":[[...],...]}` with the series coefficient encoding.
pub fn comp_matrix_to_json(matrix: &CompMatrix<GaussRational>) -> Value {
    let rows: Vec<Value> = matrix
        .rows()
        .iter()
        .map(|row| Value::Array(row.iter().map(exact_pair).collect()))
        .collect();
    json!({ "rows": rows })
}

pub fn comp_matrix_to_json_float(matrix: &CompMatrix<Complex64>) -> Value {
    let rows: Vec<Value> = matrix
        .rows()
        .iter()
        .map(|row| Value::Array(row.iter().map(|c| json!([c.re, c.im])).collect()))
        .collect();
    json!({ "rows": rows })
}

/// Left-inverse report JSON:
/// `{"candidate":<series>,"existence":"...","radius_estimate":...,"detail":"..."}`.
pub fn left_inverse_report_to_json(report: &LeftInverseReport<GaussRational>) -> Value {
    json!({
        "candidate": DynSeries::Exact(report.candidate.clone()).to_json(),
        "existence": report.existence.to_string(),
        "radius_estimate": report.radius_estimate,
        "detail": report.detail,
    })
}

pub fn left_inverse_report_to_json_float(report: &LeftInverseReport<Complex64>) -> Value {
    json!({
        "candidate": DynSeries::Float(report.candidate.clone()).to_json(),
        "existence": report.existence.to_string(),
        "radius_estimate": report.radius_estimate,
        "detail": report.detail,
    })
}
