//! Canonical interchange forms for [`FracExpSeries`]: JSON, CSV and an
//! aligned text table.
//!
//! The JSON layout is
//! `{"denominator": D, "truncation": {"num", "den"}, "terms": [{"exp_num", "exp_den", "num", "den"}]}`
//! with terms ascending and `exp_den` always equal to `D`. Integers are
//! written with full precision.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;
use thiserror::Error;

use crate::series::{FracExpSeries, Rational};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed series JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid series: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(format!(
                "unknown format `{other}` (expected json, csv or text)"
            )),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CanonicalRational {
    pub num: Number,
    pub den: Number,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CanonicalTerm {
    pub exp_num: i64,
    pub exp_den: u64,
    pub num: Number,
    pub den: Number,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CanonicalSeries {
    pub denominator: u64,
    pub truncation: CanonicalRational,
    pub terms: Vec<CanonicalTerm>,
}

fn big_number(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("integer literal is valid JSON")
}

fn parse_big(n: &Number) -> Result<BigInt, FormatError> {
    BigInt::from_str(&n.to_string())
        .map_err(|_| FormatError::Invalid(format!("`{n}` is not an integer")))
}

fn parse_rational(num: &Number, den: &Number) -> Result<Rational, FormatError> {
    let d = parse_big(den)?;
    if d <= BigInt::from(0) {
        return Err(FormatError::Invalid(format!(
            "denominator {d} is not positive"
        )));
    }
    Ok(Rational::new(parse_big(num)?, d))
}

impl From<&Rational> for CanonicalRational {
    fn from(r: &Rational) -> Self {
        CanonicalRational {
            num: big_number(r.numer()),
            den: big_number(r.denom()),
        }
    }
}

impl From<&FracExpSeries> for CanonicalSeries {
    fn from(s: &FracExpSeries) -> Self {
        let d = s.denominator();
        CanonicalSeries {
            denominator: d,
            truncation: s.truncation().into(),
            terms: s
                .grid_terms()
                .map(|(k, c)| CanonicalTerm {
                    exp_num: k,
                    exp_den: d,
                    num: big_number(c.numer()),
                    den: big_number(c.denom()),
                })
                .collect(),
        }
    }
}

impl TryFrom<&CanonicalSeries> for FracExpSeries {
    type Error = FormatError;

    fn try_from(c: &CanonicalSeries) -> Result<Self, Self::Error> {
        if c.denominator == 0 {
            return Err(FormatError::Invalid("denominator must be positive".into()));
        }
        let trunc = parse_rational(&c.truncation.num, &c.truncation.den)?;
        let mut terms = Vec::with_capacity(c.terms.len());
        let mut last: Option<i64> = None;
        for t in &c.terms {
            if t.exp_den != c.denominator {
                return Err(FormatError::Invalid(format!(
                    "term exp_den {} differs from series denominator {}",
                    t.exp_den, c.denominator
                )));
            }
            if last.is_some_and(|k| k >= t.exp_num) {
                return Err(FormatError::Invalid(
                    "terms are not strictly ascending".into(),
                ));
            }
            last = Some(t.exp_num);
            terms.push((t.exp_num, parse_rational(&t.num, &t.den)?));
        }
        let n = terms.len();
        let s = FracExpSeries::from_terms(c.denominator, terms, trunc);
        if s.len() != n {
            return Err(FormatError::Invalid(
                "series contains zero coefficients or terms beyond its truncation".into(),
            ));
        }
        Ok(s)
    }
}

pub fn to_json_value(s: &FracExpSeries) -> serde_json::Value {
    serde_json::to_value(CanonicalSeries::from(s)).expect("canonical series serializes")
}

/// Compact canonical JSON.
pub fn to_json(s: &FracExpSeries) -> String {
    serde_json::to_string(&CanonicalSeries::from(s)).expect("canonical series serializes")
}

pub fn from_json(text: &str) -> Result<FracExpSeries, FormatError> {
    let c: CanonicalSeries = serde_json::from_str(text)?;
    FracExpSeries::try_from(&c)
}

pub fn from_json_value(v: &serde_json::Value) -> Result<FracExpSeries, FormatError> {
    let c: CanonicalSeries = serde_json::from_value(v.clone())?;
    FracExpSeries::try_from(&c)
}

/// One `exp_num,exp_den,num,den` row per stored term, ascending, no header.
pub fn to_csv(s: &FracExpSeries) -> String {
    let d = s.denominator();
    let mut out = String::new();
    for (k, c) in s.grid_terms() {
        writeln!(out, "{k},{d},{},{}", c.numer(), c.denom()).unwrap();
    }
    out
}

/// Two aligned columns, exponent and coefficient, followed by the truncation.
pub fn to_text(s: &FracExpSeries) -> String {
    let rows: Vec<(String, String)> = s
        .terms()
        .map(|(e, c)| (e.to_string(), c.to_string()))
        .collect();
    let w0 = rows
        .iter()
        .map(|r| r.0.len())
        .max()
        .unwrap_or(0)
        .max("exponent".len());
    let w1 = rows
        .iter()
        .map(|r| r.1.len())
        .max()
        .unwrap_or(0)
        .max("coefficient".len());
    let mut out = String::new();
    writeln!(out, "{:>w0$}  {:>w1$}", "exponent", "coefficient").unwrap();
    for (e, c) in rows {
        writeln!(out, "{e:>w0$}  {c:>w1$}").unwrap();
    }
    writeln!(out, "truncated at q^({})", s.truncation()).unwrap();
    out
}

pub fn emit(s: &FracExpSeries, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(s),
        OutputFormat::Csv => to_csv(s),
        OutputFormat::Text => to_text(s),
    }
}
