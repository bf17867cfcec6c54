//! JSON encoding of scalars and edge/area vectors.
//!
//! Conventions, chosen so exact values survive a round trip as text:
//!
//! * rationals are strings, "p/q" (or just "p" for integers);
//! * quadratic-extension elements are objects {"a": .., "b": .., "d": ..}
//!   meaning a + b*sqrt(d), with a and b rational strings;
//! * complex numbers are two-element arrays [re, im];
//! * Laurent polynomials are objects mapping exponent to coefficient,
//!   e.g. {"2": "-1/900", "-2": "1/225"};
//! * vectors are {"n": .., "ring": .., "entries": [..]}, entries in the
//!   canonical pair (edge) or triple (area) order.

use crate::metrics::{MetricsError, SquaredAreaVector, SquaredEdgeVector};
use crate::scalar::{ComplexScalar, LaurentPoly, NumError, QuadExtScalar, Rational};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum JsonError {
    #[error("expected {expected} at {context}")]
    Shape {
        context: String,
        expected: &'static str,
    },
    #[error("unknown scalar ring {0:?}")]
    UnknownRing(String),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
}

fn shape(context: impl Into<String>, expected: &'static str) -> JsonError {
    JsonError::Shape {
        context: context.into(),
        expected,
    }
}

/// Names of the four scalar rings in serialized form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    Rational,
    QuadExt,
    Complex,
    Laurent,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Rational => "rational",
            RingKind::QuadExt => "quadratic-extension",
            RingKind::Complex => "complex",
            RingKind::Laurent => "laurent",
        }
    }

    pub fn parse(text: &str) -> Result<Self, JsonError> {
        match text {
            "rational" => Ok(RingKind::Rational),
            "quadratic-extension" => Ok(RingKind::QuadExt),
            "complex" => Ok(RingKind::Complex),
            "laurent" => Ok(RingKind::Laurent),
            other => Err(JsonError::UnknownRing(other.to_string())),
        }
    }
}

/// A scalar type with a JSON representation.
pub trait JsonScalar: Sized {
    const KIND: RingKind;
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self, JsonError>;
}

impl JsonScalar for Rational {
    const KIND: RingKind = RingKind::Rational;

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(value: &Value) -> Result<Self, JsonError> {
        let text = value
            .as_str()
            .ok_or_else(|| shape("rational scalar", "a string like \"3/16\""))?;
        Ok(Rational::parse(text)?)
    }
}

impl JsonScalar for QuadExtScalar {
    const KIND: RingKind = RingKind::QuadExt;

    fn to_json(&self) -> Value {
        json!({
            "a": self.rational_part().to_string(),
            "b": self.irrational_part().to_string(),
            "d": self.discriminant(),
        })
    }

    fn from_json(value: &Value) -> Result<Self, JsonError> {
        let obj = value
            .as_object()
            .ok_or_else(|| shape("extension scalar", "an object with a, b, d"))?;
        let field = |name: &str| -> Result<Rational, JsonError> {
            let v = obj
                .get(name)
                .and_then(Value::as_str)
                .ok_or_else(|| shape(format!("field {name:?}"), "a rational string"))?;
            Ok(Rational::parse(v)?)
        };
        let d = obj
            .get("d")
            .and_then(Value::as_i64)
            .ok_or_else(|| shape("field \"d\"", "an integer"))?;
        Ok(QuadExtScalar::new(field("a")?, field("b")?, d)?)
    }
}

impl JsonScalar for ComplexScalar {
    const KIND: RingKind = RingKind::Complex;

    fn to_json(&self) -> Value {
        json!([self.re(), self.im()])
    }

    fn from_json(value: &Value) -> Result<Self, JsonError> {
        let arr = value
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| shape("complex scalar", "a two-element array [re, im]"))?;
        let part = |v: &Value| {
            v.as_f64()
                .ok_or_else(|| shape("complex component", "a number"))
        };
        Ok(ComplexScalar::new(part(&arr[0])?, part(&arr[1])?)?)
    }
}

impl JsonScalar for LaurentPoly {
    const KIND: RingKind = RingKind::Laurent;

    fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (exp, coeff) in self.terms() {
            map.insert(exp.to_string(), Value::String(coeff.to_string()));
        }
        Value::Object(map)
    }

    fn from_json(value: &Value) -> Result<Self, JsonError> {
        let obj = value
            .as_object()
            .ok_or_else(|| shape("laurent scalar", "an object of exponent: coefficient"))?;
        let mut out = LaurentPoly::zero();
        for (key, coeff) in obj {
            let exp: i64 = key
                .parse()
                .map_err(|_| shape(format!("exponent {key:?}"), "an integer key"))?;
            let coeff = coeff
                .as_str()
                .ok_or_else(|| shape("laurent coefficient", "a rational string"))?;
            out = &out + &LaurentPoly::monomial(Rational::parse(coeff)?, exp);
        }
        Ok(out)
    }
}

fn vector_to_json<R: JsonScalar>(n: usize, entries: &[R]) -> Value {
    json!({
        "n": n,
        "ring": R::KIND.name(),
        "entries": entries.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
    })
}

fn vector_from_json<R: JsonScalar>(value: &Value) -> Result<(usize, Vec<R>), JsonError> {
    let obj = value
        .as_object()
        .ok_or_else(|| shape("vector", "an object with n, ring, entries"))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| shape("field \"n\"", "a positive integer"))? as usize;
    let ring = obj
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| shape("field \"ring\"", "a ring name string"))?;
    let kind = RingKind::parse(ring)?;
    if kind != R::KIND {
        return Err(JsonError::UnknownRing(format!(
            "expected {}, found {}",
            R::KIND.name(),
            ring
        )));
    }
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("field \"entries\"", "an array"))?;
    let decoded = entries
        .iter()
        .map(R::from_json)
        .collect::<Result<Vec<R>, JsonError>>()?;
    Ok((n, decoded))
}

pub fn edge_vector_to_json<R: JsonScalar + crate::scalar::Ring>(s: &SquaredEdgeVector<R>) -> Value {
    vector_to_json(s.n(), s.entries())
}

pub fn edge_vector_from_json<R: JsonScalar + crate::scalar::Ring>(
    value: &Value,
) -> Result<SquaredEdgeVector<R>, JsonError> {
    let (n, entries) = vector_from_json(value)?;
    Ok(SquaredEdgeVector::new(n, entries)?)
}

pub fn area_vector_to_json<R: JsonScalar + crate::scalar::Ring>(s: &SquaredAreaVector<R>) -> Value {
    vector_to_json(s.n(), s.entries())
}

pub fn area_vector_from_json<R: JsonScalar + crate::scalar::Ring>(
    value: &Value,
) -> Result<SquaredAreaVector<R>, JsonError> {
    let (n, entries) = vector_from_json(value)?;
    Ok(SquaredAreaVector::new(n, entries)?)
}

/// An edge vector over whichever ring the JSON declared.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyEdgeVector {
    Rational(SquaredEdgeVector<Rational>),
    QuadExt(SquaredEdgeVector<QuadExtScalar>),
    Complex(SquaredEdgeVector<ComplexScalar>),
    Laurent(SquaredEdgeVector<LaurentPoly>),
}

impl AnyEdgeVector {
    pub fn from_json(value: &Value) -> Result<Self, JsonError> {
        let ring = value
            .get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| shape("field \"ring\"", "a ring name string"))?;
        Ok(match RingKind::parse(ring)? {
            RingKind::Rational => AnyEdgeVector::Rational(edge_vector_from_json(value)?),
            RingKind::QuadExt => AnyEdgeVector::QuadExt(edge_vector_from_json(value)?),
            RingKind::Complex => AnyEdgeVector::Complex(edge_vector_from_json(value)?),
            RingKind::Laurent => AnyEdgeVector::Laurent(edge_vector_from_json(value)?),
        })
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyEdgeVector::Rational(s) => edge_vector_to_json(s),
            AnyEdgeVector::QuadExt(s) => edge_vector_to_json(s),
            AnyEdgeVector::Complex(s) => edge_vector_to_json(s),
            AnyEdgeVector::Laurent(s) => edge_vector_to_json(s),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyEdgeVector::Rational(s) => s.n(),
            AnyEdgeVector::QuadExt(s) => s.n(),
            AnyEdgeVector::Complex(s) => s.n(),
            AnyEdgeVector::Laurent(s) => s.n(),
        }
    }

    pub fn ring(&self) -> RingKind {
        match self {
            AnyEdgeVector::Rational(_) => RingKind::Rational,
            AnyEdgeVector::QuadExt(_) => RingKind::QuadExt,
            AnyEdgeVector::Complex(_) => RingKind::Complex,
            AnyEdgeVector::Laurent(_) => RingKind::Laurent,
        }
    }
}
