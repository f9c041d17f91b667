//! JSON rendering: rationals as `"p/q"` strings, radicals as
//! `{rational, terms: {d: "p/q"}}`.

use exactmath::{Field, Polynomial, RadicalNumber, Rational, RationalFunction};
use serde::Serializer;
use serde_json::{json, Value};

pub fn rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// Coefficient rendering shared by both fields.
pub trait JsonCoeff: Field {
    fn to_json(&self) -> Value;
}

impl JsonCoeff for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl JsonCoeff for RadicalNumber {
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("radical serializes")
    }
}

pub fn poly<F: JsonCoeff>(p: &Polynomial<F>, var: &str) -> Value {
    json!({
        "text": p.to_string_var(var),
        "coefficients": p.coeffs().iter().map(|c| c.to_json()).collect::<Vec<_>>(),
    })
}

pub fn ratfun<F: JsonCoeff>(r: &RationalFunction<F>, var: &str) -> Value {
    json!({
        "text": r.to_string_var(var),
        "num": r.num().coeffs().iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        "den": r.den().coeffs().iter().map(|c| c.to_json()).collect::<Vec<_>>(),
    })
}
