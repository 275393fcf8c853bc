//! JSON document assembly and the small formatting helpers shared by the
//! table renderers.
//!
//! Output is deterministic by construction: `serde_json`'s map type keeps
//! keys sorted, arrays are emitted in canonical (lexicographic weight)
//! order, rationals render as exact `p/q` strings, and complex numbers as
//! `[re, im]` pairs.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use springer_core::{CharacterCombo, LieType, Rational, RationalMatrix, Weight};

pub const SCHEMA_VERSION: &str = "1";

pub fn document(
    command: &str,
    lie_type: Option<LieType>,
    lambda: Option<&Weight>,
    payload: Value,
) -> Value {
    json!({
        "version": SCHEMA_VERSION,
        "command": command,
        "lie_type": lie_type.map_or(Value::Null, |lt| {
            json!({ "family": lt.family().letter().to_string(), "rank": lt.rank() })
        }),
        "lambda": lambda.map_or(Value::Null, weight_value),
        "payload": payload,
    })
}

pub fn emit(doc: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("document serializes")
    );
}

pub fn weight_value(w: &Weight) -> Value {
    json!(w.coords())
}

pub fn rational_value(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn complex_value(z: &Complex64) -> Value {
    json!([z.re, z.im])
}

/// Matrix as rows of exact rational strings.
pub fn matrix_value(m: &RationalMatrix) -> Value {
    Value::Array(
        (0..m.dim())
            .map(|i| Value::Array(m.row(i).iter().map(rational_value).collect()))
            .collect(),
    )
}

/// Matrix with integer entries (Cartan matrices) as rows of JSON integers.
pub fn integer_matrix_value(m: &RationalMatrix) -> Value {
    Value::Array(
        (0..m.dim())
            .map(|i| {
                Value::Array(
                    m.row(i)
                        .iter()
                        .map(|e| {
                            json!(e
                                .to_integer()
                                .to_i64()
                                .expect("Cartan entry fits in i64"))
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

/// A formal character sum as an ordered list of {weight, coeff} terms.
pub fn combo_value(c: &CharacterCombo) -> Value {
    Value::Array(
        c.terms()
            .map(|(w, r)| json!({ "weight": w.coords(), "coeff": r.to_string() }))
            .collect(),
    )
}

pub fn format_complex(z: &Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}
