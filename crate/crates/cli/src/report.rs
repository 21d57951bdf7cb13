use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use lefschetz_core::maps::FactoredDeterminant;

/// The structured record printed with `--json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub witnesses: Vec<Value>,
    pub timing_ms: f64,
    pub version: String,
}

/// What a command produced, before timing is attached.
pub struct Outcome {
    pub input: Value,
    pub result: Value,
    pub witnesses: Vec<Value>,
    pub text: String,
    /// For assertion commands, whether the asserted property held.
    pub assertion: Option<bool>,
}

impl Outcome {
    pub fn new(input: Value, result: Value, text: String) -> Self {
        Outcome {
            input,
            result,
            witnesses: Vec::new(),
            text,
            assertion: None,
        }
    }

    pub fn witnesses(mut self, w: Vec<Value>) -> Self {
        self.witnesses = w;
        self
    }

    pub fn asserting(mut self, held: bool) -> Self {
        self.assertion = Some(held);
        self
    }
}

/// `2^2·3·5`, or `1` for the empty product.
pub fn factorization_text<K: ToString>(f: &BTreeMap<K, u32>) -> String {
    if f.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    for (k, (p, &e)) in f.iter().enumerate() {
        if k > 0 {
            out.push('·');
        }
        out.push_str(&p.to_string());
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
    out
}

pub fn factorization_json<K: ToString>(f: &BTreeMap<K, u32>) -> Value {
    Value::Object(f.iter().map(|(p, &e)| (p.to_string(), json!(e))).collect())
}

pub fn big(n: &BigUint) -> Value {
    Value::String(n.to_string())
}

pub fn determinant_json(f: &FactoredDeterminant) -> Value {
    json!({
        "d": f.d,
        "t": f.t,
        "r": f.r,
        "s": f.s,
        "difference_factors": f.difference_factors,
        "factorial_numerators": f.factorial_numerators,
        "factorial_denominators": f.factorial_denominators,
        "value": big(&f.value),
        "factorization": factorization_json(&f.prime_factorization),
    })
}

pub fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}
