//! JSON views of coefficients, elements and structure constants.

use serde::Serialize;
use serde_json::{json, Value};

use crate::dh::DhElem;
use crate::field::Coeff;
use crate::hall::{LinComb, Tensor};
use crate::rep::{RepCat, RepKey};
use crate::Result;

pub fn coeff(c: &Coeff) -> Value {
    json!({ "rat": c.rat_part().to_string(), "sqrt": c.sqrt_part().to_string() })
}

/// `[{"A", "B", "alpha", "beta", "coeff"}]`, in key order.
pub fn dh_element(x: &DhElem) -> Value {
    Value::Array(
        x.iter()
            .map(|(k, c)| json!({ "A": k.a, "B": k.b, "alpha": k.alpha, "beta": k.beta, "coeff": coeff(c) }))
            .collect(),
    )
}

/// `[{"key", "coeff"}]` for any serializable basis.
pub fn element<K: Ord + Clone + Serialize>(x: &LinComb<K>) -> Value {
    Value::Array(x.iter().map(|(k, c)| json!({ "key": k, "coeff": coeff(c) })).collect())
}

pub fn tensor<K: Ord + Clone + Serialize>(x: &Tensor<K>) -> Value {
    Value::Array(x.iter().map(|((l, r), c)| json!({ "left": l, "right": r, "coeff": coeff(c) })).collect())
}

/// Structure-constant rows `{"L", "M", "N", "g"}` for every `L` in `keys`.
pub fn structure_constants(cat: &RepCat, keys: &[RepKey]) -> Result<Value> {
    let mut rows = Vec::new();
    for l in keys {
        for ((m, n), g) in cat.subobject_table(l)?.iter() {
            rows.push(json!({ "L": l, "M": m, "N": n, "g": g }));
        }
    }
    Ok(Value::Array(rows))
}
