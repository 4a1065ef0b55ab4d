//! JSON forms of the core report types. Arbitrary-precision integers are
//! written as decimal strings.

use serde::Serialize;
use serde_json::{json, Value};
use simcon_core::bounds::{BoundValue, BoundsReport, Scale};
use simcon_core::richness::RichFactorization;
use simcon_core::{EnumerationReport, KeyMode};

#[derive(Debug, Serialize)]
pub struct EnumerationJson {
    pub k: usize,
    pub n: usize,
    pub total_classes: String,
    pub exact: bool,
    pub per_length: Vec<u64>,
    pub max_rep_length: usize,
    pub termination: &'static str,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_seconds: Option<f64>,
    pub peak_key_store_keys: u64,
    pub peak_key_store_bytes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collision_probability_bound: Option<f64>,
}

pub fn mode_str(mode: KeyMode) -> &'static str {
    match mode {
        KeyMode::Exact => "exact",
        KeyMode::Fingerprint => "fingerprint",
    }
}

impl EnumerationJson {
    /// `timing` controls whether the wall-clock duration is included.
    pub fn new(r: &EnumerationReport, timing: bool) -> Self {
        EnumerationJson {
            k: r.k,
            n: r.n,
            total_classes: r.total_classes.to_string(),
            exact: r.is_exact(),
            per_length: r.per_length.clone(),
            max_rep_length: r.max_rep_length,
            termination: r.termination.as_str(),
            mode: mode_str(r.mode),
            duration_seconds: if timing {
                r.duration.map(|d| d.as_secs_f64())
            } else {
                None
            },
            peak_key_store_keys: r.peak_key_store.keys,
            peak_key_store_bytes: r.peak_key_store.bytes,
            collision_probability_bound: r.collision_probability_bound,
        }
    }
}

fn bound_value(v: &Option<BoundValue>) -> Value {
    match v {
        None => Value::Null,
        Some(BoundValue::Int(i)) => Value::String(i.to_string()),
        Some(BoundValue::Real(x)) => json!(x),
    }
}

pub fn scale_str(scale: Scale) -> &'static str {
    match scale {
        Scale::Count => "count",
        Scale::Log2 => "log2",
    }
}

pub fn bounds_report(r: &BoundsReport) -> Value {
    json!({
        "k": r.k,
        "n": r.n,
        "bound_id": r.bound_id.as_str(),
        "scale": scale_str(r.scale),
        "lower": bound_value(&r.lower),
        "lower_strict": r.lower_strict,
        "upper": bound_value(&r.upper),
        "upper_strict": r.upper_strict,
        "exact_value": r.exact_value.as_ref().map(|v| v.to_string()),
        "satisfied": r.satisfied.map(|v| v.as_str()),
        "margin": r.margin,
        "note": r.note,
    })
}

pub fn factorization(f: &RichFactorization) -> Value {
    let pairs: Vec<Value> = f
        .pairs
        .iter()
        .map(|(segment, a)| {
            let sep = simcon_core::Word::from_letters(vec![*a]);
            json!({ "segment": segment.to_string(), "separator": sep.to_string() })
        })
        .collect();
    json!({
        "richness": f.richness(),
        "pairs": pairs,
        "tail": f.tail.to_string(),
        "rendered": f.render(),
    })
}
