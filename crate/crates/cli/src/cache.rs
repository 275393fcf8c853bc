//! Optional on-disk cache for computed weight systems.
//!
//! One JSON document per (family, rank, lambda), keyed by file name. The
//! payload is schema-versioned; a version bump, a key mismatch, or any
//! parse failure makes the loader fall through to a fresh computation, so
//! a stale or corrupt cache can never fail a command or poison a result
//! beyond what the stored multiplicities say.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigUint;
use serde_json::{json, Value};
use springer_core::{RootSystemData, Weight, WeightMultiset};

use crate::output::SCHEMA_VERSION;

pub fn file_path(dir: &Path, rs: &RootSystemData, lambda: &Weight) -> PathBuf {
    let coords: Vec<String> = lambda.coords().iter().map(|c| c.to_string()).collect();
    dir.join(format!("{}_{}.json", rs.lie_type, coords.join("_")))
}

pub fn load(dir: &Path, rs: &RootSystemData, lambda: &Weight) -> Option<WeightMultiset> {
    let text = fs::read_to_string(file_path(dir, rs, lambda)).ok()?;
    let doc: Value = serde_json::from_str(&text).ok()?;
    if doc.get("version")?.as_str()? != SCHEMA_VERSION {
        return None;
    }
    if doc.get("family")?.as_str()? != rs.lie_type.family().letter().to_string()
        || doc.get("rank")?.as_u64()? != rs.rank() as u64
        || read_coords(doc.get("lambda")?)? != *lambda.coords()
    {
        return None;
    }

    let mut dominant_mults = BTreeMap::new();
    for entry in doc.get("dominant")?.as_array()? {
        let coords = read_coords(entry.get("weight")?)?;
        if coords.len() != rs.rank() {
            return None;
        }
        let mult = BigUint::from_str(entry.get("multiplicity")?.as_str()?).ok()?;
        dominant_mults.insert(Weight::new(coords), mult);
    }
    if !dominant_mults.contains_key(lambda) {
        return None;
    }
    let total_dim = BigUint::from_str(doc.get("total_dimension")?.as_str()?).ok()?;

    Some(WeightMultiset {
        lie_type: rs.lie_type,
        highest: lambda.clone(),
        dominant_mults,
        total_dim,
    })
}

/// Best effort: a cache store failure must never fail the command.
pub fn store(dir: &Path, rs: &RootSystemData, wm: &WeightMultiset) {
    let dominant: Vec<Value> = wm
        .dominant_mults
        .iter()
        .map(|(w, m)| json!({ "weight": w.coords(), "multiplicity": m.to_string() }))
        .collect();
    let doc = json!({
        "version": SCHEMA_VERSION,
        "family": rs.lie_type.family().letter().to_string(),
        "rank": rs.rank(),
        "lambda": wm.highest.coords(),
        "dominant": dominant,
        "total_dimension": wm.total_dim.to_string(),
    });
    let _ = fs::create_dir_all(dir);
    if let Ok(text) = serde_json::to_string_pretty(&doc) {
        let _ = fs::write(file_path(dir, rs, &wm.highest), text + "\n");
    }
}

fn read_coords(value: &Value) -> Option<Vec<i64>> {
    value.as_array()?.iter().map(Value::as_i64).collect()
}
