//! Result emission: CSV tables and a flat JSON summary.
//!
//! Every CSV numeric is written as `{:.16e}` (17 significant digits), which
//! round-trips through `f64` parsing and makes repeated runs byte-identical.
//! Line endings are LF on every platform.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde_json::{Number, Value};

use crate::Failure;

pub fn fmt(value: f64) -> String {
    format!("{value:.16e}")
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, Failure> {
    std::fs::create_dir_all(dir)
        .map_err(|e| Failure::Config(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(name);
    std::fs::write(&path, contents)
        .map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

/// Writes one CSV table with a header row; cells are already formatted.
pub fn write_csv(
    dir: &Path,
    name: &str,
    header: &str,
    rows: &[Vec<String>],
) -> Result<PathBuf, Failure> {
    let mut text = String::from(header);
    text.push('\n');
    for row in rows {
        text.push_str(&row.join(","));
        text.push('\n');
    }
    write_file(dir, name, &text)
}

/// Flat key/value summary, serialized with sorted keys.
#[derive(Default)]
pub struct Summary {
    entries: BTreeMap<String, Value>,
}

impl Summary {
    pub fn new(command: &str) -> Self {
        let mut summary = Self::default();
        summary.set_str("command", command);
        summary.set_str("version", env!("CARGO_PKG_VERSION"));
        summary
    }

    pub fn set_str(&mut self, key: &str, value: &str) {
        self.entries.insert(key.into(), Value::String(value.into()));
    }

    pub fn set_int(&mut self, key: &str, value: u64) {
        self.entries.insert(key.into(), Value::Number(value.into()));
    }

    pub fn set_bool(&mut self, key: &str, value: bool) {
        self.entries.insert(key.into(), Value::Bool(value));
    }

    /// Non-finite values become `null`, keeping the file valid JSON.
    pub fn set_num(&mut self, key: &str, value: f64) {
        let value = Number::from_f64(value).map(Value::Number).unwrap_or(Value::Null);
        self.entries.insert(key.into(), value);
    }

    pub fn set_opt_num(&mut self, key: &str, value: Option<f64>) {
        match value {
            Some(v) => self.set_num(key, v),
            None => {
                self.entries.insert(key.into(), Value::Null);
            }
        }
    }

    pub fn set_num_array(&mut self, key: &str, values: &[f64]) {
        let array = values
            .iter()
            .map(|&v| Number::from_f64(v).map(Value::Number).unwrap_or(Value::Null))
            .collect();
        self.entries.insert(key.into(), Value::Array(array));
    }

    pub fn write(&self, dir: &Path) -> Result<PathBuf, Failure> {
        let mut text = serde_json::to_string_pretty(&self.entries).expect("summary serializes");
        text.push('\n');
        write_file(dir, "summary.json", &text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatted_numbers_round_trip() {
        for value in [0.1, -3.0 / 16.0, 2.0 * std::f64::consts::PI, 1e-300, f64::NAN] {
            let text = fmt(value);
            let back: f64 = text.parse().unwrap();
            assert!(back == value || (back.is_nan() && value.is_nan()), "{text}");
        }
    }

    #[test]
    fn csv_uses_lf_only() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_csv(
            dir.path(),
            "t.csv",
            "a,b",
            &[vec![fmt(1.0), fmt(2.0)]],
        )
        .unwrap();
        let text = std::fs::read_to_string(path).unwrap();
        assert!(!text.contains('\r'));
        assert_eq!(text.lines().count(), 2);
    }

    #[test]
    fn summary_is_flat_json() {
        let dir = tempfile::tempdir().unwrap();
        let mut summary = Summary::new("solve");
        summary.set_num("value", 1.5);
        summary.set_opt_num("missing", None);
        let path = summary.write(dir.path()).unwrap();
        let parsed: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        let object = parsed.as_object().unwrap();
        assert!(object.values().all(|v| !v.is_object()));
        assert_eq!(object["command"], "solve");
        assert!(object["missing"].is_null());
    }
}
