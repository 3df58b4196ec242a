//! Machine-readable reports: stable field names, atomic writes, no wall
//! clock anywhere so identical invocations produce identical bytes.

use std::path::Path;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub evidence: Value,
    pub witnesses: Value,
    pub version: String,
    pub seed: Option<u64>,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            result: Value::Null,
            evidence: Value::Null,
            witnesses: Value::Null,
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: None,
        }
    }

    /// Serialize and write via a sibling temp file plus rename, so readers
    /// never observe a half-written report.
    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(self).expect("reports are plain data");
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = std::path::PathBuf::from(tmp);
        std::fs::write(&tmp, text.as_bytes())?;
        std::fs::rename(&tmp, path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_have_the_published_shape() {
        let r = Report::new("descent", serde_json::json!({"morphism": "fzz"}));
        let v: Value = serde_json::to_value(&r).unwrap();
        let obj = v.as_object().unwrap();
        for field in ["command", "inputs", "result", "evidence", "witnesses", "version", "seed"] {
            assert!(obj.contains_key(field), "missing {field}");
        }
        assert_eq!(obj.len(), 7);
    }
}
