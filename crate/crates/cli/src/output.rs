//! CSV tables and the JSON manifest written beside them.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// Full double precision: 17 significant digits survive a round trip.
/// Negative zero is written as zero.
pub fn number(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        Self { header, rows }
    }

    pub fn write<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub output_path: String,
    pub schema_version: u32,
}

impl RunManifest {
    pub fn new<S: Serialize>(
        command: &str,
        settings: &S,
        output: &Path,
    ) -> serde_json::Result<Self> {
        let parameters = match serde_json::to_value(settings)? {
            serde_json::Value::Object(map) => map.into_iter().collect(),
            other => BTreeMap::from([("value".to_string(), other)]),
        };
        Ok(Self {
            command: command.to_string(),
            parameters,
            output_path: output.display().to_string(),
            schema_version: SCHEMA_VERSION,
        })
    }
}

/// `run.csv` → `run.manifest.json`.
pub fn manifest_path(output: &Path) -> PathBuf {
    output.with_extension("manifest.json")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        let x = 0.1 + 0.2;
        let s = number(x);
        assert_eq!(s, "3.0000000000000004e-1");
        assert_eq!(s.parse::<f64>().unwrap(), x);
        assert_eq!(number(-0.0), "0.0000000000000000e0");
    }

    #[test]
    fn lf_line_endings() {
        let t = Table::new(vec!["a", "b"], vec![vec!["1".into(), "2".into()]]);
        let mut buf = Vec::new();
        t.write(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a,b\n1,2\n");
    }

    #[test]
    fn manifest_sits_beside_the_csv() {
        assert_eq!(
            manifest_path(Path::new("out/fig5.csv")),
            PathBuf::from("out/fig5.manifest.json")
        );
        assert_eq!(
            manifest_path(Path::new("table")),
            PathBuf::from("table.manifest.json")
        );
    }
}
