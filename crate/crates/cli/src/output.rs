use std::collections::BTreeMap;
use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

/// One labelled value. Exact integers are always decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct ResultEntry {
    pub label: String,
    pub value: String,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub results: Vec<ResultEntry>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            params: BTreeMap::new(),
            results: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, label: impl Into<String>, value: impl ToString, method: &str) {
        self.results.push(ResultEntry {
            label: label.into(),
            value: value.to_string(),
            method: method.to_string(),
            detail: None,
        });
    }

    pub fn push_detail(
        &mut self,
        label: impl Into<String>,
        value: impl ToString,
        method: &str,
        detail: String,
    ) {
        self.push(label, value, method);
        self.results.last_mut().expect("just pushed").detail = Some(detail);
    }

    /// Distinct method tags in order of first use.
    pub fn provenance(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.results {
            if !out.contains(&r.method.as_str()) {
                out.push(&r.method);
            }
        }
        out
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["label", "value", "method"])?;
                for r in &self.results {
                    w.write_record([&r.label, &r.value, &r.method])?;
                }
                w.flush()
            }
            Format::Bfile => {
                for r in &self.results {
                    writeln!(out, "{} {}", r.label, r.value)?;
                }
                Ok(())
            }
            Format::Text => {
                for r in &self.results {
                    match &r.detail {
                        Some(d) => writeln!(out, "{} {}: {}", r.value, r.label, d)?,
                        None => writeln!(out, "{} = {}", r.label, r.value)?,
                    }
                }
                writeln!(out, "# methods: {}", self.provenance().join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> OutputRecord {
        let mut rec = OutputRecord::new("poly").param("p", 2);
        rec.push("polynomial", "C(n,2) + 6*C(n,3)", "interpolation");
        rec.push("C(n,2)", 1, "finite-differences");
        rec
    }

    #[test]
    fn json_schema() {
        let mut buf = Vec::new();
        sample().render(Format::Json, &mut buf).unwrap();
        let doc: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(doc["command"], "poly");
        assert_eq!(doc["params"]["p"], "2");
        assert_eq!(doc["results"][1]["value"], "1");
        assert!(doc["results"][0].get("detail").is_none());
    }

    #[test]
    fn csv_quotes_commas() {
        let mut buf = Vec::new();
        sample().render(Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\"C(n,2) + 6*C(n,3)\""));
    }

    #[test]
    fn provenance_is_deduplicated() {
        let mut rec = sample();
        rec.push("x", 1, "interpolation");
        assert_eq!(rec.provenance(), ["interpolation", "finite-differences"]);
    }
}
