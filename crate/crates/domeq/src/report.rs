//! Machine-readable run reports. JSON is the canonical format; CSV emits
//! one row per (source id, polynomial key).

use crate::equiv::{ClassReport, RecordFailure};
use serde::Serialize;

#[derive(Serialize, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub results: Vec<serde_json::Value>,
    pub failures: Vec<serde_json::Value>,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<String>) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results: vec![],
            failures: vec![],
        }
    }

    pub fn push_failure_records(&mut self, failures: &[RecordFailure]) {
        for f in failures {
            self.failures.push(serde_json::json!({
                "source_id": f.source_id,
                "error": f.error,
            }));
        }
    }

    pub fn push_class_reports(&mut self, reports: &[ClassReport]) {
        for r in reports {
            self.results.push(class_report_json(r));
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// One row per (source_id, polynomial key) over all class-report results.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["source_id", "polynomial_key"]).unwrap();
        for value in &self.results {
            if let Some(members) = value.get("members").and_then(|m| m.as_array()) {
                let key = value.get("key").and_then(|k| k.as_str()).unwrap_or("");
                for m in members {
                    let id = m.get("source_id").and_then(|s| s.as_str()).unwrap_or("");
                    w.write_record([id, key]).unwrap();
                }
            } else {
                let key = value
                    .get("polynomial_key")
                    .and_then(|k| k.as_str())
                    .unwrap_or("");
                let id = value.get("source_id").and_then(|s| s.as_str()).unwrap_or("");
                w.write_record([id, key]).unwrap();
            }
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    pub fn has_failures(&self) -> bool {
        !self.failures.is_empty()
    }
}

pub fn class_report_json(r: &ClassReport) -> serde_json::Value {
    serde_json::json!({
        "key": r.key,
        "members": r.members.iter().map(|m| serde_json::json!({
            "source_id": m.source_id,
            "order": m.graph.n(),
            "connected": crate::equiv::is_connected(&m.graph),
        })).collect::<Vec<_>>(),
        "iso_classes": r.iso_classes,
        "connected_count": r.connected_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equiv::{classify_catalog, CatalogRecord, ClassifyOptions};
    use crate::families::barbell;

    #[test]
    fn json_schema_is_stable() {
        let records = vec![CatalogRecord {
            source_id: "bar3".into(),
            graph: barbell(3).unwrap(),
        }];
        let (reports, failures) = classify_catalog(records, &ClassifyOptions::default());
        let mut report = Report::new("classify", vec!["test".into()]);
        report.push_class_reports(&reports);
        report.push_failure_records(&failures);
        let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(value["command"], "classify");
        assert!(value["results"].is_array());
        assert!(value["failures"].is_array());
        assert_eq!(value["results"][0]["key"], "0,0,9,18,15,6,1");
        assert_eq!(value["results"][0]["members"][0]["source_id"], "bar3");
        assert!(!report.has_failures());
    }

    #[test]
    fn csv_has_one_row_per_member() {
        let records = vec![
            CatalogRecord {
                source_id: "a".into(),
                graph: barbell(3).unwrap(),
            },
            CatalogRecord {
                source_id: "b".into(),
                graph: barbell(3).unwrap(),
            },
        ];
        let (reports, _) = classify_catalog(records, &ClassifyOptions::default());
        let mut report = Report::new("classify", vec![]);
        report.push_class_reports(&reports);
        let csv = report.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("a,"));
        assert!(lines[1].contains("\"0,0,9,18,15,6,1\""));
    }
}
