use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Md,
    Csv,
}

/// A table column: header and JSON pointer into a result row.
#[derive(Clone, Copy, Debug)]
pub struct Column {
    pub header: &'static str,
    pub pointer: &'static str,
}

pub const fn col(header: &'static str, pointer: &'static str) -> Column {
    Column { header, pointer }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config: Value,
    pub results: Vec<Value>,
    pub pass: bool,
    #[serde(skip)]
    pub columns: Vec<Column>,
}

impl Report {
    pub fn new(command: &str, config: Value, columns: Vec<Column>) -> Self {
        Report {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            config,
            results: Vec::new(),
            pass: true,
            columns,
        }
    }

    pub fn push(&mut self, row: Value, pass: bool) {
        self.pass &= pass;
        self.results.push(row);
    }
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(Value::Bool(b)) => if *b { "pass" } else { "FAIL" }.to_string(),
        Some(Value::Array(a)) => a.iter().map(|x| cell(Some(x))).collect::<Vec<_>>().join(","),
        Some(x) => x.to_string(),
    }
}

fn rows(report: &Report) -> Vec<Vec<String>> {
    report
        .results
        .iter()
        .map(|r| report.columns.iter().map(|c| cell(r.pointer(c.pointer))).collect())
        .collect()
}

pub fn emit_report(report: &Report, format: Format) -> Result<Vec<u8>, csv::Error> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable");
            s.push('\n');
            Ok(s.into_bytes())
        }
        Format::Md => {
            let mut s = String::new();
            let _ = writeln!(s, "# {} {}\n", report.tool, report.command);
            let headers: Vec<&str> = report.columns.iter().map(|c| c.header).collect();
            let _ = writeln!(s, "| {} |", headers.join(" | "));
            let _ = writeln!(s, "|{}", "---|".repeat(headers.len()));
            for row in rows(report) {
                let row: Vec<String> = row.iter().map(|c| c.replace('|', "\\|")).collect();
                let _ = writeln!(s, "| {} |", row.join(" | "));
            }
            let _ = writeln!(s, "\n**{}**", if report.pass { "all pass" } else { "FAILED" });
            Ok(s.into_bytes())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(report.columns.iter().map(|c| c.header))?;
            for row in rows(report) {
                w.write_record(&row)?;
            }
            Ok(w.into_inner().map_err(|e| e.into_error())?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new("kgroups", json!({"n": 8}), vec![col("n", "/n"), col("torsion", "/K0/invariant_factors")]);
        r.push(json!({"n": 8, "K0": {"rank": 3, "invariant_factors": [8, 8, 8]}}), true);
        r
    }

    #[test]
    fn empty_report_is_valid_json() {
        let r = Report::new("kgroups", json!({}), vec![col("n", "/n")]);
        let v: Value = serde_json::from_slice(&emit_report(&r, Format::Json).unwrap()).unwrap();
        assert_eq!(v["results"], json!([]));
        assert_eq!(v["pass"], true);
    }

    #[test]
    fn markdown_and_csv_tables() {
        let r = sample();
        let md = String::from_utf8(emit_report(&r, Format::Md).unwrap()).unwrap();
        assert!(md.contains("| n | torsion |"));
        assert!(md.contains("| 8 | 8,8,8 |"));
        let csv = String::from_utf8(emit_report(&r, Format::Csv).unwrap()).unwrap();
        assert_eq!(csv, "n,torsion\n8,\"8,8,8\"\n");
    }

    #[test]
    fn json_is_stable() {
        let a = emit_report(&sample(), Format::Json).unwrap();
        let b = emit_report(&sample(), Format::Json).unwrap();
        assert_eq!(a, b);
    }
}
