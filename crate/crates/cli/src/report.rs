//! The report document every subcommand emits.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Ok,
    Absent,
    Vacuous,
    Confirmed,
    Violation,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Error => 1,
            Verdict::Violation => 2,
            _ => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Ok => "ok",
            Verdict::Absent => "absent",
            Verdict::Vacuous => "vacuous",
            Verdict::Confirmed => "confirmed",
            Verdict::Violation => "violation",
            Verdict::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "name", rename_all = "lowercase")]
pub enum Input {
    Preset(String),
    File(String),
    Presentation(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: Option<Input>,
    pub verdict: Verdict,
    pub result: Value,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn new(command: &str, input: Option<Input>, verdict: Verdict, result: Value, text: String) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            tool: "semiring",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input,
            verdict,
            result,
            text,
        }
    }

    pub fn error(command: &str, input: Option<Input>, message: String) -> Self {
        let text = format!("error: {message}\n");
        Report::new(command, input, Verdict::Error, serde_json::json!({ "message": message }), text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut doc = serde_json::to_string_pretty(report).expect("report serializes");
            doc.push('\n');
            doc
        }
        Format::Text => {
            let mut out = format!("{}: {}\n", report.command, report.verdict.as_str());
            out.push_str(&report.text);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        for (v, code) in [
            (Verdict::Ok, 0),
            (Verdict::Absent, 0),
            (Verdict::Vacuous, 0),
            (Verdict::Confirmed, 0),
            (Verdict::Error, 1),
            (Verdict::Violation, 2),
        ] {
            assert_eq!(v.exit_code(), code);
        }
    }

    #[test]
    fn violation_serializes_lowercase() {
        let r = Report::new("check", None, Verdict::Violation, Value::Null, String::new());
        let doc = emit_report(&r, Format::Json);
        assert!(doc.contains(r#""verdict": "violation""#));
        assert!(emit_report(&r, Format::Text).starts_with("check: violation\n"));
    }
}
