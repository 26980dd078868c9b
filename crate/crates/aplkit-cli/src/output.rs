//! Report rendering: human-readable text and versioned structured JSON.

use aplkit::{IdentityReport, Scalar};
use serde::Serialize;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Text,
    Structured,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<OutputFormat> {
        match s {
            "text" => Some(OutputFormat::Text),
            "structured" => Some(OutputFormat::Structured),
            _ => None,
        }
    }
}

#[derive(Serialize)]
pub struct JsonWitness {
    pub inputs: Vec<usize>,
    pub labels: Option<Vec<String>>,
    pub defect: Vec<String>,
}

#[derive(Serialize)]
pub struct JsonReport {
    pub identity: String,
    pub holds: bool,
    pub witness: Option<JsonWitness>,
}

#[derive(Serialize)]
pub struct JsonEnvelope {
    pub schema_version: u32,
    pub command: String,
    pub subject: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<JsonReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

fn scalar_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn json_report(report: &IdentityReport, labels: Option<&[String]>) -> JsonReport {
    JsonReport {
        identity: report.identity_id.clone(),
        holds: report.holds,
        witness: report.witness.as_ref().map(|w| JsonWitness {
            inputs: w.inputs.clone(),
            labels: labels.map(|ls| {
                w.inputs
                    .iter()
                    .map(|&i| ls.get(i).cloned().unwrap_or_else(|| format!("e{i}")))
                    .collect()
            }),
            defect: scalar_strings(&w.defect),
        }),
    }
}

pub fn render_reports_text(
    header: &str,
    reports: &[IdentityReport],
    labels: Option<&[String]>,
    out: &mut String,
) {
    out.push_str(header);
    out.push('\n');
    for r in reports {
        if r.holds {
            out.push_str(&format!("  [pass] {}\n", r.identity_id));
        } else {
            let w = r.witness.as_ref().expect("failing report has witness");
            let inputs = match labels {
                Some(ls) => w
                    .inputs
                    .iter()
                    .map(|&i| ls.get(i).cloned().unwrap_or_else(|| format!("e{i}")))
                    .collect::<Vec<_>>()
                    .join(", "),
                None => w
                    .inputs
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            };
            let defect = scalar_strings(&w.defect).join(", ");
            out.push_str(&format!(
                "  [FAIL] {}  witness=({inputs})  defect=[{defect}]\n",
                r.identity_id
            ));
        }
    }
    let ok = reports.iter().all(|r| r.holds);
    out.push_str(&format!("result: {}\n", if ok { "PASS" } else { "FAIL" }));
}

pub struct Rendered {
    pub text: String,
    pub ok: bool,
}

pub fn render(
    format: OutputFormat,
    command: &str,
    subject: &str,
    reports: &[IdentityReport],
    labels: Option<&[String]>,
    detail: Option<serde_json::Value>,
) -> Rendered {
    let ok = reports.iter().all(|r| r.holds);
    let text = match format {
        OutputFormat::Text => {
            let mut s = String::new();
            render_reports_text(&format!("{command} {subject}"), reports, labels, &mut s);
            if let Some(d) = &detail {
                s.push_str(&format!("detail: {d}\n"));
            }
            s
        }
        OutputFormat::Structured => {
            let envelope = JsonEnvelope {
                schema_version: REPORT_SCHEMA_VERSION,
                command: command.to_string(),
                subject: subject.to_string(),
                ok,
                reports: reports.iter().map(|r| json_report(r, labels)).collect(),
                detail,
            };
            serde_json::to_string_pretty(&envelope).expect("serializable") + "\n"
        }
    };
    Rendered { text, ok }
}
