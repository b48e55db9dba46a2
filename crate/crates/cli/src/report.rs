//! The single report structure behind both output modes.

use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_ID: &str = "fincat-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Error,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Error => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fact {
    pub key: String,
    pub value: Value,
}

/// Named objects and arrows that demonstrate a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct Witness {
    pub description: String,
    pub objects: Vec<String>,
    pub arrows: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorInfo {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub outcome: Outcome,
    pub exit_code: i32,
    pub seed: u64,
    pub summary: String,
    pub facts: Vec<Fact>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub tables: Vec<Table>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

impl Report {
    pub fn new(command: impl Into<String>, outcome: Outcome, summary: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA_ID,
            command: command.into(),
            outcome,
            exit_code: outcome.exit_code(),
            seed: fincat_core::config::DEFAULT_SEED,
            summary: summary.into(),
            facts: Vec::new(),
            witness: None,
            tables: Vec::new(),
            error: None,
        }
    }

    pub fn error(command: impl Into<String>, code: impl Into<String>, message: impl Into<String>) -> Self {
        let message = message.into();
        let mut r = Report::new(command, Outcome::Error, message.clone());
        r.error = Some(ErrorInfo {
            code: code.into(),
            message,
            line: None,
            column: None,
        });
        r
    }

    pub fn fact(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.facts.push(Fact {
            key: key.to_string(),
            value: value.into(),
        });
        self
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn table(mut self, title: &str, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.tables.push(Table {
            title: title.to_string(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows,
        });
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let tag = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Error => "ERROR",
        };
        let _ = writeln!(out, "{tag} {}: {}", self.command, self.summary);
        if let Some(e) = &self.error {
            match (e.line, e.column) {
                (Some(l), Some(c)) => {
                    let _ = writeln!(out, "  error {} at {l}:{c}", e.code);
                }
                _ => {
                    let _ = writeln!(out, "  error {}", e.code);
                }
            }
        }
        for f in &self.facts {
            let value = match &f.value {
                Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            let _ = writeln!(out, "  {}: {value}", f.key);
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "  witness: {}", w.description);
            if !w.objects.is_empty() {
                let _ = writeln!(out, "    objects: {}", w.objects.join(", "));
            }
            if !w.arrows.is_empty() {
                let _ = writeln!(out, "    arrows: {}", w.arrows.join(", "));
            }
        }
        for t in &self.tables {
            let _ = writeln!(out, "  {}:", t.title);
            let mut widths: Vec<usize> = t.header.iter().map(|h| h.chars().count()).collect();
            for row in &t.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                format!("    {}", padded.join("  ").trim_end())
            };
            let _ = writeln!(out, "{}", line(&t.header));
            for row in &t.rows {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        out
    }
}
