//! Check lines, report assembly and output formats.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::subject::{invalid, InputError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Option<String>,
    pub computed: String,
    pub pass: bool,
}

/// Checks and informational lines, in emission order.
#[derive(Debug, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    pub info: Vec<(String, String)>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
            info: Vec::new(),
            passed: true,
            data: Value::Null,
        }
    }

    /// A check comparing a computed value with an expected one.
    pub fn expect(&mut self, name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> bool {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let pass = expected == computed;
        self.push(name, Some(expected), computed, pass)
    }

    /// A check without a separate expected value.
    pub fn check(&mut self, name: impl Into<String>, computed: impl ToString, pass: bool) -> bool {
        self.push(name, None, computed.to_string(), pass)
    }

    fn push(&mut self, name: impl Into<String>, expected: Option<String>, computed: String, pass: bool) -> bool {
        self.passed &= pass;
        self.checks.push(Check {
            name: name.into(),
            expected,
            computed,
            pass,
        });
        pass
    }

    pub fn info(&mut self, name: impl Into<String>, value: impl ToString) {
        self.info.push((name.into(), value.to_string()));
    }

    pub fn data(&mut self, key: &str, value: impl Serialize) {
        if self.data.is_null() {
            self.data = Value::Object(Default::default());
        }
        let v = serde_json::to_value(value).expect("serializable");
        self.data.as_object_mut().expect("object").insert(key.to_string(), v);
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.subject);
        for (k, v) in &self.info {
            let _ = writeln!(out, "info  {k}: {v}");
        }
        for c in &self.checks {
            let status = if c.pass { "pass" } else { "FAIL" };
            match &c.expected {
                Some(e) => {
                    let _ = writeln!(out, "{status}  {}: {} (expected {e})", c.name, c.computed);
                }
                None => {
                    let _ = writeln!(out, "{status}  {}: {}", c.name, c.computed);
                }
            }
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        let _ = writeln!(
            out,
            "result: {} ({}/{} checks passed)",
            if self.passed { "pass" } else { "fail" },
            self.checks.len() - failed,
            self.checks.len()
        );
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,name,expected,computed,status\n");
        for (k, v) in &self.info {
            let _ = writeln!(out, "info,{},,{},", csv(k), csv(v));
        }
        for c in &self.checks {
            let _ = writeln!(
                out,
                "check,{},{},{},{}",
                csv(&c.name),
                csv(c.expected.as_deref().unwrap_or("")),
                csv(&c.computed),
                if c.pass { "pass" } else { "fail" }
            );
        }
        out
    }

    /// Writes the report in the requested format and maps the outcome to
    /// an exit status.
    pub fn emit(&self, format: Format, out: Option<&Path>) -> Result<ExitCode, InputError> {
        let body = match format {
            Format::Text => self.to_text(),
            Format::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
            Format::Csv => self.to_csv(),
            Format::Dot => return Err(invalid("dot output is only available for `build`")),
        };
        write_out(&body, out)?;
        Ok(status(self.passed))
    }
}

pub fn csv(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn status(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

pub fn write_out(body: &str, out: Option<&Path>) -> Result<(), InputError> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(body.as_bytes());
            let _ = stdout.flush();
            Ok(())
        }
    }
}
