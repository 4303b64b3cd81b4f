use std::fmt;
use std::process::ExitCode;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> ExitCode {
        ExitCode::from(match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Info,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Finding {
    pub kind: Kind,
    pub location: String,
    pub message: String,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub findings: Vec<Finding>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub artifacts: Value,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            status: Status::Pass,
            findings: Vec::new(),
            artifacts: Value::Null,
        }
    }

    fn push(
        &mut self,
        kind: Kind,
        location: impl Into<String>,
        message: impl Into<String>,
        data: Value,
    ) {
        self.findings.push(Finding {
            kind,
            location: location.into(),
            message: message.into(),
            data,
        });
        self.status = match (self.status, kind) {
            (Status::Error, _) | (_, Kind::Error) => Status::Error,
            (Status::Fail, _) | (_, Kind::Fail) => Status::Fail,
            _ => Status::Pass,
        };
    }

    pub fn info(&mut self, location: impl Into<String>, message: impl Into<String>, data: Value) {
        self.push(Kind::Info, location, message, data);
    }

    pub fn fail(&mut self, location: impl Into<String>, message: impl Into<String>, data: Value) {
        self.push(Kind::Fail, location, message, data);
    }

    pub fn error(&mut self, location: impl Into<String>, message: impl Into<String>) {
        self.push(Kind::Error, location, message, Value::Null);
    }

    pub fn artifact(&mut self, key: &str, value: impl Serialize) {
        if self.artifacts.is_null() {
            self.artifacts = Value::Object(Default::default());
        }
        let value = serde_json::to_value(value).expect("plain data serializes");
        self.artifacts
            .as_object_mut()
            .expect("object")
            .insert(key.to_string(), value);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        writeln!(f, "{}: {status}", self.command)?;
        for finding in &self.findings {
            let tag = match finding.kind {
                Kind::Info => "info",
                Kind::Fail => "fail",
                Kind::Error => "error",
            };
            writeln!(f, "  [{tag}] {}: {}", finding.location, finding.message)?;
        }
        if let Value::Object(map) = &self.artifacts {
            for (key, value) in map {
                let text = serde_json::to_string(value).expect("json");
                writeln!(f, "  {key}: {text}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_worst_finding() {
        let mut r = Report::new("x");
        r.info("a", "ok", Value::Null);
        assert_eq!(r.status, Status::Pass);
        r.fail("b", "bad", Value::Null);
        assert_eq!(r.status, Status::Fail);
        r.info("c", "ok", Value::Null);
        assert_eq!(r.status, Status::Fail);
        r.error("d", "broken");
        assert_eq!(r.status, Status::Error);
    }

    #[test]
    fn json_shape() {
        let mut r = Report::new("decompose");
        r.artifact("skeleton", serde_json::json!({"dims": [2]}));
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["artifacts"]["skeleton"]["dims"][0], 2);
        assert!(v["findings"].as_array().unwrap().is_empty());
    }
}
