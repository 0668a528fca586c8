use serde::Serialize;
use serde_json::Value;

/// Named pass/fail outcome with its worst residual.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub residual: Option<f64>,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, residual: Option<f64>, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed, residual, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub inputs: Value,
    pub outputs: Vec<String>,
    pub checks: Vec<Check>,
    pub results: Value,
    pub error: Option<String>,
    pub exit_code: i32,
    pub wall_time_s: f64,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value) -> Self {
        RunReport {
            schema: 1,
            command: command.to_string(),
            inputs,
            outputs: Vec::new(),
            checks: Vec::new(),
            results: Value::Null,
            error: None,
            exit_code: 0,
            wall_time_s: 0.0,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}
