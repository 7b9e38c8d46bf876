//! Report assembly, text rendering and exit status.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::{Inputs, Mode, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// The mathematical property does not hold for these parameters.
    Fail,
    /// Not applicable in the selected mode or for these parameters.
    Skipped,
    /// Two independent computations disagree.
    Inconsistent,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::Inconsistent => "INCONSISTENT",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// What the check asserts, in terms of the algebra.
    pub statement: String,
    pub status: Status,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

impl Check {
    pub fn new(name: &str, statement: &str, status: Status, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            statement: statement.into(),
            status,
            detail: detail.into(),
            witness: None,
            residual: None,
        }
    }

    pub fn verdict(name: &str, statement: &str, holds: bool, detail: impl Into<String>) -> Self {
        Self::new(name, statement, if holds { Status::Pass } else { Status::Fail }, detail)
    }

    /// A check that two independent routes agree.
    pub fn agreement(name: &str, statement: &str, agree: bool, detail: impl Into<String>) -> Self {
        Self::new(name, statement, if agree { Status::Pass } else { Status::Inconsistent }, detail)
    }

    pub fn skipped(name: &str, statement: &str, reason: impl Into<String>) -> Self {
        Self::new(name, statement, Status::Skipped, reason)
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_residual(mut self, residual: f64) -> Self {
        self.residual = Some(residual);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub c: Vec<String>,
    pub t: Vec<String>,
    pub mode: Mode,
    pub max_degree: i64,
    pub tol: f64,
    pub seed: u64,
}

impl ConfigEcho {
    pub fn from_config(cfg: &RunConfig) -> Self {
        let (c, t) = match &cfg.inputs {
            Inputs::Exact { params, t } => (strings(params.values()), strings(t)),
            Inputs::Float { params, t } => (strings(params.values()), strings(t)),
        };
        ConfigEcho { n: cfg.n(), c, t, mode: cfg.mode(), max_degree: cfg.max_degree, tol: cfg.tol, seed: cfg.seed }
    }
}

fn strings<T: std::fmt::Display>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub config: ConfigEcho,
    pub checks: Vec<Check>,
    /// Command-specific results: matrices, dimensions, translated parameters.
    pub data: BTreeMap<String, Value>,
    /// Wall-clock time of the command. The only field that varies between
    /// runs with the same configuration.
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(cfg: &RunConfig) -> Self {
        Report {
            command: cfg.command.name().into(),
            config: ConfigEcho::from_config(cfg),
            checks: Vec::new(),
            data: BTreeMap::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn push(&mut self, check: Check) {
        log::debug!("{} {}: {}", check.status.label(), check.name, check.detail);
        self.checks.push(check);
    }

    pub fn put(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report data serializes");
        self.data.insert(key.into(), value);
    }

    /// 2 if any computation disagreed with another, 1 if any property failed,
    /// 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Inconsistent) {
            2
        } else if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let cfg = &self.config;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "cherednik {}: n = {}, c = ({}), t = ({}), mode = {}, max degree = {}",
            self.command,
            cfg.n,
            cfg.c.join(", "),
            cfg.t.join(", "),
            match cfg.mode {
                Mode::Exact => "exact",
                Mode::Float => "float",
            },
            cfg.max_degree
        );
        for check in &self.checks {
            let _ = writeln!(out, "{:<5} {}: {}", check.status.label(), check.name, check.statement);
            if !check.detail.is_empty() {
                let _ = writeln!(out, "      {}", check.detail);
            }
            if let Some(w) = &check.witness {
                let _ = writeln!(out, "      witness: {w}");
            }
            if let Some(r) = check.residual {
                let _ = writeln!(out, "      residual: {r:.3e}");
            }
        }
        for (key, value) in &self.data {
            let compact = value.to_string();
            match value {
                Value::Array(_) | Value::Object(_) if compact.len() > 100 => {
                    let _ = writeln!(out, "{key}:");
                    let pretty = serde_json::to_string_pretty(value).expect("value serializes");
                    for line in pretty.lines() {
                        let _ = writeln!(out, "  {line}");
                    }
                }
                _ => {
                    let _ = writeln!(out, "{key}: {compact}");
                }
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        let _ = writeln!(out, "{passed} of {} checks passed ({:.1} ms)", self.checks.len(), self.elapsed_ms);
        out
    }
}
