use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

/// Outcome of one CLI command. Wall time is shown to humans only so that the
/// JSON form is identical across runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub genus_range: Option<(u64, u64)>,
    pub subsets_checked: u64,
    pub violation_count: usize,
    pub violations: Vec<String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            genus_range: None,
            subsets_checked: 0,
            violation_count: 0,
            violations: Vec::new(),
            pass: true,
            details: Value::Null,
            wall_time: Duration::ZERO,
        }
    }

    pub fn violation(&mut self, v: impl Into<String>) {
        self.violations.push(v.into());
        self.violation_count = self.violations.len();
        self.pass = false;
    }

    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn to_human(&self) -> String {
        let mut s = format!("mcgfix {}\n", self.command.join(" "));
        if let Some((a, b)) = self.genus_range {
            s += &format!("  genus range      {a}..={b}\n");
        }
        s += &format!("  checked          {}\n", self.subsets_checked);
        s += &format!("  violations       {}\n", self.violations.len());
        for v in self.violations.iter().take(50) {
            s += &format!("    - {v}\n");
        }
        if self.violations.len() > 50 {
            s += &format!("    ... {} more\n", self.violations.len() - 50);
        }
        if let Value::Object(m) = &self.details {
            for (k, v) in m {
                match v {
                    Value::String(t) => s += &format!("  {k:<16} {t}\n"),
                    Value::Array(a) if a.iter().all(Value::is_string) => {
                        s += &format!("  {k}\n");
                        for x in a {
                            s += &format!("    {}\n", x.as_str().unwrap_or_default());
                        }
                    }
                    other => s += &format!("  {k:<16} {other}\n"),
                }
            }
        }
        s += &format!("  wall time        {:.3?}\n", self.wall_time);
        s += if self.pass { "PASS\n" } else { "FAIL\n" };
        s
    }
}
