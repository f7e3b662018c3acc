//! Machine-readable reports with JSON and markdown renderings.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fmt::Write;

/// One expected-versus-computed comparison.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    /// Input name to sha256 hex digest of its bytes.
    pub inputs: BTreeMap<String, String>,
    pub results: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    /// Wall-clock milliseconds; only filled in on request so that reports stay byte-stable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report { command: command.into(), ..Report::default() }
    }

    pub fn input(&mut self, name: impl Into<String>, bytes: &[u8]) {
        self.inputs.insert(name.into(), sha256_hex(bytes));
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) {
        self.results.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }

    /// Records a comparison; `expected` and `actual` are compared as JSON values.
    pub fn check(&mut self, name: impl Into<String>, expected: impl Serialize, actual: impl Serialize) -> bool {
        let expected = serde_json::to_value(expected).expect("serializable");
        let actual = serde_json::to_value(actual).expect("serializable");
        let ok = expected == actual;
        self.checks.push(Check { name: name.into(), expected, actual, ok });
        ok
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# `{}`\n", self.command).unwrap();
        if !self.inputs.is_empty() {
            writeln!(out, "## Inputs\n").unwrap();
            for (k, v) in &self.inputs {
                writeln!(out, "- `{k}`: `{v}`").unwrap();
            }
            out.push('\n');
        }
        writeln!(out, "## Results\n").unwrap();
        for (k, v) in &self.results {
            render(&mut out, k, v, 3);
        }
        if !self.checks.is_empty() {
            let passed = self.checks.iter().filter(|c| c.ok).count();
            writeln!(out, "## Checks ({passed}/{} pass)\n", self.checks.len()).unwrap();
            writeln!(out, "| check | expected | computed | |\n|---|---|---|---|").unwrap();
            for c in &self.checks {
                let mark = if c.ok { "ok" } else { "MISMATCH" };
                writeln!(out, "| {} | `{}` | `{}` | {mark} |", c.name, compact(&c.expected), compact(&c.actual)).unwrap();
            }
            out.push('\n');
        }
        if let Some(t) = self.timing_ms {
            writeln!(out, "Elapsed: {t} ms").unwrap();
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Object(m) if m.get("kind").is_some() => dm_text(v).unwrap_or_else(|| v.to_string()),
        _ => v.to_string(),
    }
}

fn dm_text(v: &Value) -> Option<String> {
    let m = v.as_object()?;
    match m.get("kind")?.as_str()? {
        "finite" => Some(m.get("value")?.to_string()),
        "infinite" => Some("∞".into()),
        "at_least" => Some(format!("≥{}", m.get("cap")?)),
        _ => None,
    }
}

fn as_grid(v: &Value) -> Option<Vec<Vec<String>>> {
    let rows = v.as_array()?;
    if rows.is_empty() {
        return None;
    }
    let grid: Option<Vec<Vec<String>>> = rows
        .iter()
        .map(|r| r.as_array().map(|c| c.iter().map(|x| if x.is_array() || x.is_object() { None } else { Some(x.to_string()) }).collect::<Option<Vec<_>>>())?)
        .collect();
    let grid = grid?;
    let w = grid[0].len();
    (w > 0 && grid.iter().all(|r| r.len() == w)).then_some(grid)
}

/// Square grids get index headers on both axes so that `grid[i][j]` reads as row `i`, column `j`.
fn render(out: &mut String, key: &str, v: &Value, level: usize) {
    if let Some(t) = dm_text(v) {
        writeln!(out, "- **{key}**: {t}").unwrap();
        return;
    }
    if let Some(grid) = as_grid(v) {
        writeln!(out, "\n**{key}**\n").unwrap();
        let w = grid[0].len();
        let head: Vec<String> = (0..w).map(|j| j.to_string()).collect();
        writeln!(out, "| | {} |", head.join(" | ")).unwrap();
        writeln!(out, "|---|{}", "---|".repeat(w)).unwrap();
        for (i, r) in grid.iter().enumerate() {
            writeln!(out, "| **{i}** | {} |", r.join(" | ")).unwrap();
        }
        out.push('\n');
        return;
    }
    match v {
        Value::Object(m) => {
            writeln!(out, "\n{} {key}\n", "#".repeat(level.min(6))).unwrap();
            for (k, x) in m {
                render(out, k, x, level + 1);
            }
            out.push('\n');
        }
        _ => writeln!(out, "- **{key}**: {}", compact(v)).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_is_stable_and_markdown_has_grid() {
        let mut r = Report::new("demo");
        r.input("a.json", b"{}");
        r.set("grid", vec![vec![1, 2], vec![3, 4]]);
        r.set("dm", json!({"kind":"finite","value":2}));
        assert!(r.check("dm", json!(2), json!(2)));
        assert!(!r.check("bad", 1, 2));
        assert_eq!(r.to_json(), r.clone().to_json());
        let md = r.to_markdown();
        assert!(md.contains("| **1** | 3 | 4 |"), "{md}");
        assert!(md.contains("**dm**: 2"));
        assert!(md.contains("MISMATCH"));
        assert_eq!(r.inputs["a.json"], "44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a");
    }
}
