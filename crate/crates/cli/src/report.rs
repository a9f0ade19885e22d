//! Suite reports: a named list of checks with pass/fail/skipped status,
//! renderable as text, JSON, or CSV.  JSON and CSV omit wall time so that
//! output for a fixed seed and flag set is byte-deterministic.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckRow>,
    #[serde(skip)]
    pub wall_ms: u128,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            seed,
            checks: Vec::new(),
            wall_ms: 0,
        }
    }

    pub fn push(&mut self, id: &str, statement: &str, status: Status, detail: String) {
        self.checks.push(CheckRow {
            id: id.to_string(),
            statement: statement.to_string(),
            status,
            detail,
        });
    }

    /// Records a boolean outcome under the given check id.
    pub fn check(&mut self, id: &str, statement: &str, passed: bool, detail: String) {
        let status = if passed { Status::Pass } else { Status::Fail };
        self.push(id, statement, status, detail);
    }

    /// Deterministic ordering: checks sorted by id before rendering.
    pub fn finalize(&mut self, wall_ms: u128) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self.wall_ms = wall_ms;
    }

    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }
}

pub fn render_text(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let failed = r.failures();
        let skipped = r
            .checks
            .iter()
            .filter(|c| c.status == Status::Skipped)
            .count();
        out.push_str(&format!(
            "suite {}: {} checks, {} failed, {} skipped ({} ms)\n",
            r.suite,
            r.checks.len(),
            failed,
            skipped,
            r.wall_ms
        ));
        for c in &r.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            out.push_str(&format!("  [{tag}] {}: {} — {}\n", c.id, c.statement, c.detail));
        }
    }
    let total_fail: usize = reports.iter().map(SuiteReport::failures).sum();
    out.push_str(&format!(
        "total: {} suites, {} failed checks\n",
        reports.len(),
        total_fail
    ));
    out
}

pub fn render_json(reports: &[SuiteReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_escape(f))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn render_csv(reports: &[SuiteReport]) -> String {
    let mut out = String::from("suite,check,status,detail\n");
    for r in reports {
        for c in &r.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skipped => "skipped",
            };
            out.push_str(&csv_line(&[
                r.suite.clone(),
                c.id.clone(),
                status.to_string(),
                c.detail.clone(),
            ]));
            out.push('\n');
        }
    }
    out
}
