//! Run results in a stable JSON shape, plus a plain-text rendering.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{side_ambient, Computation};
use crate::harness::SuiteResult;

pub const REPORT_SCHEMA: u32 = 1;

/// One pipeline of one computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineRow {
    pub pipeline: String,
    pub ambient: usize,
    pub dims: Vec<usize>,
    pub hh: Vec<usize>,
    pub hc: Vec<usize>,
    pub relations_checked: usize,
    pub relation_failures: usize,
    pub error: Option<String>,
}

impl PipelineRow {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.relation_failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputationReport {
    pub name: String,
    pub max_degree: usize,
    pub rows: Vec<PipelineRow>,
    /// every pipeline produced the same HH and HC
    pub agree: bool,
}

impl ComputationReport {
    pub fn passed(&self) -> bool {
        self.agree && self.rows.iter().all(PipelineRow::passed)
    }
}

impl Computation {
    /// Runs every configured pipeline; failures are recorded per row.
    pub fn run(&self) -> ComputationReport {
        let rows: Vec<PipelineRow> = self
            .sides
            .par_iter()
            .map(|(label, side)| {
                let ambient = side_ambient(side, self.max_degree).unwrap_or(usize::MAX);
                match side.run(self.max_degree, self.budget) {
                    Ok(r) => PipelineRow {
                        pipeline: label.clone(),
                        ambient,
                        dims: r.dims,
                        hh: r.hh,
                        hc: r.hc,
                        relations_checked: r.relations.checked,
                        relation_failures: r.relations.failures.len(),
                        error: None,
                    },
                    Err(e) => PipelineRow {
                        pipeline: label.clone(),
                        ambient,
                        dims: vec![],
                        hh: vec![],
                        hc: vec![],
                        relations_checked: 0,
                        relation_failures: 0,
                        error: Some(e.to_string()),
                    },
                }
            })
            .collect();
        let agree = rows.windows(2).all(|w| w[0].hh == w[1].hh && w[0].hc == w[1].hc);
        ComputationReport { name: self.name.clone(), max_degree: self.max_degree, rows, agree }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub wall_time_ms: u64,
    pub computations: Vec<ComputationReport>,
    pub suites: Vec<SuiteResult>,
}

impl Report {
    /// Times `f` and wraps what it produces.
    pub fn timed(f: impl FnOnce() -> (Vec<ComputationReport>, Vec<SuiteResult>)) -> Report {
        let start = Instant::now();
        let (computations, suites) = f();
        let wall_time_ms = start.elapsed().as_millis().try_into().unwrap_or(u64::MAX);
        Report { schema: REPORT_SCHEMA, wall_time_ms, computations, suites }
    }

    pub fn passed(&self) -> bool {
        self.computations.iter().all(ComputationReport::passed) && self.suites.iter().all(SuiteResult::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.computations {
            let _ = writeln!(out, "{} (N = {})", c.name, c.max_degree);
            let _ = writeln!(out, "  {:<14} {:>9}  {:<22} {:<16} {:<16} relations", "pipeline", "ambient", "dims", "HH", "HC");
            for r in &c.rows {
                match &r.error {
                    Some(e) => {
                        let _ = writeln!(out, "  {:<14} {:>9}  error: {e}", r.pipeline, r.ambient);
                    }
                    None => {
                        let _ = writeln!(
                            out,
                            "  {:<14} {:>9}  {:<22} {:<16} {:<16} {}/{} ok",
                            r.pipeline,
                            r.ambient,
                            list(&r.dims),
                            list(&r.hh),
                            list(&r.hc),
                            r.relations_checked - r.relation_failures,
                            r.relations_checked
                        );
                    }
                }
            }
            if c.rows.len() > 1 {
                let _ = writeln!(out, "  pipelines {}", if c.agree { "agree" } else { "DISAGREE" });
            }
        }
        for s in &self.suites {
            let ok = s.instances.iter().filter(|i| i.passed).count();
            let _ = writeln!(out, "suite {} (N = {}): {}/{} passed", s.suite, s.max_degree, ok, s.instances.len());
            for i in &s.instances {
                let status = if i.passed { "pass" } else { "FAIL" };
                let _ = write!(out, "  [{status}] {}: {} vs {}", i.description, list(&i.left), list(&i.right));
                if let Some(e) = &i.error {
                    let _ = write!(out, " ({e})");
                }
                out.push('\n');
            }
        }
        let _ = writeln!(out, "{} in {} ms", if self.passed() { "PASS" } else { "FAIL" }, self.wall_time_ms);
        out
    }
}

fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", items.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;
    use crate::harness::{run_suite, Suite};

    fn sample() -> Report {
        let cfg = parse_config(
            r#"{"schema": 1, "group": {"kind": "cyclic", "n": 2}, "category": "graded",
                "algebra": {"kind": "group_algebra"}, "coefficient": {"kind": "adjoint_diagonal"},
                "trace": "B", "max_degree": 3, "pipeline": "all"}"#,
        )
        .unwrap();
        let comp = cfg.build().unwrap();
        Report::timed(|| (vec![comp.run()], vec![run_suite(Suite::DerhamFinite, 3, 10_000)]))
    }

    #[test]
    fn json_round_trips() {
        let r = sample();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn text_lists_every_pipeline() {
        let text = sample().to_text();
        assert!(text.contains("old"));
        assert!(text.contains("new-canonical"));
        assert!(text.contains("pipelines agree"));
        assert!(text.contains("suite derham_finite"));
    }
}
