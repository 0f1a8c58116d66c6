//! Timing comparison of the baseline and the minor-based algorithm.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::corpus::CorpusCase;
use crate::document::Label;
use crate::error::{Error, Result};
use crate::factor::{factorize_guan, factorize_mlp, Decision};
use crate::matrix::PolyMatrix;

pub const DEFAULT_REPS: usize = 5;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub name: String,
    pub decision: Label,
    /// Mean seconds for the baseline.
    pub t1: f64,
    /// Mean seconds for the minor-based algorithm.
    pub t2: f64,
    pub ratio: f64,
    pub reps: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

fn decide(case: &str, algorithm: &str, f: &PolyMatrix, run: fn(&PolyMatrix) -> Result<Decision>) -> Result<Label> {
    let decision = run(f).map_err(|e| Error::Document(format!("{case}: {algorithm}: {e}")))?;
    Ok(Label::from_decision(decision.is_factorizable()))
}

fn mean_time(f: &PolyMatrix, reps: usize, run: fn(&PolyMatrix) -> Result<Decision>) -> Result<f64> {
    let mut total = Duration::ZERO;
    for _ in 0..reps {
        let start = Instant::now();
        let out = run(f);
        total += start.elapsed();
        out?;
    }
    Ok(total.as_secs_f64() / reps as f64)
}

/// Checks both decisions against each label, then times `reps` runs of each
/// algorithm per case. A case without a label must still get the same
/// decision from both algorithms.
pub fn run_bench(cases: &[CorpusCase], reps: usize) -> Result<BenchReport> {
    let reps = reps.max(1);
    let mut rows = Vec::with_capacity(cases.len());
    for case in cases {
        let f = case.document.parse_matrix()?;
        let new = decide(&case.name, "new", &f, factorize_mlp)?;
        let guan = decide(&case.name, "guan", &f, factorize_guan)?;
        let expected = case.document.label.unwrap_or(new);
        for (algorithm, found) in [("new", new), ("guan", guan)] {
            if found != expected {
                return Err(Error::LabelMismatch {
                    case: case.name.clone(),
                    algorithm: algorithm.into(),
                    expected: expected.as_str().into(),
                    found: found.as_str().into(),
                });
            }
        }
        let t1 = mean_time(&f, reps, factorize_guan)?;
        let t2 = mean_time(&f, reps, factorize_mlp)?;
        rows.push(BenchRow {
            name: case.name.clone(),
            decision: expected,
            t1,
            t2,
            ratio: t1 / t2,
            reps,
        });
    }
    Ok(BenchReport { rows })
}

impl BenchReport {
    pub fn to_text(&self) -> String {
        let name_w = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<name_w$}  {:<8}  {:>12}  {:>12}  {:>8}  {:>4}",
            "case", "decision", "t1 guan (s)", "t2 new (s)", "t1/t2", "reps"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<name_w$}  {:<8}  {:>12.6}  {:>12.6}  {:>8.2}  {:>4}",
                r.name,
                r.decision.as_str(),
                r.t1,
                r.t2,
                r.ratio,
                r.reps
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    /// Cases where the minor-based algorithm was faster on average.
    pub fn faster_count(&self) -> usize {
        self.rows.iter().filter(|r| r.ratio > 1.0).count()
    }
}
