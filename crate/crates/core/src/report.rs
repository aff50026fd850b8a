//! Serializable experiment reports. Complex numbers are written as
//! `[re, im]` pairs.

use num_complex::Complex64;
use serde::Serialize;

/// `[re, im]`.
pub fn pair(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}

pub fn pairs(cs: &[Complex64]) -> Vec<[f64; 2]> {
    cs.iter().copied().map(pair).collect()
}

/// Errors of one formula over a set of evaluation points.
#[derive(Debug, Clone, Serialize)]
pub struct ReconstructionReport {
    pub formula: String,
    /// Evaluation points as `[re, im]`.
    pub points: Vec<[f64; 2]>,
    /// `‖approximation - oracle‖` per point.
    pub errors: Vec<f64>,
    pub terms: usize,
    /// Certified or estimated truncation tail per point; `null` when unknown.
    pub tail: Vec<Option<f64>>,
    pub in_bernstein: bool,
    pub max_error: f64,
    pub wall_time_ms: f64,
}

impl ReconstructionReport {
    pub fn new(formula: impl Into<String>, terms: usize, in_bernstein: bool) -> Self {
        Self {
            formula: formula.into(),
            points: Vec::new(),
            errors: Vec::new(),
            terms,
            tail: Vec::new(),
            in_bernstein,
            max_error: 0.0,
            wall_time_ms: 0.0,
        }
    }

    pub fn push(&mut self, point: Complex64, error: f64, tail: Option<f64>) {
        debug_assert!(error >= 0.0 || error.is_nan());
        self.points.push(pair(point));
        self.errors.push(error);
        self.tail.push(tail);
        self.max_error = self.max_error.max(error);
    }
}

/// One row of a convergence sweep.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepRow {
    pub parameter: f64,
    pub error: f64,
    pub tail: Option<f64>,
    /// `error / previous error`; absent on the first row.
    pub ratio: Option<f64>,
}

pub fn sweep_rows(params: &[f64], errors: &[f64], tails: &[Option<f64>]) -> Vec<SweepRow> {
    params
        .iter()
        .zip(errors)
        .zip(tails)
        .enumerate()
        .map(|(i, ((&parameter, &error), &tail))| SweepRow {
            parameter,
            error,
            tail,
            ratio: if i == 0 {
                None
            } else {
                Some(error / errors[i - 1])
            },
        })
        .collect()
}
