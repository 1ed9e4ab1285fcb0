//! The identity registry and the check runner.
//!
//! Every identity, difference equation, duality relation and asymptotic law
//! is a [`CheckId`]. A check draws a seeded sample set, evaluates a relative
//! residual per sample and reduces to a [`CheckReport`]. Probe ids track a
//! supremum over a sweep instead and never affect the aggregate status.

mod fit;
mod registry;
mod report;
mod sample;
mod special;
mod three;
mod two;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use hypcm_core::{CheckTolerance, HyperbolicParams};

pub use fit::{fit_decay_rate, DecayFit, FLOOR};
pub use registry::{CheckId, CheckInfo, Suite, IN_SCOPE};
pub use report::{write_csv, write_json};
pub use sample::Series;

use sample::{Ctx, Sample};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_2b0c;

/// Equal, rational-ratio and irrational-ratio periods.
pub fn default_grid() -> Vec<HyperbolicParams> {
    [(1.0, 1.0), (1.0, 0.8), (1.0, core::f64::consts::SQRT_2)]
        .iter()
        .map(|&(p, m)| HyperbolicParams::new(p, m).expect("valid periods"))
        .collect()
}

/// Sample plan shared by the checks of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct Plan {
    pub grid: Vec<HyperbolicParams>,
    pub seed: u64,
    /// Overrides the per-check sample count.
    pub samples: Option<usize>,
    /// Overrides the coupling (real part) used by every sample.
    pub b: Option<f64>,
    /// Overrides the relative tolerance of every check.
    pub tol: Option<f64>,
    /// Per-check tolerance overrides, ahead of `tol`.
    pub tol_overrides: BTreeMap<CheckId, f64>,
}

impl Default for Plan {
    fn default() -> Self {
        Plan { grid: default_grid(), seed: DEFAULT_SEED, samples: None, b: None, tol: None, tol_overrides: BTreeMap::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: CheckId,
    pub samples: usize,
    /// `null` in JSON when a sample failed outright.
    pub max_rel_residual: f64,
    #[serde(serialize_with = "report::tolerance")]
    pub tolerance: CheckTolerance,
    pub pass: bool,
    /// Seconds.
    pub wall_time: f64,
    pub worst_case_point: String,
    pub probe: bool,
    pub failed_samples: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub series: Vec<Series>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub reports: Vec<CheckReport>,
    /// Every non-probe report passed.
    pub pass: bool,
    pub wall_time: f64,
}

pub fn run_check(id: CheckId, plan: &Plan) -> CheckReport {
    let info = id.info();
    let start = Instant::now();
    let n = if plan.grid.is_empty() { 0 } else { plan.samples.unwrap_or(info.samples) };
    let results: Vec<Sample> = (0..n)
        .into_par_iter()
        .map(|k| {
            let mut ctx = Ctx::new(id, plan, k);
            match sample::dispatch(id, &mut ctx) {
                Ok(s) => s,
                Err(e) => Sample::failed(format!("{}: {e}", ctx.describe())),
            }
        })
        .collect();
    let tol = CheckTolerance::rel(plan.tol_overrides.get(&id).copied().or(plan.tol).unwrap_or(info.tolerance));
    reduce(id, tol, results, start.elapsed().as_secs_f64())
}

fn reduce(id: CheckId, tolerance: CheckTolerance, results: Vec<Sample>, wall_time: f64) -> CheckReport {
    let probe = id.info().probe;
    let mut worst = 0usize;
    let mut max = if results.is_empty() { 0.0 } else { f64::NEG_INFINITY };
    let mut failed = 0usize;
    for (k, s) in results.iter().enumerate() {
        if s.failed {
            failed += 1;
        }
        // first maximum wins, so the reduction does not depend on scheduling
        if s.residual > max {
            max = s.residual;
            worst = k;
        }
    }
    let growth = results.iter().any(|s| s.growth);
    let pass = if probe { !growth && failed == 0 } else { failed == 0 && max <= tolerance.rel_tol };
    CheckReport {
        id,
        samples: results.len(),
        max_rel_residual: max,
        tolerance,
        pass,
        wall_time,
        worst_case_point: results.get(worst).map(|s| s.point.clone()).unwrap_or_default(),
        probe,
        failed_samples: failed,
        series: results.into_iter().flat_map(|s| s.series).collect(),
    }
}

pub fn run_checks(ids: &[CheckId], plan: &Plan) -> Summary {
    let start = Instant::now();
    let reports: Vec<CheckReport> =
        if plan.grid.is_empty() { Vec::new() } else { ids.par_iter().map(|&id| run_check(id, plan)).collect() };
    let pass = reports.iter().all(|r| r.probe || r.pass);
    Summary { reports, pass, wall_time: start.elapsed().as_secs_f64() }
}

pub fn run_suite(suite: Suite, plan: &Plan) -> Summary {
    run_checks(&suite.ids(), plan)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_passes() {
        let plan = Plan { grid: Vec::new(), ..Plan::default() };
        let s = run_suite(Suite::All, &plan);
        assert!(s.reports.is_empty());
        assert!(s.pass);
    }

    #[test]
    fn failed_sample_fails_report() {
        let r = reduce(
            CheckId::GReflection,
            CheckTolerance::rel(1e-9),
            vec![Sample::new(1e-12, "a".into()), Sample::failed("b".into())],
            0.0,
        );
        assert!(!r.pass);
        assert_eq!(r.failed_samples, 1);
        assert_eq!(r.worst_case_point, "b");
    }

    #[test]
    fn probe_growth_does_not_gate() {
        let mut s = Sample::new(3.0, "p".into());
        s.growth = true;
        let r = reduce(CheckId::E2BoundProbe, CheckTolerance::rel(1.0), vec![s], 0.0);
        assert!(!r.pass);
        let summary = Summary { pass: [&r].iter().all(|r| r.probe || r.pass), reports: vec![r], wall_time: 0.0 };
        assert!(summary.pass);
    }
}
