//! End-to-end acceptance: every criterion is run at its stated tolerance and
//! time budget, and one line per criterion is printed.
//!
//! Run with `cargo test -p hypcm --test acceptance`.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::Instant;

use hypcm::verify::{default_grid, run_check, CheckId, CheckReport, Plan, IN_SCOPE};

use CheckId::*;

/// One gating requirement on a check.
struct Need {
    id: CheckId,
    tol: f64,
    min_samples: usize,
}

const fn need(id: CheckId, tol: f64, min_samples: usize) -> Need {
    Need { id, tol, min_samples }
}

/// Written straight to stderr so the line shows without `--nocapture`.
fn say(line: &str) {
    let _ = writeln!(std::io::stderr(), "{line}");
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn judge(reports: &[(CheckReport, &Need)]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (r, n) in reports {
        let ok = r.pass
            && r.failed_samples == 0
            && r.samples >= n.min_samples
            && r.max_rel_residual <= n.tol
            && r.tolerance.rel_tol <= n.tol;
        pass &= ok;
        parts.push(format!(
            "{}{}={:.2e}/{:.0e} n={}",
            if ok { "" } else { "!" },
            r.id.name(),
            r.max_rel_residual,
            n.tol,
            r.samples
        ));
        if !ok {
            parts.push(format!("worst at {}", r.worst_case_point));
        }
    }
    Outcome { pass, detail: parts.join(" ") }
}

fn run_tier<'a>(plan: &Plan, needs: &'a [Need]) -> Vec<(CheckReport, &'a Need)> {
    needs.iter().map(|n| (run_check(n.id, plan), n)).collect()
}

fn criterion(
    results: &mut Vec<(usize, bool)>,
    k: usize,
    title: &str,
    budget_s: f64,
    f: impl FnOnce() -> Outcome,
) {
    let start = Instant::now();
    let o = f();
    let t = start.elapsed().as_secs_f64();
    let in_time = t < budget_s;
    let pass = o.pass && in_time;
    say(&format!(
        "[{}] {k}. {title}: {:.1}s (budget {}{}) {}",
        if pass { "PASS" } else { "FAIL" },
        t,
        if budget_s.is_finite() { format!("{budget_s:.0}s") } else { "none".into() },
        if in_time { "" } else { ", exceeded" },
        o.detail
    ));
    results.push((k, pass));
}

#[test]
fn acceptance() {
    let plan = Plan::default();
    let mut results = Vec::new();

    criterion(&mut results, 1, "special functions", 30.0, || {
        let needs = [
            need(GReflection, 1e-9, 100),
            need(GModulusReal, 1e-9, 100),
            need(EAde, 1e-9, 100),
            need(EZeroCatalog, 1e-9, 100),
            need(ResidueMinusIa, 1e-9, 100),
            need(UProperties, 1e-9, 100),
        ];
        let grid = default_grid();
        let ratios: BTreeSet<u64> = grid.iter().map(|p| (p.a_plus / p.a_minus).to_bits()).collect();
        let mut o = judge(&run_tier(&plan, &needs));
        let grid_ok = grid.len() >= 3 && ratios.len() >= 3 && plan.grid == grid;
        o.pass &= grid_ok;
        o.detail = format!("periods={} {}", grid.len(), o.detail);
        o
    });

    criterion(&mut results, 2, "Fourier formula", 30.0, || {
        judge(&run_tier(&plan, &[need(FourierFormula, 1e-7, 10)]))
    });

    criterion(&mut results, 3, "closed-form integrals", 10.0, || {
        judge(&run_tier(&plan, &[need(HypIntegral1d, 1e-10, 5), need(HypIntegral2d, 1e-10, 5)]))
    });

    criterion(&mut results, 4, "J2 tier", 180.0, || {
        judge(&run_tier(
            &plan,
            &[
                need(J2RepConsistency, 1e-7, 1),
                need(J2Duality, 1e-7, 1),
                need(J2Symmetry, 1e-7, 1),
                need(J2SecondDuality, 1e-7, 1),
                need(E2Selfdual, 1e-7, 1),
                need(E2Props, 1e-7, 1),
                need(J2EigenAde, 1e-6, 1),
                need(P2EigenAde, 1e-6, 1),
            ],
        ))
    });

    criterion(&mut results, 5, "J3 tier", 1200.0, || {
        judge(&run_tier(
            &plan,
            &[
                need(J3Duality, 1e-6, 5),
                need(J3Symmetry, 1e-6, 5),
                need(J3Reflection, 1e-6, 5),
                need(P3Invariances, 1e-6, 5),
                need(J3EigenAde, 1e-5, 3),
                need(P3EigenAde, 1e-5, 3),
            ],
        ))
    });

    // the residual of a decay check is the relative shortfall of the fitted
    // slope, so slope >= 0.9 * rate is a residual of at most 0.1
    criterion(&mut results, 6, "asymptotic decay", 900.0, || {
        judge(&run_tier(&plan, &[need(E2Asymptotics, 0.1, 1), need(E3Asymptotics, 0.1, 1)]))
    });

    criterion(&mut results, 7, "mu integral equation", 600.0, || {
        judge(&run_tier(&plan, &[need(MuIntegralEq, 1e-4, 3)]))
    });

    criterion(&mut results, 8, "probes", f64::INFINITY, || {
        let mut pass = true;
        let mut parts = Vec::new();
        for id in [E2BoundProbe, E3BoundProbe, E3SelfdualProbe] {
            let r = run_check(id, &plan);
            let emitted = !r.series.is_empty() && r.series.iter().all(|s| !s.points.is_empty());
            let logged = r.samples > 0 && r.max_rel_residual.is_finite() && r.failed_samples == 0;
            // the bound probes must show no growth; the self-duality probe only logs
            let bounded = id == E3SelfdualProbe || r.pass;
            let ok = r.probe && emitted && logged && bounded;
            pass &= ok;
            parts.push(format!(
                "{}{}: series={} residual={:.2e}",
                if ok { "" } else { "!" },
                id.name(),
                r.series.len(),
                r.max_rel_residual
            ));
        }
        Outcome { pass, detail: parts.join(" ") }
    });

    criterion(&mut results, 9, "registry audit", f64::INFINITY, || {
        let used: BTreeSet<&str> = CheckId::ALL.iter().flat_map(|id| id.info().formulas.iter().copied()).collect();
        let missing: Vec<&str> = IN_SCOPE.iter().copied().filter(|k| !used.contains(k)).collect();
        Outcome {
            pass: missing.is_empty(),
            detail: format!("{} keys, unreferenced: {:?}", IN_SCOPE.len(), missing),
        }
    });

    let failed: Vec<usize> = results.iter().filter(|(_, p)| !p).map(|(k, _)| *k).collect();
    say(&format!("acceptance: {}/{} criteria pass", results.len() - failed.len(), results.len()));
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
