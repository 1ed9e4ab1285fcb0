use hypcm_core::eigen::{self, EigenfunctionRequest, Representation};
use hypcm_core::elementary::e_l;
use hypcm_core::error::Result;
use hypcm_core::hypgamma::g;
use hypcm_core::kernels::{coeff_v, kernel, u_value, CoeffKind, KernelKind};
use hypcm_core::quad::{integrate_line, LineSpec};
use hypcm_core::{CheckTolerance, Coupling, HyperbolicParams, C64};

use super::fit::fit_decay_rate;
use super::sample::{grows, rel, Ctx, Sample, Series};

pub(super) const I: C64 = C64 { re: 0.0, im: 1.0 };

pub(super) fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Quadrature tolerance asked of every eigenfunction evaluation.
pub(super) const EVAL_TOL: f64 = 1e-8;

pub(super) fn request(p: &HyperbolicParams, b: f64, x: &[C64], y: &[C64], rep: Representation) -> Result<EigenfunctionRequest> {
    Ok(EigenfunctionRequest::new(Coupling::real(p, b)?, x, y).with_rep(rep).with_tol(CheckTolerance::rel(EVAL_TOL)))
}

fn j2(p: &HyperbolicParams, b: f64, x: &[C64], y: &[C64], rep: Representation) -> Result<C64> {
    Ok(eigen::j2(p, &request(p, b, x, y, rep)?)?.value.value)
}

fn e2(p: &HyperbolicParams, b: f64, x: &[C64], y: &[C64], rep: Representation) -> Result<C64> {
    Ok(eigen::e2(p, &request(p, b, x, y, rep)?)?.value.value)
}

const COM: Representation = Representation::CenterOfMass;
const AUTO: Representation = Representation::Auto;

fn swap(v: &[C64]) -> [C64; 2] {
    [v[1], v[0]]
}

fn neg(v: &[C64]) -> Vec<C64> {
    v.iter().map(|z| -z).collect()
}

fn shift(v: &[C64], eta: f64) -> Vec<C64> {
    v.iter().map(|z| z + eta).collect()
}

fn sum(v: &[C64]) -> C64 {
    v.iter().sum()
}

/// Real points `x, y` in a box of half-width `w·a`.
fn real_pair(cx: &mut Ctx, w: f64) -> (Vec<C64>, Vec<C64>) {
    let a = cx.p.a;
    let x = cx.spaced(2, -w * a, w * a, 0.2 * a);
    let y = cx.spaced(2, -w * a, w * a, 0.2 * a);
    cx.note_v("x", &x);
    cx.note_v("y", &y);
    (x, y)
}

pub(crate) fn rep_consistency(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let mut x = cx.spaced(2, -1.2 * p.a, 1.2 * p.a, 0.2 * p.a);
    let mut y = cx.spaced(2, -1.2 * p.a, 1.2 * p.a, 0.2 * p.a);
    x[0].im = cx.u(-0.3, 0.3) * (2.0 * p.a - b);
    y[0].im = cx.u(-0.3, 0.3) * b;
    cx.note_v("x", &x);
    cx.note_v("y", &y);
    let jc = j2(&p, b, &x, &y, COM)?;
    let jd = j2(&p, b, &x, &y, Representation::Defining)?;
    let ju = j2(&p, b, &x, &y, Representation::Dual)?;
    Ok(cx.done(rel(jd, jc).max(rel(ju, jc))))
}

pub(crate) fn duality(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let (x, y) = real_pair(cx, 1.5);
    let g0 = g(&p, I * (p.a - b));
    let lhs = j2(&p, b, &x, &y, COM)?;
    let rhs = g0 * g0 * j2(&p, 2.0 * p.a - b, &y, &x, COM)?;
    Ok(cx.done(rel(lhs, rhs)))
}

pub(crate) fn symmetry(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let (x, y) = real_pair(cx, 1.5);
    let eta = cx.u(-1.0, 1.0) * p.a;
    let j = j2(&p, b, &x, &y, COM)?;
    let mut r = rel(j2(&p, b, &x, &swap(&y), COM)?, j);
    r = r.max(rel(j2(&p, b, &swap(&x), &swap(&y), COM)?, j));
    r = r.max(rel(j2(&p, b, &neg(&x), &neg(&y), COM)?, j));
    let hx = (-I * p.alpha * eta * sum(&y)).exp() * j2(&p, b, &shift(&x, eta), &y, COM)?;
    let hy = (-I * p.alpha * eta * sum(&x)).exp() * j2(&p, b, &x, &shift(&y, eta), COM)?;
    Ok(cx.done(r.max(rel(hx, j)).max(rel(hy, j))))
}

fn conical(p: &HyperbolicParams, b: f64, x: &[C64], y: &[C64]) -> Result<C64> {
    let (xd, yd) = (x[0] - x[1], y[0] - y[1]);
    let (ia, ib) = (I * p.a, I * b);
    let f = |z: C64| {
        let mut v = c(1.0);
        for d in [1.0, -1.0] {
            v *= g(p, z + (xd - yd) * d / 2.0 - ia + ib / 2.0) / g(p, z + (xd + yd) * d / 2.0 + ia - ib / 2.0);
        }
        v
    };
    let spec = LineSpec::new(0.0, p.alpha * (p.a - b / 2.0));
    let q = integrate_line(f, &spec, CheckTolerance::rel(1e-11))?;
    if !q.converged && q.abs_error_estimate > 1e-9 * q.value.norm() {
        return Err(hypcm_core::Error::QuadratureFailure { abs_error: q.abs_error_estimate, tol: 1e-11 });
    }
    let v = q.value;
    let mut pre = (I * p.alpha * sum(x) * sum(y) / 2.0).exp();
    for d in [1.0, -1.0] {
        pre *= g(p, xd * d + ia - ib);
    }
    Ok(pre * v)
}

pub(crate) fn second_duality(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let (x, y) = real_pair(cx, 1.5);
    let (ia, ib) = (I * p.a, I * b);
    let j = j2(&p, b, &x, &y, COM)?;
    let mut f = c(1.0);
    for d in [1.0, -1.0] {
        f *= g(&p, (x[0] - x[1]) * d - ia + ib) * g(&p, (y[0] - y[1]) * d + ia - ib);
    }
    let r = rel(j2(&p, b, &y, &x, COM)?, j * f);
    Ok(cx.done(r.max(rel(conical(&p, b, &x, &y)?, j))))
}

/// `e_l(-2y1) + e_l(-2y2)` and the sum of moduli used to scale residuals.
pub(super) fn eigenvalue(p: &HyperbolicParams, y: &[C64]) -> (C64, f64) {
    let v: Vec<C64> = y.iter().map(|&t| e_l(p, -2.0 * t)).collect();
    (v.iter().sum(), v.iter().map(|z| z.norm()).sum())
}

pub(crate) fn eigen_ade(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(p.a_l);
    let v = cx.u(-0.4, 0.4) * (p.a_l - b);
    let mut x = cx.spaced(2, -1.2 * p.a, 1.2 * p.a, 0.2 * p.a);
    x[0].im = v;
    let y = cx.spaced(2, -1.2 * p.a, 1.2 * p.a, 0.2 * p.a);
    cx.note_v("x", &x);
    cx.note_v("y", &y);
    let bc = c(b);
    let j = j2(&p, b, &x, &y, COM)?;
    let mut lhs = c(0.0);
    for k in 0..2 {
        let xs = if k == 0 { [x[0], x[1]] } else { swap(&x) };
        let mut xk = [x[0], x[1]];
        xk[k] += I * p.a_s;
        lhs += coeff_v(CoeffKind::V2, &p, bc, &xs)?.value * j2(&p, b, &xk, &y, COM)?;
    }
    let (ev, scale) = eigenvalue(&p, &y);
    Ok(cx.done((lhs - ev * j).norm() / (scale * j.norm())))
}

fn p2(p: &HyperbolicParams, b: f64, x: &[C64], y: &[C64]) -> Result<C64> {
    Ok(eigen::p2(p, c(b), x, y)?.value)
}

pub(crate) fn p2_invariances(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let (x, y) = real_pair(cx, 1.5);
    let v = p2(&p, b, &x, &y)?;
    let g0 = g(&p, I * (p.a - b));
    let mut r = rel(p2(&p, b, &neg(&x), &neg(&y))?, v);
    r = r.max(rel(g0 * g0 * p2(&p, 2.0 * p.a - b, &y, &x)?, v));
    r = r.max(rel(p2(&p, b, &swap(&x), &y)?, v));
    r = r.max(rel(p2(&p, b, &x, &swap(&y))?, v));
    r = r.max(rel(p2(&p, b, &swap(&x), &swap(&y))?, v));
    Ok(cx.done(r))
}

pub(crate) fn p2_eigen_ade(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(0.5 * p.a_l);
    let v = cx.u(-0.8, 0.8) * b;
    let mut x = cx.spaced(2, -1.2 * p.a, 1.2 * p.a, 0.2 * p.a);
    x[0].im = v;
    let y = cx.spaced(2, -1.2 * p.a, 1.2 * p.a, 0.2 * p.a);
    cx.note_v("x", &x);
    cx.note_v("y", &y);
    let bc = c(b);
    let pv = p2(&p, b, &x, &y)?;
    let mut lhs = c(0.0);
    for k in 0..2 {
        let xs = if k == 0 { [x[0], x[1]] } else { swap(&x) };
        let mut xk = [x[0], x[1]];
        xk[k] += I * p.a_s;
        lhs += coeff_v(CoeffKind::CalV2, &p, bc, &xs)?.value * p2(&p, b, &xk, &y)?;
    }
    let (ev, scale) = eigenvalue(&p, &y);
    Ok(cx.done((lhs - ev * pv).norm() / (scale * pv.norm())))
}

pub(crate) fn e2_props(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let x = cx.spaced(2, -1.2 * p.a, 1.2 * p.a, 0.2 * p.a);
    let y = cx.spaced(2, -1.5 * p.a, 1.5 * p.a, 0.2 * p.a);
    cx.note_v("x", &x);
    cx.note_v("y", &y);
    let eta = cx.u(-1.0, 1.0) * p.a;
    let bc = c(b);
    let e = e2(&p, b, &x, &y, AUTO)?;
    let ux = u_value(&p, bc, x[0] - x[1]);
    let uy = u_value(&p, bc, y[0] - y[1]);
    let mut r = rel(e2(&p, b, &neg(&x), &neg(&y), AUTO)?, ux * uy * e);
    let hx = (-I * p.alpha * eta * sum(&y)).exp() * e2(&p, b, &shift(&x, eta), &y, AUTO)?;
    let hy = (-I * p.alpha * eta * sum(&x)).exp() * e2(&p, b, &x, &shift(&y, eta), AUTO)?;
    r = r.max(rel(hx, e)).max(rel(hy, e));
    r = r.max(rel(e2(&p, 2.0 * p.a - b, &y, &x, AUTO)?, e));
    r = r.max(rel(e2(&p, b, &swap(&x), &y, AUTO)?, -ux * e));
    r = r.max(rel(e2(&p, b, &x, &swap(&y), AUTO)?, -uy * e));
    r = r.max(rel(e2(&p, b, &swap(&x), &swap(&y), AUTO)?, ux * uy * e));
    // the residue-augmented form against the dressed integral
    let direct = e2(&p, b, &x, &y, COM)?;
    for s in [0.5, 0.75] {
        r = r.max(rel(e2(&p, b, &x, &y, Representation::ResidueAugmented(s * p.a_s))?, direct));
    }
    Ok(cx.done(r))
}

/// Separations `{2,…,6}·a` used by the decay fits.
pub(super) fn decay_seps(p: &HyperbolicParams) -> Vec<f64> {
    (2..=6).map(|k| k as f64 * p.a).collect()
}

/// Shortfall of a fitted rate; saturated differences count as decayed.
pub(super) fn decay_residual(cx: &mut Ctx, seps: &[f64], diffs: &[f64], rate: f64) -> Result<f64> {
    match fit_decay_rate(seps, diffs, rate) {
        Ok(f) => {
            cx.note("slope", &format!("{:.4}", f.fitted_slope));
            Ok(f.shortfall())
        }
        Err(hypcm_core::Error::DegenerateFit) => {
            cx.note("fit", "saturated");
            Ok(0.0)
        }
        Err(e) => Err(e),
    }
}

pub(crate) fn e2_asymptotics(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let x = vec![c(cx.u(0.1, 0.6) * p.a), c(cx.u(-0.3, 0.0) * p.a)];
    cx.note_v("x", &x);
    let rep = Representation::ResidueAugmented(0.75 * p.a_s);
    let seps = decay_seps(&p);
    let mut diffs = Vec::with_capacity(seps.len());
    for &s in &seps {
        let req = request(&p, b, &x, &[c(s), c(0.0)], rep)?;
        diffs.push(eigen::e2_minus_as(&p, &req)?.0.norm());
    }
    let residual = decay_residual(cx, &seps, &diffs, p.alpha * p.a_s / 2.0)?;
    let mut s = cx.done(residual);
    s.series.push(Series {
        label: format!("e2 |E2-E2as| {}", cx.describe()),
        points: seps.iter().copied().zip(diffs).collect(),
    });
    Ok(s)
}

pub(crate) fn e2_bound_probe(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let delta = 0.25 * p.a_s;
    let seps: Vec<f64> = (1..=12).map(|k| 0.5 * k as f64 * p.a).collect();
    let y2 = -0.3 * p.a;
    let mut vb = Vec::with_capacity(seps.len());
    let mut bex = Vec::with_capacity(seps.len());
    for &s in &seps {
        let y = [c(y2 + s), c(y2)];
        let mut sup_vb: f64 = 0.0;
        let mut sup_bex: f64 = 0.0;
        for re in [-1.5, 0.4, 2.0] {
            for v in [-p.a_s + delta, -0.5 * p.a_s, 0.0] {
                let x = [C64::new(re * p.a, v), c(0.0)];
                let e = e2(&p, b, &x, &y, AUTO)?.norm();
                let bound = (1.0 + re.abs() * p.a) * (-p.alpha * (y[0].re * v)).exp();
                sup_vb = sup_vb.max(e / bound);
                if v == 0.0 {
                    sup_bex = sup_bex.max(e / ((re.abs() * p.a) * (1.0 + s)));
                }
            }
        }
        vb.push(sup_vb);
        bex.push(sup_bex);
    }
    let mut sample = cx.done(vb.iter().chain(&bex).fold(0.0, |m: f64, &v| m.max(v)));
    sample.growth = grows(&vb, 1.5) || grows(&bex, 1.5);
    let d = cx.describe();
    sample.series.push(Series { label: format!("e2 vb ratio {d}"), points: seps.iter().copied().zip(vb).collect() });
    sample.series.push(Series { label: format!("e2 bex ratio {d}"), points: seps.iter().copied().zip(bex).collect() });
    Ok(sample)
}

pub(crate) fn e2_selfdual(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let (x, y) = real_pair(cx, 1.5);
    Ok(cx.done(rel(e2(&p, b, &x, &y, AUTO)?, e2(&p, b, &y, &x, AUTO)?)))
}

pub(crate) fn f2_symmetries(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let ordered = |cx: &mut Ctx| {
        let hi = cx.u(-0.5, 1.5) * p.a;
        vec![c(hi), c(hi - cx.u(0.1, 1.5) * p.a)]
    };
    let x = ordered(cx);
    let y = ordered(cx);
    cx.note_v("x", &x);
    cx.note_v("y", &y);
    let f = |b: f64, x: &[C64], y: &[C64]| -> Result<C64> { Ok(kernel(KernelKind::F2, &p, c(b), x, y)?.value) };
    let v = f(b, &x, &y)?;
    let mut r = rel(f(b, &neg(&x), &neg(&y))?, v);
    r = r.max(rel(f(2.0 * p.a - b, &y, &x)?, v));
    r = r.max(rel(f(b, &x, &neg(&y))?, v.conj()));
    r = r.max(rel(f(b, &y, &x)?, v));
    Ok(cx.done(r))
}
