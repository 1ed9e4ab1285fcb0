use core::f64::consts::PI;

use hypcm_core::error::Result;
use hypcm_core::gamma::{log_gamma, recip_gamma};
use hypcm_core::hypgamma::{
    e_entire, e_entire_route, g, g_mero, g_mero_via_e, g_residue_minus_ia, log_e_strip, zero_pole_catalog, LadderRoute,
};
use hypcm_core::kernels::{c_split, phase_phi, u_defect, u_value};
use hypcm_core::quad::trapezoid::{integrate_uniform, step_for_strip, UniformGrid};
use hypcm_core::quad::{integrate_line, LineSpec};
use hypcm_core::{CheckTolerance, MeroKind, C64};

use super::fit::fit_decay_rate;
use super::sample::{rel, Ctx, Sample};

const I: C64 = C64 { re: 0.0, im: 1.0 };

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub(crate) fn g_reflection(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let z = C64::new(cx.u(-3.0 * p.a_l, 3.0 * p.a_l), cx.u(-0.9 * p.a, 0.9 * p.a));
    cx.note_c("z", z);
    Ok(cx.done((g(&p, z) * g(&p, -z) - 1.0).norm()))
}

pub(crate) fn g_modulus_real(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let z = c(cx.u(-6.0 * p.a_l, 6.0 * p.a_l));
    cx.note_c("z", z);
    Ok(cx.done((g(&p, z).norm() - 1.0).abs()))
}

pub(crate) fn e_ade(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let delta: i8 = if cx.index(2) == 0 { 1 } else { -1 };
    let (ad, amd) = (p.a_delta(delta), p.a_delta(-delta));
    // both arguments stay in the half plane where E comes from its integral
    let top = p.a - 0.5 * p.a_s - 0.5 * amd - 0.05 * p.a;
    let z = C64::new(cx.u(-3.0 * p.a_l, 3.0 * p.a_l), cx.u(-0.6 * p.a, top));
    cx.note("delta", if delta > 0 { "+" } else { "-" });
    cx.note_c("z", z);
    let lhs = (log_e_strip(&p, z + I * (0.5 * amd))? - log_e_strip(&p, z - I * (0.5 * amd))?).exp();
    let rhs = (2.0 * PI).sqrt() * (I * z * p.k_delta(delta)).exp() * recip_gamma(I * z / ad + 0.5);
    Ok(cx.done(rel(lhs, rhs)))
}

/// Number of `(m, n)` with `m a+ + n a- = p`, by direct search.
fn brute_order(a_plus: f64, a_minus: f64, p: f64, eps: f64) -> u32 {
    let mut n = 0;
    let mut m = 0.0;
    while m * a_plus <= p + eps {
        let rest = (p - m * a_plus) / a_minus;
        if rest > -eps && (rest - rest.round()).abs() * a_minus < eps {
            n += 1;
        }
        m += 1.0;
    }
    n
}

pub(crate) fn e_zero_catalog(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let cat = zero_pole_catalog(&p, 3.0 * p.a_l);
    let mut bad = 0u32;
    if cx.round % 2 == 0 {
        let lp = cat[cx.index(cat.len())];
        cx.note("kl", &format!("({},{})", lp.k, lp.l));
        if brute_order(p.a_plus, p.a_minus, lp.p, 1e-9 * p.a_s) != lp.order {
            bad += 1;
        }
        let z = I * (p.a + lp.p);
        if e_entire(&p, z)?.kind != MeroKind::Zero(lp.order) {
            bad += 1;
        }
        if g_mero(&p, -z)?.kind != MeroKind::Pole(lp.order) {
            bad += 1;
        }
        let th = cx.u(0.0, 2.0 * PI);
        let off = e_entire(&p, z + C64::from_polar(1e-3 * p.a_s, th))?;
        if off.kind != MeroKind::Finite || off.value == c(0.0) {
            bad += 1;
        }
    } else {
        let z = loop {
            let z = C64::new(cx.u(-3.0 * p.a_l, 3.0 * p.a_l), cx.u(-p.a_l, p.a + 3.0 * p.a_l));
            if cat.iter().all(|lp| (z - I * (p.a + lp.p)).norm() > 0.05 * p.a_s) {
                break z;
            }
        };
        cx.note_c("z", z);
        if e_entire(&p, z)?.kind != MeroKind::Finite {
            bad += 1;
        }
    }
    Ok(cx.done(bad as f64))
}

pub(crate) fn gamma_values(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let side = if cx.index(2) == 0 { 1.0 } else { -1.0 };
    let z = C64::new(side * cx.u(0.1 * p.a_s, 3.0 * p.a_l), cx.u(-2.5 * p.a, 2.5 * p.a));
    let w = C64::new(cx.u(-2.0 * p.a_l, 2.0 * p.a_l), cx.u(p.a, p.a + 2.0 * p.a_l));
    cx.note_c("z", z);
    cx.note_c("w", w);
    let via_e = g_mero_via_e(&p, z)?.value;
    let mut r = rel(via_e, g(&p, z));
    let plus = e_entire_route(&p, w, LadderRoute::PlusFirst)?;
    let minus = e_entire_route(&p, w, LadderRoute::MinusFirst)?;
    if plus.kind == MeroKind::Finite {
        r = r.max(rel(plus.value, minus.value));
    }
    if cx.round == 0 {
        r = r.max((g(&p, c(0.0)) - 1.0).norm());
        r = r.max((e_entire(&p, c(0.0))?.value - 1.0).norm());
        r = r.max(log_e_strip(&p, c(0.0))?.norm());
        r = r.max(log_gamma(c(1.0))?.norm());
        r = r.max((log_gamma(c(0.5))? - c(0.5 * PI.ln())).norm());
    }
    Ok(cx.done(r))
}

/// Polynomial extrapolation to `t = 0` through `(t_j, f_j)`.
fn extrapolate_to_zero(t: &[C64], f: &[C64]) -> C64 {
    let mut v = f.to_vec();
    let n = v.len();
    for m in 1..n {
        for j in 0..n - m {
            v[j] = (t[j + m] * v[j] - t[j] * v[j + 1]) / (t[j + m] - t[j]);
        }
    }
    v[0]
}

pub(crate) fn residue_minus_ia(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let h = cx.u(0.005, 0.02) * p.a_s;
    let dir = C64::from_polar(1.0, cx.u(0.0, 2.0 * PI));
    cx.note_c("t0", dir * h);
    let k = g_residue_minus_ia(&p);
    let ts: Vec<C64> = (0..6).map(|j| dir * (h / f64::powi(2.0, j))).collect();
    let fs: Vec<C64> = ts.iter().map(|&t| -t * g(&p, t - I * p.a) / k - 1.0).collect();
    let mut r = extrapolate_to_zero(&ts, &fs).norm();
    if cx.round == 0 {
        // the exact constant √(a+ a-)/(2πi)
        r = r.max((k * 2.0 * PI * I / p.sqrt_prod() - 1.0).norm());
    }
    Ok(cx.done(r))
}

/// How far a fitted decay rate falls short of `0.9 α a_s/2`; saturated data
/// counts as decayed.
fn decay_shortfall(seps: &[f64], diffs: &[f64], rate: f64) -> Result<f64> {
    match fit_decay_rate(seps, diffs, 0.9 * rate) {
        Ok(f) => Ok(f.shortfall()),
        Err(hypcm_core::Error::DegenerateFit) => Ok(0.0),
        Err(e) => Err(e),
    }
}

pub(crate) fn u_properties(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = c(cx.u(0.05 * p.a, 1.95 * p.a));
    let side = if cx.index(2) == 0 { 1.0 } else { -1.0 };
    let z = C64::new(side * cx.u(0.2 * p.a_s, 3.0 * p.a_l), cx.u(-0.3 * p.a_s, 0.3 * p.a_s));
    cx.note_c("b", b);
    cx.note_c("z", z);
    let bd = 2.0 * p.a - b;
    let mut r = (u_value(&p, b, c(0.0)) - 1.0).norm();
    r = r.max((u_value(&p, b, z) * u_value(&p, b, -z) - 1.0).norm());
    r = r.max((u_value(&p, b, c(z.re)).norm() - 1.0).abs());
    r = r.max((phase_phi(&p, bd) - phase_phi(&p, b)).norm());
    r = r.max(rel(u_value(&p, bd, z), u_value(&p, b, z)));
    if cx.round == 0 {
        let seps: Vec<f64> = (0..5).map(|k| (2.0 + 1.5 * k as f64) * p.a).collect();
        let rate = p.alpha * p.a_s / 2.0;
        for s in [1.0, -1.0] {
            let ud: Vec<f64> = seps.iter().map(|&t| u_defect(&p, b, c(s * t)).norm()).collect();
            let cd: Vec<f64> = seps.iter().map(|&t| hypcm_core_expm1(c_split(&p, b, c(s * t)).1).norm()).collect();
            r = r.max(decay_shortfall(&seps, &ud, rate)?);
            r = r.max(decay_shortfall(&seps, &cd, rate)?);
        }
    }
    Ok(cx.done(r))
}

/// `e^z - 1` without cancellation for small `z`.
fn hypcm_core_expm1(z: C64) -> C64 {
    if z.norm() < 1e-3 {
        z * (1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0)))
    } else {
        z.exp() - 1.0
    }
}

pub(crate) fn fourier_formula(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let im_mu = cx.u(-0.8 * p.a, 0.2 * p.a);
    let im_nu = cx.u(im_mu + 0.3 * p.a, 0.8 * p.a);
    let mu = C64::new(cx.u(-1.0, 1.0), im_mu);
    let nu = C64::new(cx.u(-1.0, 1.0), im_nu);
    let half = (im_nu - im_mu) / 2.0;
    let q = C64::new(cx.u(-1.5, 1.5), cx.u(-0.5, 0.5) * half);
    cx.note_c("mu", mu);
    cx.note_c("nu", nu);
    cx.note_c("p", q);
    let f = |z: C64| (I * p.alpha * q * z).exp() * g(&p, z - nu) / g(&p, z - mu);
    let rate = p.alpha * (half - q.im.abs());
    let spec = LineSpec::new(0.0, rate).with_width(0.5 / (1.0 + q.re.abs()));
    let r = integrate_line(f, &spec, CheckTolerance::rel(1e-11))?;
    if !r.converged && r.abs_error_estimate > 1e-8 * r.value.norm() {
        return Err(hypcm_core::Error::QuadratureFailure { abs_error: r.abs_error_estimate, tol: 1e-8 });
    }
    let lhs = r.value * (p.alpha / (2.0 * PI)).sqrt();
    let mut rhs = (I * p.alpha * q * (mu + nu) / 2.0).exp() * g(&p, I * p.a + mu - nu);
    for d in [1.0, -1.0] {
        rhs *= g(&p, q * d - I * p.a + (nu - mu) / 2.0);
    }
    Ok(cx.done(rel(lhs, rhs)))
}

pub(crate) fn hyp_integral_1d(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let gm = p.alpha * b / 2.0;
    let (x1, x2) = (cx.u(-2.0, 2.0) / gm, cx.u(-2.0, 2.0) / gm);
    cx.note("x", &format!("[{x1},{x2}]"));
    let f = |z: C64| 1.0 / ((gm * (z - x1)).cosh() * (gm * (z - x2)).cosh());
    let spec = LineSpec::new(0.0, 2.0 * gm).centered((x1 + x2) / 2.0).with_width(1.0 / gm);
    let v = integrate_line(f, &spec, CheckTolerance::rel(1e-14))?.value;
    let d = gm * (x1 - x2);
    let exact = if d.abs() < 1e-8 { 2.0 / gm * (1.0 - d * d / 6.0) } else { 2.0 * (x1 - x2) / d.sinh() };
    Ok(cx.done(rel(v, c(exact))))
}

pub(crate) fn hyp_integral_2d(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let gm = p.alpha * b / 2.0;
    let x: Vec<f64> = (0..3).map(|_| cx.u(-1.5, 1.5) / gm).collect();
    cx.note("x", &format!("{x:?}"));
    let f = |z1: C64, z2: C64| {
        let mut den = c(1.0);
        for xj in &x {
            den *= (gm * (*xj - z1)).cosh() * (gm * (*xj - z2)).cosh();
        }
        (z1 - z2) * (gm * (z1 - z2)).sinh() / den
    };
    // trapezoid on both axes; 1/cosh is analytic within π/(2γ) of the line
    let h = step_for_strip(0.75 * PI / (2.0 * gm), 50.0, 0.0);
    let (lo, hi) = x.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, u), &v| (l.min(v), u.max(v)));
    let reach = 24.0 / gm;
    let grid = UniformGrid::covering((lo + hi) / 2.0, h, lo - reach, hi + reach);
    let v = integrate_uniform(|z1| integrate_uniform(|z2| f(c(z1), c(z2)), &grid).value, &grid).value;
    let mut exact = 4.0 / gm.powi(3);
    for j in 0..3 {
        for k in j + 1..3 {
            let d = gm * (x[j] - x[k]);
            exact *= if d.abs() < 1e-8 { 1.0 } else { d / d.sinh() };
        }
    }
    Ok(cx.done(rel(v, c(exact))))
}
