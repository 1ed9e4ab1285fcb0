use hypcm_core::eigen::{self, Representation};
use hypcm_core::error::Result;
use hypcm_core::hypgamma::g;
use hypcm_core::kernels::{coeff_v, u_value, CoeffKind};
use hypcm_core::{CheckTolerance, HyperbolicParams, C64};

use super::sample::{grows, rel, Ctx, Sample, Series};
use super::two::{c, decay_residual, decay_seps, eigenvalue, request, I};

const COM: Representation = Representation::CenterOfMass;
const AUTO: Representation = Representation::Auto;

/// `perm[j] = σ(j)`; `(σx)_j = x_{σ(j)}`.
const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn permute(v: &[C64], perm: &[usize; 3]) -> [C64; 3] {
    [v[perm[0]], v[perm[1]], v[perm[2]]]
}

/// `∏ (-u(z_j - z_k))` over `j < k` with `σ⁻¹(j) > σ⁻¹(k)`.
fn inversions(p: &HyperbolicParams, b: f64, z: &[C64], perm: &[usize; 3]) -> C64 {
    let mut inv = [0usize; 3];
    for (i, &s) in perm.iter().enumerate() {
        inv[s] = i;
    }
    let mut f = c(1.0);
    for j in 0..3 {
        for k in j + 1..3 {
            if inv[j] > inv[k] {
                f *= -u_value(p, c(b), z[j] - z[k]);
            }
        }
    }
    f
}

/// The chamber sums cancel heavily at small b; 1e-7 is what they deliver
/// at `b = 0.4a`.
const EVAL_TOL3: f64 = 1e-7;

fn request3(p: &HyperbolicParams, b: f64, x: &[C64], y: &[C64], rep: Representation) -> Result<eigen::EigenfunctionRequest> {
    Ok(request(p, b, x, y, rep)?.with_tol(CheckTolerance::rel(EVAL_TOL3)))
}

fn j3(p: &HyperbolicParams, b: f64, x: &[C64], y: &[C64], rep: Representation) -> Result<C64> {
    Ok(eigen::j3(p, &request3(p, b, x, y, rep)?)?.value.value)
}

fn e3(p: &HyperbolicParams, b: f64, x: &[C64], y: &[C64], rep: Representation) -> Result<C64> {
    Ok(eigen::e3(p, &request3(p, b, x, y, rep)?)?.value.value)
}

fn p3(p: &HyperbolicParams, b: f64, x: &[C64], y: &[C64]) -> Result<C64> {
    Ok(eigen::p3(p, c(b), x, y)?.value)
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

fn real_triple(cx: &mut Ctx, w: f64) -> (Vec<C64>, Vec<C64>) {
    let a = cx.p.a;
    let x = cx.spaced(3, -w * a, w * a, 0.3 * a);
    let y = cx.spaced(3, -w * a, w * a, 0.3 * a);
    cx.note_v("x", &x);
    cx.note_v("y", &y);
    (x, y)
}

/// A random permutation other than the identity.
fn nontrivial(cx: &mut Ctx) -> [usize; 3] {
    PERMS[1 + cx.index(5)]
}

pub(crate) fn rep_consistency(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let wx = 0.1 * (p.a - b / 2.0);
    let mut x = cx.spaced(3, -p.a, p.a, 0.3 * p.a);
    let mut y = cx.spaced(3, -p.a, p.a, 0.3 * p.a);
    for j in 0..3 {
        x[j].im = cx.u(-wx, wx);
        y[j].im = cx.u(-0.1, 0.1) * b;
    }
    cx.note_v("x", &x);
    cx.note_v("y", &y);
    let jc = j3(&p, b, &x, &y, COM)?;
    let jd = j3(&p, b, &x, &y, Representation::Defining)?;
    let ju = j3(&p, b, &x, &y, Representation::Dual)?;
    Ok(cx.done(rel(jd, jc).max(rel(ju, jc))))
}

pub(crate) fn duality(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let (x, y) = real_triple(cx, 1.2);
    let g0 = g(&p, I * (p.a - b));
    let rhs = g0.powi(6) * j3(&p, 2.0 * p.a - b, &y, &x, COM)?;
    Ok(cx.done(rel(j3(&p, b, &x, &y, COM)?, rhs)))
}

pub(crate) fn symmetry(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let (x, y) = real_triple(cx, 1.2);
    let (s, t) = (nontrivial(cx), nontrivial(cx));
    cx.note("perms", &format!("{s:?}{t:?}"));
    let j = j3(&p, b, &x, &y, COM)?;
    let r = rel(j3(&p, b, &x, &permute(&y, &t), COM)?, j);
    Ok(cx.done(r.max(rel(j3(&p, b, &permute(&x, &s), &permute(&y, &t), COM)?, j))))
}

pub(crate) fn reflection(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let (x, y) = real_triple(cx, 1.2);
    let eta = cx.u(-1.0, 1.0) * p.a;
    let j = j3(&p, b, &x, &y, COM)?;
    let r = rel(j3(&p, b, &neg(&x), &neg(&y), COM)?, j);
    let h = if cx.round % 2 == 0 {
        (-I * p.alpha * eta * sum(&y)).exp() * j3(&p, b, &shift(&x, eta), &y, COM)?
    } else {
        (-I * p.alpha * eta * sum(&x)).exp() * j3(&p, b, &x, &shift(&y, eta), COM)?
    };
    Ok(cx.done(r.max(rel(h, j))))
}

pub(crate) fn eigen_ade(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    // small b keeps the shifted contour strip wide
    let b = cx.b_below(0.6 * p.a_l);
    let mut x = cx.spaced(3, -p.a, p.a, 0.3 * p.a);
    x[0].im = 0.05 * p.a_s;
    let y = cx.spaced(3, -p.a, p.a, 0.3 * p.a);
    cx.note_v("x", &x);
    cx.note_v("y", &y);
    let j = j3(&p, b, &x, &y, COM)?;
    let mut lhs = c(0.0);
    for k in 0..3 {
        let mut xs = [x[0], x[1], x[2]];
        xs.swap(0, k);
        let mut xk = [x[0], x[1], x[2]];
        xk[k] += I * p.a_s;
        lhs += coeff_v(CoeffKind::V3, &p, c(b), &xs)?.value * j3(&p, b, &xk, &y, COM)?;
    }
    let (ev, scale) = eigenvalue(&p, &y);
    Ok(cx.done((lhs - ev * j).norm() / (scale * j.norm())))
}

pub(crate) fn p3_invariances(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let (x, y) = real_triple(cx, 1.2);
    let (s, t) = (nontrivial(cx), nontrivial(cx));
    cx.note("perms", &format!("{s:?}{t:?}"));
    let v = p3(&p, b, &x, &y)?;
    let g0 = g(&p, I * (p.a - b));
    let mut r = rel(p3(&p, b, &neg(&x), &neg(&y))?, v);
    r = r.max(rel(g0.powi(6) * p3(&p, 2.0 * p.a - b, &y, &x)?, v));
    r = r.max(rel(p3(&p, b, &permute(&x, &s), &permute(&y, &t))?, v));
    Ok(cx.done(r))
}

pub(crate) fn p3_eigen_ade(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(0.25 * p.a_l);
    let mut x = cx.spaced(3, -p.a, p.a, 0.3 * p.a);
    for z in x.iter_mut() {
        z.im = cx.u(-0.3, 0.3) * b;
    }
    let y = cx.spaced(3, -p.a, p.a, 0.3 * p.a);
    cx.note_v("x", &x);
    cx.note_v("y", &y);
    let pv = p3(&p, b, &x, &y)?;
    let mut lhs = c(0.0);
    for k in 0..3 {
        let mut xs = [x[0], x[1], x[2]];
        xs.swap(0, k);
        let mut xk = [x[0], x[1], x[2]];
        xk[k] += I * p.a_s;
        lhs += coeff_v(CoeffKind::CalV3, &p, c(b), &xs)?.value * p3(&p, b, &xk, &y)?;
    }
    let (ev, scale) = eigenvalue(&p, &y);
    Ok(cx.done((lhs - ev * pv).norm() / (scale * pv.norm())))
}

pub(crate) fn e3_props(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let (x, y) = real_triple(cx, 1.0);
    let eta = cx.u(-1.0, 1.0) * p.a;
    let (s, t) = (nontrivial(cx), nontrivial(cx));
    cx.note("perms", &format!("{s:?}{t:?}"));
    let e = e3(&p, b, &x, &y, AUTO)?;
    let mut ri = c(1.0);
    for j in 0..3 {
        for k in j + 1..3 {
            ri *= u_value(&p, c(b), x[j] - x[k]) * u_value(&p, c(b), y[j] - y[k]);
        }
    }
    let mut r = rel(e3(&p, b, &neg(&x), &neg(&y), AUTO)?, ri * e);
    let h = if cx.round % 2 == 0 {
        (-I * p.alpha * eta * sum(&y)).exp() * e3(&p, b, &shift(&x, eta), &y, AUTO)?
    } else {
        (-I * p.alpha * eta * sum(&x)).exp() * e3(&p, b, &x, &shift(&y, eta), AUTO)?
    };
    r = r.max(rel(h, e));
    r = r.max(rel(e3(&p, 2.0 * p.a - b, &y, &x, AUTO)?, e));
    let pf = inversions(&p, b, &x, &s) * inversions(&p, b, &y, &t);
    r = r.max(rel(e3(&p, b, &permute(&x, &s), &permute(&y, &t), AUTO)?, pf * e));
    // residue-augmented form against the dressed integral
    let direct = e3(&p, b, &x, &y, COM)?;
    r = r.max(rel(e3(&p, b, &x, &y, Representation::ResidueAugmented(0.75 * p.a_s))?, direct));
    // the two ways of writing the plane-wave sum
    r = r.max(rel(eigen::e3_as(&p, c(b), &x, &y), eigen::e3_as_c_ratio(&p, c(b), &x, &y)));
    Ok(cx.done(r))
}

pub(crate) fn e3_asymptotics(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let x = vec![c(0.4 * p.a), c(0.0), c(-0.3 * p.a)];
    cx.note_v("x", &x);
    let rep = Representation::ResidueAugmented(0.75 * p.a_s);
    let seps = decay_seps(&p);
    let mut diffs = Vec::with_capacity(seps.len());
    for &s in &seps {
        let req = request3(&p, b, &x, &[c(2.0 * s), c(s), c(0.0)], rep)?;
        diffs.push(eigen::e3_minus_as(&p, &req)?.0.norm());
    }
    let residual = decay_residual(cx, &seps, &diffs, p.alpha * p.a_s / 2.0)?;
    let mut s = cx.done(residual);
    s.series.push(Series {
        label: format!("e3 |E3-E3as| {}", cx.describe()),
        points: seps.iter().copied().zip(diffs).collect(),
    });
    Ok(s)
}

pub(crate) fn e3_bound_probe(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let seps: Vec<f64> = (1..=5).map(|k| k as f64 * p.a).collect();
    let re = [0.8 * p.a, 0.0, -0.7 * p.a];
    let configs = [[-0.6 * p.a_s, -0.3 * p.a_s, 0.0], [0.0; 3]];
    let mut sup = Vec::with_capacity(seps.len());
    for &d in &seps {
        let y = [c(2.0 * d), c(d), c(0.0)];
        let mut m: f64 = 0.0;
        for v in &configs {
            let x: Vec<C64> = (0..3).map(|j| C64::new(re[j], v[j])).collect();
            let e = e3(&p, b, &x, &y, AUTO)?.norm();
            let mut bound = (-p.alpha * (0..3).map(|j| y[j].re * v[j]).sum::<f64>()).exp();
            for j in 0..3 {
                for k in j + 1..3 {
                    bound *= 1.0 + (re[j] - re[k]).abs();
                }
            }
            m = m.max(e / bound);
        }
        sup.push(m);
    }
    let mut sample = cx.done(sup.iter().fold(0.0, |m: f64, &v| m.max(v)));
    sample.growth = grows(&sup, 1.5);
    sample.series.push(Series { label: format!("e3 bound ratio {}", cx.describe()), points: seps.iter().copied().zip(sup).collect() });
    Ok(sample)
}

pub(crate) fn e3_selfdual_probe(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let (x, y) = real_triple(cx, 1.0);
    let r = rel(e3(&p, b, &x, &y, AUTO)?, e3(&p, b, &y, &x, AUTO)?);
    let mut s = cx.done(r);
    s.series.push(Series { label: format!("e3 self-duality defect {}", cx.describe()), points: vec![(b, r)] });
    Ok(s)
}

pub(crate) fn mu_integral_eq(cx: &mut Ctx) -> Result<Sample> {
    let p = cx.p;
    let b = cx.b_below(2.0 * p.a);
    let ordered = |cx: &mut Ctx| {
        let hi = cx.u(-0.5, 1.0) * p.a;
        vec![c(hi), c(hi - cx.u(0.1, 1.0) * p.a)]
    };
    let t = ordered(cx);
    let q = ordered(cx);
    cx.note_v("t", &t);
    cx.note_v("q", &q);
    let (lhs, rhs, _) = eigen::mu_equation(&p, c(b), &t, &q)?;
    Ok(cx.done(rel(lhs, rhs)))
}
