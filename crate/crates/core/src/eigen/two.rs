//! J2 in its three integral representations, and E2 directly and in the
//! residue-augmented (contour-shifted) form.

use crate::domain::DomainId;
use crate::error::{Error, Result};
use crate::hypgamma::g_fast;
use crate::kernels::{c_split, c_value, expm1, phase_phi, u_value};
use crate::params::HyperbolicParams;
use crate::{C64, I};

use super::lattice::{step_for, walk, Sum};

const MAX_NODES: usize = 400_000;

fn violation(domain: DomainId, detail: &'static str) -> Error {
    Error::DomainViolation { domain, detail }
}

/// Checks `|Im(x1-x2)| < 2a - Re b` and `|Im(y1-y2)| < Re b`.
pub(crate) fn check_cd2(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<()> {
    if (x[0] - x[1]).im.abs() >= 2.0 * p.a - b.re {
        return Err(violation(DomainId::D2, "|Im(x1-x2)| must be below 2a - Re b"));
    }
    if (y[0] - y[1]).im.abs() >= b.re {
        return Err(violation(DomainId::CD2, "|Im(y1-y2)| must be below Re b"));
    }
    Ok(())
}

/// `G(ib - ia)/√(a+ a-)`.
pub(crate) fn cal_g(p: &HyperbolicParams, b: C64) -> C64 {
    g_fast(p, I * (b - p.a)) / p.sqrt_prod()
}

/// Strip and growth data for an integrand `exp(iαzY) f(z)`.
fn oscill_growth(p: &HyperbolicParams, y: C64, b: C64) -> (f64, f64) {
    let base = p.alpha * b.im.abs();
    ((p.alpha * y.re).max(0.0) + base, (-p.alpha * y.re).max(0.0) + base)
}

/// Centre-of-mass representation.
pub(crate) fn j2_com(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<Sum> {
    check_cd2(p, b, x, y)?;
    let d = (x[0] - x[1]) / 2.0;
    let yd = y[0] - y[1];
    let w = p.a - b.re / 2.0 - d.im.abs();
    let (gl, gu) = oscill_growth(p, yd, b);
    let h = step_for(w, w, gl, gu);
    let hb = I * b / 2.0;
    let f = |t: f64| {
        let z = C64::new(t, 0.0);
        let g = g_fast(p, z + d - hb) * g_fast(p, z - d - hb) * g_fast(p, -z + d - hb) * g_fast(p, -z - d - hb);
        (I * p.alpha * z * yd).exp() * g
    };
    let s = walk(f, 0.0, h, MAX_NODES)?;
    let pre = (I * p.alpha * (x[0] + x[1]) * (y[0] + y[1]) / 2.0).exp();
    Ok(s.scaled(pre))
}

/// Defining representation, on the line through the mean of `Im x`.
pub(crate) fn j2_def(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<Sum> {
    check_cd2(p, b, x, y)?;
    let off = (x[0].im + x[1].im) / 2.0;
    let yd = y[0] - y[1];
    let w = p.a - b.re / 2.0 - (x[0] - x[1]).im.abs() / 2.0;
    let (gl, gu) = oscill_growth(p, yd, b);
    let h = step_for(w, w, gl, gu);
    let hb = I * b / 2.0;
    let f = |t: f64| {
        let z = C64::new(t, off);
        let mut v = (I * p.alpha * z * yd).exp();
        for xj in x {
            v *= g_fast(p, xj - z - hb) / g_fast(p, xj - z + hb);
        }
        v
    };
    let s = walk(f, (x[0].re + x[1].re) / 2.0, h, MAX_NODES)?;
    let pre = (I * p.alpha * y[1] * (x[0] + x[1])).exp();
    Ok(s.scaled(pre))
}

/// Dual representation: `G(ia-ib)² J2(2a-b; y, x)` in its defining form.
pub(crate) fn j2_dual(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<Sum> {
    check_cd2(p, b, x, y)?;
    let g0 = g_fast(p, I * (p.a - b));
    Ok(j2_def(p, 2.0 * p.a - b, y, x)?.scaled(g0 * g0))
}

/// `E2^as(b;x,y)`.
pub fn e2_as(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> C64 {
    let u = u_value(p, b, x[1] - x[0]);
    (I * p.alpha * (x[0] * y[0] + x[1] * y[1])).exp() - u * (I * p.alpha * (x[1] * y[0] + x[0] * y[1])).exp()
}

/// `E2` together with `E2 - E2^as` and an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct E2Parts {
    pub value: C64,
    pub remainder: C64,
    pub err: f64,
}

/// `ln M2(b;y)`'s exponentially small part: `M2 = exp(-c_corr)` for `y1 > y2`.
pub(crate) fn m2_log(p: &HyperbolicParams, b: C64, yd: f64) -> C64 {
    -c_split(p, 2.0 * p.a - b, C64::new(yd, 0.0)).1
}

/// `R(s) = ∫ dz exp(iαzY) c(b; z+ir) c(b; z+ir+s)` for `Im s` in
/// `(-r, a_s - r)`.
pub(crate) fn r2_integral(p: &HyperbolicParams, b: C64, s: C64, yd: f64, r: f64) -> Result<Sum> {
    let v = s.im;
    let lower = r.min(r + v);
    let upper = (p.a_s - r).min(p.a_s - r - v);
    if lower <= 0.0 || upper <= 0.0 {
        return Err(violation(DomainId::A2, "shifted contour meets a pole of the c-function"));
    }
    let base = p.alpha * b.im.abs();
    let h = step_for(lower, upper, p.alpha * yd.max(0.0) + base, p.alpha * (-yd).max(0.0) + base);
    let ir = C64::new(0.0, r);
    let f = |t: f64| {
        let z = C64::new(t, 0.0);
        (I * p.alpha * z * yd).exp() * c_value(p, b, z + ir) * c_value(p, b, z + ir + s)
    };
    walk(f, -s.re / 2.0, h, MAX_NODES)
}

/// Residue-augmented evaluation in the base configuration
/// `y1 >= y2` real and `Im(x1 - x2)` in `(-a_s, 0]`.
fn e2_residue_base(p: &HyperbolicParams, b: C64, x: &[C64], y: &[f64], r: f64) -> Result<E2Parts> {
    let yd = y[0] - y[1];
    let xd = x[0] - x[1];
    let r2 = r2_integral(p, b, xd, yd, r)?;
    let cx = c_value(p, b, xd);
    let gfac = cal_g(p, b) * (-(C64::new(r, 0.0) - I * x[0]) * p.alpha * yd).exp() / cx;
    let term = r2.value * gfac;
    let pre = (I * p.alpha * y[1] * (x[0] + x[1])).exp();
    let yc = [C64::new(y[0], 0.0), C64::new(y[1], 0.0)];
    let eas = e2_as(p, b, x, &yc);
    let lm = m2_log(p, b, yd);
    let m2 = lm.exp();
    let remainder = expm1(lm) * eas + m2 * pre * term;
    Ok(E2Parts {
        value: eas + remainder,
        remainder,
        err: (m2 * pre * gfac).norm() * r2.err,
    })
}

/// Default contour parameter for a given `v = Im(x1 - x2)` in `(-a_s, 0]`.
pub(crate) fn auto_r(p: &HyperbolicParams, v: f64) -> f64 {
    let r = 0.75 * p.a_s;
    if r + v > 0.0 && r + v < p.a_s {
        r
    } else {
        ((-v).max(0.0) + p.a_s) / 2.0
    }
}

/// Residue-augmented E2 for real `y` and `|Im(x1 - x2)| < a_s`. `r = None`
/// picks the default contour.
pub(crate) fn e2_residue(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64], r: Option<f64>) -> Result<E2Parts> {
    if y.iter().any(|v| v.im != 0.0) {
        return Err(violation(DomainId::CD2, "the residue representation needs real y"));
    }
    let yr = [y[0].re, y[1].re];
    if yr[0] < yr[1] {
        // E2(x, y) = E2(x, τy) / (-u(y1 - y2))
        let f = -u_value(p, b, y[0] - y[1]);
        let sw = e2_residue(p, b, x, &[y[1], y[0]], r)?;
        let value = sw.value / f;
        return Ok(E2Parts { value, remainder: value - e2_as(p, b, x, y), err: sw.err / f.norm() });
    }
    let xd = x[0] - x[1];
    if xd.im.abs() >= p.a_s {
        return Err(violation(DomainId::A2n(1), "|Im(x1-x2)| must be below a_s"));
    }
    if xd.im > 0.0 {
        let f = -u_value(p, b, xd);
        let sw = e2_residue(p, b, &[x[1], x[0]], y, r)?;
        return Ok(E2Parts { value: sw.value / f, remainder: sw.remainder / f, err: sw.err / f.norm() });
    }
    if xd.norm() == 0.0 {
        return Ok(E2Parts { value: C64::new(0.0, 0.0), remainder: C64::new(0.0, 0.0), err: 0.0 });
    }
    if xd.norm() < 1e-4 * p.a_s {
        if x.iter().all(|v| v.im == 0.0) {
            let e = e2_direct(p, b, x, y)?;
            return Ok(E2Parts { value: e.value, remainder: e.value - e2_as(p, b, x, y), err: e.err });
        }
        return Err(Error::NearDegenerate { gap: xd.norm() });
    }
    let r = match r {
        Some(r) => {
            if !(r > 0.0 && r < p.a_s && r + xd.im > 0.0 && r + xd.im < p.a_s) {
                return Err(violation(DomainId::A2n(1), "contour parameter r outside its admissible range"));
            }
            r
        }
        None => auto_r(p, xd.im),
    };
    e2_residue_base(p, b, x, &yr, r)
}

/// Value with error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Val {
    pub value: C64,
    pub err: f64,
}

/// `E2 = φ(b) G(ib-ia)/√(a+a-) · J2 / (C2(b;x) C2(2a-b;y))`, with J2 from
/// the centre-of-mass form. Coinciding `x` (or `y`) give zero.
pub(crate) fn e2_direct(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<Val> {
    let j = j2_com(p, b, x, y)?;
    let cx = c_value(p, b, x[0] - x[1]);
    let cy = c_value(p, 2.0 * p.a - b, y[0] - y[1]);
    let pre = phase_phi(p, b) * cal_g(p, b);
    let den = cx * cy;
    if !den.is_finite() || x[0] == x[1] || y[0] == y[1] {
        return Ok(Val { value: C64::new(0.0, 0.0), err: 0.0 });
    }
    let f = pre / den;
    Ok(Val { value: j.value * f, err: j.err * f.norm() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::e_l;
    use crate::kernels::{coeff_v, CoeffKind};
    use crate::c;

    fn rel(a: C64, b: C64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    fn params() -> [HyperbolicParams; 3] {
        [
            HyperbolicParams::new(1.0, 1.0).unwrap(),
            HyperbolicParams::new(1.0, 0.8).unwrap(),
            HyperbolicParams::new(1.0, libm::sqrt(2.0)).unwrap(),
        ]
    }

    #[test]
    fn j2_representations_agree() {
        for p in params() {
            for bf in [0.4, 0.9, 1.3] {
                let b = c(bf * p.a);
                let x = [C64::new(0.3, 0.1), C64::new(-0.1, -0.05)];
                let y = [c(0.5), c(0.2)];
                let jc = j2_com(&p, b, &x, &y).unwrap();
                let jd = j2_def(&p, b, &x, &y).unwrap();
                let ju = j2_dual(&p, b, &x, &y).unwrap();
                assert!(rel(jd.value, jc.value) < 1e-11, "{} {:?} {:?}", bf, jc, jd);
                assert!(rel(ju.value, jc.value) < 1e-10, "{} {:?} {:?}", bf, jc, ju);
                assert!(jc.err < 1e-11 * jc.value.norm().max(jc.l1 * 1e-3));
                let js = j2_com(&p, b, &[x[1], x[0]], &[y[1], y[0]]).unwrap();
                assert!(rel(js.value, jc.value) < 1e-11);
            }
        }
    }

    #[test]
    fn j2_eigen_equation() {
        for p in params() {
            let b = c(0.4 * p.a);
            let x = [C64::new(0.3, 0.1), C64::new(-0.4, 0.0)];
            let y = [c(0.7), c(-0.2)];
            let j = j2_com(&p, b, &x, &y).unwrap().value;
            let v1 = coeff_v(CoeffKind::V2, &p, b, &x).unwrap().value;
            let v2 = coeff_v(CoeffKind::V2, &p, b, &[x[1], x[0]]).unwrap().value;
            let ias = C64::new(0.0, p.a_s);
            let j1 = j2_com(&p, b, &[x[0] + ias, x[1]], &y).unwrap().value;
            let j2 = j2_com(&p, b, &[x[0], x[1] + ias], &y).unwrap().value;
            let lhs = v1 * j1 + v2 * j2;
            let ev = e_l(&p, -2.0 * y[0]) + e_l(&p, -2.0 * y[1]);
            let rhs = ev * j;
            let norm = (e_l(&p, -2.0 * y[0]).norm() + e_l(&p, -2.0 * y[1]).norm()) * j.norm();
            assert!((lhs - rhs).norm() / norm < 1e-10, "{:?} {:?}", lhs, rhs);
        }
    }

    #[test]
    fn e2_residue_matches_direct() {
        for p in params() {
            for bf in [0.4, 0.9, 1.3] {
                let b = c(bf * p.a);
                let x = [c(0.4), c(-0.3)];
                for y in [[c(0.5), c(0.1)], [c(-0.6), c(0.9)], [c(1.7), c(-0.4)]] {
                    let d = e2_direct(&p, b, &x, &y).unwrap();
                    for r in [0.5, 0.75] {
                        let e = e2_residue(&p, b, &x, &y, Some(r * p.a_s)).unwrap();
                        let tol = 1e-10 + 2.0 * (d.err + e.err) / d.value.norm();
                        assert!(rel(e.value, d.value) < tol, "{} {:?} {:?} {:?}", bf, y, d, e);
                        assert!((e.value - e.remainder - e2_as(&p, b, &x, &y)).norm() < 1e-13);
                    }
                }
            }
        }
    }

    #[test]
    fn e2_duality_and_zero() {
        let p = HyperbolicParams::new(1.0, 0.8).unwrap();
        let b = c(0.7);
        let x = [c(0.4), c(-0.3)];
        let y = [c(0.5), c(0.1)];
        let e = e2_direct(&p, b, &x, &y).unwrap().value;
        let d = e2_direct(&p, 2.0 * p.a - b, &y, &x).unwrap().value;
        assert!(rel(d, e) < 1e-10);
        assert_eq!(e2_direct(&p, b, &[x[0], x[0]], &y).unwrap().value, c(0.0));
        assert_eq!(e2_as(&p, b, &[x[0], x[0]], &y), c(0.0));
    }
}
