//! N = 3: the Weyl-chamber double integral behind J3 (and the μ integral
//! equation), E3 directly, and E3 in the residue-augmented form.

use alloc::vec::Vec;

use crate::domain::DomainId;
use crate::elementary::com_split;
use crate::error::{Error, Result};
use crate::hypgamma::g_fast;
use crate::kernels::{c_n_value, c_value, m3_minus_one, multiplier, phase_phi, u_value, w2_value, MultiplierKind};
use crate::params::HyperbolicParams;
use crate::{c, C64, I};

use super::lattice::{correlate, nested_error, step_for, Sum, Table, DIGITS};
use super::two::{cal_g, e2_residue, m2_log};

/// Largest lattice half-width accepted before giving up.
const MAX_HALF: i64 = 40_000;

fn violation(domain: DomainId, detail: &'static str) -> Error {
    Error::DomainViolation { domain, detail }
}

fn reach(rate: f64) -> f64 {
    (DIGITS + 8.0) / rate
}

fn half_width(range: f64, h: f64) -> Result<i64> {
    let n = libm::ceil(range / h) as i64 + 2;
    if n > MAX_HALF {
        return Err(Error::QuadratureFailure { abs_error: f64::INFINITY, tol: 0.0 });
    }
    Ok(n)
}

/// `K(s) = ∫ dw exp(iαwŶ) ∏_{δ1,δ2} G(δ1 w + δ2 s/2 - ib/2)` at `s = m h`,
/// `|m| <= mmax`.
fn k_table(p: &HyperbolicParams, b: C64, yh: C64, h: f64, mmax: i64) -> Result<Table> {
    let rate = p.alpha * (b.re - yh.im.abs());
    if rate <= 0.0 {
        return Err(violation(DomainId::CD3, "|Im(y1-y2)| must be below Re b"));
    }
    let sw = p.a - b.re / 2.0;
    let g = p.alpha * (yh.re.abs() + b.im.abs());
    let hw = step_for(sw, sw, g, g);
    let q = libm::floor(hw / (h / 2.0)).max(1.0) as i64;
    let hq = q as f64 * h / 2.0;
    let w = reach(rate);
    let jmax = |m: i64| libm::ceil((m.abs() as f64 * h / 2.0 + w) / hq) as i64;
    let n = q * jmax(mmax) + mmax;
    if n > 8 * MAX_HALF {
        return Err(Error::QuadratureFailure { abs_error: f64::INFINITY, tol: 0.0 });
    }
    let gt = Table::build(|z| g_fast(p, z), -I * b / 2.0, h / 2.0, -n, n);
    gt.check_finite(h / 2.0)?;
    let cs: Vec<C64> = (0..=jmax(mmax)).map(|j| (yh * (p.alpha * j as f64 * hq)).cos()).collect();
    let mut vals = Vec::with_capacity(2 * mmax as usize + 1);
    let mut half = Vec::with_capacity(mmax as usize + 1);
    for m in 0..=mmax {
        let prod = |j: i64| {
            let jq = j * q;
            gt.at(jq + m) * gt.at(jq - m) * gt.at(-jq + m) * gt.at(-jq - m)
        };
        let mut s = prod(0);
        for j in 1..=jmax(m) {
            s += prod(j) * cs[j as usize] * 2.0;
        }
        half.push(s * hq);
    }
    for m in -mmax..=mmax {
        vals.push(half[m.unsigned_abs() as usize]);
    }
    Ok(Table { lo: -mmax, vals })
}

/// `½ ∫_{R²} Ĥ(z1) Ĥ(z2) W2(z1 - z2) K(z1 - z2)` with
/// `Ĥ(t) = exp(iαtŜ/2) ∏_j G(x_j - t - ib/2)/G(x_j - t + ib/2)`, on the line
/// through the mid-range of `Im x`.
pub(crate) fn chamber(p: &HyperbolicParams, b: C64, xs: &[C64], sh: C64, yh: C64) -> Result<Sum> {
    let n = xs.len() as f64;
    let vmax = xs.iter().map(|v| v.im).fold(f64::NEG_INFINITY, f64::max);
    let vmin = xs.iter().map(|v| v.im).fold(f64::INFINITY, f64::min);
    let off = (vmax + vmin) / 2.0;
    let hs = p.a - b.re / 2.0 - (vmax - vmin) / 2.0;
    if hs <= 0.0 {
        return Err(violation(DomainId::D3, "max |Im(x_j-x_k)| must be below 2a - Re b"));
    }
    let rate = p.alpha * ((n - 1.0) * b.re / 2.0 - (sh.im.abs() + yh.im.abs()) / 2.0);
    if rate <= 0.05 * p.alpha * b.re {
        return Err(violation(DomainId::CD3, "imaginary parts of y leave too little decay"));
    }
    let strip = hs.min(b.re).min(2.0 * p.a - b.re);
    let g = p.alpha * ((sh.re.abs() + yh.re.abs()) / 2.0 + n * b.im.abs());
    let h = step_for(strip, strip, g, g);
    let re_lo = xs.iter().map(|v| v.re).fold(f64::INFINITY, f64::min);
    let re_hi = xs.iter().map(|v| v.re).fold(f64::NEG_INFINITY, f64::max);
    let center = libm::round((re_lo + re_hi) / 2.0 / h) as i64;
    let kz = half_width(reach(rate) + (re_hi - re_lo) / 2.0, h)?;
    let hb = I * b / 2.0;
    let hat = Table::build(
        |t| {
            let mut v = (I * p.alpha * t * sh / 2.0).exp();
            for xj in xs {
                v *= g_fast(p, xj - t - hb) / g_fast(p, xj - t + hb);
            }
            v
        },
        C64::new(0.0, off),
        h,
        center - kz,
        center + kz,
    );
    hat.check_finite(h)?;
    let kt = k_table(p, b, yh, h, 2 * kz)?;
    let d = Table::build(|s| s, c(0.0), h, -2 * kz, 2 * kz);
    let d = Table {
        lo: d.lo,
        vals: d.vals.iter().zip(&kt.vals).map(|(s, k)| w2_value(p, b, *s) * k).collect(),
    };
    d.check_finite(h)?;
    Ok(correlate(&hat, &hat, &d, h, rate).scaled(c(0.5)))
}

fn check_cd3(b: C64, y: &[C64]) -> Result<()> {
    for j in 0..3 {
        for k in j + 1..3 {
            if (y[j] - y[k]).im.abs() >= b.re {
                return Err(violation(DomainId::CD3, "max |Im(y_j-y_k)| must be below Re b"));
            }
        }
    }
    Ok(())
}

fn need3(x: &[C64], y: &[C64]) -> Result<()> {
    for v in [x, y] {
        if v.len() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, got: v.len() });
        }
    }
    Ok(())
}

fn sum3(x: &[C64]) -> C64 {
    x[0] + x[1] + x[2]
}

/// Defining representation.
pub(crate) fn j3_def(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<Sum> {
    need3(x, y)?;
    check_cd3(b, y)?;
    let s = chamber(p, b, x, y[0] + y[1] - 2.0 * y[2], y[0] - y[1])?;
    Ok(s.scaled((I * p.alpha * y[2] * sum3(x)).exp()))
}

/// Centre-of-mass representation.
pub(crate) fn j3_com(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<Sum> {
    need3(x, y)?;
    check_cd3(b, y)?;
    let (xm, xt) = com_split(x);
    let s = chamber(p, b, &xt, y[0] + y[1] - 2.0 * y[2], y[0] - y[1])?;
    Ok(s.scaled((I * p.alpha * xm * sum3(y)).exp()))
}

/// Dual representation `G(ia-ib)⁶ J3(2a-b; y, x)`.
pub(crate) fn j3_dual(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<Sum> {
    need3(x, y)?;
    let g0 = g_fast(p, I * (p.a - b));
    Ok(j3_def(p, 2.0 * p.a - b, y, x)?.scaled(g0.powi(6)))
}

/// `∫_{G2} S2(t,z) W2(z) J2(z,q) dz`, which equals `μ(b;q) J2(t,q)`.
pub(crate) fn mu_lhs(p: &HyperbolicParams, b: C64, t: &[C64], q: &[C64]) -> Result<Sum> {
    if (q[0] - q[1]).im.abs() >= b.re {
        return Err(violation(DomainId::CD2, "|Im(q1-q2)| must be below Re b"));
    }
    chamber(p, b, t, q[0] + q[1], q[0] - q[1])
}

/// `(-u(b; x_k - x_j))` over the inversions of the permutation `perm`
/// (`perm[j] = σ(j)`), for `j < k` with `σ⁻¹(j) > σ⁻¹(k)`.
fn inversion_factor(p: &HyperbolicParams, b: C64, x: &[C64], perm: &[usize; 3], flip: bool) -> C64 {
    let mut inv = [0usize; 3];
    for (i, &s) in perm.iter().enumerate() {
        inv[s] = i;
    }
    let mut f = c(1.0);
    for j in 0..3 {
        for k in j + 1..3 {
            if inv[j] > inv[k] {
                let d = if flip { x[j] - x[k] } else { x[k] - x[j] };
                f *= -u_value(p, b, d);
            }
        }
    }
    f
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// `E3^as(b;x,y) = Σ_σ ∏ (-u(b; x_k - x_j)) exp(iα Σ_j x_σ(j) y_j)`.
pub fn e3_as(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> C64 {
    let mut s = c(0.0);
    for perm in &PERMS {
        let ph = (0..3).fold(c(0.0), |acc, j| acc + x[perm[j]] * y[j]);
        s += inversion_factor(p, b, x, perm, false) * (I * p.alpha * ph).exp();
    }
    s
}

/// The same sum written with `C3` ratios.
pub fn e3_as_c_ratio(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> C64 {
    let c0 = c_n_value(p, b, x);
    let mut s = c(0.0);
    for perm in &PERMS {
        let xs = [x[perm[0]], x[perm[1]], x[perm[2]]];
        let ph = (0..3).fold(c(0.0), |acc, j| acc + xs[j] * y[j]);
        s += c_n_value(p, b, &xs) / c0 * (I * p.alpha * ph).exp();
    }
    s
}

/// Value with error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct E3Parts {
    pub value: C64,
    pub remainder: C64,
    pub err: f64,
}

/// `E3 = (φ(b) G(ib-ia)/√(a+a-))³ J3 / (C3(b;x) C3(2a-b;y))` with J3 from
/// the centre-of-mass form.
pub(crate) fn e3_direct(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<E3Parts> {
    need3(x, y)?;
    let coincide = |v: &[C64]| (0..3).any(|j| (j + 1..3).any(|k| v[j] == v[k]));
    if coincide(x) || coincide(y) {
        return Ok(E3Parts { value: c(0.0), remainder: c(0.0), err: 0.0 });
    }
    let j = j3_com(p, b, x, y)?;
    let f = (phase_phi(p, b) * cal_g(p, b)).powi(3) / (c_n_value(p, b, x) * c_n_value(p, 2.0 * p.a - b, y));
    let value = j.value * f;
    Ok(E3Parts { value, remainder: value - e3_as(p, b, x, y), err: j.err * f.norm() })
}

/// Plain trapezoid `h Σ_k v_k` with the nested error estimate.
fn lattice_sum(vals: &[C64], lo: i64, h: f64) -> Sum {
    let mut full = c(0.0);
    let mut coarse = c(0.0);
    let mut l1 = 0.0;
    for (i, v) in vals.iter().enumerate() {
        full += v;
        if (lo + i as i64) % 2 == 0 {
            coarse += v;
        }
        l1 += v.norm();
    }
    let (full, coarse, l1) = (full * h, coarse * (2.0 * h), l1 * h);
    Sum { value: full, err: nested_error(full, coarse, l1, vals.len() as f64), l1 }
}

/// `h Σ_j exp(iωjh) A(j) B(j - k)` for all `k` in `klo..=khi`, over the
/// common index range of the two tables.
fn shifted_products(a: &Table, bt: &Table, omega: f64, h: f64, klo: i64, khi: i64) -> Vec<C64> {
    let ph: Vec<C64> = (a.lo..=a.hi()).map(|j| (I * (omega * h * j as f64)).exp()).collect();
    (klo..=khi)
        .map(|k| {
            let lo = a.lo.max(bt.lo + k);
            let hi = a.hi().min(bt.hi() + k);
            let mut s = c(0.0);
            for j in lo..=hi {
                s += ph[(j - a.lo) as usize] * a.at(j) * bt.at(j - k);
            }
            s * h
        })
        .collect()
}

/// The residue-augmented form for real, strictly decreasing `y`, pairwise
/// distinct `x` and a contour parameter `r` with `0 < r - Im x_j < a_s`.
fn e3_residue_base(p: &HyperbolicParams, b: C64, x: &[C64], y: &[f64; 3], r: f64) -> Result<E3Parts> {
    let al = p.alpha;
    let yh = [y[0] - y[2], y[1] - y[2]];
    let yd = y[0] - y[1];
    let sh = yh[0] + yh[1];
    let gc = cal_g(p, b);
    let c3 = c_n_value(p, b, x);
    let v: Vec<f64> = x.iter().map(|z| z.im).collect();
    let lo_hc = v.iter().map(|vj| r - vj).fold(f64::INFINITY, f64::min);
    let up_hc = v.iter().map(|vj| p.a_s - r + vj).fold(f64::INFINITY, f64::min);
    if lo_hc <= 0.0 || up_hc <= 0.0 {
        return Err(violation(DomainId::A3n(1), "contour parameter r outside its admissible range"));
    }
    let rate = al * b.re;
    let re_lo = x.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
    let re_hi = x.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    let mid = (re_lo + re_hi) / 2.0;
    let spread = (re_hi - re_lo) / 2.0;
    let m2 = m2_log(p, b, yd).exp();
    let ydc = al * yd;

    // Double integral over the shifted contours.
    let r0 = p.a_s / 2.0;
    let s_strip = r0.min(b.re);
    let h1 = step_for(lo_hc.min(s_strip), up_hc.min(s_strip), al * (yh[0] + yd / 2.0), al * yd / 2.0)
        .min(step_for(r0, p.a_s - r0, ydc, 0.0));
    let kz = half_width(reach(rate) + spread, h1)?;
    let kc = libm::round(mid / h1) as i64;
    let (klo, khi) = (kc - kz, kc + kz);
    let ir = C64::new(0.0, r);
    let hc = |t: C64| x.iter().fold(c(1.0), |acc, xj| acc * c_value(p, b, t + ir - xj));
    let a1 = Table::build(|t| hc(t) * (I * al * t * yh[0]).exp(), c(0.0), h1, klo, khi);
    let a2 = Table::build(|t| hc(t) * (I * al * t * yh[1]).exp(), c(0.0), h1, klo, khi);
    a1.check_finite(h1)?;
    a2.check_finite(h1)?;
    let mmax = khi - klo;
    let jw = half_width(reach(rate), h1)?;
    let c0 = Table::c(p, b, C64::new(0.0, r0), h1, -mmax - jw, mmax + jw);
    c0.check_finite(h1)?;
    // Q(m) = h Σ_j exp(iαjhŶ) C0(j) C0(j + m), stored at index mmax - m
    let q_pos = shifted_products(&c0, &c0, yd * al, h1, -mmax, 0);
    let mut d1 = Vec::with_capacity(2 * mmax as usize + 1);
    let mut d2 = Vec::with_capacity(2 * mmax as usize + 1);
    for m in -mmax..=mmax {
        let qm = if m >= 0 {
            q_pos[(mmax - m) as usize]
        } else {
            let s = -m as f64 * h1;
            (I * al * s * yd).exp() * q_pos[(mmax + m) as usize]
        };
        let s = c(m as f64 * h1);
        d1.push(qm * w2_value(p, b, s));
        d2.push(if m == 0 { c(0.0) } else { c(1.0) / c_value(p, b, -s) });
    }
    let d1 = Table { lo: -mmax, vals: d1 };
    let d2 = Table { lo: -mmax, vals: d2 };
    d1.check_finite(h1)?;
    d2.check_finite(h1)?;
    let f1 = gc * libm::exp(-al * r0 * yd);
    let s1 = correlate(&a1, &a2, &d1, h1, rate);
    let s2 = correlate(&a1, &a2, &d2, h1, rate);
    let ti_fac = gc * gc / 2.0 * libm::exp(-al * r * sh) / c3 * m2;
    let t_i = ti_fac * (f1 * s1.value + s2.value * 2.0);
    let mut err = ti_fac.norm() * (f1.norm() * s1.err + 2.0 * s2.err);

    // The three single integrals.
    let mut t_hat = c(0.0);
    for nu in 0..3 {
        let xn = x[nu];
        let rest = others(x, nu);
        let r2 = (r - xn.im + p.a_s) / 2.0;
        let up_t = (p.a_s - r + xn.im) / 2.0;
        let lo_t = (p.a_s + r - xn.im) / 2.0;
        let h2 = step_for(lo_hc.min(lo_t), up_hc.min(up_t), al * (yh[0] + yd / 2.0), al * yd / 2.0)
            .min(step_for(up_t, up_t.min(lo_t), ydc, 0.0));
        let kt = half_width(reach(rate) + spread, h2)?;
        let kc2 = libm::round(mid / h2) as i64;
        let (tlo, thi) = (kc2 - kt, kc2 + kt);
        let jw2 = half_width(reach(rate / 2.0), h2)?;
        let cr2 = Table::c(p, b, C64::new(0.0, r2), h2, -jw2 + tlo.min(0), jw2 + thi.max(0));
        let xs = libm::round(xn.re / h2) as i64;
        let cnu = Table::c(p, b, xn + I * (r2 - r), h2, cr2.lo - thi - xs.abs() - 1, cr2.hi() - tlo + xs.abs() + 1);
        cr2.check_finite(h2)?;
        cnu.check_finite(h2)?;
        let q2 = shifted_products(&cr2, &cnu, yd * al, h2, tlo, thi);
        let mut terms = Vec::with_capacity(q2.len());
        for (i, k) in (tlo..=thi).enumerate() {
            let t = c(k as f64 * h2);
            let z2 = t + ir;
            let z12 = xn - z2;
            let br = gc * (-al * (r2 - I * xn) * yd).exp() * q2[i] / c_value(p, b, z12)
                + (I * al * xn * yd).exp()
                - u_value(p, b, z2 - xn) * (I * al * z2 * yd).exp();
            let f = m2 * (I * al * yh[1] * (xn + z2)).exp() * br;
            let w = rest.iter().fold(c(1.0), |acc, xj| acc * c_value(p, b, z2 - xj));
            terms.push(f * w);
        }
        let psi = lattice_sum(&terms, tlo, h2);
        if !psi.value.is_finite() {
            return Err(Error::NonFiniteSample { at: mid });
        }
        let pre = (0..nu).fold(c(1.0), |acc, j| acc * -u_value(p, b, xn - x[j]));
        let fac = gc * pre / c_value(p, b, rest[0] - rest[1]);
        t_hat += fac * psi.value;
        err += fac.norm() * psi.err;
    }

    // Residue sum, kept as E2 remainders; the plane-wave parts assemble E3^as.
    let yhc = [c(yh[0]), c(yh[1])];
    let mut t_res = c(0.0);
    for nu in 0..3 {
        let rest = others(x, nu);
        let ratio = c_n_value(p, b, &[rest[0], rest[1], x[nu]]) / c3;
        let e2 = e2_residue(p, b, &rest, &yhc, None)?;
        t_res += ratio * e2.remainder;
        err += ratio.norm() * e2.err;
    }

    let yc = [c(y[0]), c(y[1]), c(y[2])];
    let eas = e3_as(p, b, x, &yc);
    let m3 = multiplier(MultiplierKind::M3, p, b, &yc)?;
    let pw = (I * al * y[2] * sum3(x)).exp();
    let remainder = m3_minus_one(p, b, &yc) * eas + m3 * pw * (t_i + t_hat + t_res);
    Ok(E3Parts { value: eas + remainder, remainder, err: err * (m3 * pw).norm() })
}

/// `x(ν)`: `x` with entry `nu` removed.
fn others(x: &[C64], nu: usize) -> [C64; 2] {
    match nu {
        0 => [x[1], x[2]],
        1 => [x[0], x[2]],
        _ => [x[0], x[1]],
    }
}

/// Default contour parameter for `E3` given the imaginary parts of `x`.
pub(crate) fn auto_r3(p: &HyperbolicParams, x: &[C64]) -> Option<f64> {
    let vmax = x.iter().map(|z| z.im).fold(f64::NEG_INFINITY, f64::max);
    let vmin = x.iter().map(|z| z.im).fold(f64::INFINITY, f64::min);
    if vmax - vmin >= p.a_s {
        return None;
    }
    let r = 0.75 * p.a_s;
    if r - vmax > 0.0 && r - vmin < p.a_s {
        Some(r)
    } else {
        Some((vmax + vmin + p.a_s) / 2.0)
    }
}

/// Residue-augmented E3 for real `y` with distinct entries.
pub(crate) fn e3_residue(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64], r: Option<f64>) -> Result<E3Parts> {
    need3(x, y)?;
    if y.iter().any(|v| v.im != 0.0) {
        return Err(violation(DomainId::CD3, "the residue representation needs real y"));
    }
    let mut order = [0usize, 1, 2];
    order.sort_by(|&j, &k| y[k].re.partial_cmp(&y[j].re).unwrap_or(core::cmp::Ordering::Equal));
    let ys = [y[order[0]].re, y[order[1]].re, y[order[2]].re];
    if !(ys[0] > ys[1] && ys[1] > ys[2]) {
        return Err(violation(DomainId::CD3, "the residue representation needs distinct y"));
    }
    let mut gap = f64::INFINITY;
    for j in 0..3 {
        for k in j + 1..3 {
            gap = gap.min((x[j] - x[k]).norm());
        }
    }
    if gap == 0.0 {
        return Ok(E3Parts { value: c(0.0), remainder: c(0.0), err: 0.0 });
    }
    if gap < 1e-4 * p.a_s {
        if x.iter().all(|v| v.im == 0.0) {
            return e3_direct(p, b, x, y);
        }
        return Err(Error::NearDegenerate { gap });
    }
    let r = match r {
        Some(r) => r,
        None => auto_r3(p, x).ok_or(violation(DomainId::A3n(1), "max |Im(x_j-x_k)| must be below a_s"))?,
    };
    let base = e3_residue_base(p, b, x, &ys, r)?;
    if order == [0, 1, 2] {
        return Ok(base);
    }
    // E3(x, τy) = E3(x, y) ∏ (-u(y_j - y_k)) over the inversions of τ
    let f = inversion_factor(p, b, y, &order, true);
    let value = base.value / f;
    Ok(E3Parts { value, remainder: value - e3_as(p, b, x, y), err: base.err / f.norm() })
}

#[cfg(test)]
mod tests {
    use super::super::two::e2_as;
    use super::*;
    use crate::elementary::e_l;
    use crate::kernels::{coeff_v, mu_eigenvalue, CoeffKind};

    fn rel(a: C64, b: C64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    fn cv(v: [f64; 3]) -> [C64; 3] {
        [c(v[0]), c(v[1]), c(v[2])]
    }

    #[test]
    fn e3_as_forms_agree() {
        let p = HyperbolicParams::new(1.0, 0.8).unwrap();
        let b = c(0.7);
        let x = [C64::new(0.4, -0.1), c(-0.3), C64::new(1.1, 0.05)];
        let y = cv([2.0, 0.5, -1.0]);
        let a = e3_as(&p, b, &x, &y);
        assert!(rel(e3_as_c_ratio(&p, b, &x, &y), a) < 1e-12);
        // plane-wave factor times the E2^as residue sum
        let yh = [y[0] - y[2], y[1] - y[2]];
        let c3 = c_n_value(&p, b, &x);
        let mut s = c(0.0);
        for nu in 0..3 {
            let rest = others(&x, nu);
            s += c_n_value(&p, b, &[rest[0], rest[1], x[nu]]) / c3 * e2_as(&p, b, &rest, &yh);
        }
        let pw = (I * p.alpha * y[2] * sum3(&x)).exp();
        assert!(rel(pw * s, a) < 1e-12);
        assert!(e3_as(&p, b, &[x[0], x[0], x[2]], &y).norm() < 1e-14);
    }

    #[test]
    fn j3_representations_and_symmetries() {
        for (ap, am, bf) in [(1.0, 1.0, 0.9), (1.0, 0.8, 0.4), (1.0, libm::sqrt(2.0), 1.3)] {
            let p = HyperbolicParams::new(ap, am).unwrap();
            let b = c(bf * p.a);
            let x = cv([0.4, -0.2, 0.1]);
            let y = cv([0.3, 0.1, -0.25]);
            let jc = j3_com(&p, b, &x, &y).unwrap();
            let jd = j3_def(&p, b, &x, &y).unwrap();
            let ju = j3_dual(&p, b, &x, &y).unwrap();
            assert!(rel(jd.value, jc.value) < 1e-10, "{:?} {:?}", jc, jd);
            assert!(rel(ju.value, jc.value) < 1e-9, "{:?} {:?}", jc, ju);
            let jt = j3_com(&p, b, &x, &[y[2], y[0], y[1]]).unwrap();
            assert!(rel(jt.value, jc.value) < 1e-9, "{:?} {:?}", jc, jt);
            let neg = |v: &[C64; 3]| [-v[0], -v[1], -v[2]];
            let jr = j3_com(&p, b, &neg(&x), &neg(&y)).unwrap();
            assert!(rel(jr.value, jc.value) < 1e-9);
        }
    }

    #[test]
    fn j3_eigen_equation() {
        let p = HyperbolicParams::new(1.0, 0.8).unwrap();
        let b = c(0.4);
        let x = [C64::new(0.3, 0.05), c(-0.4), c(0.1)];
        let y = cv([0.5, -0.2, 0.1]);
        let j = j3_com(&p, b, &x, &y).unwrap().value;
        let mut lhs = c(0.0);
        for k in 0..3 {
            let mut xs = x;
            xs.swap(0, k);
            let v = coeff_v(CoeffKind::V3, &p, b, &xs).unwrap().value;
            let mut xk = x;
            xk[k] += I * p.a_s;
            lhs += v * j3_com(&p, b, &xk, &y).unwrap().value;
        }
        let ev: C64 = y.iter().map(|yj| e_l(&p, -2.0 * yj)).sum();
        let norm: f64 = y.iter().map(|yj| e_l(&p, -2.0 * yj).norm()).sum::<f64>() * j.norm();
        assert!((lhs - ev * j).norm() / norm < 1e-8, "{:?} {:?}", lhs, ev * j);
    }

    #[test]
    fn mu_integral_equation() {
        let p = HyperbolicParams::new(1.0, 0.8).unwrap();
        let b = c(0.6);
        let t = [c(0.5), c(-0.3)];
        let q = [c(0.4), c(0.1)];
        let lhs = mu_lhs(&p, b, &t, &q).unwrap().value;
        let rhs = mu_eigenvalue(&p, b, &q).unwrap() * super::super::two::j2_com(&p, b, &t, &q).unwrap().value;
        assert!(rel(lhs, rhs) < 1e-8, "{:?} {:?} ratio {:?}", lhs, rhs, lhs / rhs);
    }

    #[test]
    fn e3_residue_matches_direct() {
        for (ap, am, bf) in [(1.0, 1.0, 0.9), (1.0, 0.8, 0.4), (1.0, 0.8, 1.3)] {
            let p = HyperbolicParams::new(ap, am).unwrap();
            let b = c(bf * p.a);
            let x = cv([0.4, -0.2, 0.1]);
            for y in [cv([0.6, 0.2, -0.3]), cv([-0.1, 0.5, 0.2])] {
                let d = e3_direct(&p, b, &x, &y).unwrap();
                let e = e3_residue(&p, b, &x, &y, None).unwrap();
                let tol = 1e-9 + 2.0 * (d.err + e.err) / d.value.norm();
                assert!(rel(e.value, d.value) < tol, "{} {:?} {:?} {:?}", bf, y, d, e);
            }
        }
    }
}
