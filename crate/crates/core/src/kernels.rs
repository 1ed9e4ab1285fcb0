//! Scalar building blocks of the eigenfunctions: the c-function and its
//! products, the scattering function, the weight, the integral kernels,
//! the multipliers and the coefficients of the difference equations.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gamma::recip_gamma;
use crate::hypgamma::{chi, g_corr, g_fast, g_lead, g_mero};
use crate::mero::{MeroKind, MeroValue};
use crate::params::HyperbolicParams;
use crate::{c, C64, I};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    S2sharp,
    S2,
    S3sharp,
    K2sharp,
    K3sharp,
    F2,
}

impl KernelKind {
    pub const ALL: [KernelKind; 6] =
        [KernelKind::S2sharp, KernelKind::S2, KernelKind::S3sharp, KernelKind::K2sharp, KernelKind::K3sharp, KernelKind::F2];

    pub fn name(&self) -> &'static str {
        match self {
            KernelKind::S2sharp => "S2sharp",
            KernelKind::S2 => "S2",
            KernelKind::S3sharp => "S3sharp",
            KernelKind::K2sharp => "K2sharp",
            KernelKind::K3sharp => "K3sharp",
            KernelKind::F2 => "F2",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|k| k.name().eq_ignore_ascii_case(s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplierKind {
    M2,
    Rho2,
    M3,
    Rho3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffKind {
    V2,
    V3,
    CalV2,
    CalV2Hat,
    CalV3,
}

fn need(x: &[C64], n: usize) -> Result<()> {
    if x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: x.len() });
    }
    Ok(())
}

/// `φ(b) = exp(iαb(b - 2a)/4)`.
pub fn phase_phi(p: &HyperbolicParams, b: C64) -> C64 {
    (I * p.alpha * b * (b - 2.0 * p.a) / 4.0).exp()
}

/// G at `w`, with the leading coefficient taken with respect to `t` where
/// `w = s t + const`, `s = ±1`.
fn g_signed(p: &HyperbolicParams, w: C64, s: f64) -> Result<MeroValue> {
    let g = g_mero(p, w)?;
    if s < 0.0 && g.kind.order() % 2 == 1 {
        return Ok(MeroValue { leading: g.leading.map(|l| -l), ..g });
    }
    Ok(g)
}

fn c_signed(p: &HyperbolicParams, b: C64, z: C64, s: f64) -> Result<MeroValue> {
    let ia = I * p.a;
    Ok(g_signed(p, z + ia - I * b, s)? / g_signed(p, z + ia, s)?)
}

/// `c(b;z) = G(z + ia - ib)/G(z + ia)`.
pub fn c_fn(p: &HyperbolicParams, b: C64, z: C64) -> Result<MeroValue> {
    c_signed(p, b, z, 1.0)
}

/// `c(b;z)` as a plain number (no singularity tracking).
pub fn c_value(p: &HyperbolicParams, b: C64, z: C64) -> C64 {
    let ia = I * p.a;
    g_fast(p, z + ia - I * b) / g_fast(p, z + ia)
}

/// `ln G(w)` minus the leading term of the side `s` (`+1` for `Re → +∞`).
fn g_corr_side(p: &HyperbolicParams, w: C64, s: f64) -> C64 {
    let here = if w.re >= 0.0 { 1.0 } else { -1.0 };
    if here == s {
        g_corr(p, w)
    } else {
        let lead_s = -I * s * (chi(p) + p.alpha * w * w / 4.0);
        g_corr(p, w) + g_lead(p, w) - lead_s
    }
}

/// Splits `ln c(b;z) = lead + corr` with `lead = ±(ln φ(b) - αbz/2)` by the
/// sign of `Re z`; `corr` is exponentially small as `|Re z| → ∞` and is
/// computed without cancellation.
pub fn c_split(p: &HyperbolicParams, b: C64, z: C64) -> (C64, C64) {
    let s = if z.re >= 0.0 { 1.0 } else { -1.0 };
    let ia = I * p.a;
    let lead = (I * p.alpha * b * (b - 2.0 * p.a) / 4.0 - p.alpha * b * z / 2.0) * s;
    let corr = g_corr_side(p, z + ia - I * b, s) - g_corr_side(p, z + ia, s);
    (lead, corr)
}

/// `C_N(b;x) = ∏_{j<k} c(b; x_j - x_k)` for `N = 2, 3`.
pub fn c_n(p: &HyperbolicParams, b: C64, x: &[C64]) -> Result<MeroValue> {
    if x.len() != 2 && x.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: x.len() });
    }
    let mut acc = MeroValue::finite(c(1.0));
    for j in 0..x.len() {
        for k in j + 1..x.len() {
            acc = acc * c_fn(p, b, x[j] - x[k])?;
        }
    }
    Ok(acc)
}

/// Plain-number `C_N`.
pub fn c_n_value(p: &HyperbolicParams, b: C64, x: &[C64]) -> C64 {
    let mut acc = c(1.0);
    for j in 0..x.len() {
        for k in j + 1..x.len() {
            acc *= c_value(p, b, x[j] - x[k]);
        }
    }
    acc
}

/// The scattering function `u(b;z) = -c(b;z)/c(b;-z)`.
pub fn u_fn(p: &HyperbolicParams, b: C64, z: C64) -> Result<MeroValue> {
    let mut acc = MeroValue::finite(c(-1.0));
    for d in [1.0, -1.0] {
        acc = acc * g_mero(p, z + I * (p.a - b) * d)? / g_mero(p, z + I * p.a * d)?;
    }
    Ok(acc)
}

/// Plain-number `u`, finite at `z = 0` where it equals 1.
pub fn u_value(p: &HyperbolicParams, b: C64, z: C64) -> C64 {
    if z.norm() < 1e-10 * p.a_s {
        return u_fn(p, b, z).ok().and_then(|v| v.to_complex()).unwrap_or(c(1.0));
    }
    -c_value(p, b, z) / c_value(p, b, -z)
}

/// `u(b;z) φ(b)^{∓2} + 1` with the sign of `Re z`; exponentially small and
/// accurate to full relative precision.
pub fn u_defect(p: &HyperbolicParams, b: C64, z: C64) -> C64 {
    let (_, cp) = c_split(p, b, z);
    let (_, cm) = c_split(p, b, -z);
    -expm1(cp - cm)
}

pub(crate) fn expm1(z: C64) -> C64 {
    if z.norm() < 0.5 {
        let e = C64::new(libm::expm1(z.re), 0.0);
        // exp(x+iy) - 1 = (e^x - 1) cos y - 2 sin²(y/2) + i e^x sin y
        let (s, co) = (libm::sin(z.im), libm::cos(z.im));
        let sh = libm::sin(z.im / 2.0);
        C64::new(e.re * co - 2.0 * sh * sh, (e.re + 1.0) * s)
    } else {
        z.exp() - 1.0
    }
}

/// `W_2(b;z) = 1/(C_2(b;z) C_2(b;-z))`.
pub fn weight_w2(p: &HyperbolicParams, b: C64, z: &[C64]) -> Result<MeroValue> {
    need(z, 2)?;
    let d = z[0] - z[1];
    Ok((c_signed(p, b, d, 1.0)? * c_signed(p, b, -d, -1.0)?).recip())
}

/// Plain-number `W_2` as a function of `s = z1 - z2`.
pub fn w2_value(p: &HyperbolicParams, b: C64, s: C64) -> C64 {
    let v = c_value(p, b, s) * c_value(p, b, -s);
    if v.is_finite() {
        v.inv()
    } else {
        c(0.0)
    }
}

fn g_ratio(p: &HyperbolicParams, w: C64, b: C64) -> Result<MeroValue> {
    Ok(g_mero(p, w - I * b / 2.0)? / g_mero(p, w + I * b / 2.0)?)
}

/// `∏_j ∏_k G(x_j - z_k - ib/2)/G(x_j - z_k + ib/2)`.
fn s_product(p: &HyperbolicParams, b: C64, x: &[C64], z: &[C64]) -> Result<MeroValue> {
    let mut acc = MeroValue::finite(c(1.0));
    for xj in x {
        for zk in z {
            acc = acc * g_ratio(p, xj - zk, b)?;
        }
    }
    Ok(acc)
}

/// The kernel functions. For `F2` the second argument is the spectral
/// variable `y`.
pub fn kernel(kind: KernelKind, p: &HyperbolicParams, b: C64, x: &[C64], z: &[C64]) -> Result<MeroValue> {
    match kind {
        KernelKind::S2sharp => {
            need(x, 2)?;
            need(z, 1)?;
            s_product(p, b, x, z)
        }
        KernelKind::S2 => {
            need(x, 2)?;
            need(z, 2)?;
            s_product(p, b, x, z)
        }
        KernelKind::S3sharp => {
            need(x, 3)?;
            need(z, 2)?;
            s_product(p, b, x, z)
        }
        KernelKind::K2sharp => Ok(kernel(KernelKind::S2sharp, p, b, x, z)? / c_n(p, b, x)?),
        KernelKind::K3sharp => {
            let s = kernel(KernelKind::S3sharp, p, b, x, z)?;
            let neg = [-z[0], -z[1]];
            Ok(s / (c_n(p, b, x)? * c_n(p, b, &neg)?))
        }
        KernelKind::F2 => {
            need(x, 2)?;
            need(z, 2)?;
            let j = crate::eigen::j2_value(p, b, x, z)?;
            Ok(MeroValue::finite(f2_from_j2(p, b, x, z, j)))
        }
    }
}

/// `F_2` given the value of `J_2(b;x,y)`; square roots of the weights are
/// taken on the positive branch.
pub fn f2_from_j2(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64], j2: C64) -> C64 {
    let wx = w2_value(p, b, x[0] - x[1]);
    let wy = w2_value(p, 2.0 * p.a - b, y[0] - y[1]);
    let pre = g_fast(p, I * (b - p.a)) / p.sqrt_prod();
    pre * j2 * root(wx) * root(wy)
}

fn root(w: C64) -> C64 {
    if w.im.abs() <= 1e-12 * w.norm() && w.re >= 0.0 {
        c(libm::sqrt(w.re))
    } else {
        w.sqrt()
    }
}

/// `ρ_2 = exp(-α(a - b/2)(y1 - y2))`, `ρ_3 = exp(-α(a - b/2)(y1 + y2 - 2y3))`.
fn rho(p: &HyperbolicParams, b: C64, sep: C64) -> C64 {
    (-(p.a - b / 2.0) * sep * p.alpha).exp()
}

/// The multipliers `M_2, M_3` and their exponential companions.
pub fn multiplier(kind: MultiplierKind, p: &HyperbolicParams, b: C64, y: &[C64]) -> Result<C64> {
    let bd = 2.0 * p.a - b;
    match kind {
        MultiplierKind::Rho2 => {
            need(y, 2)?;
            Ok(rho(p, b, y[0] - y[1]))
        }
        MultiplierKind::Rho3 => {
            need(y, 3)?;
            Ok(rho(p, b, y[0] + y[1] - 2.0 * y[2]))
        }
        MultiplierKind::M2 => {
            need(y, 2)?;
            let s = y[0] - y[1];
            if s.re > 0.0 {
                Ok((-c_split(p, bd, s).1).exp())
            } else {
                Ok(phase_phi(p, b) * rho(p, b, s) / c_value(p, bd, s))
            }
        }
        MultiplierKind::M3 => {
            need(y, 3)?;
            let (s1, s2) = (y[0] - y[2], y[1] - y[2]);
            if s1.re > 0.0 && s2.re > 0.0 {
                Ok((-c_split(p, bd, s1).1 - c_split(p, bd, s2).1).exp())
            } else {
                let ph = phase_phi(p, b);
                Ok(ph * ph * rho(p, b, s1 + s2) / (c_value(p, bd, s1) * c_value(p, bd, s2)))
            }
        }
    }
}

/// `M_2(b;y) - 1` for `y1 > y2`, without cancellation.
pub fn m2_minus_one(p: &HyperbolicParams, b: C64, y: &[C64]) -> C64 {
    expm1(-c_split(p, 2.0 * p.a - b, y[0] - y[1]).1)
}

/// `M_3(b;y) - 1` for `y1, y2 > y3`, without cancellation.
pub fn m3_minus_one(p: &HyperbolicParams, b: C64, y: &[C64]) -> C64 {
    let bd = 2.0 * p.a - b;
    expm1(-c_split(p, bd, y[0] - y[2]).1 - c_split(p, bd, y[1] - y[2]).1)
}

/// `μ(b;p) = a+ a- G(ia - ib)² ∏_j ∏_δ G(δ p_j - ia + ib/2)`.
pub fn mu_eigenvalue(p: &HyperbolicParams, b: C64, q: &[C64]) -> Result<C64> {
    need(q, 2)?;
    let g0 = g_fast(p, I * (p.a - b));
    let mut acc = g0 * g0 * (p.a_plus * p.a_minus);
    for qj in q {
        for d in [1.0, -1.0] {
            acc *= g_fast(p, *qj * d - I * p.a + I * b / 2.0);
        }
    }
    Ok(acc)
}

/// `s_l(w)` tagged with its simple zeros at `w = i k a_l`.
fn sl_mero(p: &HyperbolicParams, w: C64) -> MeroValue {
    let k = libm::round(w.im / p.a_l);
    let dist = (w - I * (k * p.a_l)).norm();
    if dist < crate::hypgamma::SNAP * p.a_s {
        let sign = if (k as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return MeroValue::zero(1, dist, Some(c(sign * PI / p.a_l)));
    }
    MeroValue::finite_near(crate::elementary::s_l(p, w), dist)
}

/// `1/Γ(s)` tagged with its zeros at non-positive integers.
fn recip_gamma_mero(s: C64) -> MeroValue {
    let n = libm::round(s.re);
    let dist = (s - n).norm();
    if n <= 0.0 && dist < 1e-12 {
        // 1/Γ(-k + ε) ≈ (-1)^k k! ε
        let k = -n;
        let sign = if (k as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return MeroValue::zero(1, dist, Some(c(sign * libm::tgamma(k + 1.0))));
    }
    MeroValue::finite(recip_gamma(s))
}

/// One Γ-form factor in the variable `t = x_m - x_1`, without the `1/s_l`.
fn cal_factor(p: &HyperbolicParams, b: C64, t: C64) -> MeroValue {
    let ph = (I * (2.0 * t - I * p.a_s) * p.k_l()).exp();
    let g1 = recip_gamma_mero(I * (t - I * b) / p.a_l);
    let g2 = recip_gamma_mero(I * (t + I * b - 2.0 * I * p.a) / p.a_l);
    // d/dt of the Γ arguments is i/a_l
    let scale = |m: MeroValue| match m.kind {
        MeroKind::Zero(_) => MeroValue { leading: m.leading.map(|l| l * I / p.a_l), ..m },
        _ => m,
    };
    scale(g1) * scale(g2) * ph
}

/// Coefficients of the difference equations in `x`.
pub fn coeff_v(kind: CoeffKind, p: &HyperbolicParams, b: C64, x: &[C64]) -> Result<MeroValue> {
    match kind {
        CoeffKind::V2 => {
            need(x, 2)?;
            let t = x[1] - x[0];
            Ok(sl_mero(p, t - I * b) / sl_mero(p, t))
        }
        CoeffKind::V3 => {
            need(x, 3)?;
            let mut acc = MeroValue::finite(c(1.0));
            for m in 1..3 {
                let t = x[m] - x[0];
                acc = acc * sl_mero(p, t - I * b) / sl_mero(p, t);
            }
            Ok(acc)
        }
        CoeffKind::CalV2 => {
            need(x, 2)?;
            let t = x[1] - x[0];
            Ok(cal_factor(p, b, t) / sl_mero(p, t) * (-I * PI))
        }
        CoeffKind::CalV2Hat => {
            need(x, 2)?;
            Ok(cal_factor(p, b, x[1] - x[0]) * (-I * PI))
        }
        CoeffKind::CalV3 => {
            need(x, 3)?;
            let mut acc = MeroValue::finite(c(-PI * PI));
            for m in 1..3 {
                let t = x[m] - x[0];
                acc = acc * cal_factor(p, b, t) / sl_mero(p, t);
            }
            Ok(acc)
        }
    }
}

/// Both sides of the identity turning the E-function dressing of the
/// 2-particle difference equation into Γ-form:
/// `∏_δ E(δt + ib - ia)/E(δt + ib - ia + δ i a_s)` and
/// `iπ exp(i(-2t - i a_s)K_l)/s_l(t + ib) · [Γ(i(-t - ib)/a_l) Γ(i(-t + ib - 2ia)/a_l)]^{-1}`.
pub fn e_dressing_ratio(p: &HyperbolicParams, b: C64, t: C64) -> Result<(C64, C64)> {
    let base = I * (b - p.a);
    let mut lhs = c(1.0);
    for d in [1.0, -1.0] {
        let num = crate::hypgamma::e_entire(p, t * d + base)?.value;
        let den = crate::hypgamma::e_entire(p, t * d + base + I * p.a_s * d)?.value;
        lhs *= num / den;
    }
    let ph = (I * (-2.0 * t - I * p.a_s) * p.k_l()).exp();
    let rhs = I * PI * ph / crate::elementary::s_l(p, t + I * b)
        * recip_gamma(I * (-t - I * b) / p.a_l)
        * recip_gamma(I * (-t + I * b - 2.0 * I * p.a) / p.a_l);
    Ok((lhs, rhs))
}

/// Kinds of a product of MeroValues (for diagnostics).
pub fn net_kind(vals: &[MeroValue]) -> MeroKind {
    MeroKind::from_net_order(vals.iter().map(|v| v.kind.net_order()).sum())
}

/// `x(ν)`: `x` with component `ν` removed.
pub fn drop_one(x: &[C64], nu: usize) -> Vec<C64> {
    x.iter().enumerate().filter(|(j, _)| *j != nu).map(|(_, v)| *v).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(a: f64, b: f64) -> HyperbolicParams {
        HyperbolicParams::new(a, b).unwrap()
    }

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn c_matches_oracle() {
        let p = pp(1.0, 1.0);
        let v = c_fn(&p, c(0.7), c(0.3)).unwrap().value;
        let want = C64::new(0.054877759600839236734, -0.65809691386155702578);
        assert!(close(v, want, 1e-12), "{v}");
    }

    #[test]
    fn recip_c_vanishes_at_origin() {
        let p = pp(1.0, 0.8);
        let v = c_fn(&p, c(0.6), c(0.0)).unwrap();
        assert!(v.is_pole());
        assert_eq!(v.recip().to_complex(), Some(c(0.0)));
        let w = c_n(&p, c(0.6), &[c(0.3), c(0.3)]).unwrap();
        assert_eq!(w.recip().to_complex(), Some(c(0.0)));
    }

    #[test]
    fn u_at_origin_is_one() {
        for (a, bb) in [(1.0, 1.0), (1.0, 0.8), (2.0, 0.5)] {
            let p = pp(a, bb);
            let u = u_fn(&p, c(0.7 * p.a), c(0.0)).unwrap();
            assert!(u.is_finite());
            assert!(close(u.value, c(1.0), 1e-9), "{:?}", u);
        }
    }

    #[test]
    fn u_unitary_and_reflection() {
        let p = pp(1.0, 0.8);
        let b = c(0.55);
        for z in [0.3, -1.2, 2.5] {
            let u = u_value(&p, b, c(z));
            assert!((u.norm() - 1.0).abs() < 1e-12);
            let um = u_value(&p, b, c(-z));
            assert!(close(u * um, c(1.0), 1e-12));
        }
        let bz = C64::new(0.4, 0.1);
        let z = C64::new(0.7, 0.2);
        assert!(close(u_value(&p, bz, z) * u_value(&p, bz, -z), c(1.0), 1e-12));
    }

    #[test]
    fn c_split_reassembles() {
        let p = pp(1.0, core::f64::consts::SQRT_2);
        let b = C64::new(0.9, 0.05);
        for z in [C64::new(1.5, 0.2), C64::new(-2.0, 0.1), C64::new(4.0, -0.3)] {
            let (l, r) = c_split(&p, b, z);
            assert!(close((l + r).exp(), c_value(&p, b, z), 1e-12));
        }
    }

    #[test]
    fn u_defect_matches_direct() {
        let p = pp(1.0, 0.8);
        let b = c(0.9);
        let z = c(1.3);
        let ph = phase_phi(&p, b);
        let direct = u_value(&p, b, z) / (ph * ph) + 1.0;
        assert!((u_defect(&p, b, z) - direct).norm() < 1e-13);
    }

    #[test]
    fn phi_at_half_period() {
        let p = pp(1.0, 1.0);
        assert!(close(phase_phi(&p, c(1.0)), -I, 1e-15));
        let b = c(0.37);
        assert!(close(phase_phi(&p, b), phase_phi(&p, 2.0 * p.a - b), 1e-14));
    }

    #[test]
    fn w2_symmetric_and_vanishing() {
        let p = pp(1.0, 0.8);
        let b = c(0.6);
        let z = [C64::new(0.4, 0.1), c(-0.3)];
        let w = weight_w2(&p, b, &z).unwrap().value;
        let ws = weight_w2(&p, b, &[z[1], z[0]]).unwrap().value;
        let wn = weight_w2(&p, b, &[-z[0], -z[1]]).unwrap().value;
        assert!(close(w, ws, 1e-13) && close(w, wn, 1e-13));
        assert!(close(w, w2_value(&p, b, z[0] - z[1]), 1e-13));
        let w0 = weight_w2(&p, b, &[c(0.2), c(0.2)]).unwrap();
        assert_eq!(w0.kind, MeroKind::Zero(2));
    }

    #[test]
    fn m2_tends_to_one() {
        let p = pp(1.0, 0.8);
        let b = c(0.9);
        let m = multiplier(MultiplierKind::M2, &p, b, &[c(5.0), c(0.0)]).unwrap();
        assert!((m - 1.0).norm() < 1e-12);
        let y = [c(1.0), c(0.2)];
        let direct = phase_phi(&p, b) * multiplier(MultiplierKind::Rho2, &p, b, &y).unwrap()
            / c_value(&p, 2.0 * p.a - b, y[0] - y[1]);
        assert!((m2_minus_one(&p, b, &y) - (direct - 1.0)).norm() < 1e-13);
        assert_eq!(multiplier(MultiplierKind::Rho2, &p, b, &[c(0.4), c(0.4)]).unwrap(), c(1.0));
    }

    #[test]
    fn m3_matches_formula() {
        let p = pp(1.0, 0.8);
        let b = c(0.9);
        let y = [c(1.4), c(0.6), c(-0.2)];
        let m = multiplier(MultiplierKind::M3, &p, b, &y).unwrap();
        let ph = phase_phi(&p, b);
        let bd = 2.0 * p.a - b;
        let direct = ph * ph * multiplier(MultiplierKind::Rho3, &p, b, &y).unwrap()
            / (c_value(&p, bd, y[0] - y[2]) * c_value(&p, bd, y[1] - y[2]));
        assert!(close(m, direct, 1e-12));
        assert!(close(m3_minus_one(&p, b, &y) + 1.0, m, 1e-13));
    }

    #[test]
    fn mu_symmetries() {
        let p = pp(1.0, 0.8);
        let b = c(0.7);
        let q = [c(0.8), c(-0.3)];
        let m = mu_eigenvalue(&p, b, &q).unwrap();
        assert!(close(m, mu_eigenvalue(&p, b, &[q[1], q[0]]).unwrap(), 1e-13));
        assert!(close(m, mu_eigenvalue(&p, b, &[-q[0], q[1]]).unwrap(), 1e-13));
    }

    #[test]
    fn kernel_relations() {
        let p = pp(1.0, 0.8);
        let b = c(0.7);
        let x = [c(0.5), c(-0.2)];
        let z = [C64::new(0.1, 0.05)];
        let s = kernel(KernelKind::S2sharp, &p, b, &x, &z).unwrap().value;
        let k = kernel(KernelKind::K2sharp, &p, b, &x, &z).unwrap().value;
        assert!(close(k, s / c_value(&p, b, x[0] - x[1]), 1e-13));
        let x3 = [c(0.5), c(-0.2), c(0.9)];
        let z2 = [c(0.3), c(-0.6)];
        let a = kernel(KernelKind::S3sharp, &p, b, &x3, &z2).unwrap().value;
        let bsw = kernel(KernelKind::S3sharp, &p, b, &x3, &[z2[1], z2[0]]).unwrap().value;
        assert!(close(a, bsw, 1e-13));
        let s2 = kernel(KernelKind::S2, &p, b, &x, &z2).unwrap().value;
        let s2x = kernel(KernelKind::S2, &p, b, &[x[1], x[0]], &z2).unwrap().value;
        assert!(close(s2, s2x, 1e-13));
    }

    #[test]
    fn v2_numerator_zero_and_hat_zero() {
        let p = pp(1.0, 0.8);
        let b = C64::new(0.3, 0.0);
        let x = [c(0.0), I * b];
        assert_eq!(coeff_v(CoeffKind::V2, &p, b, &x).unwrap().kind, MeroKind::Zero(1));
        let h = coeff_v(CoeffKind::CalV2Hat, &p, b, &[-I * b, c(0.0)]).unwrap();
        assert_eq!(h.to_complex(), Some(c(0.0)));
    }

    #[test]
    fn dressing_ratio_identity() {
        for (a, bb) in [(1.0, 1.0), (1.0, 0.8), (1.0, core::f64::consts::SQRT_2)] {
            let p = pp(a, bb);
            let b = c(0.3 * p.a_l);
            for t in [C64::new(0.4, 0.1), C64::new(-1.1, -0.05), c(2.0)] {
                let (l, r) = e_dressing_ratio(&p, b, t).unwrap();
                assert!(close(l, r, 1e-9), "{a} {bb} {t}: {l} vs {r}");
            }
        }
    }

    #[test]
    fn cal_v2_is_v2_times_dressing_ratio() {
        for (a, bb) in [(1.0, 1.0), (1.0, 2.0), (1.0, core::f64::consts::SQRT_2)] {
            let p = pp(a, bb);
            let b = c(0.2 * p.a_l);
            let x = [C64::new(0.3, 0.05), c(-0.2)];
            let (_, r) = e_dressing_ratio(&p, b, x[0] - x[1]).unwrap();
            let v2 = coeff_v(CoeffKind::V2, &p, b, &x).unwrap().value;
            let cv = coeff_v(CoeffKind::CalV2, &p, b, &x).unwrap().value;
            assert!(close(cv, v2 * r, 1e-12), "{a} {bb}: {cv} vs {}", v2 * r);
        }
    }
}
