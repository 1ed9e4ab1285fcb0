//! The hyperbolic gamma function G, the entire function E with
//! `G(z) = E(z)/E(-z)`, and the zero lattice of E.
//!
//! Two evaluation routes exist for G. [`g_mero`] uses the direct even
//! integral (see [`fast`]) and the lattice for singularities; it is what the
//! kernels and eigenfunctions call. [`g_mero_via_e`] forms the literal ratio
//! `E(z)/E(-z)` and serves as an independent cross-check.

mod catalog;
pub mod fast;
mod strip;

use core::f64::consts::PI;

use libm::sqrt;

pub use catalog::{
    commensurate_ratio, lattice_order, nearest_e_zero, snapped_e_zero, zero_pole_catalog, LatticePoint,
    MAX_DENOMINATOR, SNAP,
};
pub use fast::{chi, g_corr, g_fast, g_lead};
pub use strip::{log_e_strip, CROSSOVER};

pub use crate::gamma::{log_gamma, recip_gamma};

use crate::error::Result;
use crate::mero::MeroValue;
use crate::params::HyperbolicParams;
use crate::{c, C64, I};

/// Order in which the two shift directions alternate when continuing E
/// upwards out of its half plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderRoute {
    PlusFirst,
    MinusFirst,
}

struct Ladder {
    /// Product of the finite factors; at a zero, of the leading coefficients.
    factor: C64,
    order: u32,
    end: C64,
}

fn climb(p: &HyperbolicParams, z: C64, route: LadderRoute, exact: bool) -> Ladder {
    let mut delta: i8 = match route {
        LadderRoute::PlusFirst => 1,
        LadderRoute::MinusFirst => -1,
    };
    let root_two_pi = sqrt(2.0 * PI);
    let mut w = z;
    let mut factor = c(1.0);
    let mut order = 0u32;
    while w.im > p.a - 0.5 * p.a_s {
        let ad = p.a_delta(delta);
        let amd = p.a_delta(-delta);
        // E(w) = E(w - i a_{-δ}) √(2π) exp(i v K_δ) / Γ(i v / a_δ + 1/2),  v = w - i a_{-δ}/2
        let v = w - I * (0.5 * amd);
        let s = I * v / ad + 0.5;
        let pre = (I * v * p.k_delta(delta)).exp() * root_two_pi;
        let n = libm::round(s.re);
        if exact && n <= 0.0 && (s - n).norm() < 1e-9 {
            // 1/Γ(-k + ε) = (-1)^k k! ε + O(ε²),  ε = i (w - w0)/a_δ
            let k = -n;
            let sign = if (k as i64) % 2 == 0 { 1.0 } else { -1.0 };
            factor *= pre * (sign * libm::tgamma(k + 1.0)) * (I / ad);
            order += 1;
        } else {
            factor *= pre * recip_gamma(s);
        }
        w -= I * amd;
        delta = -delta;
    }
    Ladder { factor, order, end: w }
}

/// E(z) along a chosen continuation route.
pub fn e_entire_route(p: &HyperbolicParams, z: C64, route: LadderRoute) -> Result<MeroValue> {
    if z.im < p.a - 0.5 * p.a_s {
        return Ok(MeroValue::finite_near(log_e_strip(p, z)?.exp(), nearest_e_zero(p, z).2));
    }
    if let Some((z0, m, d)) = snapped_e_zero(p, z) {
        let l = climb(p, z0, route, true);
        let lead = l.factor * log_e_strip(p, l.end)?.exp();
        let lead = if l.order == m { Some(lead) } else { None };
        return Ok(MeroValue::zero(m, d, lead));
    }
    let l = climb(p, z, route, false);
    let v = l.factor * log_e_strip(p, l.end)?.exp();
    Ok(MeroValue::finite_near(v, nearest_e_zero(p, z).2))
}

/// The entire function E.
pub fn e_entire(p: &HyperbolicParams, z: C64) -> Result<MeroValue> {
    e_entire_route(p, z, LadderRoute::PlusFirst)
}

/// G as a tagged value: zeros at `ia + ip_kl`, poles at `-ia - ip_kl`.
///
/// Leading coefficients at singular points come from the E ladder.
pub fn g_mero(p: &HyperbolicParams, z: C64) -> Result<MeroValue> {
    if let Some((_, m, d)) = snapped_e_zero(p, z) {
        let e = e_entire(p, z)?;
        let den = e_entire(p, -z)?.value;
        return Ok(MeroValue::zero(m, d, e.leading.map(|l| l / den)));
    }
    if let Some((_, m, d)) = snapped_e_zero(p, -z) {
        let num = e_entire(p, z)?.value;
        let e = e_entire(p, -z)?;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(MeroValue::pole(m, d, e.leading.map(|l| num / (l * sign))));
    }
    let d = nearest_e_zero(p, z).2.min(nearest_e_zero(p, -z).2);
    Ok(MeroValue::finite_near(g_fast(p, z), d))
}

/// G(z) as a plain number; `inf` at poles, `0` at zeros.
pub fn g(p: &HyperbolicParams, z: C64) -> C64 {
    g_fast(p, z)
}

/// `E(z)/E(-z)` with the MeroValue algebra.
pub fn g_mero_via_e(p: &HyperbolicParams, z: C64) -> Result<MeroValue> {
    let num = e_entire(p, z)?;
    let den = e_entire(p, -z)?;
    let den = MeroValue { leading: den.leading.map(|l| l * if den.kind.order() % 2 == 0 { 1.0 } else { -1.0 }), ..den };
    Ok(num / den)
}

/// `lim_{z → -ia} (-z - ia) G(z) = √(a+ a-) / (2πi)`.
pub fn g_residue_minus_ia(p: &HyperbolicParams) -> C64 {
    c(p.sqrt_prod()) / (2.0 * PI * I)
}

/// `(-z - ia) G(z) / g_residue_minus_ia - 1` at `z = -ia + t`.
pub fn residue_probe(p: &HyperbolicParams, t: f64) -> C64 {
    let z = C64::new(t, -p.a);
    -c(t) * g_fast(p, z) / g_residue_minus_ia(p) - 1.0
}

#[cfg(test)]
mod tests;
