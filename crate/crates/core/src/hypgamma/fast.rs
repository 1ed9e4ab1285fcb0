//! Direct evaluation of G from its even integral representation
//!
//! ln G(z) = i ∫_0^∞ dy/y [sin(2yz) / (2 sinh(a+ y) sinh(a- y)) - z / (a+ a- y)]
//!
//! by the trapezoidal rule, after moving `Im z` into `[-a_s/2, a_s/2]` with
//! the difference equation in the `a_s` direction. The integrand is analytic
//! in `|Im y| < π/a_l`, so the rule converges geometrically.

use core::f64::consts::PI;

use libm::{ceil, log};

use crate::params::HyperbolicParams;
use crate::{c, C64, I};

/// Beyond `|Re z| = ASYMPTOTIC * a_l` the asymptotic form is exact to
/// double precision.
pub const ASYMPTOTIC: f64 = 7.0;

const DIGITS_LN: f64 = 40.0;

/// `χ = (π/24)(a+/a- + a-/a+)`.
pub fn chi(p: &HyperbolicParams) -> f64 {
    PI / 24.0 * (p.a_plus / p.a_minus + p.a_minus / p.a_plus)
}

/// Leading term of ln G as `Re z → ±∞`: `∓i(χ + αz²/4)`, sign by `Re z`.
pub fn g_lead(p: &HyperbolicParams, z: C64) -> C64 {
    let s = if z.re >= 0.0 { -1.0 } else { 1.0 };
    I * s * (chi(p) + p.alpha * z * z / 4.0)
}

// Trigamma at integer n >= 40 via its asymptotic series.
fn trigamma_large(n: f64) -> f64 {
    let x = 1.0 / n;
    let x2 = x * x;
    x + x2 / 2.0 + x2 * x / 6.0 - x2 * x2 * x / 30.0 + x2 * x2 * x2 * x / 42.0
}

/// ln G for `|Im z| < a`; intended for `|Im z| <= a_s/2`.
pub(crate) fn log_g_integral(p: &HyperbolicParams, z: C64) -> C64 {
    let (ap, am) = (p.a_plus, p.a_minus);
    let ab = ap * am;
    let h = 2.0 * PI * PI / (DIGITS_LN * p.a_l + 2.0 * PI * z.re.abs());
    let decay = 2.0 * (p.a - z.im.abs());
    let ymax = (DIGITS_LN + log(1.0 / h).max(0.0)) / decay;
    let m = ceil(ymax / h).max(40.0);
    let s0 = (ap * ap + am * am) / 6.0;
    let f0 = -z / ab * (2.0 * z * z / 3.0 + s0);
    let mut sum = f0 * 0.5;
    let n = m as usize;
    for k in 1..=n {
        let y = k as f64 * h;
        let sh = libm::sinh(ap * y) * libm::sinh(am * y);
        sum += (2.0 * y * z).sin() / (2.0 * y * sh) - z / (ab * y * y);
    }
    let tail = -z / (ab * h) * trigamma_large(m + 1.0);
    I * (sum * h + tail)
}

/// `2 cosh(π w / a_l)`.
fn two_cosh(p: &HyperbolicParams, w: C64) -> C64 {
    (w * (PI / p.a_l)).cosh() * 2.0
}

/// G(z) by the reduced trapezoidal rule, or the asymptotic form far out.
pub fn g_fast(p: &HyperbolicParams, z: C64) -> C64 {
    if z.re.abs() >= ASYMPTOTIC * p.a_l {
        return g_lead(p, z).exp();
    }
    let step = C64::new(0.0, p.a_s);
    let half = step * 0.5;
    let mut w = z;
    let mut factor = c(1.0);
    while w.im > 0.5 * p.a_s {
        // G(w) = 2cosh(π(w - i a_s/2)/a_l) G(w - i a_s)
        factor *= two_cosh(p, w - half);
        w -= step;
    }
    while w.im < -0.5 * p.a_s {
        // G(w) = G(w + i a_s) / 2cosh(π(w + i a_s/2)/a_l)
        factor /= two_cosh(p, w + half);
        w += step;
    }
    factor * log_g_integral(p, w).exp()
}

/// `ln G(z) - g_lead(z)`, computed without forming either term.
///
/// For `Re z > 0` this is
/// `(1/4) ∫_{R+iε} exp(2iyz) / (y sinh(a+ y) sinh(a- y)) dy`, `0 < ε < π/a_l`,
/// which is of size `exp(-2π Re z / a_l)` and is returned to full relative
/// precision. For `Re z < 0`, `G(z) = 1/G(-z)` gives `-g_corr(-z)`.
pub fn g_corr(p: &HyperbolicParams, z: C64) -> C64 {
    if z.re < 0.0 {
        return -g_corr(p, -z);
    }
    let step = C64::new(0.0, p.a_s);
    let half = step * 0.5;
    let mut w = z;
    let mut acc = c(0.0);
    // ln 2cosh(ζ) = ζ + ln(1 + exp(-2ζ)), and ζ is exactly the change of g_lead.
    let l1p = |zeta: C64| ((zeta * (-2.0 * PI / p.a_l)).exp() + 1.0).ln();
    while w.im > 0.5 * p.a_s {
        acc += l1p(w - half);
        w -= step;
    }
    while w.im < -0.5 * p.a_s {
        acc -= l1p(w + half);
        w += step;
    }
    acc + corr_integral(p, w)
}

fn corr_integral(p: &HyperbolicParams, z: C64) -> C64 {
    let (ap, am) = (p.a_plus, p.a_minus);
    let eps = 0.9 * PI / p.a_l;
    let above = PI / p.a_l - eps;
    let h1 = 2.0 * PI * above / (DIGITS_LN - 4.0);
    let h2 = 2.0 * PI * eps / (DIGITS_LN - 4.0 + 2.0 * PI * z.re / p.a_l + 2.0 * log(1.0 + z.norm()));
    let h = h1.min(h2);
    let decay = 2.0 * (p.a - z.im.abs());
    let tmax = (DIGITS_LN + 2.0 * above * z.re) / decay;
    let n = ceil(tmax / h) as i64;
    let f = |t: f64| {
        let y = C64::new(t, eps);
        (2.0 * I * y * z).exp() / (y * (y * ap).sinh() * (y * am).sinh())
    };
    let mut sum = c(0.0);
    for k in -n..=n {
        sum += f(k as f64 * h);
    }
    sum * h * 0.25
}
