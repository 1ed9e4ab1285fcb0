//! `e(z) = ln E(z)` on the half plane `Im z < a`.

use core::f64::consts::PI;

use libm::{exp, expm1, sqrt};

use crate::error::{Error, Result};
use crate::params::{CheckTolerance, HyperbolicParams};
use crate::quad::integrate_semiline;
use crate::{c, C64, I};

/// Crossover to the Taylor polynomial, in units of `a_s`.
pub const CROSSOVER: f64 = 1e-3;

// sinh(x)/x - 1
fn sinhc_m1(x: f64) -> f64 {
    if x.abs() < 0.5 {
        let x2 = x * x;
        x2 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0 * (1.0 + x2 / 72.0 * (1.0 + x2 / 110.0))))
    } else {
        libm::sinh(x) / x - 1.0
    }
}

// exp(w) - 1 - w
fn exp_m1_m(w: C64) -> C64 {
    if w.norm() < 0.5 {
        let mut term = w * w * 0.5;
        let mut sum = term;
        for k in 3..20 {
            term = term * w / k as f64;
            sum += term;
        }
        sum
    } else {
        w.exp() - 1.0 - w
    }
}

// The integrand is regularised at infinity by adding
// (iz / 2a+a-) (1 - exp(-y^2)) / y^2, whose integral is (iz / 2a+a-) sqrt(pi).
// With w = -2iyz and 1/(sinh sinh) = (1 - Q/(1+Q)) / (a+a- y^2) the bracket is
// -(e^w - 1 - w)/(a+a- y^2) + (1 - e^w) R - tail, free of 1/y cancellations.
pub(super) fn integrand(ap: f64, am: f64, z: C64, y: f64) -> C64 {
    let ab = ap * am;
    let y2 = y * y;
    let reg = -expm1(-y2) / y2;
    let tail = z * z / ab * (exp(-2.0 * ap * y) + exp(-2.0 * am * y));
    if ap.min(am) * y >= 1.0 {
        let den = -expm1(-2.0 * ap * y) * -expm1(-2.0 * am * y);
        let inv_sh = 4.0 * exp(-(ap + am) * y) / den;
        let ew_sh = (C64::new(0.0, -2.0 * y) * z - (ap + am) * y).exp() * (4.0 / den);
        let bracket = inv_sh - ew_sh - 2.0 * I * z / (ab * y) - tail;
        return bracket / (4.0 * y) + I * z / (2.0 * ab) * reg;
    }
    let (qa, qb) = (sinhc_m1(ap * y), sinhc_m1(am * y));
    let q = qa + qb + qa * qb;
    let r = -q / (1.0 + q) / (ab * y2);
    let w = C64::new(0.0, -2.0 * y) * z;
    let em = exp_m1_m(w);
    let one_minus = -(em + w);
    let bracket = -em / (ab * y2) + one_minus * r - tail;
    bracket / (4.0 * y) + I * z / (2.0 * ab) * reg
}

pub(super) fn taylor(ap: f64, am: f64, z: C64, y: f64) -> C64 {
    let (a, b) = (ap, am);
    let ab = a * b;
    let z2 = z * z;
    let z3 = z2 * z;
    let z4 = z2 * z2;
    let c0 = -I * z * (a / b + b / a) / 12.0 + z2 * (1.0 / a + 1.0 / b) / 2.0 - I * z3 / (3.0 * ab);
    let c1 = -z2 * 7.0 * (a / b + b / a) / 12.0 - z4 / (6.0 * ab);
    let c2 = I * z * (7.0 * (a * a * a / b + b * b * b / a) / 720.0 + ab / 72.0)
        + z2 * (a * a / b + b * b / a) / 3.0
        + I * z3 * (a / b + b / a) / 18.0
        + I * z4 * z / (15.0 * ab);
    let c3 = z2 * (-113.0 * (a * a * a / b + b * b * b / a) / 720.0 + ab / 72.0)
        + z4 * (a / b + b / a) / 36.0
        + z4 * z2 / (45.0 * ab);
    // regulariser: (iz / 2ab)(1 - y^2/2 + ...)
    let r = I * z / (2.0 * ab);
    c0 + r + y * (c1 + y * (c2 - r * 0.5 + y * c3))
}

/// `e(z)` for `Im z < a`, from its integral representation.
pub fn log_e_strip(p: &HyperbolicParams, z: C64) -> Result<C64> {
    if !(z.im < p.a) {
        return Err(Error::OutOfHalfPlane { im_z: z.im, a: p.a });
    }
    if z == c(0.0) {
        return Ok(c(0.0));
    }
    let (ap, am) = (p.a_plus, p.a_minus);
    let rho = (2.0 * (p.a - z.im.max(0.0))).min(2.0 * p.a_s);
    let width = (1.0 / (p.a + z.norm())).min(0.5 / rho);
    let tol = CheckTolerance { abs_tol: 3e-14 * z.norm().max(1.0), rel_tol: 3e-14 };
    let r = integrate_semiline(
        |y| integrand(ap, am, z, y),
        |y| taylor(ap, am, z, y),
        CROSSOVER * p.a_s,
        rho,
        width,
        tol,
    )?;
    Ok(r.value - I * z / (2.0 * ap * am) * sqrt(PI))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn taylor_matches_integrand_near_crossover() {
        let z = C64::new(0.7, -0.3);
        for &(ap, am) in &[(1.0, 1.0), (2.0, 0.5)] {
            let y = 0.01;
            let d = integrand(ap, am, z, y) - taylor(ap, am, z, y);
            assert!(d.norm() < 1e-7, "{d}");
        }
    }
}
