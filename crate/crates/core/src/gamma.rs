//! Euler's Gamma function for complex arguments.

use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::C64;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2k} / (2k (2k-1)), k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

const STIRLING_MIN_RE: f64 = 15.0;

fn is_nonpositive_integer(z: C64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == libm::round(z.re)
}

fn stirling(z: C64) -> C64 {
    let zi = z.inv();
    let zi2 = zi * zi;
    let mut series = C64::new(0.0, 0.0);
    let mut pow = zi;
    for c in STIRLING {
        series += pow * c;
        pow *= zi2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + series
}

/// Principal branch of `ln Γ(z)`, analytic off the non-positive real axis.
pub fn log_gamma(z: C64) -> Result<C64> {
    if is_nonpositive_integer(z) {
        return Err(Error::PoleOfGamma { z: z.re });
    }
    if z.re >= STIRLING_MIN_RE {
        return Ok(stirling(z));
    }
    // ln Γ(z) = ln Γ(z+n) - Σ_{k<n} Log(z+k); each Log has its cut inside
    // (-∞, 0], so the sum is the principal branch.
    let n = libm::ceil(STIRLING_MIN_RE - z.re) as usize;
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..n {
        acc += (z + k as f64).ln();
    }
    Ok(stirling(z + n as f64) - acc)
}

/// `sin(pi z)` with the period reduced exactly before scaling.
pub fn sin_pi(z: C64) -> C64 {
    let k = libm::round(z.re);
    let w = C64::new(z.re - k, z.im) * PI;
    let s = w.sin();
    if (k as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// `1/Γ(z)`, entire; reflection is used left of `Re z = 1/2`.
pub fn recip_gamma(z: C64) -> C64 {
    if is_nonpositive_integer(z) {
        return C64::new(0.0, 0.0);
    }
    if z.re >= 0.5 {
        return (-log_gamma(z).unwrap()).exp();
    }
    let lg = log_gamma(C64::new(1.0, 0.0) - z).unwrap();
    sin_pi(z) * lg.exp() / PI
}

pub fn gamma(z: C64) -> Result<C64> {
    if is_nonpositive_integer(z) {
        return Err(Error::PoleOfGamma { z: z.re });
    }
    Ok(recip_gamma(z).inv())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn classical_values() {
        assert!(log_gamma(C64::new(1.0, 0.0)).unwrap().norm() < 1e-15);
        let half = log_gamma(C64::new(0.5, 0.0)).unwrap();
        assert!(close(half, C64::new(0.5 * libm::log(PI), 0.0), 1e-14));
        assert_eq!(log_gamma(C64::new(-2.0, 0.0)), Err(Error::PoleOfGamma { z: -2.0 }));
    }

    #[test]
    fn recurrence_and_reflection() {
        for &(re, im) in &[(0.3, 0.2), (-4.6, 1.3), (7.2, -3.1), (-0.4, -9.0)] {
            let z = C64::new(re, im);
            let g = gamma(z).unwrap();
            let g1 = gamma(z + 1.0).unwrap();
            assert!(close(g1, z * g, 1e-13), "{z}");
            let refl = g * gamma(C64::new(1.0, 0.0) - z).unwrap() * sin_pi(z);
            assert!(close(refl, C64::new(PI, 0.0), 1e-12), "{z}");
        }
    }

    #[test]
    fn recip_gamma_vanishes_at_poles() {
        assert_eq!(recip_gamma(C64::new(-3.0, 0.0)), C64::new(0.0, 0.0));
        let near = recip_gamma(C64::new(-3.0 + 1e-9, 0.0));
        // 1/Γ(-3+ε) ≈ (-1)^3 3! ε
        assert!((near.re + 6e-9).abs() < 1e-15);
    }
}
