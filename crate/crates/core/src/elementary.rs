//! Small closed-form helpers.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::HyperbolicParams;
use crate::C64;

/// `e_l(z) = exp(pi z / a_l)`.
pub fn e_l(p: &HyperbolicParams, z: C64) -> C64 {
    (z * (PI / p.a_l)).exp()
}

/// `s_l(z) = sinh(pi z / a_l)`.
pub fn s_l(p: &HyperbolicParams, z: C64) -> C64 {
    (z * (PI / p.a_l)).sinh()
}

/// Smallest gap `y_j - y_k` over `j < k`.
pub fn d3(y: &[f64]) -> Result<f64> {
    if y.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: y.len() });
    }
    Ok((y[0] - y[1]).min(y[0] - y[2]).min(y[1] - y[2]))
}

pub fn m_of_d(p: &HyperbolicParams, d: f64) -> f64 {
    (2.0 * p.a - d).min(d)
}

pub fn p_kl(p: &HyperbolicParams, k: u32, l: u32) -> f64 {
    k as f64 * p.a_plus + l as f64 * p.a_minus
}

pub fn k_delta(p: &HyperbolicParams, delta: i8) -> f64 {
    p.k_delta(delta)
}

pub fn k_l(p: &HyperbolicParams) -> f64 {
    p.k_l()
}

/// Splits `x` into its mean and the centred coordinates.
pub fn com_split(x: &[C64]) -> (C64, Vec<C64>) {
    let n = x.len().max(1) as f64;
    let mean = x.iter().fold(C64::new(0.0, 0.0), |s, v| s + v) / n;
    let mut xt: Vec<C64> = x.iter().map(|v| v - mean).collect();
    // push the rounding residue into the last slot so the sum is exactly zero
    if let Some(last) = xt.len().checked_sub(1) {
        let rest = xt[..last].iter().fold(C64::new(0.0, 0.0), |s, v| s + v);
        xt[last] = -rest;
    }
    (mean, xt)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p = HyperbolicParams::new(1.0, 2.0).unwrap();
        let v = e_l(&p, C64::new(2.0, 0.0));
        assert!((v.re - libm::exp(PI)).abs() < 1e-12 * v.re);
        assert_eq!(d3(&[3.0, 1.0, 0.0]).unwrap(), 1.0);
        let q = HyperbolicParams::new(1.0, 0.5).unwrap();
        assert_eq!(p_kl(&q, 2, 3), 3.5);
    }

    #[test]
    fn com_sums_to_zero() {
        let x = [C64::new(0.3, 0.1), C64::new(-1.7, 0.2), C64::new(2.9, -0.05)];
        let (_, xt) = com_split(&x);
        let s = xt.iter().fold(C64::new(0.0, 0.0), |s, v| s + v);
        assert_eq!(s, C64::new(0.0, 0.0));
    }

}
