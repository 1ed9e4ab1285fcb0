//! Holomorphy domains and strips. All domains are open: points on a
//! boundary are reported as outside.

use alloc::vec::Vec;

use crate::elementary::com_split;
use crate::error::{Error, Result};
use crate::params::HyperbolicParams;
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainId {
    /// `|Im(x1-x2)| < 2a - Re b`.
    D2,
    /// `D2` together with `|Im(y1-y2)| < Re b`.
    CD2,
    /// `max |Im(x_j-x_k)| < 2a - Re b`.
    D3,
    /// `|Im x~_j| < a - Re b/2` for the centre-of-mass coordinates.
    D3r,
    /// `D3r` together with `max |Im(y_j-y_k)| < Re b`.
    CD3,
    /// `v1 - v2 > -Re b`.
    A2,
    A2n(u32),
    /// `v_j - v_k > -Re b` for all `j < k`.
    A3,
    A3n(u32),
    /// `Re b < eps`.
    HalfStrip(f64),
    /// `b` in `S(a_l/2)`, `x` in `A2n(n)`, `|Im(y1-y2)| < Re b`.
    CalD2n(u32),
    /// `b` in `S(a_l/4)`, `x` in `A3n(n)`, `max |Im(y_j-y_k)| < Re b`.
    CalD3n(u32),
}

impl DomainId {
    pub fn name(&self) -> &'static str {
        match self {
            DomainId::D2 => "D2",
            DomainId::CD2 => "cD2",
            DomainId::D3 => "D3",
            DomainId::D3r => "D3r",
            DomainId::CD3 => "cD3",
            DomainId::A2 => "A2",
            DomainId::A2n(_) => "A2n",
            DomainId::A3 => "A3",
            DomainId::A3n(_) => "A3n",
            DomainId::HalfStrip(_) => "S(eps)",
            DomainId::CalD2n(_) => "cD2n",
            DomainId::CalD3n(_) => "cD3n",
        }
    }

    /// Number of coordinates per vector, or `None` for the strip.
    pub fn arity(&self) -> Option<usize> {
        match self {
            DomainId::D2 | DomainId::CD2 | DomainId::A2 | DomainId::A2n(_) | DomainId::CalD2n(_) => {
                Some(2)
            }
            DomainId::HalfStrip(_) => None,
            _ => Some(3),
        }
    }

    pub fn all_for(n: usize) -> Vec<DomainId> {
        let mut v = Vec::new();
        if n == 2 {
            v.extend([DomainId::D2, DomainId::CD2, DomainId::A2, DomainId::A2n(0), DomainId::A2n(1)]);
            v.extend([DomainId::CalD2n(0), DomainId::CalD2n(1)]);
        } else if n == 3 {
            v.extend([DomainId::D3, DomainId::D3r, DomainId::CD3, DomainId::A3]);
            v.extend([DomainId::A3n(0), DomainId::A3n(1), DomainId::CalD3n(0), DomainId::CalD3n(1)]);
        }
        v
    }
}

fn max_pair_gap(v: &[f64]) -> f64 {
    let mut m = 0.0f64;
    for j in 0..v.len() {
        for k in j + 1..v.len() {
            m = m.max((v[j] - v[k]).abs());
        }
    }
    m
}

fn ordered_gaps_above(v: &[f64], lower: f64) -> bool {
    (0..v.len()).all(|j| (j + 1..v.len()).all(|k| v[j] - v[k] > lower))
}

fn ordered_gaps_below(v: &[f64], upper: f64) -> bool {
    (0..v.len()).all(|j| (j + 1..v.len()).all(|k| v[j] - v[k] < upper))
}

fn a_n(p: &HyperbolicParams, beta: f64, v: &[f64], n: u32) -> bool {
    if n == 1 {
        max_pair_gap(v) < p.a_s + beta
    } else {
        ordered_gaps_above(v, -beta) && ordered_gaps_below(v, n as f64 * p.a_s + beta)
    }
}

/// Membership of `(b, x, y)` in the domain `id`.
pub fn domain_check(id: DomainId, p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<bool> {
    if let Some(n) = id.arity() {
        for len in [x.len(), y.len()] {
            if len != n {
                return Err(Error::DimensionMismatch { expected: n, got: len });
            }
        }
    }
    let beta = b.re;
    let in_sa = beta > 0.0 && beta < 2.0 * p.a;
    if !in_sa {
        return Ok(false);
    }
    let v: Vec<f64> = x.iter().map(|z| z.im).collect();
    let w: Vec<f64> = y.iter().map(|z| z.im).collect();
    Ok(match id {
        DomainId::D2 | DomainId::D3 => max_pair_gap(&v) < 2.0 * p.a - beta,
        DomainId::CD2 => max_pair_gap(&v) < 2.0 * p.a - beta && max_pair_gap(&w) < beta,
        DomainId::D3r => d3r(p, beta, x),
        DomainId::CD3 => d3r(p, beta, x) && max_pair_gap(&w) < beta,
        DomainId::A2 | DomainId::A3 => ordered_gaps_above(&v, -beta),
        DomainId::A2n(n) | DomainId::A3n(n) => a_n(p, beta, &v, n),
        DomainId::HalfStrip(eps) => beta < eps,
        DomainId::CalD2n(n) => beta < p.a_l / 2.0 && a_n(p, beta, &v, n) && max_pair_gap(&w) < beta,
        DomainId::CalD3n(n) => beta < p.a_l / 4.0 && a_n(p, beta, &v, n) && max_pair_gap(&w) < beta,
    })
}

fn d3r(p: &HyperbolicParams, beta: f64, x: &[C64]) -> bool {
    let (_, xt) = com_split(x);
    xt.iter().all(|z| z.im.abs() < p.a - beta / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p11() -> HyperbolicParams {
        HyperbolicParams::new(1.0, 1.0).unwrap()
    }

    #[test]
    fn cd2_examples() {
        let p = p11();
        let z = [C64::new(0.0, 0.0); 2];
        assert!(domain_check(DomainId::CD2, &p, C64::new(1.0, 0.0), &z, &z).unwrap());
        let x = [C64::new(0.0, 1.2), C64::new(0.0, 0.0)];
        assert!(!domain_check(DomainId::CD2, &p, C64::new(1.0, 0.0), &x, &z).unwrap());
    }

    #[test]
    fn boundary_is_outside() {
        let p = p11();
        let x = [C64::new(0.0, 1.0), C64::new(0.0, 0.0)];
        let z = [C64::new(0.0, 0.0); 2];
        assert!(!domain_check(DomainId::D2, &p, C64::new(1.0, 0.0), &x, &z).unwrap());
    }

    #[test]
    fn d3r_example() {
        let p = p11();
        let x = [C64::new(0.0, 0.1), C64::new(0.0, 0.0), C64::new(0.0, -0.1)];
        let y = [C64::new(0.0, 0.0); 3];
        assert!(domain_check(DomainId::D3r, &p, C64::new(0.5, 0.0), &x, &y).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let p = p11();
        let x = [C64::new(0.0, 0.0); 3];
        let y = [C64::new(0.0, 0.0); 2];
        assert_eq!(
            domain_check(DomainId::CD2, &p, C64::new(1.0, 0.0), &x, &y),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        );
    }
}
