//! Uniform-lattice trapezoidal sums.
//!
//! Every integrand in this module is analytic in a horizontal strip around
//! its contour and decays exponentially along it, so the trapezoidal rule
//! converges geometrically in `1/h`. Placing all nodes on one lattice lets a
//! single table of G or c values serve many integrals; products over lattice
//! differences then become correlation sums.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::kernels::c_value;
use crate::params::HyperbolicParams;
use crate::{c, C64};

/// Target `-ln` of the discretisation error relative to the integrand scale.
pub(crate) const DIGITS: f64 = 37.0;

/// Fraction of the analyticity strip used by the error bound.
const USE: f64 = 0.8;

/// Step resolving a strip with half-widths `lower`, `upper` below and above
/// the contour. `grow_*` is the rate at which `ln |f|` increases when the
/// contour is pushed towards that edge.
pub(crate) fn step_for(lower: f64, upper: f64, grow_lower: f64, grow_upper: f64) -> f64 {
    let side = |d: f64, g: f64| {
        let u = USE * d;
        2.0 * PI * u / (DIGITS + libm::log(1.0 / (1.0 - USE)) + g.max(0.0) * u)
    };
    side(lower, grow_lower).min(side(upper, grow_upper))
}

/// Trapezoidal result with a nested-grid error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Sum {
    pub value: C64,
    pub err: f64,
    /// `∫|f|`, the scale against which cancellation is measured.
    pub l1: f64,
}

impl Sum {
    pub(crate) fn scaled(self, s: C64) -> Sum {
        Sum { value: self.value * s, err: self.err * s.norm(), l1: self.l1 * s.norm() }
    }
}

/// Error of the fine sum from the fine/coarse difference: with geometric
/// convergence the coarse error is about the square root of the fine one
/// (measured against the integrand scale).
pub(crate) fn nested_error(full: C64, coarse: C64, l1: f64, terms: f64) -> f64 {
    let d = (full - coarse).norm();
    let disc = if l1 > 0.0 { (d * d / l1).min(d) } else { d };
    disc + 4.0 * f64::EPSILON * l1 * libm::sqrt(terms.max(1.0))
}

/// Trapezoidal sum of `f(center + k h)` over all integers `k`, walking out
/// until both tails are negligible against the largest sample.
pub(crate) fn walk<F: FnMut(f64) -> C64>(mut f: F, center: f64, h: f64, max_nodes: usize) -> Result<Sum> {
    let mut full = c(0.0);
    let mut coarse = c(0.0);
    let mut l1 = 0.0;
    let mut peak = 0.0f64;
    let mut quiet = [0usize; 2];
    let mut nodes = 0usize;
    let add = |k: i64, v: C64, full: &mut C64, coarse: &mut C64, l1: &mut f64| -> Result<f64> {
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFiniteSample { at: center + k as f64 * h });
        }
        *full += v;
        if k % 2 == 0 {
            *coarse += v;
        }
        let n = v.norm();
        *l1 += n;
        Ok(n)
    };
    let v0 = f(center);
    peak = peak.max(add(0, v0, &mut full, &mut coarse, &mut l1)?);
    let mut k = 1i64;
    while quiet[0] < 8 || quiet[1] < 8 || k < 16 {
        for (side, sgn) in [(0usize, 1i64), (1, -1)] {
            if quiet[side] >= 8 && k >= 16 {
                continue;
            }
            let kk = sgn * k;
            let n = add(kk, f(center + kk as f64 * h), &mut full, &mut coarse, &mut l1)?;
            peak = peak.max(n);
            nodes += 1;
            if n <= 1e-18 * peak {
                quiet[side] += 1;
            } else {
                quiet[side] = 0;
            }
        }
        k += 1;
        if nodes > max_nodes {
            return Err(Error::QuadratureFailure { abs_error: f64::INFINITY, tol: 0.0 });
        }
    }
    let full = full * h;
    let coarse = coarse * (2.0 * h);
    let l1 = l1 * h;
    Ok(Sum { value: full, err: nested_error(full, coarse, l1, nodes as f64), l1 })
}

/// Values `f(offset + n h)` for `n` in `lo..=hi`.
#[derive(Debug, Clone)]
pub(crate) struct Table {
    pub lo: i64,
    pub vals: Vec<C64>,
}

impl Table {
    pub(crate) fn build<F: FnMut(C64) -> C64>(mut f: F, offset: C64, h: f64, lo: i64, hi: i64) -> Table {
        let vals = (lo..=hi).map(|n| f(offset + n as f64 * h)).collect();
        Table { lo, vals }
    }

    pub(crate) fn c(p: &HyperbolicParams, b: C64, offset: C64, h: f64, lo: i64, hi: i64) -> Table {
        Self::build(|w| c_value(p, b, w), offset, h, lo, hi)
    }

    #[inline]
    pub(crate) fn at(&self, n: i64) -> C64 {
        self.vals[(n - self.lo) as usize]
    }

    pub(crate) fn hi(&self) -> i64 {
        self.lo + self.vals.len() as i64 - 1
    }

    pub(crate) fn check_finite(&self, h: f64) -> Result<()> {
        for (i, v) in self.vals.iter().enumerate() {
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::NonFiniteSample { at: (self.lo + i as i64) as f64 * h });
            }
        }
        Ok(())
    }
}

/// `h² Σ_{k1,k2} a(k1) b(k2) d(k1 - k2)` over the common index range of
/// `a` and `b`, with the nested error estimate and a truncation estimate
/// from the outermost nodes.
pub(crate) fn correlate(a: &Table, bt: &Table, d: &Table, h: f64, decay: f64) -> Sum {
    let (lo, hi) = (a.lo.max(bt.lo), a.hi().min(bt.hi()));
    let mut full = c(0.0);
    let mut coarse = c(0.0);
    let mut l1 = 0.0;
    let mut edge = 0.0;
    let band = 3;
    for k1 in lo..=hi {
        let av = a.at(k1);
        let an = av.norm();
        let mut row = c(0.0);
        let mut row_c = c(0.0);
        let mut row_l1 = 0.0;
        for k2 in lo..=hi {
            let t = bt.at(k2) * d.at(k1 - k2);
            row += t;
            if k2 % 2 == 0 {
                row_c += t;
            }
            row_l1 += t.norm();
        }
        full += av * row;
        if k1 % 2 == 0 {
            coarse += av * row_c;
        }
        l1 += an * row_l1;
        if k1 - lo < band || hi - k1 < band {
            edge += an * row_l1;
        }
    }
    let h2 = h * h;
    let (full, coarse, l1) = (full * h2, coarse * (4.0 * h2), l1 * h2);
    let n = (hi - lo + 1) as f64;
    let tail = edge * h2 / (band as f64 * (decay * h).min(1.0));
    Sum { value: full, err: nested_error(full, coarse, l1, n * n) + tail, l1 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walk_integrates_sech() {
        let h = step_for(PI / 2.0, PI / 2.0, 0.0, 0.0);
        let s = walk(|t| c(1.0 / libm::cosh(t)), 0.3, h, 100_000).unwrap();
        assert!((s.value.re - PI).abs() < 1e-14, "{:?}", s);
        assert!(s.err < 1e-12);
    }

    #[test]
    fn correlate_separable_gaussian() {
        // ∫∫ exp(-z1² - z2² - (z1-z2)²) = π/√3
        let h = 0.2;
        let a = Table::build(|z| (-z * z).exp(), c(0.0), h, -60, 60);
        let d = Table::build(|z| (-z * z).exp(), c(0.0), h, -120, 120);
        let s = correlate(&a, &a, &d, h, 1.0);
        assert!((s.value.re - PI / libm::sqrt(3.0)).abs() < 1e-13, "{:?}", s);
    }
}
