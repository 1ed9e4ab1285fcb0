//! The zero lattice `ia + i(k a+ + l a-)` of E and its multiplicities.

use alloc::vec::Vec;

use libm::{fabs, floor, hypot, round};

use crate::params::HyperbolicParams;
use crate::C64;

/// Denominator bound of the commensurability test.
pub const MAX_DENOMINATOR: u64 = 1_000_000;

/// Snap radius for zero/pole detection, in units of `a_s`.
pub const SNAP: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticePoint {
    pub k: u32,
    pub l: u32,
    pub p: f64,
    pub order: u32,
}

/// `a+/a- = num/den` in lowest terms, when a continued-fraction convergent
/// with `den <= MAX_DENOMINATOR` matches the ratio to 1e-13 relative.
pub fn commensurate_ratio(a_plus: f64, a_minus: f64) -> Option<(u64, u64)> {
    let r = a_plus / a_minus;
    let (mut h0, mut h1) = (0u64, 1u64);
    let (mut k0, mut k1) = (1u64, 0u64);
    let mut x = r;
    for _ in 0..64 {
        let q = floor(x);
        if q > 1e12 {
            break;
        }
        let qi = q as u64;
        let h2 = qi.checked_mul(h1)?.checked_add(h0)?;
        let k2 = qi.checked_mul(k1)?.checked_add(k0)?;
        if k2 > MAX_DENOMINATOR {
            return None;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if fabs(r - h1 as f64 / k1 as f64) <= 1e-13 * r {
            return Some((h1, k1));
        }
        let frac = x - q;
        if frac <= 0.0 {
            break;
        }
        x = 1.0 / frac;
    }
    None
}

/// Number of pairs `(m, n)` with `m a+ + n a- = k a+ + l a-`.
pub fn lattice_order(p: &HyperbolicParams, k: u32, l: u32) -> u32 {
    match commensurate_ratio(p.a_plus, p.a_minus) {
        // a+ = (num/den) a-: (m - k) num = (l - n) den
        Some((num, den)) => (k as u64 / den + l as u64 / num + 1) as u32,
        None => 1,
    }
}

/// All lattice points with `p_kl <= radius`, sorted by `p` then `k`.
pub fn zero_pole_catalog(p: &HyperbolicParams, radius: f64) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    let slack = SNAP * p.a_s;
    let kmax = floor((radius + slack) / p.a_plus).max(0.0) as u32;
    for k in 0..=kmax {
        let rest = radius + slack - k as f64 * p.a_plus;
        let lmax = floor(rest / p.a_minus).max(0.0) as u32;
        for l in 0..=lmax {
            let pk = k as f64 * p.a_plus + l as f64 * p.a_minus;
            if pk <= radius + slack {
                out.push(LatticePoint { k, l, p: pk, order: lattice_order(p, k, l) });
            }
        }
    }
    out.sort_by(|x, y| x.p.total_cmp(&y.p).then(x.k.cmp(&y.k)));
    out
}

/// The lattice value `p_kl` closest to `t >= 0`, with its pair.
fn nearest_lattice(p: &HyperbolicParams, t: f64) -> (u32, u32, f64) {
    if t <= 0.0 {
        return (0, 0, 0.0);
    }
    let mut best = (0u32, 0u32, 0.0f64);
    let mut best_d = f64::INFINITY;
    let kmax = floor(t / p.a_plus) as u32 + 1;
    for k in 0..=kmax {
        let rest = t - k as f64 * p.a_plus;
        let l = round(rest / p.a_minus).max(0.0) as u32;
        for l in [l.saturating_sub(1), l, l + 1] {
            let pk = k as f64 * p.a_plus + l as f64 * p.a_minus;
            let d = fabs(pk - t);
            if d < best_d {
                best_d = d;
                best = (k, l, pk);
            }
        }
    }
    best
}

/// Nearest zero `ia + ip_kl` of E to `z`: the point, its order, the distance.
pub fn nearest_e_zero(p: &HyperbolicParams, z: C64) -> (C64, u32, f64) {
    let (k, l, pk) = nearest_lattice(p, z.im - p.a);
    let z0 = C64::new(0.0, p.a + pk);
    (z0, lattice_order(p, k, l), hypot(z.re, z.im - z0.im))
}

/// The snapped zero of E at `z`, if any.
pub fn snapped_e_zero(p: &HyperbolicParams, z: C64) -> Option<(C64, u32, f64)> {
    let (z0, m, d) = nearest_e_zero(p, z);
    (d <= SNAP * p.a_s).then_some((z0, m, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_periods_have_double_points() {
        let p = HyperbolicParams::new(1.0, 1.0).unwrap();
        let cat = zero_pole_catalog(&p, 1.5);
        assert_eq!(cat.len(), 3);
        assert_eq!(cat[0].order, 1);
        assert!(cat[1..].iter().all(|q| q.p == 1.0 && q.order == 2));
    }

    #[test]
    fn irrational_ratio_is_simple() {
        let p = HyperbolicParams::new(1.0, core::f64::consts::SQRT_2).unwrap();
        assert!(commensurate_ratio(1.0, core::f64::consts::SQRT_2).is_none());
        let cat = zero_pole_catalog(&p, 3.0);
        assert!(cat.iter().all(|q| q.order == 1));
        assert_eq!(cat.len(), 7);
    }

    #[test]
    fn radius_zero() {
        let p = HyperbolicParams::new(2.0, 0.5).unwrap();
        let cat = zero_pole_catalog(&p, 0.0);
        assert_eq!(cat, alloc::vec![LatticePoint { k: 0, l: 0, p: 0.0, order: 1 }]);
    }

    #[test]
    fn rational_orders() {
        assert_eq!(commensurate_ratio(2.0, 0.5), Some((4, 1)));
        assert_eq!(commensurate_ratio(1.0, 0.8), Some((5, 4)));
        let p = HyperbolicParams::new(2.0, 0.5).unwrap();
        // 2 = 1*2 + 0*0.5 = 0*2 + 4*0.5
        assert_eq!(lattice_order(&p, 1, 0), 2);
        assert_eq!(lattice_order(&p, 0, 4), 2);
        assert_eq!(lattice_order(&p, 0, 3), 1);
        assert_eq!(lattice_order(&p, 2, 1), 3);
    }

    #[test]
    fn snapping() {
        let p = HyperbolicParams::new(1.0, 1.0).unwrap();
        let (z0, m, _) = snapped_e_zero(&p, C64::new(1e-10, 2.0)).unwrap();
        assert_eq!((z0, m), (C64::new(0.0, 2.0), 2));
        assert!(snapped_e_zero(&p, C64::new(1e-6, 2.0)).is_none());
        assert!(snapped_e_zero(&p, C64::new(0.0, 0.5)).is_none());
    }
}
