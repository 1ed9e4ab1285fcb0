//! Quadrature on horizontal lines, half-lines and planes in the complex
//! plane.
//!
//! The adaptive routines use 21-point Gauss-Kronrod panels with bisection.
//! [`trapezoid`] holds the uniform-step rules used by the eigenfunction
//! engine, where the integrands are analytic in a known strip around the
//! contour and the trapezoidal rule converges geometrically.

mod gk;
pub mod trapezoid;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::params::CheckTolerance;
use crate::C64;

pub use gk::POINTS_PER_PANEL;

/// Default evaluation budget per axis.
pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Truncation {
    Auto,
    Fixed(f64, f64),
}

/// A horizontal line `R + i*offset` with truncation and decay hints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineSpec {
    pub im_offset: f64,
    pub truncation: Truncation,
    /// Exponential decay rate of the integrand along the line, in 1/length.
    pub decay_rate_hint: f64,
    /// Where the integrand is concentrated; auto-truncation walks outwards
    /// from here.
    pub center: f64,
    /// Initial panel width; oscillatory integrands want a fraction of a period.
    pub initial_width: f64,
    pub budget: usize,
}

impl LineSpec {
    pub fn new(im_offset: f64, decay_rate_hint: f64) -> Self {
        LineSpec {
            im_offset,
            truncation: Truncation::Auto,
            decay_rate_hint,
            center: 0.0,
            initial_width: 1.0,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn centered(mut self, c: f64) -> Self {
        self.center = c;
        self
    }

    pub fn truncated(mut self, lo: f64, hi: f64) -> Self {
        self.truncation = Truncation::Fixed(lo, hi);
        self
    }

    pub fn with_width(mut self, w: f64) -> Self {
        self.initial_width = w;
        self
    }

    pub fn with_budget(mut self, n: usize) -> Self {
        self.budget = n;
        self
    }
}

/// One or two line specs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ContourSpec {
    Line(LineSpec),
    Plane(LineSpec, LineSpec),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: C64,
    pub abs_error_estimate: f64,
    pub panels: usize,
    pub converged: bool,
}

impl IntegralResult {
    pub fn require(self, tol: f64) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::QuadratureFailure { abs_error: self.abs_error_estimate, tol })
        }
    }
}

/// Region for [`integrate_plane`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneRegion {
    Full,
    /// The chamber `t2 < t1` (real parts along equal offsets).
    WeylChamber,
}

fn tail_end<F: Fn(f64) -> C64>(f: &F, start: f64, dir: f64, rho: f64, target: f64, max_len: f64) -> f64 {
    // Walk outwards in steps of 1/(2 rho). A window of 8 samples beyond the
    // candidate end gives the constant C of |f(t)| <= C exp(-rho |t - T|);
    // the tail beyond T is then at most C/rho.
    let step = 0.5 / rho;
    let window = 8;
    let mut t = start;
    loop {
        let mut c = 0.0f64;
        for k in 0..window {
            let s = t + dir * step * k as f64;
            let v = f(s).norm();
            let v = if v.is_finite() { v } else { f64::INFINITY };
            c = c.max(v * libm::exp(rho * step * k as f64));
        }
        if c / rho < target || (t - start).abs() >= max_len {
            return t;
        }
        t += dir * step;
    }
}

fn break_points(lo: f64, hi: f64, width: f64) -> Vec<f64> {
    let n = libm::ceil((hi - lo) / width.max(1e-300)).clamp(1.0, 4096.0) as usize;
    (0..=n).map(|k| lo + (hi - lo) * k as f64 / n as f64).collect()
}

/// Size of the integral as seen from samples near the centre; sets the
/// truncation target for relative tolerances.
fn rough_scale<F: Fn(f64) -> C64>(f: &F, center: f64, rho: f64, two_sided: bool) -> f64 {
    let step = 0.5 / rho;
    let mut m = 0.0f64;
    let first = if two_sided { -8i32 } else { 0 };
    for k in first..=8 {
        let v = f(center + step * k as f64).norm();
        if v.is_finite() {
            m = m.max(v);
        }
    }
    m / rho
}

fn tail_target<F: Fn(f64) -> C64>(f: &F, center: f64, rho: f64, tol: CheckTolerance, two_sided: bool) -> f64 {
    0.1 * tol.abs_tol.max(tol.rel_tol * rough_scale(f, center, rho, two_sided))
}

fn line_limits<F: Fn(f64) -> C64>(f: &F, spec: &LineSpec, tol: CheckTolerance) -> (f64, f64) {
    match spec.truncation {
        Truncation::Fixed(lo, hi) => (lo, hi),
        Truncation::Auto => {
            let rho = spec.decay_rate_hint.max(1e-6);
            let target = tail_target(f, spec.center, rho, tol, true);
            let max_len = 2000.0 / rho;
            let lo = tail_end(f, spec.center, -1.0, rho, target, max_len);
            let hi = tail_end(f, spec.center, 1.0, rho, target, max_len);
            (lo, hi)
        }
    }
}

/// `∫ f(z) dz` over `z = t + i*offset`, `t ∈ R`.
pub fn integrate_line<F>(f: F, spec: &LineSpec, tol: CheckTolerance) -> Result<IntegralResult>
where
    F: Fn(C64) -> C64,
{
    let g = |t: f64| f(C64::new(t, spec.im_offset));
    integrate_real_line(&g, spec, tol)
}

pub(crate) fn integrate_real_line<F: Fn(f64) -> C64>(g: &F, spec: &LineSpec, tol: CheckTolerance) -> Result<IntegralResult> {
    let (lo, hi) = line_limits(g, spec, tol);
    let breaks = break_points(lo, hi, spec.initial_width);
    let r = gk::adapt(g, &breaks, tol.abs_tol * 0.9, tol.rel_tol * 0.9, spec.budget)?;
    let tail = match spec.truncation {
        Truncation::Auto => tail_target(g, spec.center, spec.decay_rate_hint.max(1e-6), tol, true),
        Truncation::Fixed(..) => 0.0,
    };
    Ok(IntegralResult {
        value: r.value,
        abs_error_estimate: r.error + tail,
        panels: r.panels,
        converged: r.converged,
    })
}

/// `∫_lo^hi f(t) dt` on a finite real interval.
pub fn integrate_interval<F: Fn(f64) -> C64>(f: F, lo: f64, hi: f64, width: f64, tol: CheckTolerance) -> Result<IntegralResult> {
    let breaks = break_points(lo, hi, width);
    let r = gk::adapt(&f, &breaks, tol.abs_tol, tol.rel_tol, DEFAULT_BUDGET)?;
    Ok(IntegralResult { value: r.value, abs_error_estimate: r.error, panels: r.panels, converged: r.converged })
}

/// `∫_0^∞ f(y) dy` where `f` is analytic at `0+` but loses digits there.
///
/// Below `crossover` the integrand is replaced by `expansion`, its Taylor
/// polynomial at `y = 0`. The right segment is truncated where the sampled
/// tail mass falls below a tenth of the tolerance, using `decay_rate_hint`.
pub fn integrate_semiline<F, S>(
    f: F,
    expansion: S,
    crossover: f64,
    decay_rate_hint: f64,
    width: f64,
    tol: CheckTolerance,
) -> Result<IntegralResult>
where
    F: Fn(f64) -> C64,
    S: Fn(f64) -> C64,
{
    let left = integrate_interval(&expansion, 0.0, crossover, crossover, tol)?;
    let rho = decay_rate_hint.max(1e-6);
    let target = tail_target(&f, crossover, rho, tol, false);
    let hi = tail_end(&f, crossover, 1.0, rho, target, 4000.0 / rho);
    let breaks = break_points(crossover, hi.max(crossover + width), width);
    let r = gk::adapt(&f, &breaks, tol.abs_tol * 0.8, tol.rel_tol, DEFAULT_BUDGET * 4)?;
    Ok(IntegralResult {
        value: left.value + r.value,
        abs_error_estimate: left.abs_error_estimate + r.error + target,
        panels: left.panels + r.panels,
        converged: left.converged && r.converged,
    })
}

/// `∫∫ f(z1, z2)` over a product of two horizontal lines, or over the chamber
/// `Re z2 < Re z1` when `region` asks for it. Evaluated as an outer adaptive
/// line integral of adaptive inner integrals.
pub fn integrate_plane<F>(f: F, s1: &LineSpec, s2: &LineSpec, region: PlaneRegion, tol: CheckTolerance) -> Result<IntegralResult>
where
    F: Fn(C64, C64) -> C64,
{
    let inner_tol = CheckTolerance { abs_tol: tol.abs_tol * 1e-2, rel_tol: tol.rel_tol * 1e-2 };
    let worst_inner = core::cell::Cell::new(0.0f64);
    let failed = core::cell::Cell::new(false);
    let panels = core::cell::Cell::new(0usize);
    let outer = |t1: f64| -> C64 {
        let z1 = C64::new(t1, s1.im_offset);
        let g = |t2: f64| f(z1, C64::new(t2, s2.im_offset));
        let r = match region {
            PlaneRegion::Full => integrate_real_line(&g, s2, inner_tol),
            PlaneRegion::WeylChamber => {
                let rho = s2.decay_rate_hint.max(1e-6);
                let target = tail_target(&g, t1, rho, inner_tol, true);
                let lo = tail_end(&g, t1, -1.0, rho, target, 2000.0 / rho);
                integrate_interval(g, lo, t1, s2.initial_width, inner_tol)
            }
        };
        match r {
            Ok(r) => {
                if !r.converged {
                    failed.set(true);
                }
                worst_inner.set(worst_inner.get().max(r.abs_error_estimate));
                panels.set(panels.get() + r.panels);
                r.value
            }
            Err(_) => C64::new(f64::NAN, f64::NAN),
        }
    };
    let r = integrate_real_line(&outer, s1, tol)?;
    let (lo, hi) = match s1.truncation {
        Truncation::Fixed(lo, hi) => (lo, hi),
        Truncation::Auto => (-1.0, 1.0),
    };
    let inner_err = worst_inner.get() * (hi - lo).abs().max(2.0 / s1.decay_rate_hint.max(1e-6));
    Ok(IntegralResult {
        value: r.value,
        abs_error_estimate: r.abs_error_estimate + inner_err,
        panels: r.panels + panels.get(),
        converged: r.converged && !failed.get(),
    })
}
