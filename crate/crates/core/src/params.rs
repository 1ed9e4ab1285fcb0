use core::f64::consts::PI;

use libm::{log, sqrt};

use crate::error::{Error, Result};
use crate::C64;

/// The period pair `(a+, a-)` and the quantities derived from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicParams {
    pub a_plus: f64,
    pub a_minus: f64,
    pub alpha: f64,
    pub a: f64,
    pub a_s: f64,
    pub a_l: f64,
}

impl HyperbolicParams {
    pub fn new(a_plus: f64, a_minus: f64) -> Result<Self> {
        if !(a_plus > 0.0 && a_minus > 0.0) || !a_plus.is_finite() || !a_minus.is_finite() {
            return Err(Error::NonPositivePeriod { a_plus, a_minus });
        }
        Ok(HyperbolicParams {
            a_plus,
            a_minus,
            alpha: 2.0 * PI / (a_plus * a_minus),
            a: 0.5 * (a_plus + a_minus),
            a_s: a_plus.min(a_minus),
            a_l: a_plus.max(a_minus),
        })
    }

    /// `a_δ` for `δ = +1` or `-1`.
    pub fn a_delta(&self, delta: i8) -> f64 {
        if delta > 0 {
            self.a_plus
        } else {
            self.a_minus
        }
    }

    /// `K_δ = ln(a_{-δ}/a_δ) / (2 a_δ)`.
    pub fn k_delta(&self, delta: i8) -> f64 {
        let ad = self.a_delta(delta);
        let amd = self.a_delta(-delta);
        log(amd / ad) / (2.0 * ad)
    }

    /// `K_l = ln(a_s/a_l) / (2 a_l)`.
    pub fn k_l(&self) -> f64 {
        log(self.a_s / self.a_l) / (2.0 * self.a_l)
    }

    pub fn sqrt_prod(&self) -> f64 {
        sqrt(self.a_plus * self.a_minus)
    }

    pub fn coupling(&self, b: C64) -> Result<Coupling> {
        Coupling::new(self, b)
    }
}

pub fn make_params(a_plus: f64, a_minus: f64) -> Result<HyperbolicParams> {
    HyperbolicParams::new(a_plus, a_minus)
}

/// A coupling `b` inside the strip `0 < Re b < 2a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coupling {
    pub b: C64,
}

impl Coupling {
    pub fn new(p: &HyperbolicParams, b: C64) -> Result<Self> {
        if !(b.re > 0.0 && b.re < 2.0 * p.a) || !b.im.is_finite() {
            return Err(Error::CouplingOutOfStrip { re_b: b.re, two_a: 2.0 * p.a });
        }
        Ok(Coupling { b })
    }

    pub fn real(p: &HyperbolicParams, b: f64) -> Result<Self> {
        Self::new(p, C64::new(b, 0.0))
    }

    /// The dual coupling `2a - b`.
    pub fn dual(&self, p: &HyperbolicParams) -> Coupling {
        Coupling { b: C64::new(2.0 * p.a, 0.0) - self.b }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckTolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl CheckTolerance {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Result<Self> {
        if !(abs_tol > 0.0 && rel_tol > 0.0) {
            return Err(Error::InvalidArgument("tolerances must be positive"));
        }
        Ok(CheckTolerance { abs_tol, rel_tol })
    }

    pub fn rel(rel_tol: f64) -> Self {
        CheckTolerance { abs_tol: 1e-300, rel_tol }
    }

    /// Accepts `err` for a quantity of size `scale`.
    pub fn accepts(&self, err: f64, scale: f64) -> bool {
        err <= self.abs_tol.max(self.rel_tol * scale)
    }
}

impl Default for CheckTolerance {
    fn default() -> Self {
        CheckTolerance { abs_tol: 1e-14, rel_tol: 1e-12 }
    }
}
