//! Joint eigenfunctions for N = 1, 2, 3.
//!
//! J2 and J3 are computed from their integral representations on uniform
//! lattices. E2 and E3 come either from J through the c-function dressing
//! ("direct") or from the residue-augmented form, where the contours are
//! shifted past the poles and the plane-wave part is split off exactly. The
//! latter keeps full relative accuracy of `E - E^as` at large separations.

mod lattice;
mod three;
mod two;

use alloc::vec::Vec;

use crate::domain::{domain_check, DomainId};
use crate::error::{Error, Result};
use crate::hypgamma::e_entire;
use crate::mero::MeroValue;
use crate::params::{CheckTolerance, Coupling, HyperbolicParams};
use crate::{c, C64, I};

pub use three::{e3_as, e3_as_c_ratio};
pub use two::e2_as;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Representation {
    Defining,
    CenterOfMass,
    Dual,
    /// Contours shifted by `a - Re b/2 + r` past the first poles.
    ResidueAugmented(f64),
    Auto,
}

impl Representation {
    pub fn name(&self) -> &'static str {
        match self {
            Representation::Defining => "defining",
            Representation::CenterOfMass => "com",
            Representation::Dual => "dual",
            Representation::ResidueAugmented(_) => "residue",
            Representation::Auto => "auto",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenfunctionRequest {
    pub b: Coupling,
    pub x: Vec<C64>,
    pub y: Vec<C64>,
    pub rep: Representation,
    pub tol: CheckTolerance,
}

impl EigenfunctionRequest {
    pub fn new(b: Coupling, x: &[C64], y: &[C64]) -> Self {
        EigenfunctionRequest {
            b,
            x: x.to_vec(),
            y: y.to_vec(),
            rep: Representation::Auto,
            tol: CheckTolerance::rel(1e-6),
        }
    }

    pub fn with_rep(mut self, rep: Representation) -> Self {
        self.rep = rep;
        self
    }

    pub fn with_tol(mut self, tol: CheckTolerance) -> Self {
        self.tol = tol;
        self
    }

    /// Which domain predicates hold at the request.
    pub fn domains(&self, p: &HyperbolicParams) -> Vec<(DomainId, bool)> {
        DomainId::all_for(self.x.len())
            .into_iter()
            .filter_map(|d| domain_check(d, p, self.b.b, &self.x, &self.y).ok().map(|v| (d, v)))
            .collect()
    }
}

/// A computed eigenfunction value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: MeroValue,
    pub abs_error: f64,
    /// The representation actually used.
    pub rep: Representation,
}

fn need(v: &[C64], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: v.len() });
    }
    Ok(())
}

fn finish(req: &EigenfunctionRequest, value: C64, err: f64, rep: Representation) -> Result<Evaluation> {
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::NonFiniteSample { at: value.re });
    }
    if !req.tol.accepts(err, value.norm()) {
        return Err(Error::QuadratureFailure { abs_error: err, tol: req.tol.rel_tol });
    }
    Ok(Evaluation { value: MeroValue::finite(value), abs_error: err, rep })
}

fn zero_eval(rep: Representation) -> Evaluation {
    Evaluation { value: MeroValue::zero(1, 0.0, None), abs_error: 0.0, rep }
}

/// `J1(z, w) = exp(iαzw)`.
pub fn j1(p: &HyperbolicParams, z: C64, w: C64) -> C64 {
    (I * p.alpha * z * w).exp()
}

pub(crate) fn j2_value(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<C64> {
    Ok(two::j2_com(p, b, x, y)?.value)
}

/// J2 in the requested representation.
pub fn j2(p: &HyperbolicParams, req: &EigenfunctionRequest) -> Result<Evaluation> {
    need(&req.x, 2)?;
    need(&req.y, 2)?;
    let (b, x, y) = (req.b.b, &req.x[..], &req.y[..]);
    let (s, rep) = match req.rep {
        Representation::Defining => (two::j2_def(p, b, x, y)?, req.rep),
        Representation::Dual => (two::j2_dual(p, b, x, y)?, req.rep),
        Representation::CenterOfMass | Representation::Auto => {
            (two::j2_com(p, b, x, y)?, Representation::CenterOfMass)
        }
        Representation::ResidueAugmented(_) => {
            return Err(Error::InvalidArgument("J2 has no residue-augmented representation"))
        }
    };
    finish(req, s.value, s.err, rep)
}

fn real_vec(v: &[C64]) -> bool {
    v.iter().all(|z| z.im == 0.0)
}

/// `E2` and `E2 - E2^as`, with an error estimate.
fn e2_parts(p: &HyperbolicParams, req: &EigenfunctionRequest) -> Result<(Evaluation, C64)> {
    need(&req.x, 2)?;
    need(&req.y, 2)?;
    let (b, x, y) = (req.b.b, &req.x[..], &req.y[..]);
    if x[0] == x[1] {
        return Ok((zero_eval(req.rep), c(0.0)));
    }
    let residue = match req.rep {
        Representation::ResidueAugmented(r) => Some(Some(r)),
        Representation::Auto => {
            let far = real_vec(y) && (y[0] - y[1]).re.abs() > 2.0 * p.a;
            let complex_x = !real_vec(x) && real_vec(y);
            if far || complex_x {
                Some(None)
            } else {
                None
            }
        }
        _ => None,
    };
    let via_residue = |r: Option<f64>| -> Result<(Evaluation, C64)> {
        let e = two::e2_residue(p, b, x, y, r)?;
        let r_used = r.unwrap_or_else(|| two::auto_r(p, -(x[0] - x[1]).im.abs()));
        let ev = finish(req, e.value, e.err, Representation::ResidueAugmented(r_used))?;
        Ok((ev, e.remainder))
    };
    if let Some(r) = residue {
        return via_residue(r);
    }
    let direct = e2_dressed(p, req);
    match direct {
        Err(Error::QuadratureFailure { .. }) if req.rep == Representation::Auto && real_vec(y) && y[0] != y[1] => {
            via_residue(None)
        }
        _ => direct,
    }
}

fn e2_dressed(p: &HyperbolicParams, req: &EigenfunctionRequest) -> Result<(Evaluation, C64)> {
    let (b, x, y) = (req.b.b, &req.x[..], &req.y[..]);
    let j = match req.rep {
        Representation::Defining => two::j2_def(p, b, x, y)?,
        Representation::Dual => two::j2_dual(p, b, x, y)?,
        _ => two::j2_com(p, b, x, y)?,
    };
    let rep = if req.rep == Representation::Auto { Representation::CenterOfMass } else { req.rep };
    let f = crate::kernels::phase_phi(p, b) * two::cal_g(p, b)
        / (crate::kernels::c_value(p, b, x[0] - x[1]) * crate::kernels::c_value(p, 2.0 * p.a - b, y[0] - y[1]));
    if !f.is_finite() {
        return Ok((zero_eval(rep), c(0.0)));
    }
    let value = j.value * f;
    let ev = finish(req, value, j.err * f.norm(), rep)?;
    Ok((ev, value - e2_as(p, b, x, y)))
}

/// E2 in the requested representation. `Defining`, `CenterOfMass` and
/// `Dual` choose the J2 form used in the direct dressing.
pub fn e2(p: &HyperbolicParams, req: &EigenfunctionRequest) -> Result<Evaluation> {
    Ok(e2_parts(p, req)?.0)
}

/// `E2 - E2^as` together with the absolute error estimate.
pub fn e2_minus_as(p: &HyperbolicParams, req: &EigenfunctionRequest) -> Result<(C64, f64)> {
    let (ev, rem) = e2_parts(p, req)?;
    Ok((rem, ev.abs_error))
}

fn e_pair(p: &HyperbolicParams, d: C64, shift: C64) -> Result<MeroValue> {
    Ok(e_entire(p, d + shift)? * e_entire(p, -d + shift)?)
}

fn dressing(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<MeroValue> {
    let mut acc = MeroValue::finite(c(1.0));
    for j in 0..x.len() {
        for k in j + 1..x.len() {
            acc = acc * e_pair(p, x[j] - x[k], I * (b - p.a))?;
            acc = acc * e_pair(p, y[j] - y[k], I * (p.a - b))?;
        }
    }
    Ok(acc)
}

fn product_fn(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64], j: C64) -> Result<MeroValue> {
    let d = dressing(p, b, x, y)?;
    let v = MeroValue::finite(j) * d;
    if v.is_pole() {
        return Err(Error::InternalInconsistency("pole of the product function"));
    }
    Ok(v)
}

/// `P2 = J2 ∏_δ E(δ(x1-x2) + ib - ia) E(δ(y1-y2) + ia - ib)`.
pub fn p2(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<MeroValue> {
    need(x, 2)?;
    need(y, 2)?;
    product_fn(p, b, x, y, two::j2_com(p, b, x, y)?.value)
}

/// J3 in the requested representation.
pub fn j3(p: &HyperbolicParams, req: &EigenfunctionRequest) -> Result<Evaluation> {
    need(&req.x, 3)?;
    need(&req.y, 3)?;
    let (b, x, y) = (req.b.b, &req.x[..], &req.y[..]);
    let (s, rep) = match req.rep {
        Representation::Defining => (three::j3_def(p, b, x, y)?, req.rep),
        Representation::Dual => (three::j3_dual(p, b, x, y)?, req.rep),
        Representation::CenterOfMass | Representation::Auto => {
            (three::j3_com(p, b, x, y)?, Representation::CenterOfMass)
        }
        Representation::ResidueAugmented(_) => {
            return Err(Error::InvalidArgument("J3 has no residue-augmented representation"))
        }
    };
    finish(req, s.value, s.err, rep)
}

fn sorted_gap(y: &[C64]) -> f64 {
    let mut v: Vec<f64> = y.iter().map(|z| z.re).collect();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap_or(core::cmp::Ordering::Equal));
    (v[0] - v[1]).min(v[1] - v[2])
}

fn e3_parts(p: &HyperbolicParams, req: &EigenfunctionRequest) -> Result<(Evaluation, C64)> {
    need(&req.x, 3)?;
    need(&req.y, 3)?;
    let (b, x, y) = (req.b.b, &req.x[..], &req.y[..]);
    if (0..3).any(|j| (j + 1..3).any(|k| x[j] == x[k])) {
        return Ok((zero_eval(req.rep), c(0.0)));
    }
    let residue = match req.rep {
        Representation::ResidueAugmented(r) => Some(Some(r)),
        Representation::Auto => {
            let real_y = real_vec(y);
            let far = real_y && sorted_gap(y) > 2.0 * p.a;
            if (far || !real_vec(x)) && real_y && sorted_gap(y) > 0.0 {
                Some(None)
            } else {
                None
            }
        }
        _ => None,
    };
    let via_residue = |r: Option<f64>| -> Result<(Evaluation, C64)> {
        let e = three::e3_residue(p, b, x, y, r)?;
        let r_used = r.or_else(|| three::auto_r3(p, x)).unwrap_or(0.75 * p.a_s);
        let ev = finish(req, e.value, e.err, Representation::ResidueAugmented(r_used))?;
        Ok((ev, e.remainder))
    };
    if let Some(r) = residue {
        return via_residue(r);
    }
    let direct = e3_dressed(p, req);
    match direct {
        Err(Error::QuadratureFailure { .. })
            if req.rep == Representation::Auto && real_vec(y) && sorted_gap(y) > 0.0 =>
        {
            via_residue(None)
        }
        _ => direct,
    }
}

fn e3_dressed(p: &HyperbolicParams, req: &EigenfunctionRequest) -> Result<(Evaluation, C64)> {
    let (b, x, y) = (req.b.b, &req.x[..], &req.y[..]);
    let j = match req.rep {
        Representation::Defining => three::j3_def(p, b, x, y)?,
        Representation::Dual => three::j3_dual(p, b, x, y)?,
        _ => three::j3_com(p, b, x, y)?,
    };
    let rep = if req.rep == Representation::Auto { Representation::CenterOfMass } else { req.rep };
    let f = (crate::kernels::phase_phi(p, b) * two::cal_g(p, b)).powi(3)
        / (crate::kernels::c_n_value(p, b, x) * crate::kernels::c_n_value(p, 2.0 * p.a - b, y));
    if !f.is_finite() {
        return Ok((zero_eval(rep), c(0.0)));
    }
    let value = j.value * f;
    let ev = finish(req, value, j.err * f.norm(), rep)?;
    Ok((ev, value - e3_as(p, b, x, y)))
}

/// E3 in the requested representation.
pub fn e3(p: &HyperbolicParams, req: &EigenfunctionRequest) -> Result<Evaluation> {
    Ok(e3_parts(p, req)?.0)
}

/// `E3 - E3^as` together with the absolute error estimate.
pub fn e3_minus_as(p: &HyperbolicParams, req: &EigenfunctionRequest) -> Result<(C64, f64)> {
    let (ev, rem) = e3_parts(p, req)?;
    Ok((rem, ev.abs_error))
}

/// `P3 = J3 ∏_{j<k} ∏_δ E(δ(x_j-x_k) + ib - ia) E(δ(y_j-y_k) + ia - ib)`.
pub fn p3(p: &HyperbolicParams, b: C64, x: &[C64], y: &[C64]) -> Result<MeroValue> {
    need(x, 3)?;
    need(y, 3)?;
    product_fn(p, b, x, y, three::j3_com(p, b, x, y)?.value)
}

/// Both sides of `∫_{G2} S2(t,z) W2(z) J2(z,q) dz = μ(b;q) J2(t,q)`, with
/// the error estimate of the left side.
pub fn mu_equation(p: &HyperbolicParams, b: C64, t: &[C64], q: &[C64]) -> Result<(C64, C64, f64)> {
    need(t, 2)?;
    need(q, 2)?;
    let lhs = three::mu_lhs(p, b, t, q)?;
    let rhs = crate::kernels::mu_eigenvalue(p, b, q)? * two::j2_com(p, b, t, q)?.value;
    Ok((lhs.value, rhs, lhs.err))
}
