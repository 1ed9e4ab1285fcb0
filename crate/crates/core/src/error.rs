use core::fmt;

use crate::domain::DomainId;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    NonPositivePeriod { a_plus: f64, a_minus: f64 },
    CouplingOutOfStrip { re_b: f64, two_a: f64 },
    DimensionMismatch { expected: usize, got: usize },
    OutOfHalfPlane { im_z: f64, a: f64 },
    PoleOfGamma { z: f64 },
    NonFiniteSample { at: f64 },
    DomainViolation { domain: DomainId, detail: &'static str },
    QuadratureFailure { abs_error: f64, tol: f64 },
    NearDegenerate { gap: f64 },
    InternalInconsistency(&'static str),
    DegenerateFit,
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositivePeriod { a_plus, a_minus } => {
                write!(f, "periods must be positive, got ({a_plus}, {a_minus})")
            }
            Error::CouplingOutOfStrip { re_b, two_a } => {
                write!(f, "coupling Re b = {re_b} outside (0, {two_a})")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "expected {expected} components, got {got}")
            }
            Error::OutOfHalfPlane { im_z, a } => {
                write!(f, "Im z = {im_z} is not below a = {a}")
            }
            Error::PoleOfGamma { z } => write!(f, "Gamma has a pole at {z}"),
            Error::NonFiniteSample { at } => write!(f, "integrand not finite at t = {at}"),
            Error::DomainViolation { domain, detail } => {
                write!(f, "outside domain {}: {detail}", domain.name())
            }
            Error::QuadratureFailure { abs_error, tol } => {
                write!(f, "quadrature did not converge (error {abs_error:e} > {tol:e})")
            }
            Error::NearDegenerate { gap } => {
                write!(f, "coordinates nearly coincide (gap {gap:e})")
            }
            Error::InternalInconsistency(s) => write!(f, "internal inconsistency: {s}"),
            Error::DegenerateFit => write!(f, "decay fit is degenerate"),
            Error::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
