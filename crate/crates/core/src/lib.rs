//! Numerics for the hyperbolic gamma function and the N = 2, 3 joint
//! eigenfunctions of the hyperbolic relativistic Calogero-Moser system.
//!
//! The crate is `no_std` and only needs an allocator. Floating point
//! transcendental functions come from `libm`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod domain;
pub mod eigen;
pub mod elementary;
pub mod error;
pub mod gamma;
pub mod hypgamma;
pub mod kernels;
pub mod mero;
pub mod params;
pub mod quad;

pub use num_complex::Complex64 as C64;

pub use error::Error;
pub use mero::{MeroKind, MeroValue};
pub use params::{CheckTolerance, Coupling, HyperbolicParams};

pub(crate) const I: C64 = C64::new(0.0, 1.0);

#[inline]
pub(crate) fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}
