//! Verification registry, check runner and command-line front end for
//! `hypcm-core`.

pub mod cli;
pub mod config;
pub mod error;
pub mod wire;
pub mod verify;

pub use error::{Error, Result};
