//! Exact computations in the complexified Grothendieck ring of projective
//! F_p GL_n(F_p)-modules, with brute-force group-theoretic cross-checks.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;

pub mod cyclo;
pub mod ffpoly;
pub mod glring;
pub mod linalg;
pub mod oracle;
pub mod poincare;
pub mod torus_dl;

pub use error::{Error, Result};
