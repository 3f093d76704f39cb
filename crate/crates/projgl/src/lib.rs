//! Command-line driver, JSON encodings and verification suites for
//! `projgl-core`.

pub mod cli;
pub mod json;
pub mod verify;
