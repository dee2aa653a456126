//! Padovan and bi-periodic Padovan numbers and matrices in exact
//! arithmetic, together with checks of their commutation, spectral and
//! group-theoretic identities.

pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod matrix3;
pub mod padovan_matrices;
pub mod report;
pub mod sequences;
pub mod spectra;

pub use error::{Error, Result};
pub use exact_arith::{BivariatePoly, Integer, QuadraticSurd, Rational};
pub use matrix3::{CubicPoly, Mat3};
