//! Exact local Asai L-, ε- and γ-factors of unramified representations of
//! `GL_n` over a quadratic étale algebra `E/F`, the lattice-sum Zeta integrals
//! they govern, and numeric Archimedean checks.
//!
//! The p-adic core is exact: scalars live in `Q(i)(√q)` and every factor is a
//! rational function in `X = q^{-s}`. Floats appear only in [`archimedean`].

pub mod archimedean;
pub mod cli;
pub mod error;
pub mod factors;
pub mod laurent;
pub mod repdata;
pub mod report;
pub mod scalars;
pub mod symfunc;
pub mod whittaker;
pub mod zeta;

pub use error::{Error, Result};
pub use scalars::{GaussRational, Scalar};
