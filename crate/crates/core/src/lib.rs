//! Laguerre-Gaussian (LG) and Hermite-Gaussian (HG) modes of the isotropic
//! two-dimensional harmonic oscillator, and their Wigner transforms.
//!
//! The crate is organised bottom-up:
//!
//! - [`specfun`]: Hermite polynomials, normalized Hermite functions and
//!   generalized Laguerre polynomials by three-term recurrence.
//! - [`modes`]: HG and LG mode evaluation, ladder operators in index space
//!   and as differential operators.
//! - [`wigner`]: the Wigner and extended Wigner transforms (trapezoid
//!   oracles, a rotate-then-Fourier grid realization) and every closed form
//!   relating them to LG modes.
//! - [`beam`]: paraxial LG beam fields along the propagation axis.
//! - [`verify`]: named verification suites producing JSON reports.
//! - [`cli`]: the `lg-wigner` command-line front end and its file formats.
//!
//! Complex values use [`num_complex::Complex64`] throughout.

pub mod beam;
pub mod cli;
mod error;
pub mod grid;
pub mod modes;
pub mod specfun;
pub mod verify;
pub mod wigner;

pub use error::{Error, Result};
pub use num_complex::Complex64;
