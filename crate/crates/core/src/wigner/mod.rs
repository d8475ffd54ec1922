//! Wigner and extended Wigner transforms.
//!
//! # Convention
//!
//! Everything here uses the √2-compressed transform
//!
//! ```text
//! W_d(f, g)(x, xi) = (2 pi)^{-d/2} ∫ e^{i p·xi} conj(f((x + p)/√2)) g((x - p)/√2) dp
//! ~W_d(F)(x, xi)   = (2 pi)^{-d/2} ∫ e^{i p·xi} F((x + p)/√2, (x - p)/√2) dp
//! ```
//!
//! which is *not* the textbook Wigner function. With the common form
//! `W_std(f, g)(u, k) = pi^{-1} ∫ e^{2iqk} conj(f(u + q)) g(u - q) dq`
//! (one dimension, hbar = 1) the two are related by
//!
//! ```text
//! W(f, g)(x, xi) = sqrt(pi) · W_std(f, g)(x/√2, xi/√2)
//! ```
//!
//! so `W(h0, h0)(0, 0) = pi^{-1/2}` where the textbook value is `1/pi`.
//! No function in this crate mixes the two conventions.
//!
//! In this convention the LG modes are themselves Wigner transforms:
//! `~W(h_jk) = W(h_j, h_k) = |j k>`. The quadrature routines in
//! [`quadrature`] are the reference oracles; [`closed`] holds the closed
//! forms; [`rotfft`] realizes `~W` on grids as a π/4 rotation followed by a
//! partial Fourier transform.

pub mod closed;
pub mod quadrature;
pub mod rotfft;
mod spline;

pub use closed::{
    wigner_hermite_closed, wigner_hg_closed, wigner_hg_diag, wigner_lg_closed, wigner_lg_diag,
};
pub use quadrature::{
    extended_wigner, extended_wigner_grid, wigner1d, wigner1d_grid, wigner2d, Wigner2dKernel,
};
pub use rotfft::extended_wigner_rotfft;
pub use spline::BicubicSpline;

use crate::{Error, Result};

/// Truncation and resolution of the uniform trapezoid rule used by the
/// oracles: `nodes` intervals on `[-half_width, half_width]`.
///
/// For Schwartz integrands built from modes of order up to 12 the default
/// is accurate to about 1e-10 absolute.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct QuadratureSpec {
    pub half_width: f64,
    pub nodes: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            half_width: 16.0,
            nodes: 1024,
        }
    }
}

impl QuadratureSpec {
    pub fn new(half_width: f64, nodes: usize) -> Result<Self> {
        let spec = Self { half_width, nodes };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.half_width > 0.0 && self.half_width.is_finite()) {
            return Err(Error::InvalidQuadrature(format!(
                "half_width must be positive, got {}",
                self.half_width
            )));
        }
        if self.nodes < 16 || !self.nodes.is_multiple_of(2) {
            return Err(Error::InvalidQuadrature(format!(
                "nodes must be even and at least 16, got {}",
                self.nodes
            )));
        }
        Ok(())
    }

    pub fn step(&self) -> f64 {
        2.0 * self.half_width / self.nodes as f64
    }

    /// `(node, weight)` pairs including both endpoints.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let h = self.step();
        (0..=self.nodes).map(move |m| {
            let p = if m == self.nodes {
                self.half_width
            } else {
                -self.half_width + m as f64 * h
            };
            let w = if m == 0 || m == self.nodes {
                0.5 * h
            } else {
                h
            };
            (p, w)
        })
    }
}

/// A phase-space point `(x1, x2, xi1, xi2)` in R^2 x R^2.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PhasePoint4 {
    pub x1: f64,
    pub x2: f64,
    pub xi1: f64,
    pub xi2: f64,
}

impl PhasePoint4 {
    pub fn new(x1: f64, x2: f64, xi1: f64, xi2: f64) -> Self {
        Self { x1, x2, xi1, xi2 }
    }

    pub fn origin() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0)
    }

    /// `(|x|^2 + |xi|^2) / 2`
    pub fn q0(&self) -> f64 {
        0.5 * (self.x1 * self.x1 + self.x2 * self.x2 + self.xi1 * self.xi1 + self.xi2 * self.xi2)
    }

    /// `x1 xi2 - x2 xi1`
    pub fn q2(&self) -> f64 {
        self.x1 * self.xi2 - self.x2 * self.xi1
    }

    /// `(x1^2 - x2^2 + xi1^2 - xi2^2) / 2`
    pub fn q3(&self) -> f64 {
        0.5 * (self.x1 * self.x1 - self.x2 * self.x2 + self.xi1 * self.xi1 - self.xi2 * self.xi2)
    }

    pub(crate) fn check_finite(&self) -> Result<()> {
        for v in [self.x1, self.x2, self.xi1, self.xi2] {
            if !v.is_finite() {
                return Err(Error::NonFinite(v));
            }
        }
        Ok(())
    }
}
