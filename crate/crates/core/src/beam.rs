//! Paraxial Laguerre-Gaussian beams.
//!
//! ```text
//! u_{p,l}(r, phi, z) = C e^{-i Phi} e^{-r^2/w(z)^2} (r √2 / w(z))^{|l|} L^{|l|}_p(2 r^2 / w(z)^2)
//! Phi = l phi - k z + k r^2 / (2 R(z)) - (2p + l + 1) Psi(z)
//! ```
//!
//! with `z_R = k w0^2 / 2`, `w(z) = w0 sqrt(1 + (z/z_R)^2)`,
//! `R(z) = (z_R^2 + z^2) / z` and `Psi(z) = atan(z / z_R)`. The curvature
//! enters through `1/R(z) = z / (z_R^2 + z^2)`, which is regular at the
//! waist. `C = sqrt(2 p! / (pi (p + |l|)!)) / w(z)` makes the transverse L2
//! norm one at every `z`; [`Normalization::Proportional`] drops it.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::modes::ModeIndex;
use crate::specfun::{laguerre_unchecked, sqrt_factorial_ratio, MAX_DEGREE};
use crate::{Error, Result};

/// Waist radius and wavenumber of a beam.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct BeamParams {
    w0: f64,
    k: f64,
}

impl BeamParams {
    pub fn new(w0: f64, k: f64) -> Result<Self> {
        if !(w0 > 0.0 && w0.is_finite()) {
            return Err(Error::InvalidBeam(format!(
                "waist must be positive, got {w0}"
            )));
        }
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::InvalidBeam(format!(
                "wavenumber must be positive, got {k}"
            )));
        }
        Ok(Self { w0, k })
    }

    pub fn waist(&self) -> f64 {
        self.w0
    }

    pub fn wavenumber(&self) -> f64 {
        self.k
    }

    /// `z_R = k w0^2 / 2`
    pub fn rayleigh_range(&self) -> f64 {
        0.5 * self.k * self.w0 * self.w0
    }

    pub fn geometry(&self, z: f64) -> BeamGeometry {
        beam_geometry(self, z)
    }
}

/// Beam radius, inverse curvature radius and Gouy angle at one `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamGeometry {
    pub w: f64,
    pub inv_r: f64,
    pub gouy: f64,
}

pub fn beam_geometry(params: &BeamParams, z: f64) -> BeamGeometry {
    let zr = params.rayleigh_range();
    let s = z / zr;
    BeamGeometry {
        w: params.w0 * (1.0 + s * s).sqrt(),
        inv_r: z / (zr * zr + z * z),
        gouy: s.atan(),
    }
}

/// Radial index `p` and azimuthal index `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BeamIndex {
    p: usize,
    ell: i64,
}

impl BeamIndex {
    pub fn new(p: usize, ell: i64) -> Result<Self> {
        if p > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange {
                degree: p,
                max: MAX_DEGREE,
            });
        }
        if ell.unsigned_abs() as usize > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange {
                degree: ell.unsigned_abs() as usize,
                max: MAX_DEGREE,
            });
        }
        Ok(Self { p, ell })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    /// The oscillator mode this beam reduces to at the waist: the beam's
    /// `e^{-i ell phi}` matches `n+ - n- = -ell`, with `min(n+, n-) = p`.
    /// Positions scale as `(x, y) -> (x, y) √2 / w0`.
    pub fn waist_lg_index(&self) -> ModeIndex {
        let abs = self.ell.unsigned_abs() as usize;
        let (n_plus, n_minus) = if self.ell >= 0 {
            (self.p, self.p + abs)
        } else {
            (self.p + abs, self.p)
        };
        // both entries may exceed MAX_DEGREE only when p + |ell| > 64
        ModeIndex::lg(n_plus.min(MAX_DEGREE), n_minus.min(MAX_DEGREE)).expect("clamped to range")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    /// Unit transverse L2 norm at every `z`.
    #[default]
    Unit,
    /// `C = 1`, the bare proportional form.
    Proportional,
}

/// Unit-normalized field at cylindrical position `(r, phi, z)`, `r >= 0`.
pub fn beam_field(index: BeamIndex, params: &BeamParams, r: f64, phi: f64, z: f64) -> Complex64 {
    beam_field_with(index, params, r, phi, z, Normalization::Unit)
}

pub fn beam_field_with(
    index: BeamIndex,
    params: &BeamParams,
    r: f64,
    phi: f64,
    z: f64,
    norm: Normalization,
) -> Complex64 {
    let geo = beam_geometry(params, z);
    let abs_ell = index.ell.unsigned_abs() as usize;
    let ell = index.ell as f64;
    let s = r * SQRT_2 / geo.w;
    let t = s * s;
    let c = match norm {
        Normalization::Unit => {
            (2.0 / PI).sqrt() * sqrt_factorial_ratio(index.p, index.p + abs_ell) / geo.w
        }
        Normalization::Proportional => 1.0,
    };
    let amplitude =
        c * (-0.5 * t).exp() * s.powi(abs_ell as i32) * laguerre_unchecked(index.p, abs_ell, t);
    let phase = ell * phi - params.k * z + 0.5 * params.k * r * r * geo.inv_r
        - (2.0 * index.p as f64 + ell + 1.0) * geo.gouy;
    Complex64::from_polar(amplitude, -phase)
}

/// Field at Cartesian transverse position `(x, y)`.
pub fn beam_field_xy(
    index: BeamIndex,
    params: &BeamParams,
    x: f64,
    y: f64,
    z: f64,
    norm: Normalization,
) -> Complex64 {
    beam_field_with(index, params, x.hypot(y), y.atan2(x), z, norm)
}
