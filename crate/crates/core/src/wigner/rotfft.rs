//! `~W F = F_2 R*_{π/4} F` on sampled grids.
//!
//! The input is resampled on the rotated lattice
//! `(R*F)(x, p) = F((x - p)/√2, (x + p)/√2)` with a bicubic spline, then the
//! second variable is Fourier transformed with
//! `(F_2 G)(x, y) = (2pi)^{-1/2} ∫ e^{-ipy} G(x, p) dp`, discretized by an FFT
//! along `p`. The output `x` axis is the input `x` axis; the output `y` axis
//! holds the FFT frequencies `2 pi k / (N dp)` for `k = -floor(N/2) ..`,
//! so its spacing is set by the input `y` spacing.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use super::spline::BicubicSpline;
use crate::grid::{Axis, Grid2D};
use crate::{Error, Result};

/// Frequency axis conjugate to `p_axis` for an `N`-point DFT.
pub fn frequency_axis(p_axis: &Axis) -> Result<Axis> {
    let n = p_axis.count;
    let dy = 2.0 * PI / (n as f64 * p_axis.step());
    let k_min = -((n / 2) as f64);
    Axis::new(k_min * dy, (k_min + (n - 1) as f64) * dy, n)
}

/// Extended Wigner transform of a field sampled on a symmetric uniform grid.
pub fn extended_wigner_rotfft(input: &Grid2D) -> Result<Grid2D> {
    if !input.x_axis.is_symmetric() || !input.y_axis.is_symmetric() {
        return Err(Error::InvalidGrid(
            "rotate-then-FFT needs axes symmetric about zero".into(),
        ));
    }
    let spline = BicubicSpline::new(input);
    let p_axis = input.y_axis;
    let y_axis = frequency_axis(&p_axis)?;
    let n = p_axis.count;
    let dp = p_axis.step();
    let p0 = p_axis.min;
    let k_min = -((n / 2) as isize);

    let fft = FftPlanner::<f64>::new().plan_fft_forward(n);
    let ps = p_axis.nodes();
    let ys = y_axis.nodes();
    // dp (2pi)^{-1/2} e^{-i p0 y_k}
    let prefactor: Vec<Complex64> = ys
        .iter()
        .map(|&y| Complex64::from_polar(dp / (2.0 * PI).sqrt(), -p0 * y))
        .collect();

    let columns: Vec<Vec<Complex64>> = input
        .x_axis
        .nodes()
        .into_par_iter()
        .map(|x| {
            let mut buf: Vec<Complex64> = ps
                .iter()
                .map(|&p| spline.eval((x - p) * FRAC_1_SQRT_2, (x + p) * FRAC_1_SQRT_2))
                .collect();
            fft.process(&mut buf);
            (0..n)
                .map(|j| {
                    let k = k_min + j as isize;
                    buf[k.rem_euclid(n as isize) as usize] * prefactor[j]
                })
                .collect()
        })
        .collect();

    let nx = input.x_axis.count;
    let mut values = vec![Complex64::new(0.0, 0.0); nx * n];
    for (i, col) in columns.iter().enumerate() {
        for (j, v) in col.iter().enumerate() {
            values[j * nx + i] = *v;
        }
    }
    Grid2D::new(input.x_axis, y_axis, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::{hg_mode, lg_mode, ModeIndex};
    use crate::wigner::{extended_wigner, QuadratureSpec};

    fn hg_grid(j: usize, k: usize, half_width: f64, n: usize) -> Grid2D {
        let a = Axis::symmetric(half_width, n).unwrap();
        let idx = ModeIndex::hg(j, k).unwrap();
        Grid2D::sample(a, a, |x, y| {
            Complex64::new(hg_mode(idx, x, y).unwrap(), 0.0)
        })
    }

    fn max_err_vs_lg(out: &Grid2D, j: usize, k: usize) -> f64 {
        let idx = ModeIndex::lg(j, k).unwrap();
        out.iter()
            .map(|(x, y, v)| {
                let d = v - lg_mode(idx, x, y).unwrap();
                d.re.abs().max(d.im.abs())
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn frequency_axis_layout() {
        let p = Axis::symmetric(8.0, 256).unwrap();
        let y = frequency_axis(&p).unwrap();
        let dy = 2.0 * PI / (256.0 * p.step());
        assert!((y.step() - dy).abs() < 1e-12);
        assert!((y.min + 128.0 * dy).abs() < 1e-9);
        assert!(y.node(128).abs() < 1e-9);
        let odd = frequency_axis(&Axis::symmetric(8.0, 257).unwrap()).unwrap();
        assert!(odd.is_symmetric());
    }

    #[test]
    fn ground_state_is_fixed() {
        let input = hg_grid(0, 0, 8.0, 256);
        let out = extended_wigner_rotfft(&input).unwrap();
        let err = max_err_vs_lg(&out, 0, 0);
        assert!(err <= 1e-6, "max error {err}");
    }

    #[test]
    fn first_excited_maps_to_lg() {
        let input = hg_grid(1, 0, 8.0, 256);
        let out = extended_wigner_rotfft(&input).unwrap();
        let err = max_err_vs_lg(&out, 1, 0);
        assert!(err <= 1e-5, "max error {err}");
    }

    #[test]
    fn parseval() {
        for (j, k) in [(0, 0), (2, 1), (0, 3)] {
            let input = hg_grid(j, k, 8.0, 256);
            let out = extended_wigner_rotfft(&input).unwrap();
            assert!((out.norm() - input.norm()).abs() <= 1e-6);
        }
    }

    #[test]
    fn agrees_with_quadrature_on_node() {
        // x = 1 and y = 0 are both output nodes for this grid
        let a = Axis::symmetric(8.0, 1025).unwrap();
        let f = |u: f64, v: f64| Complex64::new((-(u * u + v * v) / 2.0).exp() * u, 0.0);
        let input = Grid2D::sample(a, a, f);
        let out = extended_wigner_rotfft(&input).unwrap();
        let i = (0..a.count)
            .find(|&i| (a.node(i) - 1.0).abs() < 1e-12)
            .unwrap();
        let j = (0..out.y_axis.count)
            .find(|&j| out.y_axis.node(j).abs() < 1e-9)
            .unwrap();
        let quad = extended_wigner(f, 1.0, 0.0, &QuadratureSpec::default()).unwrap();
        let d = out.get(i, j) - quad;
        assert!(
            d.re.abs().max(d.im.abs()) <= 1e-8,
            "{:?} vs {:?}",
            out.get(i, j),
            quad
        );
    }

    #[test]
    fn rejects_asymmetric_grid() {
        let xa = Axis::new(-1.0, 2.0, 16).unwrap();
        let g = Grid2D::sample(xa, xa, |_, _| Complex64::new(0.0, 0.0));
        assert!(matches!(
            extended_wigner_rotfft(&g),
            Err(Error::InvalidGrid(_))
        ));
    }
}
