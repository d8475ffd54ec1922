//! Trapezoid-rule oracles for `W`, `~W` and `W_2`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use rayon::prelude::*;

use super::{PhasePoint4, QuadratureSpec};
use crate::grid::{Axis, Grid2D};
use crate::Result;

fn inv_sqrt_2pi() -> f64 {
    1.0 / (2.0 * PI).sqrt()
}

/// One-dimensional Wigner transform `W(f, g)(x, xi)`.
pub fn wigner1d<F, G>(f: F, g: G, x: f64, xi: f64, quad: &QuadratureSpec) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
    G: Fn(f64) -> Complex64,
{
    quad.validate()?;
    let sum: Complex64 = quad
        .points()
        .map(|(p, w)| {
            let kernel = f((x + p) * FRAC_1_SQRT_2).conj() * g((x - p) * FRAC_1_SQRT_2);
            kernel * Complex64::from_polar(w, p * xi)
        })
        .sum();
    Ok(sum * inv_sqrt_2pi())
}

/// Extended Wigner transform `~W(F)(x, y)` of a function of two variables.
pub fn extended_wigner<F>(f: F, x: f64, y: f64, quad: &QuadratureSpec) -> Result<Complex64>
where
    F: Fn(f64, f64) -> Complex64,
{
    quad.validate()?;
    let sum: Complex64 = quad
        .points()
        .map(|(p, w)| {
            f((x + p) * FRAC_1_SQRT_2, (x - p) * FRAC_1_SQRT_2) * Complex64::from_polar(w, p * y)
        })
        .sum();
    Ok(sum * inv_sqrt_2pi())
}

/// Evaluates `(2pi)^{-1/2} Σ_m w_m e^{i p_m y} kernel(x, p_m)` on a grid.
///
/// The kernel is sampled once per `x` column and the `y` sums reuse a shared
/// phase table, so a grid costs `nx * (P + P * ny)` instead of
/// `nx * ny * P` kernel evaluations.
fn partial_fourier_grid<K>(
    x_axis: Axis,
    y_axis: Axis,
    quad: &QuadratureSpec,
    kernel: K,
) -> Result<Grid2D>
where
    K: Fn(f64, f64) -> Complex64 + Sync,
{
    quad.validate()?;
    let points: Vec<(f64, f64)> = quad.points().collect();
    let ys = y_axis.nodes();
    let ny = ys.len();
    // phase[m * ny + j] = w_m e^{i p_m y_j}
    let phase: Vec<Complex64> = points
        .iter()
        .flat_map(|&(p, w)| ys.iter().map(move |&y| Complex64::from_polar(w, p * y)))
        .collect();
    let norm = inv_sqrt_2pi();
    let columns: Vec<Vec<Complex64>> = x_axis
        .nodes()
        .into_par_iter()
        .map(|x| {
            let mut col = vec![Complex64::new(0.0, 0.0); ny];
            for (m, &(p, _)) in points.iter().enumerate() {
                let k = kernel(x, p);
                if k == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row = &phase[m * ny..(m + 1) * ny];
                for (acc, ph) in col.iter_mut().zip(row) {
                    *acc += k * ph;
                }
            }
            col.iter_mut().for_each(|v| *v *= norm);
            col
        })
        .collect();
    let nx = x_axis.count;
    let mut values = vec![Complex64::new(0.0, 0.0); nx * ny];
    for (i, col) in columns.iter().enumerate() {
        for (j, v) in col.iter().enumerate() {
            values[j * nx + i] = *v;
        }
    }
    Grid2D::new(x_axis, y_axis, values)
}

/// `W(f, g)` on a grid; the grid's `y` axis is the frequency `xi`.
///
/// Produces the same trapezoid sums as [`wigner1d`] node by node.
pub fn wigner1d_grid<F, G>(
    f: F,
    g: G,
    x_axis: Axis,
    xi_axis: Axis,
    quad: &QuadratureSpec,
) -> Result<Grid2D>
where
    F: Fn(f64) -> Complex64 + Sync,
    G: Fn(f64) -> Complex64 + Sync,
{
    partial_fourier_grid(x_axis, xi_axis, quad, |x, p| {
        f((x + p) * FRAC_1_SQRT_2).conj() * g((x - p) * FRAC_1_SQRT_2)
    })
}

/// `~W(F)` on a grid by direct quadrature.
pub fn extended_wigner_grid<F>(
    f: F,
    x_axis: Axis,
    y_axis: Axis,
    quad: &QuadratureSpec,
) -> Result<Grid2D>
where
    F: Fn(f64, f64) -> Complex64 + Sync,
{
    partial_fourier_grid(x_axis, y_axis, quad, |x, p| {
        f((x + p) * FRAC_1_SQRT_2, (x - p) * FRAC_1_SQRT_2)
    })
}

/// Tensor-product trapezoid rule for `W_2(f, g)` at one phase-space point.
///
/// Sampling is split from pairing so that one set of samples of `f` can be
/// paired with many `g` (and vice versa) at the same point.
pub struct Wigner2dKernel {
    point: PhasePoint4,
    nodes: Vec<f64>,
    // w_m e^{i p_m xi1} and w_m e^{i p_m xi2}
    phase1: Vec<Complex64>,
    phase2: Vec<Complex64>,
}

impl Wigner2dKernel {
    pub fn new(point: PhasePoint4, quad: &QuadratureSpec) -> Result<Self> {
        quad.validate()?;
        point.check_finite()?;
        let points: Vec<(f64, f64)> = quad.points().collect();
        Ok(Self {
            point,
            nodes: points.iter().map(|&(p, _)| p).collect(),
            phase1: points
                .iter()
                .map(|&(p, w)| Complex64::from_polar(w, p * point.xi1))
                .collect(),
            phase2: points
                .iter()
                .map(|&(p, w)| Complex64::from_polar(w, p * point.xi2))
                .collect(),
        })
    }

    fn sample<F>(&self, f: F, sign: f64) -> Vec<Complex64>
    where
        F: Fn(f64, f64) -> Complex64 + Sync,
    {
        let (x1, x2) = (self.point.x1, self.point.x2);
        self.nodes
            .par_iter()
            .flat_map_iter(|&p1| {
                let f = &f;
                self.nodes.iter().map(move |&p2| {
                    f(
                        (x1 + sign * p1) * FRAC_1_SQRT_2,
                        (x2 + sign * p2) * FRAC_1_SQRT_2,
                    )
                })
            })
            .collect()
    }

    /// `f((x + p)/√2)` over the node lattice (first argument of `W_2`).
    pub fn sample_plus<F>(&self, f: F) -> Vec<Complex64>
    where
        F: Fn(f64, f64) -> Complex64 + Sync,
    {
        self.sample(f, 1.0)
    }

    /// `g((x - p)/√2)` over the node lattice (second argument of `W_2`).
    pub fn sample_minus<G>(&self, g: G) -> Vec<Complex64>
    where
        G: Fn(f64, f64) -> Complex64 + Sync,
    {
        self.sample(g, -1.0)
    }

    /// Combines samples from [`Self::sample_plus`] and [`Self::sample_minus`].
    pub fn pair(&self, f_plus: &[Complex64], g_minus: &[Complex64]) -> Complex64 {
        let n = self.nodes.len();
        assert_eq!(f_plus.len(), n * n);
        assert_eq!(g_minus.len(), n * n);
        let mut total = Complex64::new(0.0, 0.0);
        for (a, ph1) in self.phase1.iter().enumerate() {
            let mut inner = Complex64::new(0.0, 0.0);
            let fr = &f_plus[a * n..(a + 1) * n];
            let gr = &g_minus[a * n..(a + 1) * n];
            for ((fv, gv), ph2) in fr.iter().zip(gr).zip(&self.phase2) {
                inner += fv.conj() * gv * ph2;
            }
            total += inner * ph1;
        }
        total / (2.0 * PI)
    }
}

/// Two-dimensional Wigner transform `W_2(f, g)(x, xi)` at one point.
pub fn wigner2d<F, G>(f: F, g: G, point: PhasePoint4, quad: &QuadratureSpec) -> Result<Complex64>
where
    F: Fn(f64, f64) -> Complex64 + Sync,
    G: Fn(f64, f64) -> Complex64 + Sync,
{
    let kernel = Wigner2dKernel::new(point, quad)?;
    let fp = kernel.sample_plus(f);
    let gm = kernel.sample_minus(g);
    Ok(kernel.pair(&fp, &gm))
}
