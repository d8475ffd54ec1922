//! Tensor-product cubic B-spline interpolation of a [`Grid2D`].

use num_complex::Complex64;

use crate::grid::{Axis, Grid2D};

/// Bicubic B-spline interpolant through every sample of a grid.
///
/// Coefficients beyond the grid are taken as zero, so the interpolant decays
/// to zero within two cells outside the sampled rectangle. This is accurate
/// for fields that already vanish at the grid edge.
#[derive(Debug, Clone)]
pub struct BicubicSpline {
    x_axis: Axis,
    y_axis: Axis,
    coeffs: Vec<Complex64>,
}

impl BicubicSpline {
    pub fn new(grid: &Grid2D) -> Self {
        let (nx, ny) = (grid.x_axis.count, grid.y_axis.count);
        let mut coeffs = grid.values.clone();
        let fx = prefilter_factors(nx);
        for row in coeffs.chunks_mut(nx) {
            prefilter(row, &fx);
        }
        let fy = prefilter_factors(ny);
        let mut column = vec![Complex64::new(0.0, 0.0); ny];
        for i in 0..nx {
            for j in 0..ny {
                column[j] = coeffs[j * nx + i];
            }
            prefilter(&mut column, &fy);
            for j in 0..ny {
                coeffs[j * nx + i] = column[j];
            }
        }
        Self {
            x_axis: grid.x_axis,
            y_axis: grid.y_axis,
            coeffs,
        }
    }

    pub fn eval(&self, x: f64, y: f64) -> Complex64 {
        let (nx, ny) = (self.x_axis.count as isize, self.y_axis.count as isize);
        let tx = (x - self.x_axis.min) / self.x_axis.step();
        let ty = (y - self.y_axis.min) / self.y_axis.step();
        if !(tx > -2.0 && tx < nx as f64 + 1.0 && ty > -2.0 && ty < ny as f64 + 1.0) {
            return Complex64::new(0.0, 0.0);
        }
        let (ix, iy) = (tx.floor() as isize, ty.floor() as isize);
        let wx = basis_weights(tx - ix as f64);
        let wy = basis_weights(ty - iy as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        for (b, wyb) in wy.iter().enumerate() {
            let j = iy + b as isize - 1;
            if j < 0 || j >= ny {
                continue;
            }
            let row = &self.coeffs[(j * nx) as usize..((j + 1) * nx) as usize];
            let mut inner = Complex64::new(0.0, 0.0);
            for (a, wxa) in wx.iter().enumerate() {
                let i = ix + a as isize - 1;
                if i < 0 || i >= nx {
                    continue;
                }
                inner += row[i as usize] * *wxa;
            }
            acc += inner * *wyb;
        }
        acc
    }
}

/// Cubic B-spline weights for nodes `i-1, i, i+1, i+2` at fraction `t`.
fn basis_weights(t: f64) -> [f64; 4] {
    let s = 1.0 - t;
    let t2 = t * t;
    let t3 = t2 * t;
    [
        s * s * s / 6.0,
        (3.0 * t3 - 6.0 * t2 + 4.0) / 6.0,
        (-3.0 * t3 + 3.0 * t2 + 3.0 * t + 1.0) / 6.0,
        t3 / 6.0,
    ]
}

fn prefilter_factors(n: usize) -> Vec<f64> {
    // modified super-diagonal of the Thomas algorithm
    let mut c = vec![0.0; n];
    c[0] = 0.25;
    for i in 1..n {
        c[i] = 1.0 / (4.0 - c[i - 1]);
    }
    c
}

/// Solves `c[i-1] + 4 c[i] + c[i+1] = 6 f[i]` in place, zero outside.
fn prefilter(values: &mut [Complex64], factors: &[f64]) {
    let n = values.len();
    values[0] = values[0] * 6.0 * factors[0];
    for i in 1..n {
        values[i] = (values[i] * 6.0 - values[i - 1]) * factors[i];
    }
    for i in (0..n - 1).rev() {
        values[i] -= values[i + 1] * factors[i];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolates_samples_exactly() {
        let xa = Axis::new(-2.0, 3.0, 11).unwrap();
        let ya = Axis::new(-1.0, 1.0, 9).unwrap();
        let g = Grid2D::sample(xa, ya, |x, y| Complex64::new(x.sin() + y * y, x * y));
        let s = BicubicSpline::new(&g);
        for (x, y, v) in g.iter() {
            assert!((s.eval(x, y) - v).norm() < 1e-12);
        }
    }

    #[test]
    fn fourth_order_on_gaussian() {
        let f = |x: f64, y: f64| (-(x * x + y * y) / 2.0).exp();
        let mut errs = Vec::new();
        for &n in &[65usize, 129] {
            let a = Axis::symmetric(8.0, n).unwrap();
            let g = Grid2D::sample(a, a, |x, y| Complex64::new(f(x, y), 0.0));
            let s = BicubicSpline::new(&g);
            let mut err: f64 = 0.0;
            for i in 0..200 {
                let x = -3.0 + 0.0301 * i as f64;
                let y = 0.7 - 0.0217 * i as f64;
                err = err.max((s.eval(x, y).re - f(x, y)).abs());
            }
            errs.push(err);
        }
        let order = (errs[0] / errs[1]).log2();
        assert!(order > 3.5, "observed order {order}, errs {errs:?}");
    }

    #[test]
    fn zero_far_outside() {
        let a = Axis::symmetric(1.0, 5).unwrap();
        let g = Grid2D::sample(a, a, |_, _| Complex64::new(1.0, 0.0));
        let s = BicubicSpline::new(&g);
        assert_eq!(s.eval(5.0, 0.0), Complex64::new(0.0, 0.0));
        assert_eq!(s.eval(0.0, -3.1), Complex64::new(0.0, 0.0));
    }
}
