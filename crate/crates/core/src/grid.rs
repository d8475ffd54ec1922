//! Uniform rectangular sampling of complex fields.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::{Error, Result};

/// A uniform axis: `count` nodes from `min` to `max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "non-finite bounds [{min}, {max}]"
            )));
        }
        if min >= max {
            return Err(Error::InvalidGrid(format!(
                "axis not increasing: [{min}, {max}]"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidGrid(format!(
                "axis needs at least 2 nodes, got {count}"
            )));
        }
        Ok(Self { min, max, count })
    }

    /// Symmetric axis `[-half_width, half_width]`.
    pub fn symmetric(half_width: f64, count: usize) -> Result<Self> {
        Self::new(-half_width, half_width, count)
    }

    pub fn step(&self) -> f64 {
        (self.max - self.min) / (self.count - 1) as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        if i + 1 == self.count {
            self.max
        } else {
            self.min + i as f64 * self.step()
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.node(i)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (self.min + self.max).abs() <= 1e-12 * self.max.abs().max(1.0)
    }
}

/// Complex samples on an `x_axis` by `y_axis` grid.
///
/// Storage is row-major with rows along `y`: the sample at `(x_i, y_j)`
/// lives at `values[j * x_axis.count + i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid2D {
    pub x_axis: Axis,
    pub y_axis: Axis,
    pub values: Vec<Complex64>,
}

impl Grid2D {
    pub fn new(x_axis: Axis, y_axis: Axis, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != x_axis.count * y_axis.count {
            return Err(Error::InvalidGrid(format!(
                "{} values for a {}x{} grid",
                values.len(),
                x_axis.count,
                y_axis.count
            )));
        }
        Ok(Self {
            x_axis,
            y_axis,
            values,
        })
    }

    /// Samples `f` at every node, rows in parallel.
    pub fn sample<F>(x_axis: Axis, y_axis: Axis, f: F) -> Self
    where
        F: Fn(f64, f64) -> Complex64 + Sync,
    {
        let xs = x_axis.nodes();
        let values = (0..y_axis.count)
            .into_par_iter()
            .flat_map_iter(|j| {
                let y = y_axis.node(j);
                let f = &f;
                xs.iter().map(move |&x| f(x, y)).collect::<Vec<_>>()
            })
            .collect();
        Self {
            x_axis,
            y_axis,
            values,
        }
    }

    /// Fallible variant of [`Grid2D::sample`]; the first error wins.
    pub fn try_sample<F>(x_axis: Axis, y_axis: Axis, f: F) -> Result<Self>
    where
        F: Fn(f64, f64) -> Result<Complex64> + Sync,
    {
        let xs = x_axis.nodes();
        let rows: Vec<Vec<Complex64>> = (0..y_axis.count)
            .into_par_iter()
            .map(|j| {
                let y = y_axis.node(j);
                xs.iter().map(|&x| f(x, y)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            x_axis,
            y_axis,
            values: rows.concat(),
        })
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.values[j * self.x_axis.count + i]
    }

    pub fn row(&self, j: usize) -> &[Complex64] {
        let n = self.x_axis.count;
        &self.values[j * n..(j + 1) * n]
    }

    /// Iterates `(x, y, value)` in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64, Complex64)> + '_ {
        let n = self.x_axis.count;
        self.values
            .iter()
            .enumerate()
            .map(move |(idx, &v)| (self.x_axis.node(idx % n), self.y_axis.node(idx / n), v))
    }

    /// Trapezoid-weighted inner product `<self|other>` (conjugate-linear in
    /// `self`). Both grids must share axes.
    pub fn inner(&self, other: &Grid2D) -> Result<Complex64> {
        if self.x_axis != other.x_axis || self.y_axis != other.y_axis {
            return Err(Error::InvalidGrid(
                "inner product of mismatched grids".into(),
            ));
        }
        let (nx, ny) = (self.x_axis.count, self.y_axis.count);
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..ny {
            let wy = edge_weight(j, ny);
            for i in 0..nx {
                let w = wy * edge_weight(i, nx);
                acc += w * self.get(i, j).conj() * other.get(i, j);
            }
        }
        Ok(acc * self.x_axis.step() * self.y_axis.step())
    }

    /// Trapezoid L2 norm.
    pub fn norm(&self) -> f64 {
        self.inner(self).map(|v| v.re.sqrt()).unwrap_or(f64::NAN)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

pub(crate) fn edge_weight(i: usize, n: usize) -> f64 {
    if i == 0 || i + 1 == n {
        0.5
    } else {
        1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_validation() {
        assert!(Axis::new(1.0, 1.0, 4).is_err());
        assert!(Axis::new(0.0, 1.0, 1).is_err());
        assert!(Axis::new(f64::NAN, 1.0, 3).is_err());
        let a = Axis::symmetric(4.0, 9).unwrap();
        assert_eq!(a.step(), 1.0);
        assert_eq!(
            a.nodes(),
            vec![-4.0, -3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0, 4.0]
        );
        assert!(a.is_symmetric());
        assert!(!Axis::new(-1.0, 2.0, 4).unwrap().is_symmetric());
    }

    #[test]
    fn layout_is_row_major_in_y() {
        let xa = Axis::new(0.0, 2.0, 3).unwrap();
        let ya = Axis::new(10.0, 11.0, 2).unwrap();
        let g = Grid2D::sample(xa, ya, Complex64::new);
        assert_eq!(g.values.len(), 6);
        assert_eq!(g.get(2, 1), Complex64::new(2.0, 11.0));
        assert_eq!(g.values[4], Complex64::new(1.0, 11.0));
        assert_eq!(g.row(0)[2], Complex64::new(2.0, 10.0));
        assert!(Grid2D::new(xa, ya, vec![Complex64::default(); 5]).is_err());
    }

    #[test]
    fn gaussian_norm() {
        let a = Axis::symmetric(8.0, 161).unwrap();
        let g = Grid2D::sample(a, a, |x, y| {
            Complex64::new(
                (-(x * x + y * y) / 2.0).exp() / std::f64::consts::PI.sqrt(),
                0.0,
            )
        });
        assert!((g.norm() - 1.0).abs() < 1e-12);
    }
}
