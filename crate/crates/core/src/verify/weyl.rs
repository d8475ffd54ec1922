//! Weyl-quantized matrix elements computed two ways.
//!
//! ```text
//! Op(sigma) u(x) = 2^{-3/2} pi^{-1} ∬ e^{i(x-y)xi/√2} sigma((x+y)/√2, xi) u(y) dy dxi
//! <f | Op(sigma) g> = 2^{-1} pi^{-1/2} ∬ sigma(x, xi) W(f, g)(x, xi) dx dxi
//! ```
//!
//! The left side is a direct triple trapezoid sum over `(x, xi, y)`. Because
//! every supported symbol is a polynomial of degree at most two in the first
//! slot, the `y` sum factors into the moments
//! `S_b(xi) = Σ_y w_y e^{-i y xi/√2} y^b g(y)` for `b <= 2`. The right side
//! integrates the symbol against a Wigner grid.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;

use super::{complex_err, CheckResult};
use crate::grid::{edge_weight, Axis, Grid2D};
use crate::specfun::{check_degree, hermite_function_unchecked};
use crate::wigner::{wigner1d_grid, QuadratureSpec};
use crate::{Error, Result};

/// Agreement required between the two pipelines.
pub const WEYL_TOLERANCE: f64 = 1e-6;

/// Quadrature used by the suite for all three axes.
pub const WEYL_QUADRATURE: QuadratureSpec = QuadratureSpec {
    half_width: 12.0,
    nodes: 240,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeylSymbol {
    One,
    X,
    Xi,
    /// `x^2 + xi^2`
    Harmonic,
}

impl WeylSymbol {
    pub const ALL: [WeylSymbol; 4] = [
        WeylSymbol::One,
        WeylSymbol::X,
        WeylSymbol::Xi,
        WeylSymbol::Harmonic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WeylSymbol::One => "one",
            WeylSymbol::X => "x",
            WeylSymbol::Xi => "xi",
            WeylSymbol::Harmonic => "x2+xi2",
        }
    }

    pub fn eval(self, x: f64, xi: f64) -> f64 {
        match self {
            WeylSymbol::One => 1.0,
            WeylSymbol::X => x,
            WeylSymbol::Xi => xi,
            WeylSymbol::Harmonic => x * x + xi * xi,
        }
    }

    /// `(coefficient, power of x, power of xi)` terms.
    fn monomials(self) -> &'static [(f64, u32, u32)] {
        match self {
            WeylSymbol::One => &[(1.0, 0, 0)],
            WeylSymbol::X => &[(1.0, 1, 0)],
            WeylSymbol::Xi => &[(1.0, 0, 1)],
            WeylSymbol::Harmonic => &[(1.0, 2, 0), (1.0, 0, 2)],
        }
    }
}

impl fmt::Display for WeylSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeylSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one" | "1" => Ok(WeylSymbol::One),
            "x" => Ok(WeylSymbol::X),
            "xi" => Ok(WeylSymbol::Xi),
            "x2+xi2" | "harmonic" => Ok(WeylSymbol::Harmonic),
            other => Err(Error::UnsupportedSymbol(other.to_string())),
        }
    }
}

/// `(<h_f | Op(sigma) h_g>, 2^{-1} pi^{-1/2} ∬ sigma W(h_f, h_g))`.
pub fn weyl_pairing(
    sigma: WeylSymbol,
    f: usize,
    g: usize,
    quad: &QuadratureSpec,
) -> Result<(Complex64, Complex64)> {
    Ok(WeylPair::new(f, g, quad)?.sides(sigma))
}

/// Symbol-independent parts of both pipelines for one pair of degrees.
pub(crate) struct WeylPair {
    f: usize,
    points: Vec<(f64, f64)>,
    // moments[l][b] = S_b(xi_l)
    moments: Vec<[Complex64; 3]>,
    wigner: Grid2D,
}

impl WeylPair {
    pub(crate) fn new(f: usize, g: usize, quad: &QuadratureSpec) -> Result<Self> {
        check_degree(f)?;
        check_degree(g)?;
        quad.validate()?;
        let points: Vec<(f64, f64)> = quad.points().collect();
        let moments = points
            .iter()
            .map(|&(xi, _)| {
                let mut s = [Complex64::new(0.0, 0.0); 3];
                for &(y, wy) in &points {
                    let gy = hermite_function_unchecked(g, y);
                    if gy == 0.0 {
                        continue;
                    }
                    let base = Complex64::from_polar(wy * gy, -y * xi * FRAC_1_SQRT_2);
                    s[0] += base;
                    s[1] += base * y;
                    s[2] += base * (y * y);
                }
                s
            })
            .collect();
        let axis = Axis::symmetric(quad.half_width, quad.nodes + 1)?;
        let hf = move |x: f64| Complex64::new(hermite_function_unchecked(f, x), 0.0);
        let hg = move |x: f64| Complex64::new(hermite_function_unchecked(g, x), 0.0);
        let wigner = wigner1d_grid(hf, hg, axis, axis, quad)?;
        Ok(Self {
            f,
            points,
            moments,
            wigner,
        })
    }

    pub(crate) fn sides(&self, sigma: WeylSymbol) -> (Complex64, Complex64) {
        (self.operator_side(sigma), self.symbol_side(sigma))
    }

    fn operator_side(&self, sigma: WeylSymbol) -> Complex64 {
        let c = 0.5 * FRAC_1_SQRT_2 / PI;
        let mut total = Complex64::new(0.0, 0.0);
        for &(x, wx) in &self.points {
            let fx = hermite_function_unchecked(self.f, x);
            if fx == 0.0 {
                continue;
            }
            let mut op_g = Complex64::new(0.0, 0.0);
            for (&(xi, wxi), s) in self.points.iter().zip(&self.moments) {
                let mut term = Complex64::new(0.0, 0.0);
                for &(coeff, a, m) in sigma.monomials() {
                    // ((x + y)/√2)^a summed against g
                    let u = match a {
                        0 => s[0],
                        1 => (s[0] * x + s[1]) * FRAC_1_SQRT_2,
                        _ => (s[0] * (x * x) + s[1] * (2.0 * x) + s[2]) * 0.5,
                    };
                    term += u * (coeff * xi.powi(m as i32));
                }
                op_g += term * Complex64::from_polar(wxi, x * xi * FRAC_1_SQRT_2);
            }
            total += op_g * (c * wx * fx);
        }
        total
    }

    fn symbol_side(&self, sigma: WeylSymbol) -> Complex64 {
        let axis = self.wigner.x_axis;
        let n = axis.count;
        let h = axis.step();
        let mut total = Complex64::new(0.0, 0.0);
        for j in 0..n {
            let xi = axis.node(j);
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, v) in self.wigner.row(j).iter().enumerate() {
                acc += v * (edge_weight(i, n) * sigma.eval(axis.node(i), xi));
            }
            total += acc * edge_weight(j, n);
        }
        total * (h * h * 0.5 / PI.sqrt())
    }
}

/// Compares the two pipelines for one symbol and pair of Hermite degrees.
pub fn weyl_pairing_check(
    sigma: WeylSymbol,
    f: usize,
    g: usize,
    quad: &QuadratureSpec,
) -> Result<CheckResult> {
    let start = Instant::now();
    let (lhs, rhs) = weyl_pairing(sigma, f, g, quad)?;
    let mut c = CheckResult::new(
        format!("{}({f},{g})", sigma.name()),
        complex_err(lhs, rhs),
        WEYL_TOLERANCE,
        quad.nodes + 1,
    )
    .with_value(lhs);
    c.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(c)
}
