use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};
use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::weyl::{WeylPair, WeylSymbol, WEYL_QUADRATURE, WEYL_TOLERANCE};
use super::{complex_err, timed, Budget, CheckResult};
use crate::beam::{beam_field, beam_field_xy, beam_geometry, BeamIndex, BeamParams, Normalization};
use crate::grid::{edge_weight, Axis, Grid2D};
use crate::modes::{
    apply_operator_pointwise, ladder_index_action, lg_mode, Derivatives, Field, LadderAction,
    LadderOp, ModeIndex,
};
use crate::specfun::{
    hermite_function_unchecked, hermite_functions_into, laguerre_unchecked, sqrt_factorial_ratio,
};
use crate::wigner::{
    extended_wigner, extended_wigner_grid, extended_wigner_rotfft, wigner1d, wigner1d_grid,
    wigner_hermite_closed, wigner_hg_closed, wigner_hg_diag, wigner_lg_closed, wigner_lg_diag,
    PhasePoint4, QuadratureSpec, Wigner2dKernel,
};
use crate::Result;

const ORACLE_TOL: f64 = 1e-8;
const EXACT_TOL: f64 = 1e-12;
const FD_TOL: f64 = 1e-6;
const TOTAL_INTEGRAL_TOL: f64 = 1e-7;
const ROTFFT_FIXED_TOL: f64 = 1e-6;
const ROTFFT_MODE_TOL: f64 = 1e-5;

/// Trapezoid rule used wherever a Wigner transform is tabulated on a grid.
/// Integrands there are Gaussian-damped, so a 12-wide window is ample.
const GRID_QUADRATURE: QuadratureSpec = QuadratureSpec {
    half_width: 12.0,
    nodes: 256,
};

/// Trapezoid rule for the 2D oracle in quick runs.
const PRODUCT_QUICK_QUADRATURE: QuadratureSpec = QuadratureSpec {
    half_width: 12.0,
    nodes: 192,
};

fn h(n: usize) -> impl Fn(f64) -> Complex64 + Sync + Copy {
    move |x| Complex64::new(hermite_function_unchecked(n, x), 0.0)
}

fn hg2(j: usize, k: usize) -> impl Fn(f64, f64) -> Complex64 + Sync + Copy {
    move |u, v| {
        Complex64::new(
            hermite_function_unchecked(j, u) * hermite_function_unchecked(k, v),
            0.0,
        )
    }
}

fn lg(j: usize, k: usize) -> impl Fn(f64, f64) -> Complex64 + Sync + Copy {
    move |u, v| crate::modes::lg_unchecked(j, k, u, v)
}

fn pairs(max: usize) -> Vec<(usize, usize)> {
    (0..=max)
        .flat_map(|j| (0..=max).map(move |k| (j, k)))
        .collect()
}

fn kronecker<T: PartialEq>(a: T, b: T) -> Complex64 {
    Complex64::new(if a == b { 1.0 } else { 0.0 }, 0.0)
}

fn uniform_points2(rng: &mut ChaCha8Rng, n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|_| (rng.gen_range(-2.0..=2.0), rng.gen_range(-2.0..=2.0)))
        .collect()
}

fn uniform_points4(rng: &mut ChaCha8Rng, n: usize) -> Vec<PhasePoint4> {
    (0..n)
        .map(|_| {
            PhasePoint4::new(
                rng.gen_range(-2.0..=2.0),
                rng.gen_range(-2.0..=2.0),
                rng.gen_range(-2.0..=2.0),
                rng.gen_range(-2.0..=2.0),
            )
        })
        .collect()
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
}

fn collect<I>(checks: I) -> Result<Vec<CheckResult>>
where
    I: ParallelIterator<Item = Result<CheckResult>>,
{
    checks.collect()
}

/// Trapezoid `∫ f(x) e^{-i x eta} dx / sqrt(2 pi)`.
fn fourier_numeric(f: impl Fn(f64) -> Complex64, eta: f64, quad: &QuadratureSpec) -> Complex64 {
    let s: Complex64 = quad
        .points()
        .map(|(x, w)| f(x) * Complex64::from_polar(w, -x * eta))
        .sum();
    s / (2.0 * PI).sqrt()
}

pub(super) fn properties(rng: &mut ChaCha8Rng, budget: Budget) -> Result<Vec<CheckResult>> {
    let nmax = budget.cap_index(8);
    let quad = QuadratureSpec::default();
    let mut checks = Vec::new();

    let cf: Vec<Complex64> = (0..=nmax).map(|_| random_complex(rng)).collect();
    let cg: Vec<Complex64> = (0..=nmax).map(|_| random_complex(rng)).collect();
    let points = uniform_points2(rng, budget.cap_points(50));
    checks.push(timed("hermiticity", EXACT_TOL, || {
        let sup = |c: &[Complex64]| {
            let c = c.to_vec();
            move |x: f64| {
                let mut buf = vec![0.0; c.len()];
                hermite_functions_into(x, &mut buf);
                c.iter().zip(&buf).map(|(a, b)| a * b).sum::<Complex64>()
            }
        };
        let (f, g) = (sup(&cf), sup(&cg));
        let mut err: f64 = 0.0;
        for &(x, xi) in &points {
            let a = wigner1d(&f, &g, x, xi, &quad)?;
            let b = wigner1d(&g, &f, x, xi, &quad)?;
            err = err.max(complex_err(a, b.conj()));
        }
        Ok((err, points.len()))
    })?);

    let idx = pairs(nmax);
    checks.extend(collect(idx.par_iter().map(|&(j, k)| {
        timed(format!("xi_marginal({j},{k})"), ORACLE_TOL, || {
            let xa = Axis::new(-4.0, 4.0, 17)?;
            let xia = Axis::symmetric(16.0, 257)?;
            let w = wigner1d_grid(h(j), h(k), xa, xia, &quad)?;
            let mut err: f64 = 0.0;
            for i in 0..xa.count {
                let integral: Complex64 = (0..xia.count)
                    .map(|m| w.get(i, m) * edge_weight(m, xia.count))
                    .sum::<Complex64>()
                    * xia.step();
                let u = xa.node(i) * FRAC_1_SQRT_2;
                let want = (2.0 * PI).sqrt() * h(j)(u).conj() * h(k)(u);
                err = err.max(complex_err(integral, want));
            }
            Ok((err, xa.count))
        })
    }))?);

    checks.extend(collect((0..=nmax).into_par_iter().map(|n| {
        timed(format!("fourier_hermite({n})"), ORACLE_TOL, || {
            let axis = Axis::new(-4.0, 4.0, 33)?;
            let phase = Complex64::new(0.0, -1.0).powu(n as u32);
            let err = axis
                .nodes()
                .into_iter()
                .map(|eta| complex_err(fourier_numeric(h(n), eta, &quad), phase * h(n)(eta)))
                .fold(0.0, f64::max);
            Ok((err, axis.count))
        })
    }))?);

    checks.extend(collect(idx.par_iter().map(|&(j, k)| {
        timed(format!("x_marginal({j},{k})"), ORACLE_TOL, || {
            let xa = Axis::symmetric(16.0, 257)?;
            let xia = Axis::new(-4.0, 4.0, 17)?;
            let w = wigner1d_grid(h(j), h(k), xa, xia, &quad)?;
            let mut err: f64 = 0.0;
            for m in 0..xia.count {
                let integral: Complex64 = w
                    .row(m)
                    .iter()
                    .enumerate()
                    .map(|(i, v)| v * edge_weight(i, xa.count))
                    .sum::<Complex64>()
                    * xa.step();
                let eta = xia.node(m) * FRAC_1_SQRT_2;
                let want = (2.0 * PI).sqrt()
                    * fourier_numeric(h(j), eta, &quad).conj()
                    * fourier_numeric(h(k), eta, &quad);
                err = err.max(complex_err(integral, want));
            }
            Ok((err, xia.count))
        })
    }))?);

    checks.extend(collect(idx.par_iter().map(|&(j, k)| {
        timed(
            format!("total_integral({j},{k})"),
            TOTAL_INTEGRAL_TOL,
            || {
                let a = Axis::symmetric(12.0, 193)?;
                let w = wigner1d_grid(h(j), h(k), a, a, &GRID_QUADRATURE)?;
                let total = w
                    .iter()
                    .enumerate()
                    .map(|(n, (_, _, v))| {
                        v * (edge_weight(n % a.count, a.count) * edge_weight(n / a.count, a.count))
                    })
                    .sum::<Complex64>()
                    * (a.step() * a.step());
                let want = kronecker(j, k) * (2.0 * PI.sqrt());
                Ok((complex_err(total, want), a.count * a.count))
            },
        )
    }))?);
    Ok(checks)
}

pub(super) fn moyal(budget: Budget) -> Result<Vec<CheckResult>> {
    let nmax = budget.cap_index(5);
    let a = Axis::symmetric(10.0, 201)?;
    let idx = pairs(nmax);
    let grids: Vec<Grid2D> = idx
        .par_iter()
        .map(|&(j, k)| wigner1d_grid(h(j), h(k), a, a, &GRID_QUADRATURE))
        .collect::<Result<_>>()?;
    let combos: Vec<(usize, usize)> = (0..idx.len())
        .flat_map(|p| (p..idx.len()).map(move |q| (p, q)))
        .collect();
    collect(combos.par_iter().map(|&(p, q)| {
        let ((ja, jb), (jc, jd)) = (idx[p], idx[q]);
        timed(format!("moyal({ja},{jb}|{jc},{jd})"), ORACLE_TOL, || {
            let ip = grids[p].inner(&grids[q])?;
            Ok((complex_err(ip, kronecker(p, q)), a.count * a.count))
        })
    }))
}

pub(super) fn orthogonality(budget: Budget) -> Result<Vec<CheckResult>> {
    let modes: Vec<(usize, usize)> = match budget {
        Budget::Quick => pairs(3),
        Budget::Full => pairs(8).into_iter().filter(|&(p, m)| p + m <= 8).collect(),
    };
    let a = Axis::symmetric(8.0, 161)?;
    let grids: Vec<Grid2D> = modes
        .par_iter()
        .map(|&(p, m)| Grid2D::sample(a, a, lg(p, m)))
        .collect();
    let combos: Vec<(usize, usize)> = (0..modes.len())
        .flat_map(|p| (p..modes.len()).map(move |q| (p, q)))
        .collect();
    let mut checks = collect(combos.par_iter().map(|&(p, q)| {
        let ((a1, b1), (a2, b2)) = (modes[p], modes[q]);
        timed(format!("lg({a1},{b1}|{a2},{b2})"), ORACLE_TOL, || {
            let ip = grids[p].inner(&grids[q])?;
            Ok((complex_err(ip, kronecker(p, q)), a.count * a.count))
        })
    }))?;
    let nmax = budget.cap_index(8);
    let quad = QuadratureSpec::default();
    let hermite: Vec<(usize, usize)> = pairs(nmax).into_iter().filter(|&(m, n)| m <= n).collect();
    checks.extend(collect(hermite.par_iter().map(|&(m, n)| {
        timed(format!("hermite({m},{n})"), ORACLE_TOL, || {
            let ip: f64 = quad
                .points()
                .map(|(x, w)| {
                    w * hermite_function_unchecked(m, x) * hermite_function_unchecked(n, x)
                })
                .sum();
            Ok(((ip - kronecker(m, n).re).abs(), quad.nodes + 1))
        })
    }))?);
    Ok(checks)
}

/// LG operators and the HG operators they intertwine with.
const INTERTWINED: [(LadderOp, LadderOp); 4] = [
    (LadderOp::APlusDag, LadderOp::A1Dag),
    (LadderOp::AMinusDag, LadderOp::A2Dag),
    (LadderOp::APlus, LadderOp::A1),
    (LadderOp::AMinus, LadderOp::A2),
];

pub(super) fn intertwine(rng: &mut ChaCha8Rng, budget: Budget) -> Result<Vec<CheckResult>> {
    let nmax = budget.cap_index(4);
    let points = uniform_points2(rng, budget.cap_points(50));
    let quad = QuadratureSpec::default();
    let cases: Vec<(LadderOp, LadderOp, usize, usize)> = INTERTWINED
        .iter()
        .flat_map(|&(big, small)| {
            pairs(nmax)
                .into_iter()
                .map(move |(j, k)| (big, small, j, k))
        })
        .collect();
    collect(cases.par_iter().map(|&(big, small, j, k)| {
        let name = format!("{}~W=~W{}({j},{k})", big.name(), small.name());
        timed(name, FD_TOL, || {
            let transformed = move |x: f64, y: f64| {
                extended_wigner(hg2(j, k), x, y, &quad).expect("valid quadrature")
            };
            let field = Field::Function(&transformed);
            let image = match ladder_index_action(small, ModeIndex::hg(j, k)?)? {
                LadderAction::Mapped { coeff, target } => Some((coeff, target)),
                LadderAction::Annihilated => None,
            };
            let mut err: f64 = 0.0;
            for &(x, y) in &points {
                let lhs = apply_operator_pointwise(big, &field, x, y, Derivatives::default())?;
                let rhs = match image {
                    Some((c, t)) => extended_wigner(hg2(t.first(), t.second()), x, y, &quad)? * c,
                    None => Complex64::new(0.0, 0.0),
                };
                err = err.max(complex_err(lhs, rhs));
            }
            Ok((err, points.len()))
        })
    }))
}

pub(super) fn closed_forms(budget: Budget) -> Result<Vec<CheckResult>> {
    let nmax = budget.cap_index(8);
    let a = Axis::new(-4.0, 4.0, 21)?;
    let nodes = a.nodes();
    let quad = QuadratureSpec::default();
    let idx = pairs(nmax);
    let mut checks = collect(idx.par_iter().map(|&(j, k)| {
        timed(format!("quadrature({j},{k})"), ORACLE_TOL, || {
            let mut err: f64 = 0.0;
            for &x in &nodes {
                for &y in &nodes {
                    let q = wigner1d(h(j), h(k), x, y, &quad)?;
                    err = err.max(complex_err(q, wigner_hermite_closed(j, k, x, y)?));
                }
            }
            Ok((err, nodes.len() * nodes.len()))
        })
    }))?;
    checks.extend(collect(idx.par_iter().map(|&(j, k)| {
        timed(format!("lg_mode({j},{k})"), EXACT_TOL, || {
            let index = ModeIndex::lg(j, k)?;
            let mut err: f64 = 0.0;
            for &x in &nodes {
                for &y in &nodes {
                    let c = wigner_hermite_closed(j, k, x, y)?;
                    err = err.max(complex_err(c, lg_mode(index, x, y)?));
                }
            }
            Ok((err, nodes.len() * nodes.len()))
        })
    }))?);
    checks.push(timed("fixed_point/quadrature", 1e-10, || {
        let g = extended_wigner_grid(hg2(0, 0), a, a, &quad)?;
        let err = g
            .iter()
            .map(|(x, y, v)| complex_err(v, hg2(0, 0)(x, y)))
            .fold(0.0, f64::max);
        Ok((err, a.count * a.count))
    })?);
    checks.push(timed("fixed_point/rotfft", ROTFFT_FIXED_TOL, || {
        let s = Axis::symmetric(8.0, 256)?;
        let out = extended_wigner_rotfft(&Grid2D::sample(s, s, hg2(0, 0)))?;
        let err = out
            .iter()
            .map(|(x, y, v)| complex_err(v, hg2(0, 0)(x, y)))
            .fold(0.0, f64::max);
        Ok((err, s.count * s.count))
    })?);
    Ok(checks)
}

pub(super) fn product_theorem(rng: &mut ChaCha8Rng, budget: Budget) -> Result<Vec<CheckResult>> {
    let nmax = budget.cap_index(3);
    let points = uniform_points4(rng, budget.cap_points(32));
    let quad = match budget {
        Budget::Quick => PRODUCT_QUICK_QUADRATURE,
        Budget::Full => QuadratureSpec::default(),
    };
    let idx = pairs(nmax);
    let tuples: Vec<(usize, usize)> = (0..idx.len())
        .flat_map(|p| (0..idx.len()).map(move |q| (p, q)))
        .collect();

    let start = Instant::now();
    // errors[point][basis][tuple]
    let mut lg_err = vec![0.0f64; tuples.len()];
    let mut hg_err = vec![0.0f64; tuples.len()];
    for point in &points {
        let kernel = Wigner2dKernel::new(*point, &quad)?;
        for (basis_err, is_lg) in [(&mut lg_err, true), (&mut hg_err, false)] {
            let plus: Vec<Vec<Complex64>> = idx
                .iter()
                .map(|&(j, k)| {
                    if is_lg {
                        kernel.sample_plus(lg(j, k))
                    } else {
                        kernel.sample_plus(hg2(j, k))
                    }
                })
                .collect();
            let minus: Vec<Vec<Complex64>> = idx
                .iter()
                .map(|&(j, k)| {
                    if is_lg {
                        kernel.sample_minus(lg(j, k))
                    } else {
                        kernel.sample_minus(hg2(j, k))
                    }
                })
                .collect();
            let errs: Vec<f64> = tuples
                .par_iter()
                .map(|&(p, q)| {
                    let ((j, k), (m, n)) = (idx[p], idx[q]);
                    let oracle = kernel.pair(&plus[p], &minus[q]);
                    let closed = if is_lg {
                        wigner_lg_closed(j, k, m, n, point)?
                    } else {
                        wigner_hg_closed(j, k, m, n, point)?
                    };
                    Ok(complex_err(oracle, closed))
                })
                .collect::<Result<_>>()?;
            for (acc, e) in basis_err.iter_mut().zip(errs) {
                *acc = acc.max(e);
            }
        }
    }
    let share = start.elapsed().as_secs_f64() * 1e3 / (2 * tuples.len()) as f64;

    let mut checks = Vec::new();
    for (label, errs) in [("lg", &lg_err), ("hg", &hg_err)] {
        for (&(p, q), &e) in tuples.iter().zip(errs.iter()) {
            let ((j, k), (m, n)) = (idx[p], idx[q]);
            let mut c =
                CheckResult::new(format!("{label}({j},{k}|{m},{n})"), e, FD_TOL, points.len());
            c.elapsed_ms = share;
            checks.push(c);
        }
    }

    let dmax = budget.cap_index(6);
    let diag_points = uniform_points4(rng, budget.cap_points(100));
    let didx = pairs(dmax);
    checks.extend(collect(didx.par_iter().map(|&(j, k)| {
        timed(format!("lg_diag({j},{k})"), EXACT_TOL, || {
            let mut err: f64 = 0.0;
            for p in &diag_points {
                let v = wigner_lg_closed(j, k, j, k, p)?;
                err = err.max(complex_err(
                    v,
                    Complex64::new(wigner_lg_diag(j, k, p)?, 0.0),
                ));
            }
            Ok((err, diag_points.len()))
        })
    }))?);
    checks.extend(collect(didx.par_iter().map(|&(j, k)| {
        timed(format!("hg_diag({j},{k})"), EXACT_TOL, || {
            let mut err: f64 = 0.0;
            for p in &diag_points {
                let v = wigner_hg_closed(j, k, j, k, p)?;
                err = err.max(complex_err(
                    v,
                    Complex64::new(wigner_hg_diag(j, k, p)?, 0.0),
                ));
            }
            Ok((err, diag_points.len()))
        })
    }))?);
    Ok(checks)
}

pub(super) fn polarization(rng: &mut ChaCha8Rng, budget: Budget) -> Result<Vec<CheckResult>> {
    let nmax = budget.cap_index(4);
    let points = uniform_points2(rng, budget.cap_points(20));
    let quad = QuadratureSpec::default();
    collect(pairs(nmax).par_iter().map(|&(np, nm)| {
        timed(format!("polarization({np},{nm})"), ORACLE_TOL, || {
            let i = Complex64::i();
            let one = Complex64::new(1.0, 0.0);
            // (coefficient of h_{n-}, weight of W(h_{n+} + c h_{n-}))
            let terms = [
                (one, 0.25 * one),
                (-one, -0.25 * one),
                (-i, 0.25 * i),
                (i, -0.25 * i),
            ];
            let index = ModeIndex::lg(np, nm)?;
            let mut err: f64 = 0.0;
            for &(x, y) in &points {
                let mut acc = Complex64::new(0.0, 0.0);
                for (c, weight) in terms {
                    let f = move |u: f64| h(np)(u) + c * h(nm)(u);
                    acc += wigner1d(f, f, x, y, &quad)? * weight;
                }
                err = err.max(complex_err(acc, lg_mode(index, x, y)?));
            }
            Ok((err, points.len()))
        })
    }))
}

/// A normalized superposition `Σ c_jk h_jk` over `j + k <= degree`.
#[derive(Clone)]
struct HgSuperposition {
    degree: usize,
    terms: Vec<(usize, usize, Complex64)>,
}

impl HgSuperposition {
    fn random(rng: &mut ChaCha8Rng, degree: usize) -> Self {
        let mut terms: Vec<(usize, usize, Complex64)> = pairs(degree)
            .into_iter()
            .filter(|&(j, k)| j + k <= degree)
            .map(|(j, k)| (j, k, random_complex(rng)))
            .collect();
        let norm = terms.iter().map(|t| t.2.norm_sqr()).sum::<f64>().sqrt();
        terms.iter_mut().for_each(|t| t.2 /= norm);
        Self { degree, terms }
    }

    fn eval(&self, u: f64, v: f64) -> Complex64 {
        let mut hu = [0.0; 16];
        let mut hv = [0.0; 16];
        hermite_functions_into(u, &mut hu[..=self.degree]);
        hermite_functions_into(v, &mut hv[..=self.degree]);
        self.terms
            .iter()
            .map(|&(j, k, c)| c * (hu[j] * hv[k]))
            .sum()
    }

    fn inner(&self, other: &Self) -> Complex64 {
        self.terms
            .iter()
            .zip(&other.terms)
            .map(|(a, b)| a.2.conj() * b.2)
            .sum()
    }
}

pub(super) fn unitarity(rng: &mut ChaCha8Rng, budget: Budget) -> Result<Vec<CheckResult>> {
    let degree = budget.cap_index(5);
    let sups: Vec<HgSuperposition> = (0..budget.cap_points(10))
        .map(|_| HgSuperposition::random(rng, degree))
        .collect();
    let a = Axis::symmetric(10.0, 201)?;
    let grids: Vec<Grid2D> = sups
        .par_iter()
        .map(|s| extended_wigner_grid(|u, v| s.eval(u, v), a, a, &GRID_QUADRATURE))
        .collect::<Result<_>>()?;
    let combos: Vec<(usize, usize)> = (0..sups.len())
        .flat_map(|p| (p..sups.len()).map(move |q| (p, q)))
        .collect();
    let mut checks = collect(combos.par_iter().map(|&(p, q)| {
        timed(format!("superposition({p},{q})"), FD_TOL, || {
            let ip = grids[p].inner(&grids[q])?;
            Ok((complex_err(ip, sups[p].inner(&sups[q])), a.count * a.count))
        })
    }))?;

    let s = Axis::symmetric(8.0, 256)?;
    checks.push(timed("rotfft/lg(1,0)", ROTFFT_MODE_TOL, || {
        let out = extended_wigner_rotfft(&Grid2D::sample(s, s, hg2(1, 0)))?;
        let err = out
            .iter()
            .map(|(x, y, v)| complex_err(v, lg(1, 0)(x, y)))
            .fold(0.0, f64::max);
        Ok((err, s.count * s.count))
    })?);
    checks.extend(collect(sups.par_iter().take(2).enumerate().map(
        |(n, sup)| {
            timed(format!("rotfft/parseval({n})"), ROTFFT_FIXED_TOL, || {
                let fine = Axis::symmetric(8.0, 512)?;
                let input = Grid2D::sample(fine, fine, |u, v| sup.eval(u, v));
                let out = extended_wigner_rotfft(&input)?;
                Ok(((out.norm() - input.norm()).abs(), fine.count * fine.count))
            })
        },
    ))?);
    Ok(checks)
}

pub(super) fn weyl(budget: Budget) -> Result<Vec<CheckResult>> {
    let nmax = budget.cap_index(4);
    let per_pair: Vec<Vec<CheckResult>> = pairs(nmax)
        .par_iter()
        .map(|&(f, g)| {
            let start = Instant::now();
            let pair = WeylPair::new(f, g, &WEYL_QUADRATURE)?;
            let mut out = Vec::new();
            for sigma in WeylSymbol::ALL {
                let (lhs, rhs) = pair.sides(sigma);
                out.push(
                    CheckResult::new(
                        format!("{}({f},{g})", sigma.name()),
                        complex_err(lhs, rhs),
                        WEYL_TOLERANCE,
                        WEYL_QUADRATURE.nodes + 1,
                    )
                    .with_value(lhs),
                );
                if sigma == WeylSymbol::One {
                    let err =
                        complex_err(lhs, kronecker(f, g)).max(complex_err(rhs, kronecker(f, g)));
                    out.push(CheckResult::new(
                        format!("identity({f},{g})"),
                        err,
                        WEYL_TOLERANCE,
                        WEYL_QUADRATURE.nodes + 1,
                    ));
                }
            }
            let share = start.elapsed().as_secs_f64() * 1e3 / out.len() as f64;
            out.iter_mut().for_each(|c| c.elapsed_ms = share);
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_pair.into_iter().flatten().collect())
}

const BEAM_PARAMS: [(f64, f64); 2] = [(1.0, 10.0), (0.7, 3.0)];

pub(super) fn beam(budget: Budget) -> Result<Vec<CheckResult>> {
    let pmax = budget.cap_index(3);
    let lmax = budget.cap_index(3) as i64;
    let indices: Vec<BeamIndex> = (0..=pmax)
        .flat_map(|p| (-lmax..=lmax).map(move |l| BeamIndex::new(p, l)))
        .collect::<Result<_>>()?;
    let params: Vec<BeamParams> = BEAM_PARAMS
        .iter()
        .map(|&(w0, k)| BeamParams::new(w0, k))
        .collect::<Result<_>>()?;

    let mut checks = collect(indices.par_iter().map(|&idx| {
        timed(
            format!("waist_ratio({},{})", idx.p(), idx.ell()),
            ORACLE_TOL,
            || {
                let lg_index = idx.waist_lg_index();
                let mut worst: f64 = 0.0;
                let mut samples = 0;
                for bp in &params {
                    let w0 = bp.waist();
                    let scale = SQRT_2 / w0;
                    let mut ratios = Vec::new();
                    for i in -12..=12 {
                        for j in -12..=12 {
                            let (x, y) = (0.125 * w0 * i as f64, 0.125 * w0 * j as f64);
                            let m = lg_mode(lg_index, x * scale, y * scale)?;
                            if m.norm() < 1e-3 {
                                continue;
                            }
                            ratios.push(beam_field_xy(idx, bp, x, y, 0.0, Normalization::Unit) / m);
                        }
                    }
                    let n = ratios.len() as f64;
                    let mean = ratios.iter().sum::<Complex64>() / n;
                    let var = ratios.iter().map(|r| (r - mean).norm_sqr()).sum::<f64>() / n;
                    worst = worst.max(var.sqrt());
                    samples += ratios.len();
                }
                Ok((worst, samples))
            },
        )
    }))?;

    checks.extend(collect(indices.par_iter().map(|&idx| {
        timed(
            format!("waist_reduction({},{})", idx.p(), idx.ell()),
            EXACT_TOL,
            || {
                let abs = idx.ell().unsigned_abs() as usize;
                let mut err: f64 = 0.0;
                let mut samples = 0;
                for bp in &params {
                    let w0 = bp.waist();
                    let c = (2.0 / PI).sqrt() * sqrt_factorial_ratio(idx.p(), idx.p() + abs) / w0;
                    for ri in 0..12 {
                        let r = 0.2 * w0 * ri as f64;
                        for phi in [-2.5, -0.4, 0.0, 1.1, 3.0] {
                            let t = 2.0 * r * r / (w0 * w0);
                            let want = Complex64::from_polar(
                                c * (-r * r / (w0 * w0)).exp()
                                    * (r * SQRT_2 / w0).powi(abs as i32)
                                    * laguerre_unchecked(idx.p(), abs, t),
                                -(idx.ell() as f64) * phi,
                            );
                            err = err.max(complex_err(beam_field(idx, bp, r, phi, 0.0), want));
                            samples += 1;
                        }
                    }
                }
                Ok((err, samples))
            },
        )
    }))?);

    checks.push(timed("gouy_rayleigh", EXACT_TOL, || {
        let err = params
            .iter()
            .map(|bp| (beam_geometry(bp, bp.rayleigh_range()).gouy - PI / 4.0).abs())
            .fold(0.0, f64::max);
        Ok((err, params.len()))
    })?);

    checks.push(timed("gouy_monotone", 0.5, || {
        let mut violations = 0usize;
        let mut samples = 0;
        for bp in &params {
            let zr = bp.rayleigh_range();
            let mut last = -PI / 2.0;
            for i in -400..=400 {
                let g = beam_geometry(bp, 0.05 * zr * i as f64).gouy;
                if !(g > last && g < PI / 2.0) {
                    violations += 1;
                }
                last = g;
                samples += 1;
            }
        }
        Ok((violations as f64, samples))
    })?);

    checks.extend(collect(indices.par_iter().map(|&idx| {
        timed(format!("helical({},{})", idx.p(), idx.ell()), 1e-10, || {
            let mut err: f64 = 0.0;
            let mut samples = 0;
            for bp in &params {
                let zr = bp.rayleigh_range();
                for z in [0.0, 0.5 * zr, -2.0 * zr] {
                    let r = 0.37 * beam_geometry(bp, z).w;
                    let base = beam_field(idx, bp, r, 0.0, z);
                    for n in 1..=12 {
                        let phi = 0.5 * n as f64;
                        let v = beam_field(idx, bp, r, phi, z);
                        let rel = v * Complex64::from_polar(1.0, idx.ell() as f64 * phi) / base;
                        err = err.max(rel.arg().abs());
                        samples += 1;
                    }
                }
            }
            Ok((err, samples))
        })
    }))?);

    checks.extend(collect(indices.par_iter().map(|&idx| {
        timed(
            format!("norm({},{})", idx.p(), idx.ell()),
            ORACLE_TOL,
            || {
                let bp = &params[0];
                let zr = bp.rayleigh_range();
                let mut err: f64 = 0.0;
                for z in [0.0, zr, 3.0 * zr] {
                    let w = beam_geometry(bp, z).w;
                    let half = 7.0 * w;
                    let n = 400;
                    let step = 2.0 * half / n as f64;
                    let mut acc = 0.0;
                    for i in 0..n {
                        let x = -half + i as f64 * step;
                        for j in 0..n {
                            let y = -half + j as f64 * step;
                            acc += beam_field_xy(idx, bp, x, y, z, Normalization::Unit).norm_sqr();
                        }
                    }
                    err = err.max((acc * step * step - 1.0).abs());
                }
                Ok((err, 3 * 400 * 400))
            },
        )
    }))?);
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::hg_mode;
    use rand::SeedableRng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(1)
    }

    fn assert_all_pass(checks: &[CheckResult]) {
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn orthogonality_quick_counts_pairs() {
        let checks = orthogonality(Budget::Quick).unwrap();
        // 16 LG modes and 4 Hermite degrees, unordered pairs of each
        assert_eq!(checks.len(), 16 * 17 / 2 + 4 * 5 / 2);
        assert_all_pass(&checks);
    }

    #[test]
    fn intertwine_quick() {
        let checks = intertwine(&mut rng(), Budget::Quick).unwrap();
        assert_eq!(checks.len(), 4 * 16);
        assert!(checks.iter().all(|c| c.samples == 8));
        assert_all_pass(&checks);
    }

    #[test]
    fn unitarity_quick() {
        let checks = unitarity(&mut rng(), Budget::Quick).unwrap();
        assert_all_pass(&checks);
    }

    #[test]
    fn superposition_is_normalized() {
        let s = HgSuperposition::random(&mut rng(), 5);
        assert_eq!(s.terms.len(), 21);
        assert!((s.inner(&s).re - 1.0).abs() < 1e-14);
        let want: Complex64 = s
            .terms
            .iter()
            .map(|&(j, k, c)| c * hg_mode(ModeIndex::hg(j, k).unwrap(), 0.3, -1.2).unwrap())
            .sum();
        assert!(complex_err(s.eval(0.3, -1.2), want) < 1e-15);
    }

    #[test]
    fn numeric_fourier_of_gaussian() {
        let q = QuadratureSpec::default();
        for eta in [0.0, 0.7, -2.0] {
            let v = fourier_numeric(h(0), eta, &q);
            assert!(complex_err(v, h(0)(eta)) < 1e-14);
        }
    }
}
