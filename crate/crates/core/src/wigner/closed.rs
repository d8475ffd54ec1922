//! Closed forms for Wigner transforms of Hermite functions, LG and HG modes.

use std::f64::consts::{FRAC_1_PI, FRAC_1_SQRT_2};

use num_complex::Complex64;

use super::PhasePoint4;
use crate::specfun::{check_degree, laguerre_unchecked, INV_SQRT_PI};
use crate::Result;

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// `W(h_j, h_k)(x, y)` in closed form.
///
/// With `z = x + iy`, `rho = |z|`, `phi = arg z`:
/// `pi^{-1/2} (k!/j!)^{1/2} (-1)^k rho^{j-k} e^{i(j-k)phi} e^{-rho^2/2} L^{j-k}_k(rho^2)`
/// for `j >= k`, and the conjugate-phase mirror for `j <= k`. This is the
/// LG mode `|j k>`, evaluated here in polar form so that it is an
/// independent code path from [`crate::modes::lg_mode`].
pub fn wigner_hermite_closed(j: usize, k: usize, x: f64, y: f64) -> Result<Complex64> {
    check_degree(j)?;
    check_degree(k)?;
    Ok(hermite_closed_unchecked(j, k, x, y))
}

fn hermite_closed_unchecked(j: usize, k: usize, x: f64, y: f64) -> Complex64 {
    let (lo, hi) = if j >= k { (k, j) } else { (j, k) };
    let alpha = hi - lo;
    let rho2 = x * x + y * y;
    let phi = y.atan2(x);
    let sign = if lo % 2 == 0 { 1.0 } else { -1.0 };
    let magnitude = INV_SQRT_PI
        * (0.5 * (ln_factorial(lo) - ln_factorial(hi))).exp()
        * sign
        * rho2.sqrt().powi(alpha as i32)
        * (-0.5 * rho2).exp()
        * laguerre_unchecked(lo, alpha, rho2);
    let angle = if j >= k {
        alpha as f64 * phi
    } else {
        -(alpha as f64) * phi
    };
    Complex64::from_polar(1.0, angle) * magnitude
}

/// `W_2(~W(h_jk), ~W(h_mn))` as the product of two LG modes at the rotated
/// arguments `((x1 + xi2)/√2, (xi1 - x2)/√2)` and `((x1 - xi2)/√2, (xi1 + x2)/√2)`.
pub fn wigner_lg_closed(
    j: usize,
    k: usize,
    m: usize,
    n: usize,
    p: &PhasePoint4,
) -> Result<Complex64> {
    for d in [j, k, m, n] {
        check_degree(d)?;
    }
    let a = hermite_closed_unchecked(
        j,
        m,
        (p.x1 + p.xi2) * FRAC_1_SQRT_2,
        (p.xi1 - p.x2) * FRAC_1_SQRT_2,
    );
    let b = hermite_closed_unchecked(
        k,
        n,
        (p.x1 - p.xi2) * FRAC_1_SQRT_2,
        (p.xi1 + p.x2) * FRAC_1_SQRT_2,
    );
    Ok(a * b)
}

/// Diagonal LG Wigner function
/// `pi^{-1} (-1)^{j+k} e^{-Q0} L^0_j(Q0 + Q2) L^0_k(Q0 - Q2)`.
pub fn wigner_lg_diag(j: usize, k: usize, p: &PhasePoint4) -> Result<f64> {
    check_degree(j)?;
    check_degree(k)?;
    Ok(diag_formula(j, k, p.q0(), p.q2()))
}

/// `W_2(h_jk, h_mn) = ~W(h_jm)(x1, xi1) ~W(h_kn)(x2, xi2)`.
pub fn wigner_hg_closed(
    j: usize,
    k: usize,
    m: usize,
    n: usize,
    p: &PhasePoint4,
) -> Result<Complex64> {
    for d in [j, k, m, n] {
        check_degree(d)?;
    }
    Ok(hermite_closed_unchecked(j, m, p.x1, p.xi1) * hermite_closed_unchecked(k, n, p.x2, p.xi2))
}

/// Diagonal HG Wigner function, the `Q3` analogue of [`wigner_lg_diag`].
pub fn wigner_hg_diag(j: usize, k: usize, p: &PhasePoint4) -> Result<f64> {
    check_degree(j)?;
    check_degree(k)?;
    Ok(diag_formula(j, k, p.q0(), p.q3()))
}

fn diag_formula(j: usize, k: usize, q0: f64, q: f64) -> f64 {
    let sign = if (j + k).is_multiple_of(2) { 1.0 } else { -1.0 };
    FRAC_1_PI
        * sign
        * (-q0).exp()
        * laguerre_unchecked(j, 0, q0 + q)
        * laguerre_unchecked(k, 0, q0 - q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::{lg_mode, ModeIndex};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a.re - b.re).abs() <= tol && (a.im - b.im).abs() <= tol
    }

    fn random_point(rng: &mut ChaCha8Rng) -> PhasePoint4 {
        PhasePoint4::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        )
    }

    #[test]
    fn hermite_closed_examples() {
        for &(x, y) in &[(0.0, 0.0), (1.0, -0.5), (-2.0, 3.0)] {
            let want = (-(x * x + y * y) / 2.0f64).exp() / PI.sqrt();
            assert!(close(
                wigner_hermite_closed(0, 0, x, y).unwrap(),
                Complex64::new(want, 0.0),
                1e-15
            ));
        }
        for j in 0..6 {
            for k in 0..6 {
                let a = wigner_hermite_closed(j, k, 0.9, -1.4).unwrap();
                let b = wigner_hermite_closed(k, j, 0.9, -1.4).unwrap();
                assert!(close(a, b.conj(), 1e-15));
            }
        }
        assert!(wigner_hermite_closed(65, 0, 0.0, 0.0).is_err());
    }

    #[test]
    fn hermite_closed_is_lg_mode() {
        for j in 0..=8 {
            for k in 0..=8 {
                for a in -4..=4 {
                    for b in -4..=4 {
                        let (x, y) = (a as f64, b as f64);
                        let c = wigner_hermite_closed(j, k, x, y).unwrap();
                        let l = lg_mode(ModeIndex::lg(j, k).unwrap(), x, y).unwrap();
                        assert!(close(c, l, 1e-12), "({j},{k}) at ({x},{y})");
                    }
                }
            }
        }
    }

    #[test]
    fn lg_diag_examples() {
        let o = PhasePoint4::origin();
        assert!((wigner_lg_diag(0, 0, &o).unwrap() - FRAC_1_PI).abs() < 1e-16);
        assert!((wigner_lg_diag(1, 1, &o).unwrap() - FRAC_1_PI).abs() < 1e-16);
        assert!((wigner_lg_diag(1, 0, &o).unwrap() + FRAC_1_PI).abs() < 1e-16);
        // Q0 = 1, Q2 = 1 at x = (1, 0), xi = (0, 1)
        let p = PhasePoint4::new(1.0, 0.0, 0.0, 1.0);
        assert_eq!((p.q0(), p.q2()), (1.0, 1.0));
        let want = -FRAC_1_PI * (-1.0f64).exp();
        assert!((wigner_lg_diag(2, 0, &p).unwrap() - want).abs() < 1e-15);
        let v = wigner_lg_closed(0, 0, 0, 0, &o).unwrap();
        assert!(close(v, Complex64::new(FRAC_1_PI, 0.0), 1e-15));
        let v = wigner_hg_closed(0, 0, 0, 0, &o).unwrap();
        assert!(close(v, Complex64::new(FRAC_1_PI, 0.0), 1e-15));
    }

    #[test]
    fn diagonal_products_match_quadratic_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let p = random_point(&mut rng);
            for j in 0..=6 {
                for k in 0..=6 {
                    let lg = wigner_lg_closed(j, k, j, k, &p).unwrap();
                    let d = wigner_lg_diag(j, k, &p).unwrap();
                    assert!(close(lg, Complex64::new(d, 0.0), 1e-12));
                    let hg = wigner_hg_closed(j, k, j, k, &p).unwrap();
                    let d = wigner_hg_diag(j, k, &p).unwrap();
                    assert!(close(hg, Complex64::new(d, 0.0), 1e-12));
                }
            }
        }
    }

    #[test]
    fn product_matches_two_dimensional_oracle() {
        use crate::wigner::{wigner2d, QuadratureSpec};
        let q = QuadratureSpec::default();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let lg10 = |u: f64, v: f64| lg_mode(ModeIndex::lg(1, 0).unwrap(), u, v).unwrap();
        let lg01 = |u: f64, v: f64| lg_mode(ModeIndex::lg(0, 1).unwrap(), u, v).unwrap();
        let p = random_point(&mut rng);
        let oracle = wigner2d(lg10, lg01, p, &q).unwrap();
        assert!(close(
            oracle,
            wigner_lg_closed(1, 0, 0, 1, &p).unwrap(),
            1e-6
        ));

        let h10 = |u: f64, v: f64| {
            Complex64::new(
                crate::modes::hg_mode(ModeIndex::hg(1, 0).unwrap(), u, v).unwrap(),
                0.0,
            )
        };
        let p = random_point(&mut rng);
        let oracle = wigner2d(h10, h10, p, &q).unwrap();
        assert!(close(
            oracle,
            wigner_hg_closed(1, 0, 1, 0, &p).unwrap(),
            1e-6
        ));
    }
}
