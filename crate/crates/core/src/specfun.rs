//! Hermite and Laguerre families evaluated by three-term recurrence.
//!
//! Only the recurrences are used; factorials never appear, so every family
//! stays finite up to [`MAX_DEGREE`]. Beyond that degree evaluation fails
//! instead of degrading silently.

use crate::{Error, Result};

/// Largest supported polynomial degree (and Laguerre superscript).
pub const MAX_DEGREE: usize = 64;

/// A validated `(n, alpha)` pair for the polynomial families.
///
/// `alpha` is only meaningful for Laguerre polynomials; Hermite evaluation
/// ignores it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyOrder {
    n: usize,
    alpha: usize,
}

impl PolyOrder {
    pub fn new(n: usize, alpha: usize) -> Result<Self> {
        check_degree(n)?;
        check_degree(alpha)?;
        Ok(Self { n, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn laguerre(&self, x: f64) -> Result<f64> {
        laguerre(self.n, self.alpha, x)
    }

    pub fn hermite_poly(&self, x: f64) -> Result<f64> {
        hermite_poly(self.n, x)
    }

    pub fn hermite_function(&self, x: f64) -> Result<f64> {
        hermite_function(self.n, x)
    }
}

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            max: MAX_DEGREE,
        });
    }
    Ok(())
}

fn check_finite(x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(x))
    }
}

/// Physicists' Hermite polynomial `H_n(x)`, with `H_0 = 1`, `H_1 = 2x`.
pub fn hermite_poly(n: usize, x: f64) -> Result<f64> {
    check_degree(n)?;
    check_finite(x)?;
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `pi^{-1/4}`, the peak of the ground-state Hermite function.
pub const GROUND_PEAK: f64 = 0.751_125_544_464_942_5;

/// Fills `out[0..=n]` with `h_0(x) ..= h_n(x)` using the normalized
/// recurrence. No range checks; callers validate.
pub(crate) fn hermite_functions_into(x: f64, out: &mut [f64]) {
    if out.is_empty() {
        return;
    }
    out[0] = GROUND_PEAK * (-0.5 * x * x).exp();
    if out.len() > 1 {
        out[1] = std::f64::consts::SQRT_2 * x * out[0];
    }
    for k in 1..out.len().saturating_sub(1) {
        let kf = k as f64;
        out[k + 1] = x * (2.0 / (kf + 1.0)).sqrt() * out[k] - (kf / (kf + 1.0)).sqrt() * out[k - 1];
    }
}

/// All Hermite functions `h_0(x) ..= h_n(x)`.
pub fn hermite_functions(n: usize, x: f64) -> Result<Vec<f64>> {
    check_degree(n)?;
    check_finite(x)?;
    let mut out = vec![0.0; n + 1];
    hermite_functions_into(x, &mut out);
    Ok(out)
}

/// Normalized Hermite function
/// `h_n(x) = pi^{-1/4} (n!)^{-1/2} 2^{-n/2} e^{-x^2/2} H_n(x)`.
pub fn hermite_function(n: usize, x: f64) -> Result<f64> {
    check_degree(n)?;
    check_finite(x)?;
    Ok(hermite_function_unchecked(n, x))
}

pub(crate) fn hermite_function_unchecked(n: usize, x: f64) -> f64 {
    let h0 = GROUND_PEAK * (-0.5 * x * x).exp();
    if n == 0 {
        return h0;
    }
    let (mut prev, mut cur) = (h0, std::f64::consts::SQRT_2 * x * h0);
    for k in 1..n {
        let kf = k as f64;
        let next = x * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `h_n'(x) = sqrt(n/2) h_{n-1}(x) - sqrt((n+1)/2) h_{n+1}(x)`.
pub fn hermite_function_derivative(n: usize, x: f64) -> Result<f64> {
    check_degree(n)?;
    check_finite(x)?;
    Ok(hermite_function_derivative_unchecked(n, x))
}

pub(crate) fn hermite_function_derivative_unchecked(n: usize, x: f64) -> f64 {
    // h_{n+1} may sit one past MAX_DEGREE; the recurrence is still fine there.
    let mut h = [0.0; MAX_DEGREE + 2];
    hermite_functions_into(x, &mut h[..n + 2]);
    let up = ((n as f64 + 1.0) / 2.0).sqrt() * h[n + 1];
    if n == 0 {
        -up
    } else {
        (n as f64 / 2.0).sqrt() * h[n - 1] - up
    }
}

/// Generalized Laguerre polynomial `L^alpha_n(x)` for integer `alpha >= 0`.
pub fn laguerre(n: usize, alpha: usize, x: f64) -> Result<f64> {
    check_degree(n)?;
    check_degree(alpha)?;
    check_finite(x)?;
    Ok(laguerre_unchecked(n, alpha, x))
}

pub(crate) fn laguerre_unchecked(n: usize, alpha: usize, x: f64) -> f64 {
    let a = alpha as f64;
    if n == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, 1.0 + a - x);
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - x) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `pi^{-1/2}`
pub(crate) const INV_SQRT_PI: f64 = 0.564_189_583_547_756_3;

/// `sqrt(small! / large!)` as a running product.
pub(crate) fn sqrt_factorial_ratio(small: usize, large: usize) -> f64 {
    debug_assert!(small <= large);
    ((small + 1)..=large)
        .map(|k| 1.0 / (k as f64).sqrt())
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// Coefficients (ascending powers) of `H_n` from repeated symbolic
    /// differentiation: `d/dx [P e^{-x^2}] = (P' - 2xP) e^{-x^2}`.
    fn rodrigues_hermite(n: usize) -> Vec<f64> {
        let mut p = vec![1.0];
        for _ in 0..n {
            let mut next = vec![0.0; p.len() + 1];
            for (k, &c) in p.iter().enumerate() {
                if k > 0 {
                    next[k - 1] += k as f64 * c;
                }
                next[k + 1] -= 2.0 * c;
            }
            p = next;
        }
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        p.iter().map(|c| sign * c).collect()
    }

    /// Coefficients of `L^alpha_n` from `x^{-a} e^x / n! d^n/dx^n (e^{-x} x^{n+a})`,
    /// with `d/dx [P e^{-x}] = (P' - P) e^{-x}`.
    fn rodrigues_laguerre(n: usize, alpha: usize) -> Vec<f64> {
        let mut p = vec![0.0; n + alpha + 1];
        p[n + alpha] = 1.0;
        for _ in 0..n {
            let mut next = vec![0.0; p.len()];
            for (k, &c) in p.iter().enumerate() {
                if k > 0 {
                    next[k - 1] += k as f64 * c;
                }
                next[k] -= c;
            }
            p = next;
        }
        let fact: f64 = (1..=n).map(|k| k as f64).product();
        // lowest alpha coefficients vanish: x^{n+a} differentiated n times
        p[alpha..].iter().map(|c| c / fact).collect()
    }

    fn horner(coeffs: &[f64], x: f64) -> f64 {
        coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    fn factorial(n: usize) -> f64 {
        (1..=n).map(|k| k as f64).product()
    }

    #[test]
    fn hermite_poly_examples() {
        assert_eq!(hermite_poly(0, 0.7).unwrap(), 1.0);
        assert_eq!(hermite_poly(1, 2.0).unwrap(), 4.0);
        assert_eq!(hermite_poly(2, 1.0).unwrap(), 2.0);
    }

    #[test]
    fn hermite_poly_matches_rodrigues() {
        for n in 0..=6 {
            let coeffs = rodrigues_hermite(n);
            for &x in &[-2.3, -0.4, 0.0, 0.9, 1.7, 3.1] {
                let want = horner(&coeffs, x);
                let got = hermite_poly(n, x).unwrap();
                let scale = want.abs().max(1.0);
                assert!(
                    (got - want).abs() <= 1e-9 * scale,
                    "n={n} x={x}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn hermite_function_examples() {
        assert!((hermite_function(0, 0.0).unwrap() - 0.751_125_544_464_942_5).abs() < 1e-15);
        assert_eq!(hermite_function(1, 0.0).unwrap(), 0.0);
        let x: f64 = 1.25;
        let want = PI.powf(-0.25) / (factorial(3) * 8.0).sqrt()
            * (-x * x / 2.0).exp()
            * hermite_poly(3, x).unwrap();
        assert!((hermite_function(3, x).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn hermite_function_matches_factorial_formula() {
        for n in 0..=20 {
            for &x in &[-3.0f64, -1.1, 0.3, 2.2] {
                let want = PI.powf(-0.25) / (factorial(n) * 2f64.powi(n as i32)).sqrt()
                    * (-x * x / 2.0).exp()
                    * hermite_poly(n, x).unwrap();
                let got = hermite_function(n, x).unwrap();
                assert!((got - want).abs() < 1e-12, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(hermite_function_derivative(0, 0.0).unwrap(), 0.0);
        let want = -PI.powf(-0.25) * (-0.5f64).exp();
        assert!((hermite_function_derivative(0, 1.0).unwrap() - want).abs() < 1e-15);
        let h = 1e-5;
        let fd = (hermite_function(2, 0.5 + h).unwrap() - hermite_function(2, 0.5 - h).unwrap())
            / (2.0 * h);
        assert!((hermite_function_derivative(2, 0.5).unwrap() - fd).abs() < 1e-8);
    }

    #[test]
    fn derivative_matches_finite_difference_at_cap() {
        let h = 1e-5;
        for &n in &[5, 17, 40, 64] {
            for &x in &[-4.0, 0.2, 6.5] {
                let fd = (hermite_function(n, x + h).unwrap()
                    - hermite_function(n, x - h).unwrap())
                    / (2.0 * h);
                let d = hermite_function_derivative(n, x).unwrap();
                assert!((d - fd).abs() < 1e-7, "n={n} x={x}: {d} vs {fd}");
            }
        }
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, 3, 7.2).unwrap(), 1.0);
        assert_eq!(laguerre(1, 0, 1.0).unwrap(), 0.0);
        assert_eq!(laguerre(1, 1, 0.0).unwrap(), 2.0);
        assert_eq!(laguerre(2, 0, 2.0).unwrap(), -1.0);
    }

    #[test]
    fn laguerre_matches_definition() {
        for n in 0..=8 {
            for alpha in 0..=4 {
                let coeffs = rodrigues_laguerre(n, alpha);
                for &x in &[0.0, 0.5, 1.3, 4.0, 9.5] {
                    let want = horner(&coeffs, x);
                    let got = laguerre(n, alpha, x).unwrap();
                    assert!(
                        (got - want).abs() <= 1e-10 * want.abs().max(1.0),
                        "n={n} a={alpha} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn laguerre_derivative_identity() {
        let h = 1e-5;
        for n in 1..=8 {
            for alpha in 0..=3 {
                for &x in &[0.2, 1.0, 3.7, 7.1] {
                    let fd = (laguerre(n, alpha, x + h).unwrap()
                        - laguerre(n, alpha, x - h).unwrap())
                        / (2.0 * h);
                    let d = -laguerre(n - 1, alpha + 1, x).unwrap();
                    assert!((fd - d).abs() < 1e-7, "n={n} a={alpha} x={x}");
                }
            }
        }
    }

    fn trapezoid(f: impl Fn(f64) -> f64, half_width: f64, intervals: usize) -> f64 {
        let h = 2.0 * half_width / intervals as f64;
        (0..=intervals)
            .map(|m| {
                let w = if m == 0 || m == intervals { 0.5 } else { 1.0 };
                w * f(-half_width + m as f64 * h)
            })
            .sum::<f64>()
            * h
    }

    #[test]
    fn orthonormality() {
        for m in 0..=12 {
            for n in 0..=12 {
                let ip = trapezoid(
                    |x| hermite_function(m, x).unwrap() * hermite_function(n, x).unwrap(),
                    16.0,
                    1024,
                );
                let delta = if m == n { 1.0 } else { 0.0 };
                assert!((ip - delta).abs() <= 1e-10, "<h{m}|h{n}> = {ip}");
            }
        }
    }

    #[test]
    fn top_degree_stays_normalized() {
        let ip = trapezoid(|x| hermite_function(64, x).unwrap().powi(2), 16.0, 2048);
        assert!((ip - 1.0).abs() < 1e-12, "{ip}");
    }

    #[test]
    fn parity() {
        for n in 0..=30 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            for &x in &[0.1, 0.77, 2.5, 5.0] {
                let a = hermite_function(n, -x).unwrap();
                let b = sign * hermite_function(n, x).unwrap();
                assert!((a - b).abs() <= 1e-14);
            }
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            hermite_poly(65, 0.0),
            Err(Error::DegreeOutOfRange {
                degree: 65,
                max: 64
            })
        ));
        assert!(matches!(
            hermite_function(3, f64::NAN),
            Err(Error::NonFinite(_))
        ));
        assert!(matches!(
            laguerre(2, 65, 1.0),
            Err(Error::DegreeOutOfRange { .. })
        ));
        assert!(matches!(
            laguerre(2, 1, f64::INFINITY),
            Err(Error::NonFinite(_))
        ));
        assert!(hermite_function_derivative(70, 0.0).is_err());
        assert!(PolyOrder::new(64, 64).is_ok());
        assert!(PolyOrder::new(65, 0).is_err());
    }

    #[test]
    fn factorial_ratio() {
        let want = (factorial(3) / factorial(7)).sqrt();
        assert!((sqrt_factorial_ratio(3, 7) - want).abs() < 1e-16);
        assert_eq!(sqrt_factorial_ratio(4, 4), 1.0);
    }
}
