//! HG and LG modes of the isotropic 2D oscillator and their ladder operators.
//!
//! Position coordinates are `(x, y)` with the complex coordinate `z = x + iy`.
//! HG modes are `h_jk(x, y) = h_j(x) h_k(y)`; the LG mode `|n+ n->` is the
//! closed form
//!
//! ```text
//! n+ >= n-:  pi^{-1/2} (n-!/n+!)^{1/2} (-1)^{n-} z^{n+ - n-}     e^{-|z|^2/2} L^{n+ - n-}_{n-}(|z|^2)
//! n+ <= n-:  pi^{-1/2} (n+!/n-!)^{1/2} (-1)^{n+} zbar^{n- - n+}  e^{-|z|^2/2} L^{n- - n+}_{n+}(|z|^2)
//! ```
//!
//! The ladder operators act on indices with the usual `sqrt(m+1)` /
//! `sqrt(m)` coefficients, and on functions through
//! `a_1 = (x + d/dx)/sqrt2`, `A_+ = (a_1 - i a_2)/sqrt2` and friends.

use std::fmt;

use num_complex::Complex64;

use crate::specfun::{
    check_degree, hermite_function_derivative_unchecked, hermite_function_unchecked,
    laguerre_unchecked, sqrt_factorial_ratio, INV_SQRT_PI,
};
use crate::{Error, Result};

/// Which family a [`ModeIndex`] names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Basis {
    /// Cartesian quanta `(j, k)`.
    Hg,
    /// Circular quanta `(n+, n-)`.
    Lg,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Hg => "HG",
            Basis::Lg => "LG",
        })
    }
}

/// A pair of quantum numbers naming a 2D mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModeIndex {
    first: usize,
    second: usize,
    basis: Basis,
}

impl ModeIndex {
    pub fn new(basis: Basis, first: usize, second: usize) -> Result<Self> {
        check_degree(first)?;
        check_degree(second)?;
        Ok(Self {
            first,
            second,
            basis,
        })
    }

    pub fn hg(j: usize, k: usize) -> Result<Self> {
        Self::new(Basis::Hg, j, k)
    }

    pub fn lg(n_plus: usize, n_minus: usize) -> Result<Self> {
        Self::new(Basis::Lg, n_plus, n_minus)
    }

    pub fn first(&self) -> usize {
        self.first
    }

    pub fn second(&self) -> usize {
        self.second
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// `N = n1 + n2` (or `n+ + n-`).
    pub fn total_number(&self) -> usize {
        self.first + self.second
    }

    /// `L = n+ - n-`. Only an eigenvalue for LG indices.
    pub fn angular_momentum(&self) -> i64 {
        self.first as i64 - self.second as i64
    }

    fn with_slot(&self, slot: Slot, value: usize) -> Result<Self> {
        match slot {
            Slot::First => Self::new(self.basis, value, self.second),
            Slot::Second => Self::new(self.basis, self.first, value),
        }
    }

    fn slot(&self, slot: Slot) -> usize {
        match slot {
            Slot::First => self.first,
            Slot::Second => self.second,
        }
    }
}

impl fmt::Display for ModeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.basis, self.first, self.second)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    First,
    Second,
}

/// The eight ladder operators of the 2D oscillator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LadderOp {
    A1,
    A1Dag,
    A2,
    A2Dag,
    APlus,
    APlusDag,
    AMinus,
    AMinusDag,
}

impl LadderOp {
    pub const ALL: [LadderOp; 8] = [
        LadderOp::A1,
        LadderOp::A1Dag,
        LadderOp::A2,
        LadderOp::A2Dag,
        LadderOp::APlus,
        LadderOp::APlusDag,
        LadderOp::AMinus,
        LadderOp::AMinusDag,
    ];

    pub fn basis(self) -> Basis {
        match self {
            LadderOp::A1 | LadderOp::A1Dag | LadderOp::A2 | LadderOp::A2Dag => Basis::Hg,
            _ => Basis::Lg,
        }
    }

    pub fn is_creation(self) -> bool {
        matches!(
            self,
            LadderOp::A1Dag | LadderOp::A2Dag | LadderOp::APlusDag | LadderOp::AMinusDag
        )
    }

    fn slot(self) -> Slot {
        match self {
            LadderOp::A1 | LadderOp::A1Dag | LadderOp::APlus | LadderOp::APlusDag => Slot::First,
            _ => Slot::Second,
        }
    }

    /// The HG operator that the extended Wigner transform carries onto this
    /// LG operator (`A+ <-> a1`, `A- <-> a2`, adjoints alike).
    pub fn hg_counterpart(self) -> Option<LadderOp> {
        match self {
            LadderOp::APlus => Some(LadderOp::A1),
            LadderOp::APlusDag => Some(LadderOp::A1Dag),
            LadderOp::AMinus => Some(LadderOp::A2),
            LadderOp::AMinusDag => Some(LadderOp::A2Dag),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LadderOp::A1 => "a1",
            LadderOp::A1Dag => "a1dag",
            LadderOp::A2 => "a2",
            LadderOp::A2Dag => "a2dag",
            LadderOp::APlus => "Aplus",
            LadderOp::APlusDag => "Aplusdag",
            LadderOp::AMinus => "Aminus",
            LadderOp::AMinusDag => "Aminusdag",
        }
    }
}

impl fmt::Display for LadderOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of a ladder operator acting on a basis state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LadderAction {
    /// `op |index> = coeff |target>`
    Mapped {
        coeff: f64,
        target: ModeIndex,
    },
    Annihilated,
}

/// Index-space action of `op` on the basis state `index`.
pub fn ladder_index_action(op: LadderOp, index: ModeIndex) -> Result<LadderAction> {
    if op.basis() != index.basis() {
        return Err(Error::BasisMismatch {
            op: op.name().to_string(),
            basis: index.basis().to_string(),
        });
    }
    let slot = op.slot();
    let m = index.slot(slot);
    if op.is_creation() {
        Ok(LadderAction::Mapped {
            coeff: ((m + 1) as f64).sqrt(),
            target: index.with_slot(slot, m + 1)?,
        })
    } else if m == 0 {
        Ok(LadderAction::Annihilated)
    } else {
        Ok(LadderAction::Mapped {
            coeff: (m as f64).sqrt(),
            target: index.with_slot(slot, m - 1)?,
        })
    }
}

/// `(N, L) = (n+ + n-, n+ - n-)` for an LG index.
pub fn lg_eigenvalues(index: ModeIndex) -> Result<(i64, i64)> {
    if index.basis() != Basis::Lg {
        return Err(Error::BasisMismatch {
            op: "N/L".into(),
            basis: index.basis().to_string(),
        });
    }
    Ok((index.total_number() as i64, index.angular_momentum()))
}

fn expect_basis(index: ModeIndex, basis: Basis, what: &str) -> Result<()> {
    if index.basis() != basis {
        return Err(Error::BasisMismatch {
            op: what.into(),
            basis: index.basis().to_string(),
        });
    }
    Ok(())
}

/// `h_j(x) h_k(y)`.
pub fn hg_mode(index: ModeIndex, x: f64, y: f64) -> Result<f64> {
    expect_basis(index, Basis::Hg, "hg_mode")?;
    check_point(x, y)?;
    Ok(hermite_function_unchecked(index.first, x) * hermite_function_unchecked(index.second, y))
}

/// The LG mode `<x, y | n+ n->`.
pub fn lg_mode(index: ModeIndex, x: f64, y: f64) -> Result<Complex64> {
    expect_basis(index, Basis::Lg, "lg_mode")?;
    check_point(x, y)?;
    Ok(lg_unchecked(index.first, index.second, x, y))
}

/// Either family, as a complex value.
pub fn mode_value(index: ModeIndex, x: f64, y: f64) -> Result<Complex64> {
    match index.basis() {
        Basis::Hg => hg_mode(index, x, y).map(|v| Complex64::new(v, 0.0)),
        Basis::Lg => lg_mode(index, x, y),
    }
}

fn check_point(x: f64, y: f64) -> Result<()> {
    for v in [x, y] {
        if !v.is_finite() {
            return Err(Error::NonFinite(v));
        }
    }
    Ok(())
}

pub(crate) fn lg_unchecked(n_plus: usize, n_minus: usize, x: f64, y: f64) -> Complex64 {
    if n_plus >= n_minus {
        lg_branch_plus(n_plus, n_minus, x, y)
    } else {
        lg_branch_minus(n_plus, n_minus, x, y)
    }
}

/// The `n+ >= n-` branch, evaluated as written for any indices.
fn lg_branch_plus(n_plus: usize, n_minus: usize, x: f64, y: f64) -> Complex64 {
    let alpha = n_plus.saturating_sub(n_minus);
    let r2 = x * x + y * y;
    let sign = if n_minus.is_multiple_of(2) { 1.0 } else { -1.0 };
    let radial = INV_SQRT_PI
        * sqrt_factorial_ratio(n_minus, n_plus)
        * sign
        * (-0.5 * r2).exp()
        * laguerre_unchecked(n_minus, alpha, r2);
    Complex64::new(x, y).powu(alpha as u32) * radial
}

/// The `n+ <= n-` branch.
fn lg_branch_minus(n_plus: usize, n_minus: usize, x: f64, y: f64) -> Complex64 {
    let alpha = n_minus.saturating_sub(n_plus);
    let r2 = x * x + y * y;
    let sign = if n_plus.is_multiple_of(2) { 1.0 } else { -1.0 };
    let radial = INV_SQRT_PI
        * sqrt_factorial_ratio(n_plus, n_minus)
        * sign
        * (-0.5 * r2).exp()
        * laguerre_unchecked(n_plus, alpha, r2);
    Complex64::new(x, -y).powu(alpha as u32) * radial
}

/// Value and first partials `(f, df/dx, df/dy)` of a basis function.
fn basis_jet(index: ModeIndex, x: f64, y: f64) -> (Complex64, Complex64, Complex64) {
    match index.basis() {
        Basis::Hg => {
            let (j, k) = (index.first, index.second);
            let (hx, hy) = (
                hermite_function_unchecked(j, x),
                hermite_function_unchecked(k, y),
            );
            let (dx, dy) = (
                hermite_function_derivative_unchecked(j, x),
                hermite_function_derivative_unchecked(k, y),
            );
            (
                Complex64::new(hx * hy, 0.0),
                Complex64::new(dx * hy, 0.0),
                Complex64::new(hx * dy, 0.0),
            )
        }
        Basis::Lg => lg_jet(index.first, index.second, x, y),
    }
}

/// Analytic partials of an LG mode using `d/dx L^a_n = -L^{a+1}_{n-1}`.
fn lg_jet(n_plus: usize, n_minus: usize, x: f64, y: f64) -> (Complex64, Complex64, Complex64) {
    let holomorphic = n_plus >= n_minus;
    let (m, alpha) = if holomorphic {
        (n_minus, n_plus - n_minus)
    } else {
        (n_plus, n_minus - n_plus)
    };
    let w = if holomorphic {
        Complex64::new(x, y)
    } else {
        Complex64::new(x, -y)
    };
    // d/dx w = 1, d/dy w = +i (z) or -i (zbar)
    let dw_dy = if holomorphic {
        Complex64::i()
    } else {
        -Complex64::i()
    };
    let r2 = x * x + y * y;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let c = INV_SQRT_PI * sqrt_factorial_ratio(m, m + alpha) * sign * (-0.5 * r2).exp();
    let lag = laguerre_unchecked(m, alpha, r2);
    let dlag = if m == 0 {
        0.0
    } else {
        -laguerre_unchecked(m - 1, alpha + 1, r2)
    };
    let w_pow = w.powu(alpha as u32);
    let value = w_pow * (c * lag);
    // d/dx (E L) = x (-E L + 2 E L')
    let radial_dx = value * (-x) + w_pow * (c * dlag * 2.0 * x);
    let radial_dy = value * (-y) + w_pow * (c * dlag * 2.0 * y);
    let (ang_dx, ang_dy) = if alpha == 0 {
        (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    } else {
        let d = w.powu(alpha as u32 - 1) * (alpha as f64 * c * lag);
        (d, d * dw_dy)
    };
    (value, radial_dx + ang_dx, radial_dy + ang_dy)
}

/// A field that ladder operators can act on pointwise.
pub enum Field<'a> {
    /// An HG or LG basis function; supports analytic derivatives.
    Basis(ModeIndex),
    /// Any smooth complex function of `(x, y)`.
    Function(&'a (dyn Fn(f64, f64) -> Complex64 + Sync + 'a)),
}

impl Field<'_> {
    pub fn eval(&self, x: f64, y: f64) -> Result<Complex64> {
        match self {
            Field::Basis(index) => mode_value(*index, x, y),
            Field::Function(f) => Ok(f(x, y)),
        }
    }
}

/// How partial derivatives are obtained in [`apply_operator_pointwise`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Derivatives {
    Analytic,
    /// Central differences with the given step.
    FiniteDifference {
        step: f64,
    },
}

/// Central-difference step used when none is specified.
pub const DEFAULT_FD_STEP: f64 = 1e-5;

impl Default for Derivatives {
    fn default() -> Self {
        Derivatives::FiniteDifference {
            step: DEFAULT_FD_STEP,
        }
    }
}

/// `(op f)(x, y)` using the differential form of the operator.
///
/// Any operator may act on any field here; basis compatibility only matters
/// for [`ladder_index_action`].
pub fn apply_operator_pointwise(
    op: LadderOp,
    field: &Field<'_>,
    x: f64,
    y: f64,
    mode: Derivatives,
) -> Result<Complex64> {
    check_point(x, y)?;
    let (f, fx, fy) = match (mode, field) {
        (Derivatives::Analytic, Field::Basis(index)) => basis_jet(*index, x, y),
        (Derivatives::Analytic, Field::Function(_)) => return Err(Error::AnalyticUnavailable),
        (Derivatives::FiniteDifference { step }, _) => {
            if !(step > 0.0 && step.is_finite()) {
                return Err(Error::NonFinite(step));
            }
            let fx = (field.eval(x + step, y)? - field.eval(x - step, y)?) / (2.0 * step);
            let fy = (field.eval(x, y + step)? - field.eval(x, y - step)?) / (2.0 * step);
            (field.eval(x, y)?, fx, fy)
        }
    };
    Ok(apply_from_jet(op, f, fx, fy, x, y))
}

fn apply_from_jet(
    op: LadderOp,
    f: Complex64,
    fx: Complex64,
    fy: Complex64,
    x: f64,
    y: f64,
) -> Complex64 {
    use std::f64::consts::FRAC_1_SQRT_2;
    let i = Complex64::i();
    // (x +- d/dx) f and (y +- d/dy) f
    let down_x = f * x + fx;
    let up_x = f * x - fx;
    let down_y = f * y + fy;
    let up_y = f * y - fy;
    match op {
        LadderOp::A1 => down_x * FRAC_1_SQRT_2,
        LadderOp::A1Dag => up_x * FRAC_1_SQRT_2,
        LadderOp::A2 => down_y * FRAC_1_SQRT_2,
        LadderOp::A2Dag => up_y * FRAC_1_SQRT_2,
        LadderOp::APlus => (down_x - i * down_y) * 0.5,
        LadderOp::AMinus => (down_x + i * down_y) * 0.5,
        LadderOp::APlusDag => (up_x + i * up_y) * 0.5,
        LadderOp::AMinusDag => (up_x - i * up_y) * 0.5,
    }
}
