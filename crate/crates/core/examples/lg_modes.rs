//! Laguerre-Gaussian modes: quantum numbers, ladder actions, helical phase
//! and normalization on a grid.
//!
//! ```text
//! cargo run --release --example lg_modes
//! ```

use std::f64::consts::PI;

use lg_wigner::grid::{Axis, Grid2D};
use lg_wigner::modes::{
    apply_operator_pointwise, hg_mode, ladder_index_action, lg_eigenvalues, lg_mode, Derivatives,
    Field, LadderAction, LadderOp, ModeIndex,
};
use lg_wigner::Complex64;

fn main() -> lg_wigner::Result<()> {
    for (np, nm) in [(0, 0), (1, 0), (0, 1), (2, 1), (3, 3)] {
        let index = ModeIndex::lg(np, nm)?;
        let (n, l) = lg_eigenvalues(index)?;
        let axis = Axis::symmetric(8.0, 321)?;
        let grid = Grid2D::try_sample(axis, axis, |x, y| lg_mode(index, x, y))?;
        println!(
            "|{np} {nm}>  N = {n}  L = {l:>2}  grid norm = {:.12}",
            grid.norm()
        );
    }

    // phase winds by L around a circle
    let index = ModeIndex::lg(3, 1)?;
    let r = 1.3;
    let a = lg_mode(index, r, 0.0)?;
    let b = lg_mode(index, r * (PI / 5.0).cos(), r * (PI / 5.0).sin())?;
    println!(
        "arg ratio over pi/5 for L = 2: {:.12} (expect {:.12})",
        (b / a).arg(),
        2.0 * PI / 5.0
    );

    // the HG ground state and LG ground state coincide
    let ground = ModeIndex::hg(0, 0)?;
    println!("h00(0.4, -0.2) = {:.12}", hg_mode(ground, 0.4, -0.2)?);
    println!(
        "|00>(0.4, -0.2) = {:.12}",
        lg_mode(ModeIndex::lg(0, 0)?, 0.4, -0.2)?
    );

    // A+^dag |1 2> = sqrt(2) |2 2>, checked pointwise
    let op = LadderOp::APlusDag;
    let index = ModeIndex::lg(1, 2)?;
    if let LadderAction::Mapped { coeff, target } = ladder_index_action(op, index)? {
        let (x, y) = (0.3, -0.8);
        let lhs = apply_operator_pointwise(op, &Field::Basis(index), x, y, Derivatives::Analytic)?;
        let rhs = Complex64::from(coeff) * lg_mode(target, x, y)?;
        println!(
            "{} |1 2> = {coeff:.6} |{} {}>: mismatch {:.2e}",
            op.name(),
            target.first(),
            target.second(),
            (lhs - rhs).norm()
        );
    }
    Ok(())
}
