//! The extended Wigner transform on grids: sample an HG mode, rotate by
//! pi/4, Fourier transform one axis, and land on an LG mode.
//!
//! ```text
//! cargo run --release --example extended_wigner_rotfft
//! ```

use lg_wigner::grid::{Axis, Grid2D};
use lg_wigner::modes::{hg_mode, lg_mode, ModeIndex};
use lg_wigner::wigner::{extended_wigner, extended_wigner_rotfft, QuadratureSpec};
use lg_wigner::Complex64;

fn main() -> lg_wigner::Result<()> {
    let axis = Axis::symmetric(8.0, 256)?;
    for (j, k) in [(0, 0), (1, 0), (2, 1), (0, 3)] {
        let hg = ModeIndex::hg(j, k)?;
        let input = Grid2D::try_sample(axis, axis, |x, y| hg_mode(hg, x, y).map(Complex64::from))?;
        let out = extended_wigner_rotfft(&input)?;

        let lg = ModeIndex::lg(j, k)?;
        let mut worst: f64 = 0.0;
        for (x, y, v) in out.iter() {
            if x.abs() <= 4.0 && y.abs() <= 4.0 {
                worst = worst.max((v - lg_mode(lg, x, y)?).norm());
            }
        }
        println!(
            "h{j}{k} -> |{j} {k}>: max error {worst:.2e} on [-4,4]^2, output norm {:.10}",
            out.norm()
        );
    }

    // pointwise quadrature of the same transform, with no grid involved
    let f = |x: f64, y: f64| Complex64::from(hg_mode(ModeIndex::hg(2, 1).unwrap(), x, y).unwrap());
    let (x, y) = (0.6, -1.1);
    let value = extended_wigner(f, x, y, &QuadratureSpec::default())?;
    let expect = lg_mode(ModeIndex::lg(2, 1)?, x, y)?;
    println!("quadrature at ({x}, {y}): {value:.12} vs {expect:.12}");
    Ok(())
}
