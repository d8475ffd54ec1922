//! Two-dimensional Wigner transforms of LG and HG modes: a 4D quadrature
//! oracle against the factorized closed forms, and the diagonal formulas.
//!
//! ```text
//! cargo run --release --example wigner_4d_products
//! ```

use lg_wigner::modes::{hg_mode, lg_mode, ModeIndex};
use lg_wigner::wigner::{
    wigner_hg_closed, wigner_hg_diag, wigner_lg_closed, wigner_lg_diag, PhasePoint4,
    QuadratureSpec, Wigner2dKernel,
};
use lg_wigner::Complex64;

fn main() -> lg_wigner::Result<()> {
    let point = PhasePoint4::new(0.4, -0.3, 0.7, 0.2);
    let quad = QuadratureSpec::new(12.0, 192)?;
    let kernel = Wigner2dKernel::new(point, &quad)?;

    println!("at {point:?}");
    for ((j, k), (m, n)) in [
        ((0, 0), (0, 0)),
        ((1, 0), (0, 1)),
        ((2, 1), (1, 2)),
        ((3, 0), (1, 1)),
    ] {
        let (a, b) = (ModeIndex::lg(j, k)?, ModeIndex::lg(m, n)?);
        let oracle = kernel.pair(
            &kernel.sample_plus(|x, y| lg_mode(a, x, y).unwrap()),
            &kernel.sample_minus(|x, y| lg_mode(b, x, y).unwrap()),
        );
        let closed = wigner_lg_closed(j, k, m, n, &point)?;
        println!(
            "W(|{j} {k}>, |{m} {n}>) = {closed:.10}  oracle error {:.1e}",
            (oracle - closed).norm()
        );

        let (a, b) = (ModeIndex::hg(j, k)?, ModeIndex::hg(m, n)?);
        let oracle = kernel.pair(
            &kernel.sample_plus(|x, y| Complex64::from(hg_mode(a, x, y).unwrap())),
            &kernel.sample_minus(|x, y| Complex64::from(hg_mode(b, x, y).unwrap())),
        );
        let closed = wigner_hg_closed(j, k, m, n, &point)?;
        println!(
            "W(h{j}{k}, h{m}{n})   = {closed:.10}  oracle error {:.1e}",
            (oracle - closed).norm()
        );
    }

    println!(
        "Q0 = {:.6}, Q2 = {:.6}, Q3 = {:.6}",
        point.q0(),
        point.q2(),
        point.q3()
    );
    for (j, k) in [(0, 0), (2, 0), (1, 3)] {
        let general = wigner_lg_closed(j, k, j, k, &point)?;
        println!(
            "diagonal ({j},{k}): LG {:.12} (general {:.12}), HG {:.12}",
            wigner_lg_diag(j, k, &point)?,
            general.re,
            wigner_hg_diag(j, k, &point)?
        );
    }
    Ok(())
}
