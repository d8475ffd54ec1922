//! One-dimensional Wigner transforms of Hermite functions: closed form,
//! quadrature and the LG mode they coincide with.
//!
//! ```text
//! cargo run --release --example wigner_closed_forms
//! ```

use std::f64::consts::PI;

use lg_wigner::grid::Axis;
use lg_wigner::modes::{lg_mode, ModeIndex};
use lg_wigner::specfun::hermite_function;
use lg_wigner::wigner::{wigner1d, wigner1d_grid, wigner_hermite_closed, QuadratureSpec};
use lg_wigner::Complex64;

fn h(n: usize) -> impl Fn(f64) -> Complex64 + Sync {
    move |x| Complex64::from(hermite_function(n, x).unwrap())
}

fn main() -> lg_wigner::Result<()> {
    let quad = QuadratureSpec::default();
    println!(
        "W(h0,h0)(0,0) = {:.15} (1/sqrt(pi) = {:.15})",
        wigner_hermite_closed(0, 0, 0.0, 0.0)?.re,
        1.0 / PI.sqrt()
    );

    println!(
        "{:>4} {:>4} {:>6} {:>6} {:>28} {:>10} {:>10}",
        "j", "k", "x", "xi", "closed", "vs quad", "vs mode"
    );
    for (j, k, x, xi) in [
        (0, 0, 0.5, -0.3),
        (2, 1, 1.0, 0.4),
        (3, 5, -0.7, 1.2),
        (8, 8, 0.2, 0.9),
    ] {
        let closed = wigner_hermite_closed(j, k, x, xi)?;
        let quad_value = wigner1d(h(j), h(k), x, xi, &quad)?;
        let mode = lg_mode(ModeIndex::lg(j, k)?, x, xi)?;
        println!(
            "{j:>4} {k:>4} {x:>6} {xi:>6} {:>13.9}{:>+13.9}i {:>10.1e} {:>10.1e}",
            closed.re,
            closed.im,
            (closed - quad_value).norm(),
            (closed - mode).norm()
        );
    }

    // W(h3) on a grid; its integral is 2 sqrt(pi) times the norm
    let axis = Axis::symmetric(10.0, 201)?;
    let grid = wigner1d_grid(h(3), h(3), axis, axis, &quad)?;
    let area = axis.step() * axis.step();
    let total: f64 = grid.iter().map(|(_, _, v)| v.re).sum::<f64>() * area;
    println!(
        "integral of W(h3) = {total:.10} (2 sqrt(pi) = {:.10})",
        2.0 * PI.sqrt()
    );
    println!(
        "W(h3)(0,0) = {:.10} (negative at the origin for odd n)",
        grid.get(100, 100).re
    );
    Ok(())
}
