//! Paraxial LG beams: waist, Rayleigh range, Gouy phase, and the field
//! along and across the propagation axis.
//!
//! ```text
//! cargo run --release --example paraxial_beam
//! ```

use std::f64::consts::PI;

use lg_wigner::beam::{beam_field, beam_field_xy, BeamIndex, BeamParams, Normalization};

fn main() -> lg_wigner::Result<()> {
    let params = BeamParams::new(1.0, 10.0)?;
    let zr = params.rayleigh_range();
    println!(
        "w0 = {}, k = {}, z_R = {zr}",
        params.waist(),
        params.wavenumber()
    );

    println!(
        "{:>8} {:>10} {:>12} {:>10}",
        "z/z_R", "w(z)", "1/R(z)", "gouy/pi"
    );
    for t in [-3.0, -1.0, 0.0, 0.5, 1.0, 3.0, 10.0] {
        let g = params.geometry(t * zr);
        println!(
            "{t:>8} {:>10.6} {:>12.6} {:>10.6}",
            g.w,
            g.inv_r,
            g.gouy / PI
        );
    }

    // the phase lags the fundamental by (2p + l) times the Gouy phase
    for (p, ell) in [(0, 0), (0, 2), (1, 1), (2, -1)] {
        let index = BeamIndex::new(p, ell)?;
        let r = 0.6;
        let near = beam_field(index, &params, r, 0.0, 0.0);
        let far = beam_field(index, &params, r * 2f64.sqrt(), 0.0, zr);
        let plain = beam_field(BeamIndex::new(0, 0)?, &params, r * 2f64.sqrt(), 0.0, zr);
        println!(
            "p = {p}, l = {ell:>2}: |u(r,0)| = {:.6}, |u(r sqrt2, z_R)| = {:.6}, phase vs fundamental {:+.4} pi",
            near.norm(),
            far.norm(),
            (far / plain).arg() / PI
        );
    }

    let index = BeamIndex::new(1, 2)?;
    let u = beam_field_xy(index, &params, 0.5, -0.4, 2.0, Normalization::Proportional);
    println!("unnormalized u_12(0.5, -0.4, 2) = {u:.8}");
    Ok(())
}
