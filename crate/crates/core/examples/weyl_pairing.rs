//! Weyl-quantized matrix elements between Hermite functions, computed from
//! the operator and from the Wigner transform.
//!
//! ```text
//! cargo run --release --example weyl_pairing
//! ```

use lg_wigner::verify::{weyl_pairing, WeylSymbol, WEYL_QUADRATURE};

fn main() -> lg_wigner::Result<()> {
    println!(
        "{:>8} {:>3} {:>3} {:>26} {:>26} {:>9}",
        "symbol", "f", "g", "operator", "wigner", "diff"
    );
    for sigma in WeylSymbol::ALL {
        for (f, g) in [(0, 0), (0, 1), (1, 0), (2, 2), (1, 3)] {
            let (lhs, rhs) = weyl_pairing(sigma, f, g, &WEYL_QUADRATURE)?;
            println!(
                "{:>8} {f:>3} {g:>3} {:>12.8}{:>+12.8}i {:>12.8}{:>+12.8}i {:>9.1e}",
                sigma.name(),
                lhs.re,
                lhs.im,
                rhs.re,
                rhs.im,
                (lhs - rhs).norm()
            );
        }
    }
    println!("the harmonic symbol has eigenvalue 4n + 2 on h_n");
    Ok(())
}
