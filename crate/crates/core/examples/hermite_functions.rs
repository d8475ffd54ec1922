//! Hermite functions: values, orthonormality on a grid, and the recurrence
//! staying stable at high order.
//!
//! ```text
//! cargo run --release --example hermite_functions
//! ```

use lg_wigner::specfun::{
    hermite_function, hermite_function_derivative, hermite_functions, laguerre,
};

fn main() -> lg_wigner::Result<()> {
    println!("{:>5} {:>14} {:>14} {:>14}", "x", "h0", "h1", "h2");
    for x in [-2.0, -1.0, 0.0, 0.5, 1.0, 2.0] {
        let h = hermite_functions(2, x)?;
        println!("{x:>5} {:>14.10} {:>14.10} {:>14.10}", h[0], h[1], h[2]);
    }

    // Gram matrix by the trapezoid rule on [-12, 12]
    let n = 6;
    let step = 24.0 / 2400.0;
    let samples: Vec<Vec<f64>> = (0..=2400)
        .map(|i| hermite_functions(n, -12.0 + i as f64 * step))
        .collect::<lg_wigner::Result<_>>()?;
    let mut worst: f64 = 0.0;
    for a in 0..=n {
        for b in 0..=n {
            let dot: f64 = samples.iter().map(|h| h[a] * h[b]).sum::<f64>() * step;
            let want = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((dot - want).abs());
        }
    }
    println!("orthonormality of h0..h{n}: max deviation {worst:.2e}");

    // h_n' = sqrt(n/2) h_{n-1} - sqrt((n+1)/2) h_{n+1}
    let (k, x) = (5, 0.7);
    let via_neighbours = (k as f64 / 2.0).sqrt() * hermite_function(k - 1, x)?
        - ((k + 1) as f64 / 2.0).sqrt() * hermite_function(k + 1, x)?;
    println!(
        "h{k}'({x}) = {:.12} (neighbour identity {via_neighbours:.12})",
        hermite_function_derivative(k, x)?
    );

    println!(
        "h64(3) = {:.6e}, L^2_4(1.5) = {:.10}",
        hermite_function(64, 3.0)?,
        laguerre(4, 2, 1.5)?
    );
    Ok(())
}
