//! Runs a verification suite and prints one line per check.
//!
//! ```text
//! cargo run --release --example verify_suite -- [suite] [seed] [quick|full]
//! ```

use lg_wigner::verify::{run_suite, Budget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let suite = args.next().unwrap_or_else(|| "all".into());
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(7);
    let budget: Budget = args
        .next()
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or_default();

    let report = run_suite(&suite, seed, budget)?;
    for c in &report.checks {
        println!(
            "{} {:<40} err {:>10.3e}  tol {:.0e}  n={:<6} {:>9.1} ms",
            if c.passed { "ok  " } else { "FAIL" },
            c.name,
            c.max_abs_err,
            c.tolerance,
            c.samples,
            c.elapsed_ms
        );
    }
    println!(
        "{}: {} checks, {} failed, worst err/tol {:.2e}",
        report.suite,
        report.checks.len(),
        report.failures().count(),
        report.worst_ratio()
    );
    Ok(())
}
