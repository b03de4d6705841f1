//! Runs the seeded property suites programmatically (the same machinery as
//! `conic-faces verify`) and prints the per-suite outcome.
//!
//! ```bash
//! cargo run --release -p conic-faces --example verification_suite
//! ```

use conic_faces::verify::{run_verify, VerifyConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = VerifyConfig::new(42, 6)?;
    let started = std::time::Instant::now();
    let report = run_verify(&cfg)?;
    for case in &report.cases {
        println!(
            "{} {:40} {:>6} checks{}",
            if case.pass { "PASS" } else { "FAIL" },
            case.id,
            case.checked,
            if case.pass {
                String::new()
            } else {
                format!("  ({})", case.details)
            }
        );
    }
    println!(
        "\nverdict: {} in {:.2?} (seed {}, n in [{}, {}])",
        if report.pass { "pass" } else { "fail" },
        started.elapsed(),
        report.seed,
        report.n_min,
        report.n_max
    );
    Ok(())
}
