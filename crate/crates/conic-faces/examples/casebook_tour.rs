//! The reproduction cases: the orthogonal-boundary-rays product that spans
//! no face, exposed rays over polyhedral and Lorentz cones, and the
//! vectorized PSD cone whose boundary slice fails to be a face.
//!
//! ```bash
//! cargo run -p conic-faces --example casebook_tour
//! ```

use conic_faces::casebook::{case_nonface_product, run_all};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for report in run_all()? {
        println!(
            "case {} -> {}",
            report.case_id,
            if report.overall { "pass" } else { "FAIL" }
        );
        for claim in &report.claims {
            println!(
                "  [{}] {}",
                if claim.pass { "ok" } else { "!!" },
                claim.description
            );
        }
        println!();
    }

    println!("the symmetric product across dimensions:");
    for n in 2..=5 {
        let mut v = vec![0.0; n - 1];
        v[0] = 1.0;
        let report = case_nonface_product(n, &v)?;
        let family = &report.claims[2];
        println!(
            "  n = {n}: classified {} (expected {})",
            family.computed, family.expected
        );
    }
    Ok(())
}
