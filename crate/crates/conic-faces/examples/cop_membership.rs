//! Copositivity testing over the Lorentz cone: the decision
//! `A ∈ S_+^n + R_+ J_n` through the concave eigenvalue search, with the
//! witness split on success and a violating cone point on failure.
//!
//! ```bash
//! cargo run -p conic-faces --example cop_membership
//! ```

use conic_faces::cop::{cop_membership, feasible_t_interval, CopMembership, TInterval};
use conic_faces::SymMatrix;

fn report(name: &str, a: &SymMatrix) -> Result<(), Box<dyn std::error::Error>> {
    let tol = conic_faces::DEFAULT_TOL;
    match cop_membership(a, tol)? {
        CopMembership::Member { t, p } => {
            println!("{name}: member with shift t = {t:.6}");
            println!("  PSD part residual from A - tJ: {:.2e}", p.fro_norm());
        }
        CopMembership::NonMember { gap, violator } => {
            println!("{name}: NOT a member (eigenvalue gap {gap:.4})");
            if let Some(x) = violator {
                println!(
                    "  violator x = {:?} with x'Ax = {:.4}",
                    x.as_slice(),
                    a.quad_form(x.as_slice())
                );
            }
        }
    }
    match feasible_t_interval(a, tol) {
        TInterval::Empty => println!("  feasible shifts: none"),
        TInterval::Interval { lo, hi } => println!("  feasible shifts: [{lo:.6}, {hi:.6}]"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    report("J_3", &SymMatrix::j_matrix(3))?;
    report("I_3", &SymMatrix::identity(3))?;
    let indefinite = SymMatrix::from_rows(&[vec![1.0, 0.0], vec![0.0, -2.0]])?;
    report("diag(1, -2)", &indefinite)?;
    let mixed = SymMatrix::from_rows(&[
        vec![2.0, 0.0, 0.0],
        vec![0.0, -2.0, 0.0],
        vec![0.0, 0.0, 0.0],
    ])?;
    report("2 diag(1, -e1 e1')", &mixed)?;
    Ok(())
}
