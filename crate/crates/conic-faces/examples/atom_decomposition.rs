//! Completely positive atom decomposition: every member of CP(L^n) splits
//! into rank(A) cone atoms whose Lorentz forms are all equal, via the
//! pair-rotation balancing of the eigendecomposition.
//!
//! ```bash
//! cargo run -p conic-faces --example atom_decomposition
//! ```

use conic_faces::cp::{cp_atom_decomposition, cp_membership};
use conic_faces::linalg::tensor_square;
use conic_faces::soc::classify_point;
use conic_faces::SymMatrix;

fn decompose(name: &str, a: &SymMatrix) -> Result<(), Box<dyn std::error::Error>> {
    let tol = conic_faces::DEFAULT_TOL;
    println!("{name}:");
    if !cp_membership(a, tol)?.is_member() {
        println!("  not completely positive, nothing to decompose");
        return Ok(());
    }
    let dec = cp_atom_decomposition(a, tol)?;
    let j = SymMatrix::j_matrix(a.order());
    let target = a.inner(&j) / dec.atoms.len() as f64;
    println!(
        "  {} atoms, residual {:.2e}, common Lorentz form {:.6}",
        dec.atoms.len(),
        dec.residual,
        target
    );
    for atom in &dec.atoms {
        println!(
            "  atom {:?} -> {:?}, a'Ja = {:.6}",
            atom.as_slice(),
            classify_point(atom, tol),
            atom.j_form()
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    decompose("identity(2)", &SymMatrix::identity(2))?;

    let mixed = tensor_square(&[1.0, 1.0, 0.0]).add(&tensor_square(&[1.0, 0.0, 0.0]));
    decompose("\n(1;e1)^2 + (1;0)^2", &mixed)?;

    let zero_form = SymMatrix::from_rows(&[
        vec![2.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0],
        vec![0.0, 0.0, 1.0],
    ])?;
    decompose("\ndiag(2, 1, 1), <A,J> = 0 (all atoms land on the boundary)", &zero_form)?;

    decompose("\nJ_2 (rejected)", &SymMatrix::j_matrix(2))?;
    Ok(())
}
