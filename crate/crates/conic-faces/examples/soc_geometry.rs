//! Tour of the second-order cone utilities: point classification, the
//! orthogonal three-way split, the unit-companion equation system, and
//! subspace-cone intersection classification with constructive bases.
//!
//! ```bash
//! cargo run -p conic-faces --example soc_geometry
//! ```

use conic_faces::linalg::orthonormalize;
use conic_faces::soc::{
    boundary_basis, classify_point, classify_subspace, interior_basis, peirce_split, solve_uv,
    SocVector,
};
use conic_faces::Subspace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tol = conic_faces::DEFAULT_TOL;

    println!("== point classification against L^3");
    for x in [
        vec![2.0, 1.0, 0.5],
        vec![1.0, 1.0, 0.0],
        vec![0.2, 1.0, -0.3],
    ] {
        let p = SocVector::new(x.clone())?;
        println!("  {:?} -> {:?} (margin {:+.4})", x, classify_point(&p, tol), p.margin());
    }

    println!("\n== orthogonal split along v = (0.6, 0.0)");
    let v = vec![0.6, 0.0];
    let x = SocVector::new(vec![1.5, -0.3, 0.8])?;
    let (alpha, beta, u) = peirce_split(&v, &x)?;
    println!("  x = {:?}", x.as_slice());
    println!("  alpha = {alpha:.6}, beta = {beta:.6}, u = {u:?}");

    println!("\n== unit companion of w = (2, 0)");
    let (u, v) = solve_uv(&[2.0, 0.0], tol)?;
    println!("  u = {u:?}");
    println!("  v = {v:?} (unit, orthogonal to u, with w = u - v)");

    println!("\n== subspace classification");
    let full = Subspace::full(3);
    println!("  R^3 -> {}", classify_subspace(&full, tol).tag());
    let tangent = orthonormalize(2, &[vec![1.0, 1.0]], 1e-10);
    println!("  span(1,1) in R^2 -> {}", classify_subspace(&tangent, tol).tag());
    let spacelike = orthonormalize(3, &[vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]], 1e-10);
    println!("  head-zero plane -> {}", classify_subspace(&spacelike, tol).tag());

    println!("\n== constructive bases of R^3 inside the cone");
    let interior = interior_basis(&full)?;
    for b in &interior {
        println!("  interior atom {:?} margin {:+.4}", b.as_slice(), b.margin());
    }
    let boundary = boundary_basis(&full)?;
    for b in &boundary {
        println!("  boundary atom {:?} margin {:+.1e}", b.as_slice(), b.margin());
    }
    Ok(())
}
