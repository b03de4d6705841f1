//! Exposing certificates: for an exposed face F of COP(L^n), a completely
//! positive H with F = COP(L^n) ∩ {H}^⊥, built from interior or boundary
//! atoms of X^⊥; and the CP-side certificates that cut CP(X ∩ L^n) out of
//! CP(L^n).
//!
//! ```bash
//! cargo run -p conic-faces --example exposing_certificates
//! ```

use conic_faces::cop::{
    exposing_certificate, CertificateOutcome, CopFaceDescriptor,
};
use conic_faces::cp::cp_face_certificate;
use conic_faces::linalg::{orthonormalize, tensor_square};
use conic_faces::{Subspace, SymMatrix};

fn show(face: &CopFaceDescriptor, label: &str) -> Result<(), Box<dyn std::error::Error>> {
    match exposing_certificate(face)? {
        CertificateOutcome::Certificate(cert) => {
            println!("{label}: exposed, certificate with {} atoms", cert.atoms.len());
            for atom in &cert.atoms {
                println!("  atom {:?} (margin {:+.3})", atom.as_slice(), atom.margin());
            }
            let j = SymMatrix::j_matrix(face.ambient_order());
            println!("  <H, J> = {:+.3e}", cert.h.inner(&j));
        }
        CertificateOutcome::NotExposed => println!("{label}: not exposed, no certificate"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 3;

    // Maximal face over an interior axis: a single interior atom.
    let v = vec![0.5, 0.0];
    let maximal = CopFaceDescriptor::psd(&v, Subspace::hyperplane_perp(&[1.0, 0.5, 0.0]))?;
    show(&maximal, "maximal face, ||v|| < 1")?;

    // The ray through J: boundary atoms spanning the whole space.
    let unit = vec![1.0, 0.0];
    let j_ray = CopFaceDescriptor::psd_plus_j(&unit, Subspace::zero(n))?;
    show(&j_ray, "\nthe ray through J")?;

    // A boundary square: not exposed, no certificate exists.
    let line = orthonormalize(n, &[vec![1.0, -1.0, 0.0]], 1e-10);
    let boundary_ray = CopFaceDescriptor::psd(&unit, line)?;
    show(&boundary_ray, "\nboundary square ray")?;

    // CP-side: the certificate of CP(X ∩ L^n) separates exactly by range.
    println!("\nCP face certificate for X = span(e1, e2) in R^3:");
    let x = orthonormalize(n, &[vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]], 1e-10);
    let cert = cp_face_certificate(&x)?;
    let inside = tensor_square(&[1.0, 0.5, 0.0]);
    let outside = tensor_square(&[1.0, 0.0, 0.5]);
    println!("  <inside member, H>  = {:.3e}", inside.inner(&cert.h));
    println!("  <outside member, H> = {:.3e}", outside.inner(&cert.h));
    Ok(())
}
