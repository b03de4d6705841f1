//! The four face families of COP(L^n) and the two-parameter faces of
//! CP(L^n), with their closed-form dimensions and exposedness flags.
//!
//! ```bash
//! cargo run -p conic-faces --example face_taxonomy
//! ```

use conic_faces::cop::{minimal_exposed_face_of_boundary_square, CopFaceDescriptor};
use conic_faces::cp::make_cp_face;
use conic_faces::linalg::orthonormalize;
use conic_faces::Subspace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 4;
    println!("== COP(L^{n}) faces");

    let full = CopFaceDescriptor::full(n)?;
    println!("  whole cone: dim {} exposed {}", full.dim(), full.exposed());

    // ||v|| < 1: every subface of the maximal face is exposed.
    let v_lt = vec![0.4, 0.2, 0.0];
    let hyper = Subspace::hyperplane_perp(&[1.0, 0.4, 0.2, 0.0]);
    for d in 0..hyper.dim() {
        let x = orthonormalize(n, &hyper.basis()[..d], 1e-10);
        let f = CopFaceDescriptor::psd(&v_lt, x)?;
        println!("  ||v||<1, d={d}: dim {} exposed {}", f.dim(), f.exposed());
    }

    // ||v|| = 1: exposedness hinges on whether (1; -v) joined the subspace.
    let v_eq = vec![1.0, 0.0, 0.0];
    let one_neg_v = vec![1.0, -1.0, 0.0, 0.0];
    let with_line = orthonormalize(n, std::slice::from_ref(&one_neg_v), 1e-10);
    let f = CopFaceDescriptor::psd(&v_eq, with_line)?;
    println!(
        "  ||v||=1, X = span(1;-v): dim {} exposed {} (the non-exposed boundary ray)",
        f.dim(),
        f.exposed()
    );
    let without_line = orthonormalize(n, &[vec![0.0, 0.0, 1.0, 0.0]], 1e-10);
    let f = CopFaceDescriptor::psd(&v_eq, without_line)?;
    println!("  ||v||=1, X head-zero line: dim {} exposed {}", f.dim(), f.exposed());

    let j_ray = CopFaceDescriptor::psd_plus_j(&v_eq, Subspace::zero(n))?;
    println!("  R+ J ray: dim {} exposed {}", j_ray.dim(), j_ray.exposed());
    let maximal = minimal_exposed_face_of_boundary_square(&v_eq)?;
    println!(
        "  maximal face over the boundary square: dim {} exposed {}",
        maximal.dim(),
        maximal.exposed()
    );

    println!("\n== CP(L^{n}) faces");
    for (label, x) in [
        ("X = R^n", Subspace::full(n)),
        ("X = boundary ray", orthonormalize(n, &[vec![1.0, 1.0, 0.0, 0.0]], 1e-10)),
        ("X = head-zero plane", orthonormalize(n, &[vec![0.0, 1.0, 0.0, 0.0], vec![0.0, 0.0, 1.0, 0.0]], 1e-10)),
    ] {
        for boundary in [false, true] {
            let face = make_cp_face(x.clone(), boundary)?;
            println!(
                "  {label}, {} slice: class {} dim {}",
                if boundary { "boundary" } else { "cone" },
                face.cls().tag(),
                face.dim()
            );
        }
    }
    Ok(())
}
