//! Distance-to-polyhedrality witnesses: the longest chains whose smallest
//! face is non-polyhedral, certified by sweeping out pairwise
//! non-proportional extreme generators of each face.
//!
//! ```bash
//! cargo run -p conic-faces --example polyhedrality
//! ```

use conic_faces::cop::poly_distance_witness_cop;
use conic_faces::cp::poly_distance_witness_cp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("cone  n  witness length  (expected: COP 1 if n=2 else n; CP n-1)");
    for n in 2..=6 {
        let cop = poly_distance_witness_cop(n, 11)?;
        let cp = poly_distance_witness_cp(n, 11)?;
        println!("COP   {n}  {:14}", cop.length);
        println!("CP    {n}  {:14}", cp.length);
    }

    let witness = poly_distance_witness_cop(4, 11)?;
    let generators = &witness.witness_generators.as_ref().unwrap()[0];
    println!(
        "\nsmallest COP face at n = 4 (dim {}): {} extreme generators",
        witness.dims[0],
        generators.len()
    );
    let mut worst: f64 = 0.0;
    for i in 0..generators.len() {
        for j in (i + 1)..generators.len() {
            let cosine = generators[i].inner(&generators[j])
                / (generators[i].fro_norm() * generators[j].fro_norm());
            worst = worst.max(cosine);
        }
    }
    println!("largest pairwise Frobenius cosine: {worst:.6} (must stay below 1 - 1e-6)");
    Ok(())
}
