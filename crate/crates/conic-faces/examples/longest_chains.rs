//! Longest chains of faces: both cones reach length n + 2, with every strict
//! inclusion certified by a separating member.
//!
//! ```bash
//! cargo run -p conic-faces --example longest_chains
//! ```

use conic_faces::cop::build_longest_chain_cop;
use conic_faces::cp::build_longest_chain_cp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("cone  n  length  dims");
    for n in 2..=6 {
        let cop = build_longest_chain_cop(n)?;
        println!("COP   {n}  {:6}  {:?}", cop.length, cop.dims);
    }
    println!();
    for n in 2..=6 {
        let cp = build_longest_chain_cp(n)?;
        println!("CP    {n}  {:6}  {:?}", cp.length, cp.dims);
    }

    let chain = build_longest_chain_cop(3)?;
    println!("\nseparating members of the COP chain at n = 3:");
    for (i, sep) in chain.separators.iter().enumerate() {
        println!(
            "  step {} -> {}: separator with Frobenius norm {:.3}",
            i,
            i + 1,
            sep.fro_norm()
        );
    }
    Ok(())
}
