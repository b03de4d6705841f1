//! Chains of faces ordered by strict inclusion, with the separating members
//! and non-polyhedrality witnesses that make the strictness checkable.

use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use serde::Serialize;

/// A chain `F_1 ⊊ F_2 ⊊ ... ⊊ F_len` reported smallest face first, so `dims`
/// is strictly increasing.
///
/// `separators[i]` is a member of `faces[i + 1]` that the containment test
/// rejects for `faces[i]`, witnessing the strict inclusion. For
/// distance-to-polyhedrality reports, `witness_generators[i]` carries
/// pairwise non-proportional extreme generators of `faces[i]`, certifying
/// that the face is not polyhedral with that few rays.
#[derive(Debug, Clone, Serialize)]
pub struct ChainReport<F> {
    pub faces: Vec<F>,
    pub dims: Vec<usize>,
    pub length: usize,
    pub non_polyhedral_flags: Vec<bool>,
    pub separators: Vec<SymMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_generators: Option<Vec<Vec<SymMatrix>>>,
}

impl<F> ChainReport<F> {
    /// Assembles a report, checking the structural invariants: dims strictly
    /// increasing, one separator per consecutive pair, and each separator
    /// accepted by the larger face but rejected by the smaller.
    pub fn build(
        faces: Vec<F>,
        dims: Vec<usize>,
        non_polyhedral_flags: Vec<bool>,
        separators: Vec<SymMatrix>,
        contains: impl Fn(&F, &SymMatrix) -> Result<bool>,
    ) -> Result<Self> {
        if dims.len() != faces.len() || non_polyhedral_flags.len() != faces.len() {
            return Err(Error::Dimension(
                "chain report fields disagree on the face count".into(),
            ));
        }
        for w in dims.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Numerical(format!(
                    "chain dims not strictly increasing: {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if separators.len() + 1 != faces.len() {
            return Err(Error::Dimension(
                "expected one separating member per consecutive pair".into(),
            ));
        }
        for (i, sep) in separators.iter().enumerate() {
            if !contains(&faces[i + 1], sep)? {
                return Err(Error::Numerical(format!(
                    "separator {i} is not a member of the larger face"
                )));
            }
            if contains(&faces[i], sep)? {
                return Err(Error::Numerical(format!(
                    "separator {i} failed to leave the smaller face"
                )));
            }
        }
        let length = faces.len();
        Ok(Self {
            faces,
            dims,
            length,
            non_polyhedral_flags,
            separators,
            witness_generators: None,
        })
    }

    pub fn with_witness_generators(mut self, generators: Vec<Vec<SymMatrix>>) -> Result<Self> {
        if generators.len() != self.faces.len() {
            return Err(Error::Dimension(
                "one generator list per face is required".into(),
            ));
        }
        for list in &generators {
            check_pairwise_non_proportional(list)?;
        }
        self.witness_generators = Some(generators);
        Ok(self)
    }
}

/// Fails unless all pairwise Frobenius cosines stay below `1 - 1e-6`.
pub fn check_pairwise_non_proportional(list: &[SymMatrix]) -> Result<()> {
    for i in 0..list.len() {
        for j in (i + 1)..list.len() {
            let cosine = list[i].inner(&list[j]) / (list[i].fro_norm() * list[j].fro_norm());
            if cosine >= 1.0 - 1e-6 {
                return Err(Error::Numerical(format!(
                    "witness generators {i} and {j} are proportional (cosine {cosine})"
                )));
            }
        }
    }
    Ok(())
}
