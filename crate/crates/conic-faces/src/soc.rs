//! Geometry of the second-order cone `L^n = {x : x_1 >= ||x_{2:n}||}`:
//! point classification, the orthogonal three-way split of `R^n`, the
//! `(u, v)` equation-system solver, subspace-cone intersection
//! classification, and constructive interior/boundary bases.

use crate::error::{Error, Result};
use crate::linalg::{self, dot, norm, scale_vec, unit_vector, Subspace, SymMatrix};
use serde::{Deserialize, Serialize};

/// A vector in `R^n` with the `(x_1; x_{2:n})` split. The cone `L^n` is only
/// defined for `n >= 2`, which the constructor enforces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SocVector {
    x: Vec<f64>,
}

impl SocVector {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if x.len() < 2 {
            return Err(Error::Dimension(format!(
                "second-order cone vectors need n >= 2, got n = {}",
                x.len()
            )));
        }
        Ok(Self { x })
    }

    /// Concatenates head `t` and tail `v` into `(t; v)`.
    pub fn concat(t: f64, v: &[f64]) -> Result<Self> {
        let mut x = Vec::with_capacity(v.len() + 1);
        x.push(t);
        x.extend_from_slice(v);
        Self::new(x)
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn head(&self) -> f64 {
        self.x[0]
    }

    pub fn tail(&self) -> &[f64] {
        &self.x[1..]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.x
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.x
    }

    pub fn norm(&self) -> f64 {
        norm(&self.x)
    }

    /// `x_1 - ||x_{2:n}||`; positive inside, zero on the boundary.
    pub fn margin(&self) -> f64 {
        self.head() - norm(self.tail())
    }

    /// The Lorentz form `x' J_n x = x_1^2 - ||x_{2:n}||^2`.
    pub fn j_form(&self) -> f64 {
        let t = norm(self.tail());
        self.head() * self.head() - t * t
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            x: scale_vec(&self.x, c),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1.0)
    }
}

/// Location of a point relative to `L^n`. The zero vector classifies
/// `Boundary`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointClass {
    Interior,
    Boundary,
    Exterior,
}

/// How a subspace `X` meets `L^n`: through the interior, in a single boundary
/// ray, or only at the origin. Witnesses are unit vectors.
#[derive(Debug, Clone, PartialEq)]
pub enum SubspaceConeClass {
    /// `X ∩ int L^n` is nonempty; the witness is an interior point.
    InteriorMeeting(SocVector),
    /// `X ∩ L^n = R_+ x` for the boundary witness `x`.
    Ray(SocVector),
    /// `X ∩ L^n = {0}`.
    ZeroOnly,
}

impl SubspaceConeClass {
    pub fn tag(&self) -> &'static str {
        match self {
            SubspaceConeClass::InteriorMeeting(_) => "interior_meeting",
            SubspaceConeClass::Ray(_) => "ray",
            SubspaceConeClass::ZeroOnly => "zero_only",
        }
    }

    pub fn witness(&self) -> Option<&SocVector> {
        match self {
            SubspaceConeClass::InteriorMeeting(w) | SubspaceConeClass::Ray(w) => Some(w),
            SubspaceConeClass::ZeroOnly => None,
        }
    }
}

impl Serialize for SubspaceConeClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            tag: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<&'a [f64]>,
        }
        Wire {
            tag: self.tag(),
            witness: self.witness().map(|w| w.as_slice()),
        }
        .serialize(serializer)
    }
}

/// Classifies a point against `L^n` at relative tolerance `tol`.
pub fn classify_point(x: &SocVector, tol: f64) -> PointClass {
    let scale = tol * (1.0 + x.norm());
    let margin = x.margin();
    if margin > scale {
        PointClass::Interior
    } else if margin >= -scale {
        PointClass::Boundary
    } else {
        PointClass::Exterior
    }
}

/// Orthogonal split of `x` against the three mutually orthogonal summands
/// `R(1; v)`, `R(||v||^2; -v)`, and `{(0; u) : u ⊥ v}`:
///
/// `x = α (1; v) + β (||v||^2; -v) + (0; u)` with `u' v = 0`.
///
/// When `v = 0` the middle summand degenerates; `β` is reported as `0` and
/// the split is `x = x_1 (1; 0) + (0; x_{2:n})`.
pub fn peirce_split(v: &[f64], x: &SocVector) -> Result<(f64, f64, Vec<f64>)> {
    if x.dim() != v.len() + 1 {
        return Err(Error::Dimension(format!(
            "x has dimension {}, expected {}",
            x.dim(),
            v.len() + 1
        )));
    }
    let vv = dot(v, v);
    let xv = dot(x.tail(), v);
    let alpha = (x.head() + xv) / (1.0 + vv);
    let beta = if vv == 0.0 {
        0.0
    } else {
        (x.head() * vv - xv) / (vv * vv + vv)
    };
    let mut u = x.tail().to_vec();
    linalg::axpy(&mut u, -(alpha - beta), v);
    Ok((alpha, beta, u))
}

/// Solves the system `w = -v + u`, `u' v = 0`, `||v|| = 1` for `||w|| > 1`.
///
/// The auxiliary unit vector orthogonal to `w` is chosen deterministically:
/// the coordinate direction `e_k` with `k = argmin |w_k|` (ties to the
/// smallest index), projected against `w` and normalized.
pub fn solve_uv(w: &[f64], tol: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let nw = norm(w);
    if nw <= 1.0 + tol {
        return Err(Error::Domain(format!(
            "solve_uv requires ||w|| > 1, got {nw}"
        )));
    }
    if w.len() < 2 {
        return Err(Error::Domain(
            "solve_uv needs dimension >= 2: no unit vector orthogonal to w exists in R^1".into(),
        ));
    }
    let k = w
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.abs().partial_cmp(&b.abs()).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    let mut aux = unit_vector(w.len(), k);
    linalg::axpy(&mut aux, -w[k] / (nw * nw), w);
    let aux = scale_vec(&aux, 1.0 / norm(&aux));

    let shrink = 1.0 - 1.0 / (nw * nw);
    let mut u = scale_vec(w, shrink);
    linalg::axpy(&mut u, shrink.sqrt(), &aux);
    let mut v = u.clone();
    linalg::axpy(&mut v, -1.0, w);
    Ok((u, v))
}

/// Classifies how a subspace meets `L^n` through the spectrum of the
/// restricted Lorentz form `M = B' J_n B`.
///
/// `λ_max(M) > tol` yields an interior witness; `λ_max ≈ 0` yields the unique
/// boundary ray provided the zero eigenspace is one-dimensional and its image
/// has a definite head sign, and degenerates to `ZeroOnly` otherwise;
/// `λ_max < -tol` means the subspace only touches the origin.
pub fn classify_subspace(x: &Subspace, tol: f64) -> SubspaceConeClass {
    let n = x.ambient_dim();
    assert!(n >= 2, "ambient dimension must be at least 2");
    if x.dim() == 0 {
        return SubspaceConeClass::ZeroOnly;
    }
    let m = SymMatrix::j_matrix(n).congruence(x.basis());
    let eig = linalg::sym_eigen(&m).expect("Jacobi convergence");
    let scale = tol * (1.0 + m.fro_norm());
    let lambda_max = eig.max();

    let lift = |coeffs: &[f64]| -> SocVector {
        let mut out = vec![0.0; n];
        for (c, b) in coeffs.iter().zip(x.basis()) {
            linalg::axpy(&mut out, *c, b);
        }
        SocVector::new(out).expect("ambient dimension >= 2")
    };

    if lambda_max > scale {
        let top = lift(eig.eigenvectors.last().unwrap());
        let top = if top.head() > 0.0 { top } else { top.neg() };
        debug_assert!(classify_point(&top, tol.max(1e-12)) == PointClass::Interior);
        return SubspaceConeClass::InteriorMeeting(top);
    }
    if lambda_max >= -scale {
        // Candidate ray: a totally isotropic subspace of the Lorentz form
        // has dimension at most one, so a fuzzier zero eigenspace is noise.
        let zero_count = eig
            .eigenvalues
            .iter()
            .filter(|v| v.abs() <= scale)
            .count();
        if zero_count == 1 {
            let w = lift(eig.eigenvectors.last().unwrap());
            let w = if w.head() >= 0.0 { w } else { w.neg() };
            if w.head() > scale && classify_point(&w, tol.max(1e-10)) == PointClass::Boundary {
                return SubspaceConeClass::Ray(w);
            }
        }
        return SubspaceConeClass::ZeroOnly;
    }
    SubspaceConeClass::ZeroOnly
}

/// Basis vectors of `X` chosen in the interior direction `x0` found by
/// [`classify_subspace`]: the output is `{x0} ∪ {b_i + λ x0}` over an
/// orthonormal basis `{b_i}` of `X ∩ {x0}^⊥` with `λ = 2 / margin(x0)`, so
/// every vector is interior and the set spans `X`.
pub fn interior_basis(x: &Subspace) -> Result<Vec<SocVector>> {
    let witness = match classify_subspace(x, crate::DEFAULT_TOL) {
        SubspaceConeClass::InteriorMeeting(w) => w,
        other => {
            return Err(Error::Precondition(format!(
                "interior_basis needs a subspace meeting the interior, got {}",
                other.tag()
            )))
        }
    };
    Ok(interior_basis_from_witness(x, &witness, &|y| y.margin()))
}

/// The λ-shift construction behind [`interior_basis`], parameterized over the
/// cone margin so polyhedral cones can reuse it. `margin` must be concave,
/// positively homogeneous, positive exactly on the interior, and satisfy
/// `margin(b) >= -2 ||b||`.
pub fn interior_basis_from_witness(
    x: &Subspace,
    witness: &SocVector,
    margin: &dyn Fn(&SocVector) -> f64,
) -> Vec<SocVector> {
    let directions = orthocomplement_within(x, witness.as_slice());
    let lambda = 2.0 / margin(witness);
    let mut out = vec![witness.clone()];
    for b in directions {
        let mut shifted = b;
        linalg::axpy(&mut shifted, lambda, witness.as_slice());
        out.push(SocVector::new(shifted).expect("dimension preserved"));
    }
    out
}

/// Orthonormal basis of `X ∩ {w}^⊥` (the directions of `X` orthogonal to a
/// unit-ish vector `w` of `X`).
fn orthocomplement_within(x: &Subspace, w: &[f64]) -> Vec<Vec<f64>> {
    let mut seeded: Vec<Vec<f64>> = vec![scale_vec(w, 1.0 / norm(w))];
    seeded.extend(x.basis().iter().cloned());
    let all = linalg::orthonormalize_in_order(x.ambient_dim(), &seeded, 1e-8);
    all.basis()[1..].to_vec()
}

/// Basis of `X` drawn from `X ∩ ∂L^n`: through the interior witness `x0`,
/// each orthogonal direction `b` meets the boundary at the two real roots of
/// `(x0 + s b)' J (x0 + s b) = 0`; roots are consumed (larger `|s|` first,
/// then whichever keeps the partial set independent) until `d = dim X`
/// boundary vectors span `X`. Requires `d >= 2`.
pub fn boundary_basis(x: &Subspace) -> Result<Vec<SocVector>> {
    let d = x.dim();
    if d < 2 {
        return Err(Error::Precondition(format!(
            "boundary_basis needs dim X >= 2, got {d}"
        )));
    }
    let witness = match classify_subspace(x, crate::DEFAULT_TOL) {
        SubspaceConeClass::InteriorMeeting(w) => w,
        other => {
            return Err(Error::Precondition(format!(
                "boundary_basis needs a subspace meeting the interior, got {}",
                other.tag()
            )))
        }
    };
    let directions = orthocomplement_within(x, witness.as_slice());
    let x0 = witness.as_slice();
    let j = SymMatrix::j_matrix(x.ambient_dim());
    let c = j.quad_form(x0);

    let mut picked: Vec<SocVector> = Vec::new();
    let mut partial = linalg::orthonormalize(x.ambient_dim(), &[], 1e-10);
    let accept = |cand: Vec<f64>, partial: &mut Subspace, picked: &mut Vec<SocVector>| -> bool {
        if partial.residual_norm(&cand) > 1e-8 * (1.0 + norm(&cand)) {
            let mut span: Vec<Vec<f64>> = partial.basis().to_vec();
            span.push(cand.clone());
            *partial = linalg::orthonormalize(x.ambient_dim(), &span, 1e-10);
            picked.push(SocVector::new(cand).expect("dimension preserved"));
            true
        } else {
            false
        }
    };

    'outer: for round in 0..2 {
        for b in &directions {
            // b ⊥ x0 and x0 interior force b' J b < 0, so the quadratic in s
            // has two real roots of opposite signs, both on ∂L^n.
            let a = j.quad_form(b);
            let bh = dot(&j.mat_vec(x0), b);
            let disc = (bh * bh - a * c).max(0.0).sqrt();
            let roots = [(-bh - disc) / a, (-bh + disc) / a];
            let (first, second) = if roots[0].abs() >= roots[1].abs() {
                (roots[0], roots[1])
            } else {
                (roots[1], roots[0])
            };
            for s in [first, second] {
                let mut cand = x0.to_vec();
                linalg::axpy(&mut cand, s, b);
                if accept(cand, &mut partial, &mut picked) {
                    if picked.len() == d {
                        break 'outer;
                    }
                    // One root per direction on the first round.
                    if round == 0 {
                        break;
                    }
                }
            }
        }
    }
    if picked.len() != d {
        return Err(Error::Numerical(format!(
            "boundary basis construction stalled at {} of {d} vectors",
            picked.len()
        )));
    }
    Ok(picked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::orthonormalize;
    use proptest::prelude::*;

    fn soc(x: &[f64]) -> SocVector {
        SocVector::new(x.to_vec()).unwrap()
    }

    #[test]
    fn classify_point_examples() {
        assert_eq!(classify_point(&soc(&[1.0, 0.0, 0.0]), 1e-9), PointClass::Interior);
        assert_eq!(classify_point(&soc(&[1.0, 1.0]), 1e-9), PointClass::Boundary);
        assert_eq!(classify_point(&soc(&[0.0, 1.0, 0.0]), 1e-9), PointClass::Exterior);
        assert_eq!(classify_point(&soc(&[0.0, 0.0]), 1e-9), PointClass::Boundary);
    }

    #[test]
    fn peirce_first_summand() {
        let v = [0.3, -0.2, 0.7];
        let x = soc(&[1.0, 0.3, -0.2, 0.7]);
        let (alpha, beta, u) = peirce_split(&v, &x).unwrap();
        assert!((alpha - 1.0).abs() <= 1e-12);
        assert!(beta.abs() <= 1e-12);
        assert!(norm(&u) <= 1e-12);
    }

    #[test]
    fn peirce_middle_summand() {
        // v = e1 in R^2, x = (1, -1, 0): inner products with (1; e1) and
        // (1; -e1) give (alpha, beta) = (0, 1) and no residual.
        let (alpha, beta, u) = peirce_split(&[1.0, 0.0], &soc(&[1.0, -1.0, 0.0])).unwrap();
        assert!(alpha.abs() <= 1e-12);
        assert!((beta - 1.0).abs() <= 1e-12);
        assert!(norm(&u) <= 1e-12);
    }

    #[test]
    fn peirce_degenerate_v() {
        let (alpha, beta, u) = peirce_split(&[0.0], &soc(&[2.0, 3.0])).unwrap();
        assert_eq!(alpha, 2.0);
        assert_eq!(beta, 0.0);
        assert_eq!(u, vec![3.0]);
    }

    fn reconstruct(v: &[f64], alpha: f64, beta: f64, u: &[f64]) -> Vec<f64> {
        let vv = dot(v, v);
        let mut x = vec![alpha + beta * vv];
        for i in 0..v.len() {
            x.push(alpha * v[i] - beta * v[i] + u[i]);
        }
        x
    }

    #[test]
    fn solve_uv_frozen_values() {
        // w = (2, 0): the auxiliary vector rule picks (0, 1), giving
        // u = (1.5, sqrt(3)/2) and v = (-0.5, sqrt(3)/2).
        let (u, v) = solve_uv(&[2.0, 0.0], 1e-9).unwrap();
        assert!((u[0] - 1.5).abs() <= 1e-12);
        assert!((u[1] - 3.0_f64.sqrt() / 2.0).abs() <= 1e-12);
        assert!((v[0] + 0.5).abs() <= 1e-12);
        assert!((v[1] - 3.0_f64.sqrt() / 2.0).abs() <= 1e-12);
    }

    #[test]
    fn solve_uv_residuals_at_norm_sqrt2() {
        let (u, v) = solve_uv(&[2.0_f64.sqrt(), 0.0], 1e-9).unwrap();
        assert!((norm(&u) - 1.0).abs() <= 1e-10);
        assert!((norm(&v) - 1.0).abs() <= 1e-10);
        assert!(dot(&u, &v).abs() <= 1e-10);
    }

    #[test]
    fn solve_uv_domain_violation() {
        assert!(matches!(
            solve_uv(&[0.5, 0.0], 1e-9),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn classify_subspace_full_space() {
        let s = Subspace::full(3);
        match classify_subspace(&s, 1e-9) {
            SubspaceConeClass::InteriorMeeting(w) => {
                assert_eq!(classify_point(&w, 1e-9), PointClass::Interior);
            }
            other => panic!("expected interior meeting, got {}", other.tag()),
        }
    }

    #[test]
    fn classify_subspace_boundary_ray() {
        let s = orthonormalize(2, &[vec![1.0, 1.0]], 1e-10);
        match classify_subspace(&s, 1e-9) {
            SubspaceConeClass::Ray(w) => {
                let r = 1.0 / 2.0_f64.sqrt();
                assert!((w.as_slice()[0] - r).abs() <= 1e-10);
                assert!((w.as_slice()[1] - r).abs() <= 1e-10);
            }
            other => panic!("expected ray, got {}", other.tag()),
        }
    }

    #[test]
    fn classify_subspace_head_zero_slice() {
        // {(0; u)}: the form is -||u||^2 < 0 away from zero.
        let s = orthonormalize(
            4,
            &[unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)],
            1e-10,
        );
        assert_eq!(classify_subspace(&s, 1e-9), SubspaceConeClass::ZeroOnly);
    }

    #[test]
    fn interior_basis_spans_and_classifies() {
        for basis_vectors in [
            vec![unit_vector(2, 0), unit_vector(2, 1)],
            vec![vec![1.0, 0.3, 0.1], vec![0.0, 1.0, 1.0], vec![0.2, 0.0, 1.0]],
        ] {
            let n = basis_vectors[0].len();
            let x = orthonormalize(n, &basis_vectors, 1e-10);
            let out = interior_basis(&x).unwrap();
            assert_eq!(out.len(), x.dim());
            for v in &out {
                assert_eq!(classify_point(v, 1e-9), PointClass::Interior);
            }
            let span = orthonormalize(
                n,
                &out.iter().map(|v| v.as_slice().to_vec()).collect::<Vec<_>>(),
                1e-10,
            );
            assert_eq!(span.dim(), x.dim());
        }
    }

    #[test]
    fn interior_basis_single_ray() {
        let x = orthonormalize(3, &[vec![1.0, 0.4, 0.3]], 1e-10);
        let out = interior_basis(&x).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(classify_point(&out[0], 1e-9), PointClass::Interior);
    }

    #[test]
    fn boundary_basis_of_plane() {
        let x = Subspace::full(2);
        let out = boundary_basis(&x).unwrap();
        assert_eq!(out.len(), 2);
        for v in &out {
            assert_eq!(classify_point(v, 1e-9), PointClass::Boundary);
        }
        // Up to scaling the two rays are (1, 1) and (1, -1).
        let slopes: Vec<f64> = out.iter().map(|v| v.tail()[0] / v.head()).collect();
        let mut sorted = slopes.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((sorted[0] + 1.0).abs() <= 1e-9);
        assert!((sorted[1] - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn boundary_basis_of_r3() {
        let x = Subspace::full(3);
        let out = boundary_basis(&x).unwrap();
        assert_eq!(out.len(), 3);
        for v in &out {
            assert_eq!(classify_point(v, 1e-9), PointClass::Boundary);
        }
        let span = orthonormalize(
            3,
            &out.iter().map(|v| v.as_slice().to_vec()).collect::<Vec<_>>(),
            1e-10,
        );
        assert_eq!(span.dim(), 3);
    }

    #[test]
    fn boundary_basis_rejects_lines() {
        let x = orthonormalize(2, &[vec![1.0, 1.0]], 1e-10);
        assert!(matches!(
            boundary_basis(&x),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn unit_v_hyperplane_collapses_to_ray() {
        // {x : x' (1; -v) = 0} meets L^n exactly in the ray through (1; v).
        for v in [vec![1.0, 0.0], vec![0.6, -0.8]] {
            let mut one_neg_v = vec![1.0];
            one_neg_v.extend(v.iter().map(|c| -c));
            let hyper = Subspace::hyperplane_perp(&one_neg_v);
            match classify_subspace(&hyper, 1e-9) {
                SubspaceConeClass::Ray(w) => {
                    let mut expect = vec![1.0];
                    expect.extend_from_slice(&v);
                    let cosine = dot(w.as_slice(), &expect) / (w.norm() * norm(&expect));
                    assert!((cosine - 1.0).abs() <= 1e-9);
                }
                other => panic!("expected ray, got {}", other.tag()),
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn peirce_reconstructs_and_is_orthogonal(seed in 0u64..5000) {
            let mut state = seed.wrapping_mul(0xD1342543DE82EF95).wrapping_add(0x9E6C63D0876A9A27);
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
            };
            let dim = 2 + (seed % 5) as usize;
            let v: Vec<f64> = (0..dim).map(|_| 3.0 * next()).collect();
            let x = SocVector::new((0..=dim).map(|_| 5.0 * next()).collect()).unwrap();
            let (alpha, beta, u) = peirce_split(&v, &x).unwrap();
            prop_assert!(dot(&u, &v).abs() <= 1e-10 * (1.0 + norm(&v)) * (1.0 + norm(&u)));
            let rec = reconstruct(&v, alpha, beta, &u);
            let err: f64 = rec
                .iter()
                .zip(x.as_slice())
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            prop_assert!(err <= 1e-12 * (1.0 + x.norm()));
        }

        #[test]
        fn solve_uv_system_residuals(seed in 0u64..2000) {
            let mut state = seed.wrapping_mul(0xA0761D6478BD642F).wrapping_add(0xE7037ED1A0B428DB);
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
            };
            let dim = 2 + (seed % 4) as usize;
            let dir: Vec<f64> = (0..dim).map(|_| next()).collect();
            prop_assume!(norm(&dir) > 1e-3);
            let target = 1.0 + 9.0 * (0.5 + next()).clamp(0.001, 1.0);
            let w = scale_vec(&dir, target / norm(&dir));
            let (u, v) = solve_uv(&w, 1e-9).unwrap();
            let scale = 1.0 + norm(&w);
            let mut res = w.clone();
            linalg::axpy(&mut res, 1.0, &v);
            linalg::axpy(&mut res, -1.0, &u);
            prop_assert!(norm(&res) <= 1e-10 * scale);
            prop_assert!(dot(&u, &v).abs() <= 1e-10 * scale);
            prop_assert!((norm(&v) - 1.0).abs() <= 1e-10 * scale);
        }
    }
}
