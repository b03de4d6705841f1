//! The completely positive cone `CP(L^n) = S_+^n ∩ {<A, J_n> >= 0}`:
//! membership, the balanced rank-one decomposition, atom decompositions into
//! Lorentz-cone vectors, face descriptors with closed-form dimensions,
//! certificates, and chain constructions.
//!
//! Every face has the form `CP(X ∩ L^n)` ("≥" faces) or `CP(X ∩ ∂L^n)`
//! ("=" faces) for a subspace `X`, and the dimension is a closed-form
//! function of how `X` meets the cone: `T_d` / `T_d - 1` when `X` meets the
//! interior, `1` when the intersection is a boundary ray, `0` otherwise.

use crate::chain::ChainReport;
use crate::cop::{psd_with_range, CertificateMode, ExposingCertificate};
use crate::error::{Error, Result};
use crate::linalg::{
    self, dot, norm, scale_vec, svec, sym_eigen, tensor_square, unit_vector, Subspace, SymMatrix,
};
use crate::soc::{classify_subspace, interior_basis, SocVector, SubspaceConeClass};
use crate::triangular;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Membership verdict; failures name the violated half of the description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpMembership {
    Member,
    NonMember(CpRejection),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CpRejection {
    NotPsd,
    NegativeJInner,
}

impl CpMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, CpMembership::Member)
    }
}

impl Serialize for CpMembership {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            member: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            reason: Option<CpRejection>,
        }
        let wire = match self {
            CpMembership::Member => Wire {
                member: true,
                reason: None,
            },
            CpMembership::NonMember(r) => Wire {
                member: false,
                reason: Some(*r),
            },
        };
        wire.serialize(serializer)
    }
}

/// `A ∈ CP(L^n)` iff `A` is PSD and `<A, J_n> >= 0`, both within
/// `tol · (1 + ||A||_F)`.
pub fn cp_membership(a: &SymMatrix, tol: f64) -> Result<CpMembership> {
    let n = a.order();
    if n < 2 {
        return Err(Error::Dimension("need n >= 2".into()));
    }
    let scale = tol * (1.0 + a.fro_norm());
    if sym_eigen(a)?.min() < -scale {
        return Ok(CpMembership::NonMember(CpRejection::NotPsd));
    }
    if a.inner(&SymMatrix::j_matrix(n)) < -scale {
        return Ok(CpMembership::NonMember(CpRejection::NegativeJInner));
    }
    Ok(CpMembership::Member)
}

/// Rank-one decomposition `A = Σ a_i a_i'` with `a_i ∈ X` and every dyad
/// carrying the same value of the quadratic form `Q`:
/// `a_i' Q a_i = <A, Q> / r` with `r = rank(A)`.
///
/// Starting from the eigen-decomposition, the worst-deviating index is paired
/// with one of opposite-sign deviation (one exists, deviations sum to zero)
/// and the pair is rotated through the root of
/// `(q_jj - m) + 2 t q_jk + t^2 (q_kk - m) = 0`, which preserves
/// `a_j a_j' + a_k a_k'`. Each rotation zeroes one deviation, so the loop
/// finishes within `r` passes.
pub fn balanced_rank1_decomposition(
    a: &SymMatrix,
    x: &Subspace,
    q: &SymMatrix,
    tol: f64,
) -> Result<Vec<Vec<f64>>> {
    let n = a.order();
    if x.ambient_dim() != n || q.order() != n {
        return Err(Error::Dimension(
            "matrix, subspace, and form must share the ambient dimension".into(),
        ));
    }
    if !psd_with_range(a, x, tol.max(1e-8)) {
        return Err(Error::Precondition(
            "A must be PSD with range inside X".into(),
        ));
    }

    let eig = sym_eigen(a)?;
    let radius = eig.eigenvalues.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));
    let threshold = tol * (1.0 + radius);
    let mut atoms: Vec<Vec<f64>> = eig
        .eigenvalues
        .iter()
        .zip(&eig.eigenvectors)
        .filter(|(lam, _)| lam.abs() > threshold)
        .map(|(lam, vec)| scale_vec(vec, lam.max(0.0).sqrt()))
        .collect();
    let r = atoms.len();
    if r == 0 {
        return Ok(atoms);
    }

    let target = a.inner(q) / r as f64;
    let scale = tol * (1.0 + a.fro_norm() * q.fro_norm());
    let form = |u: &[f64], w: &[f64]| dot(u, &q.mat_vec(w));

    // Ties break toward the lowest index (strict comparisons keep the first
    // maximum), so runs are reproducible across platforms.
    let argmax_abs = |values: &[f64], keep: &dyn Fn(usize, f64) -> bool| -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, &v) in values.iter().enumerate() {
            if keep(i, v) && best.is_none_or(|b| v.abs() > values[b].abs()) {
                best = Some(i);
            }
        }
        best
    };

    for _ in 0..(2 * r + 5) {
        let deviations: Vec<f64> = atoms.iter().map(|a_i| form(a_i, a_i) - target).collect();
        let j = argmax_abs(&deviations, &|_, _| true).unwrap();
        if deviations[j].abs() <= scale {
            return Ok(atoms);
        }
        let opposite_sign = -deviations[j].signum();
        let k = argmax_abs(&deviations, &|i, d| i != j && d.signum() == opposite_sign)
            .ok_or_else(|| {
                Error::Numerical(
                    "no opposite-sign deviation found; deviations must sum to zero".into(),
                )
            })?;

        // (dev_j) + 2 t q_jk + t^2 (dev_k) = 0
        let c0 = deviations[j];
        let c1 = 2.0 * form(&atoms[j], &atoms[k]);
        let c2 = deviations[k];
        let t = solve_balancing_quadratic(c0, c1, c2, scale)?;

        let norm_factor = 1.0 / (1.0 + t * t).sqrt();
        let new_j: Vec<f64> = atoms[j]
            .iter()
            .zip(&atoms[k])
            .map(|(aj, ak)| (aj + t * ak) * norm_factor)
            .collect();
        let new_k: Vec<f64> = atoms[k]
            .iter()
            .zip(&atoms[j])
            .map(|(ak, aj)| (ak - t * aj) * norm_factor)
            .collect();
        atoms[j] = new_j;
        atoms[k] = new_k;
    }

    let final_dev = atoms
        .iter()
        .map(|a_i| (form(a_i, a_i) - target).abs())
        .fold(0.0_f64, f64::max);
    if final_dev <= scale {
        Ok(atoms)
    } else {
        Err(Error::Numerical(format!(
            "balancing stalled with residual deviation {final_dev:e}"
        )))
    }
}

/// Root of `c0 + c1 t + c2 t^2 = 0` with the smaller magnitude, preferring
/// the numerically stable branch. The discriminant is nonnegative whenever
/// `c0 c2 < 0`; values within the clamp band are treated as tangent.
fn solve_balancing_quadratic(c0: f64, c1: f64, c2: f64, scale: f64) -> Result<f64> {
    let tiny = 1e-14 * (1.0 + c0.abs() + c1.abs() + c2.abs());
    if c2.abs() <= tiny {
        if c1.abs() <= tiny {
            if c0.abs() <= scale {
                return Ok(0.0);
            }
            return Err(Error::Numerical(
                "degenerate balancing equation with a nonzero constant term".into(),
            ));
        }
        return Ok(-c0 / c1);
    }
    let mut disc = c1 * c1 - 4.0 * c0 * c2;
    if disc < 0.0 {
        if disc > -1e-10 * (1.0 + c1 * c1 + (c0 * c2).abs()) {
            disc = 0.0;
        } else {
            return Err(Error::Numerical(format!(
                "balancing discriminant {disc:e} is negative beyond tolerance"
            )));
        }
    }
    let sq = disc.sqrt();
    // Citardauq form for the small root avoids cancellation.
    let qq = -0.5 * (c1 + c1.signum() * sq);
    let (r1, r2) = if qq.abs() > tiny {
        (qq / c2, c0 / qq)
    } else {
        ((-c1 + sq) / (2.0 * c2), (-c1 - sq) / (2.0 * c2))
    };
    Ok(if r1.abs() <= r2.abs() { r1 } else { r2 })
}

/// Atom list witnessing `A ∈ CP(L^n)` together with the reconstruction
/// residual; the atom count equals `rank(A)` and every atom lies in `L^n`.
#[derive(Debug, Clone)]
pub struct CpAtomDecomposition {
    pub atoms: Vec<SocVector>,
    pub residual: f64,
}

impl Serialize for CpAtomDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            atoms: Vec<&'a [f64]>,
            residual: f64,
        }
        Wire {
            atoms: self.atoms.iter().map(|a| a.as_slice()).collect(),
            residual: self.residual,
        }
        .serialize(serializer)
    }
}

/// Balanced decomposition against `Q = J_n` on `X = range(A)`, with heads
/// flipped nonnegative. Every atom then carries
/// `a' J a = <A, J> / r >= 0` and a nonnegative head, hence lies in `L^n`;
/// when `<A, J> = 0` every atom is a boundary vector.
pub fn cp_atom_decomposition(a: &SymMatrix, tol: f64) -> Result<CpAtomDecomposition> {
    match cp_membership(a, tol)? {
        CpMembership::Member => {}
        CpMembership::NonMember(reason) => {
            return Err(Error::Precondition(format!(
                "A is not completely positive ({reason:?})"
            )))
        }
    }
    let n = a.order();
    let range = range_subspace(a, tol);
    let j = SymMatrix::j_matrix(n);
    let raw = balanced_rank1_decomposition(a, &range, &j, tol)?;
    let atoms: Vec<SocVector> = raw
        .into_iter()
        .map(|atom| {
            let fixed = if atom[0] < 0.0 {
                scale_vec(&atom, -1.0)
            } else {
                atom
            };
            SocVector::new(fixed).expect("n >= 2")
        })
        .collect();
    let mut sum = SymMatrix::zeros(n);
    for atom in &atoms {
        sum = sum.add(&tensor_square(atom.as_slice()));
    }
    let residual = a.sub(&sum).fro_norm();
    if residual > 1e-8 * (1.0 + a.fro_norm()) {
        return Err(Error::Numerical(format!(
            "decomposition residual {residual:e} exceeds tolerance"
        )));
    }
    Ok(CpAtomDecomposition { atoms, residual })
}

/// Orthonormal basis of `range(A)` from the eigenvectors above the rank
/// threshold.
pub fn range_subspace(a: &SymMatrix, tol: f64) -> Subspace {
    let eig = sym_eigen(a).expect("Jacobi convergence");
    let radius = eig.eigenvalues.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));
    let threshold = tol * (1.0 + radius);
    let cols: Vec<Vec<f64>> = eig
        .eigenvalues
        .iter()
        .zip(&eig.eigenvectors)
        .filter(|(lam, _)| lam.abs() > threshold)
        .map(|(_, vec)| vec.clone())
        .collect();
    Subspace::from_orthonormal(a.order(), cols).expect("eigenvectors are orthonormal")
}

/// Face of `CP(L^n)`: `CP(X ∩ L^n)` when `boundary` is false and
/// `CP(X ∩ ∂L^n)` when true, with the intersection class and closed-form
/// dimension resolved at construction.
#[derive(Debug, Clone)]
pub struct CpFaceDescriptor {
    x: Subspace,
    boundary: bool,
    cls: SubspaceConeClass,
    dim: usize,
}

impl CpFaceDescriptor {
    pub fn subspace(&self) -> &Subspace {
        &self.x
    }

    pub fn boundary(&self) -> bool {
        self.boundary
    }

    pub fn cls(&self) -> &SubspaceConeClass {
        &self.cls
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_order(&self) -> usize {
        self.x.ambient_dim()
    }
}

/// Builds the face descriptor; the dimension table is `T_d` / `T_d - 1` for
/// interior-meeting `X`, `1` for the ray case, `0` for zero-only.
pub fn make_cp_face(x: Subspace, boundary: bool) -> Result<CpFaceDescriptor> {
    if x.ambient_dim() < 2 {
        return Err(Error::Dimension("need n >= 2".into()));
    }
    let cls = classify_subspace(&x, crate::DEFAULT_TOL);
    let d = x.dim();
    let dim = match cls {
        SubspaceConeClass::InteriorMeeting(_) => {
            if boundary {
                triangular(d) - 1
            } else {
                triangular(d)
            }
        }
        SubspaceConeClass::Ray(_) => 1,
        SubspaceConeClass::ZeroOnly => 0,
    };
    Ok(CpFaceDescriptor {
        x,
        boundary,
        cls,
        dim,
    })
}

impl Serialize for CpFaceDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            n: usize,
            basis: &'a [Vec<f64>],
            boundary: bool,
            class: &'static str,
            dim: usize,
        }
        Wire {
            n: self.x.ambient_dim(),
            basis: self.x.basis(),
            boundary: self.boundary,
            class: self.cls.tag(),
            dim: self.dim,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CpFaceDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            n: usize,
            basis: Vec<Vec<f64>>,
            boundary: bool,
            class: Option<String>,
            dim: Option<usize>,
        }
        let wire = Wire::deserialize(deserializer)?;
        let x = Subspace::from_orthonormal(wire.n, wire.basis)
            .map_err(|e| D::Error::custom(e.to_string()))?;
        let rebuilt =
            make_cp_face(x, wire.boundary).map_err(|e| D::Error::custom(e.to_string()))?;
        if let Some(class) = wire.class {
            if class != rebuilt.cls.tag() {
                return Err(D::Error::custom(format!(
                    "declared class {class} disagrees with computed {}",
                    rebuilt.cls.tag()
                )));
            }
        }
        if let Some(dim) = wire.dim {
            if dim != rebuilt.dim {
                return Err(D::Error::custom(format!(
                    "declared dim {dim} disagrees with computed {}",
                    rebuilt.dim
                )));
            }
        }
        Ok(rebuilt)
    }
}

/// `A` belongs to `CP(X ∩ L^n)` iff it is PSD with range inside `X` and
/// `<A, J> >= -tol`; the boundary face additionally pins `<A, J>` to zero.
pub fn cp_face_contains(face: &CpFaceDescriptor, a: &SymMatrix, tol: f64) -> Result<bool> {
    let n = face.x.ambient_dim();
    if a.order() != n {
        return Err(Error::Dimension(format!(
            "matrix order {} does not match face ambient order {n}",
            a.order()
        )));
    }
    if !psd_with_range(a, &face.x, tol) {
        return Ok(false);
    }
    let j_inner = a.inner(&SymMatrix::j_matrix(n));
    let scale = tol * (1.0 + a.fro_norm());
    Ok(if face.boundary {
        j_inner.abs() <= scale
    } else {
        j_inner >= -scale
    })
}

/// Certificate exposing `CP(X ∩ L^n)` inside `CP(L^n)`: `H` is the sum of
/// squares of an orthonormal basis of `X^⊥`. The atoms need not lie in the
/// cone (`H` exposes within `CP`, not `COP`), which the `AmbientAtoms` mode
/// records; for PSD members, `<A, H> <= tol` iff `range(A) ⊆ X`.
pub fn cp_face_certificate(x: &Subspace) -> Result<ExposingCertificate> {
    let atoms: Vec<SocVector> = x
        .complement()
        .basis()
        .iter()
        .map(|b| SocVector::new(b.clone()))
        .collect::<Result<_>>()?;
    ExposingCertificate::from_atoms(x.ambient_dim(), atoms, CertificateMode::AmbientAtoms)
}

/// Sampling-based dimension probe: the rank (over `svec` coordinates) of the
/// squares of `samples` points drawn from the face's slice of the cone.
///
/// Interior-meeting faces mix the interior basis with positive seeded
/// coefficients; boundary faces shoot seeded in-`X` directions through the
/// interior witness and keep both roots of the boundary quadratic. Ray faces
/// contribute the witness square alone and zero-only faces have nothing to
/// sample.
pub fn numeric_face_dimension(face: &CpFaceDescriptor, samples: usize, seed: u64) -> usize {
    let x = &face.x;
    let n = x.ambient_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vec<f64>> = Vec::new();

    match &face.cls {
        SubspaceConeClass::ZeroOnly => {}
        SubspaceConeClass::Ray(w) => {
            points.push(w.as_slice().to_vec());
        }
        SubspaceConeClass::InteriorMeeting(witness) => {
            if !face.boundary {
                let basis = interior_basis(x).expect("interior-meeting subspace");
                while points.len() < samples {
                    let mut p = vec![0.0; n];
                    for b in &basis {
                        linalg::axpy(&mut p, rng.gen_range(0.05..1.0), b.as_slice());
                    }
                    points.push(p);
                }
            } else {
                let j = SymMatrix::j_matrix(n);
                let c = j.quad_form(witness.as_slice());
                let mut attempts = 0;
                while points.len() < samples && attempts < 20 * samples + 50 {
                    attempts += 1;
                    // Seeded sphere direction inside X, kept away from the
                    // witness axis so the quadratic has two honest roots.
                    let coeffs: Vec<f64> =
                        (0..x.dim()).map(|_| gaussian(&mut rng)).collect();
                    let mut dir = vec![0.0; n];
                    for (cf, b) in coeffs.iter().zip(x.basis()) {
                        linalg::axpy(&mut dir, *cf, b);
                    }
                    let nd = norm(&dir);
                    if nd < 1e-8 {
                        continue;
                    }
                    let dir = scale_vec(&dir, 1.0 / nd);
                    let a2 = j.quad_form(&dir);
                    let b2 = dot(&j.mat_vec(witness.as_slice()), &dir);
                    let disc = b2 * b2 - a2 * c;
                    if a2.abs() < 1e-10 || disc < 1e-12 {
                        continue;
                    }
                    let sq = disc.sqrt();
                    for s in [(-b2 - sq) / a2, (-b2 + sq) / a2] {
                        let mut p = witness.as_slice().to_vec();
                        linalg::axpy(&mut p, s, &dir);
                        if norm(&p) > 1e-10 {
                            points.push(p);
                        }
                    }
                }
            }
        }
    }

    let vectors: Vec<Vec<f64>> = points
        .iter()
        .map(|p| {
            let square = tensor_square(p);
            let normalized = square.scale(1.0 / square.fro_norm().max(1e-300));
            svec(&normalized)
        })
        .collect();
    linalg::orthonormalize(triangular(n), &vectors, 1e-8).dim()
}

fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller from two uniform draws.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Coordinate-aligned ladder for the chain constructions: `X_1` is the line
/// through the boundary point `(1; e_1)`, and `X_i = span{e_1, ..., e_i}`
/// meets the interior through `e_1` for `i >= 2`.
fn cp_chain_subspaces(n: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    let mut x1 = vec![0.0; n];
    x1[0] = 1.0 / 2.0_f64.sqrt();
    x1[1] = 1.0 / 2.0_f64.sqrt();
    out.push(Subspace::from_orthonormal(n, vec![x1]).expect("unit column"));
    for i in 2..=n {
        let cols: Vec<Vec<f64>> = (0..i).map(|j| unit_vector(n, j)).collect();
        out.push(Subspace::from_orthonormal(n, cols).expect("coordinate columns"));
    }
    out
}

/// The longest chain of faces,
/// `{0} ⊊ CP(X_1 ∩ ∂L) ⊊ CP(X_2 ∩ ∂L) ⊊ CP(X_2 ∩ L) ⊊ ... ⊊ CP(L^n)`,
/// of length `n + 2` with dims `(0, 1, 2, 3, T_3, ..., T_n)`.
pub fn build_longest_chain_cp(n: usize) -> Result<ChainReport<CpFaceDescriptor>> {
    if n < 2 {
        return Err(Error::Dimension("need n >= 2".into()));
    }
    let ladder = cp_chain_subspaces(n);
    let e1 = unit_vector(n, 0);
    let boundary_up = {
        // (1; -e_1): the second boundary ray of X_2, independent of X_1.
        let mut y = vec![0.0; n];
        y[0] = 1.0;
        y[1] = -1.0;
        y
    };

    let mut faces = vec![make_cp_face(Subspace::zero(n), false)?];
    let mut separators: Vec<SymMatrix> = Vec::new();

    faces.push(make_cp_face(ladder[0].clone(), true)?);
    separators.push(tensor_square(&crate::cop::one_v(&unit_vector(n - 1, 0))));
    faces.push(make_cp_face(ladder[1].clone(), true)?);
    separators.push(tensor_square(&boundary_up));
    faces.push(make_cp_face(ladder[1].clone(), false)?);
    separators.push(tensor_square(&e1));
    for x in ladder.iter().skip(2) {
        faces.push(make_cp_face(x.clone(), false)?);
        let mut probe = e1.clone();
        probe[x.dim() - 1] = 0.5;
        separators.push(tensor_square(&probe));
    }

    let dims: Vec<usize> = faces.iter().map(|f| f.dim()).collect();
    let flags: Vec<bool> = faces.iter().map(|f| f.dim() > 2).collect();
    ChainReport::build(faces, dims, flags, separators, |f, m| {
        cp_face_contains(f, m, crate::DEFAULT_TOL)
    })
}

/// Distance-to-polyhedrality witness: the length-`(n-1)` sub-chain of the
/// longest chain ending at `CP(X_2 ∩ L^n)`, whose non-polyhedrality is
/// witnessed by `m + 1` extreme atoms `t x + (1 - t) y` over the boundary
/// basis `{x, y}` of `X_2`, with pairwise non-proportional squares.
pub fn poly_distance_witness_cp(n: usize, m: usize) -> Result<ChainReport<CpFaceDescriptor>> {
    if n < 2 {
        return Err(Error::Dimension("need n >= 2".into()));
    }
    if m < 1 {
        return Err(Error::Domain("need at least two generators".into()));
    }
    let full = build_longest_chain_cp(n)?;
    // Keep CP(X_2 ∩ L) and everything above: positions 3.. of the chain.
    let skip = 3;
    let faces: Vec<CpFaceDescriptor> = full.faces.into_iter().skip(skip).collect();
    let dims: Vec<usize> = full.dims.into_iter().skip(skip).collect();
    let separators: Vec<SymMatrix> = full.separators.into_iter().skip(skip).collect();
    let flags = vec![true; faces.len()];
    let report = ChainReport::build(faces, dims, flags, separators, |f, mat| {
        cp_face_contains(f, mat, crate::DEFAULT_TOL)
    })?;

    // Extreme atoms of the smallest face: convex sweeps between its two
    // boundary rays, scaled to head 1.
    let small = &report.faces[0];
    let rays = crate::soc::boundary_basis(small.subspace())?;
    let scale_to_head = |v: &SocVector| scale_vec(v.as_slice(), 1.0 / v.head());
    let (bx, by) = (scale_to_head(&rays[0]), scale_to_head(&rays[1]));
    let generators: Vec<SymMatrix> = (0..=m)
        .map(|t| {
            let lam = t as f64 / m as f64;
            let mut z = scale_vec(&bx, lam);
            linalg::axpy(&mut z, 1.0 - lam, &by);
            tensor_square(&z)
        })
        .collect();
    for (g, face) in generators.iter().map(|g| (g, &report.faces[0])) {
        if !cp_face_contains(face, g, crate::DEFAULT_TOL)? {
            return Err(Error::Numerical(
                "witness atom escaped the smallest face".into(),
            ));
        }
    }
    let lists = vec![generators; report.faces.len()];
    report.with_witness_generators(lists)
}
