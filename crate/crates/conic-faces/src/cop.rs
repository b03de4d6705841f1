//! The copositive cone `COP(L^n) = S_+^n + R_+ J_n`: membership with
//! witnesses, the four-family face taxonomy with dimensions and exposedness,
//! exposing certificates, extreme-ray classification, and chain
//! constructions.
//!
//! Faces fall into four families. Writing `X` for a subspace of the
//! hyperplane `{(1; v)}^⊥`:
//!
//! 1. the cone itself;
//! 2. `S_+(X)` with `||v|| < 1`: always exposed;
//! 3. `S_+(X)` with `||v|| = 1`: exposed iff `(1; -v) ∉ X`;
//! 4. `S_+(X) + R_+ J_n` with `||v|| = 1`: exposed iff `X` is the whole
//!    hyperplane or `(1; -v) ∉ X`;
//!
//! where `S_+(X)` is the PSD matrices with range inside `X`.

use crate::chain::{check_pairwise_non_proportional, ChainReport};
use crate::error::{Error, Result};
use crate::linalg::{
    self, dot, norm, scale_vec, sym_eigen, tensor_square, unit_vector, Subspace, SymMatrix,
};
use crate::soc::{
    boundary_basis, classify_point, interior_basis, solve_uv, PointClass, SocVector,
};
use crate::triangular;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Tolerance of the `||v|| < 1` vs `||v|| = 1` sub-case decision. Inputs in
/// the dead zone `(1 - 10·tol, 1 - tol)` are rejected rather than guessed:
/// the face taxonomy is discontinuous at `||v|| = 1`.
pub const V_NORM_TOL: f64 = 1e-9;

/// Residual threshold of the `(1; -v) ∈ X` projection test.
pub const MEMBERSHIP_RESIDUAL_TOL: f64 = 1e-8 * std::f64::consts::SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CopFaceKind {
    /// The whole cone `COP(L^n)`.
    Full,
    /// `S_+(X)` for `X ⊆ {(1; v)}^⊥`.
    Psd,
    /// `S_+(X) + R_+ J_n` for `X ⊆ {(1; v)}^⊥` with `||v|| = 1`.
    PsdPlusJ,
}

/// Symbolic face of `COP(L^n)` with its dimension and exposedness resolved at
/// construction.
#[derive(Debug, Clone)]
pub struct CopFaceDescriptor {
    n: usize,
    kind: CopFaceKind,
    v: Option<Vec<f64>>,
    x: Option<Subspace>,
    dim: usize,
    exposed: bool,
}

pub(crate) fn one_v(v: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push(1.0);
    out.extend_from_slice(v);
    out
}

pub(crate) fn one_neg_v(v: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push(1.0);
    out.extend(v.iter().map(|c| -c));
    out
}

/// `||v||` classified against `1` with the dead-zone rule; `Ok(true)` is the
/// unit case.
fn classify_v_norm(v: &[f64]) -> Result<bool> {
    let nv = norm(v);
    if nv <= 1.0 - 10.0 * V_NORM_TOL {
        Ok(false)
    } else if (nv - 1.0).abs() <= V_NORM_TOL {
        Ok(true)
    } else if nv > 1.0 {
        Err(Error::Domain(format!("||v|| = {nv} exceeds 1")))
    } else {
        Err(Error::Domain(format!(
            "||v|| = {nv} falls in the dead zone just below 1; \
             renormalize or shrink it first"
        )))
    }
}

impl CopFaceDescriptor {
    /// The face that is the whole cone.
    pub fn full(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Dimension("need n >= 2".into()));
        }
        Ok(Self {
            n,
            kind: CopFaceKind::Full,
            v: None,
            x: None,
            dim: triangular(n),
            exposed: true,
        })
    }

    /// `S_+(X)` for `X ⊆ {(1; v)}^⊥`, covering both `||v|| < 1` and
    /// `||v|| = 1`.
    pub fn psd(v: &[f64], x: Subspace) -> Result<Self> {
        Self::validate_pair(v, &x)?;
        let unit = classify_v_norm(v)?;
        let exposed = if unit {
            !contains_one_neg_v(&x, v)
        } else {
            true
        };
        Ok(Self {
            n: x.ambient_dim(),
            kind: CopFaceKind::Psd,
            dim: triangular(x.dim()),
            exposed,
            v: Some(v.to_vec()),
            x: Some(x),
        })
    }

    /// `S_+(X) + R_+ J_n` for `X ⊆ {(1; v)}^⊥` with `||v|| = 1`.
    pub fn psd_plus_j(v: &[f64], x: Subspace) -> Result<Self> {
        Self::validate_pair(v, &x)?;
        if !classify_v_norm(v)? {
            return Err(Error::Domain(
                "the J-augmented family requires ||v|| = 1".into(),
            ));
        }
        let n = x.ambient_dim();
        let exposed = x.dim() == n - 1 || !contains_one_neg_v(&x, v);
        Ok(Self {
            n,
            kind: CopFaceKind::PsdPlusJ,
            dim: triangular(x.dim()) + 1,
            exposed,
            v: Some(v.to_vec()),
            x: Some(x),
        })
    }

    fn validate_pair(v: &[f64], x: &Subspace) -> Result<()> {
        let n = x.ambient_dim();
        if n < 2 || v.len() + 1 != n {
            return Err(Error::Dimension(format!(
                "v has length {}, subspace lives in R^{n}",
                v.len()
            )));
        }
        let axis = one_v(v);
        let axis_norm = norm(&axis);
        for b in x.basis() {
            if dot(b, &axis).abs() > 1e-10 * axis_norm {
                return Err(Error::InvalidFace(
                    "X is not contained in {(1; v)}^⊥".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn ambient_order(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> CopFaceKind {
        self.kind
    }

    pub fn v(&self) -> Option<&[f64]> {
        self.v.as_deref()
    }

    pub fn subspace(&self) -> Option<&Subspace> {
        self.x.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn exposed(&self) -> bool {
        self.exposed
    }
}

/// Projection-residual test for `(1; -v) ∈ X`.
fn contains_one_neg_v(x: &Subspace, v: &[f64]) -> bool {
    x.residual_norm(&one_neg_v(v)) <= MEMBERSHIP_RESIDUAL_TOL
}

impl Serialize for CopFaceDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            kind: CopFaceKind,
            n: usize,
            #[serde(skip_serializing_if = "Option::is_none")]
            v: Option<&'a Vec<f64>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            basis: Option<&'a [Vec<f64>]>,
            dim: usize,
            exposed: bool,
        }
        Wire {
            kind: self.kind,
            n: self.n,
            v: self.v.as_ref(),
            basis: self.x.as_ref().map(|x| x.basis()),
            dim: self.dim,
            exposed: self.exposed,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CopFaceDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            kind: CopFaceKind,
            n: usize,
            v: Option<Vec<f64>>,
            basis: Option<Vec<Vec<f64>>>,
            dim: Option<usize>,
            exposed: Option<bool>,
        }
        let wire = Wire::deserialize(deserializer)?;
        let rebuilt = match wire.kind {
            CopFaceKind::Full => CopFaceDescriptor::full(wire.n),
            kind => {
                let v = wire
                    .v
                    .ok_or_else(|| D::Error::custom("missing v for a non-full face"))?;
                let basis = wire
                    .basis
                    .ok_or_else(|| D::Error::custom("missing basis for a non-full face"))?;
                let x = Subspace::from_orthonormal(wire.n, basis)
                    .map_err(|e| D::Error::custom(e.to_string()))?;
                match kind {
                    CopFaceKind::Psd => CopFaceDescriptor::psd(&v, x),
                    CopFaceKind::PsdPlusJ => CopFaceDescriptor::psd_plus_j(&v, x),
                    CopFaceKind::Full => unreachable!(),
                }
            }
        }
        .map_err(|e| D::Error::custom(e.to_string()))?;
        if let Some(dim) = wire.dim {
            if dim != rebuilt.dim {
                return Err(D::Error::custom(format!(
                    "declared dim {dim} disagrees with computed {}",
                    rebuilt.dim
                )));
            }
        }
        if let Some(exposed) = wire.exposed {
            if exposed != rebuilt.exposed {
                return Err(D::Error::custom(format!(
                    "declared exposedness {exposed} disagrees with computed {}",
                    rebuilt.exposed
                )));
            }
        }
        Ok(rebuilt)
    }
}

/// Verdict of the copositivity test, with the eigenvalue witness on success
/// and the gap (plus a violating cone point when the search finds one) on
/// failure.
#[derive(Debug, Clone)]
pub enum CopMembership {
    Member { t: f64, p: SymMatrix },
    NonMember { gap: f64, violator: Option<SocVector> },
}

impl CopMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, CopMembership::Member { .. })
    }
}

impl Serialize for CopMembership {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            member: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            t: Option<f64>,
            #[serde(skip_serializing_if = "Option::is_none")]
            p: Option<&'a SymMatrix>,
            #[serde(skip_serializing_if = "Option::is_none")]
            gap: Option<f64>,
            #[serde(skip_serializing_if = "Option::is_none")]
            violator: Option<&'a [f64]>,
        }
        let wire = match self {
            CopMembership::Member { t, p } => Wire {
                member: true,
                t: Some(*t),
                p: Some(p),
                gap: None,
                violator: None,
            },
            CopMembership::NonMember { gap, violator } => Wire {
                member: false,
                t: None,
                p: None,
                gap: Some(*gap),
                violator: violator.as_ref().map(|v| v.as_slice()),
            },
        };
        wire.serialize(serializer)
    }
}

/// The set `{t >= 0 : λ_min(A - t J_n) >= -tol}`, an interval by concavity of
/// `t ↦ λ_min(A - t J_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TInterval {
    Empty,
    Interval { lo: f64, hi: f64 },
}

/// Concave maximization of `t ↦ λ_min(A - t J_n)` over `[0, A_11 + tol]`.
/// The upper bound is valid because the `(1,1)` entry of a PSD matrix is
/// nonnegative, forcing `t <= A_11` for any feasible split.
struct TSearch {
    t_best: f64,
    g_best: f64,
    hi: f64,
}

fn lambda_min_shifted(a: &SymMatrix, t: f64) -> f64 {
    sym_eigen(&a.sub_j_multiple(t))
        .expect("Jacobi convergence")
        .min()
}

fn t_search(a: &SymMatrix, tol: f64) -> TSearch {
    let a11 = a.get(0, 0);
    let hi = a11.max(0.0) + tol * (1.0 + a11.abs());
    let g = |t: f64| lambda_min_shifted(a, t);

    let invphi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut up) = (0.0_f64, hi);
    let mut c = up - invphi * (up - lo);
    let mut d = lo + invphi * (up - lo);
    let mut fc = g(c);
    let mut fd = g(d);
    for _ in 0..200 {
        if up - lo < 1e-12 * (1.0 + hi) {
            break;
        }
        if fc >= fd {
            up = d;
            d = c;
            fd = fc;
            c = up - invphi * (up - lo);
            fc = g(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + invphi * (up - lo);
            fd = g(d);
        }
    }
    let t_best = 0.5 * (lo + up);
    TSearch {
        t_best,
        g_best: g(t_best),
        hi,
    }
}

/// Decides `A ∈ COP(L^n) = S_+^n + R_+ J_n` by maximizing
/// `λ_min(A - t J_n)` over `t >= 0`. On membership the maximizing `t` and the
/// PSD part `P = A - t J_n` are returned; otherwise the (negative) maximum is
/// the gap and a multi-start projected-gradient search supplies a violating
/// cone point when it finds one.
pub fn cop_membership(a: &SymMatrix, tol: f64) -> Result<CopMembership> {
    let n = a.order();
    if n < 2 {
        return Err(Error::Dimension("need n >= 2".into()));
    }
    let search = t_search(a, tol);
    let scale = tol * (1.0 + a.fro_norm());
    if search.g_best >= -scale {
        Ok(CopMembership::Member {
            t: search.t_best,
            p: a.sub_j_multiple(search.t_best),
        })
    } else {
        Ok(CopMembership::NonMember {
            gap: search.g_best,
            violator: violator_search(a, scale),
        })
    }
}

/// Multi-start projected gradient descent of `x' A x` over the compact base
/// `{(1; s) : ||s|| <= 1}` of `L^n`. Absence of a violator does not change
/// the membership verdict, which rests on the eigenvalue gap.
fn violator_search(a: &SymMatrix, scale: f64) -> Option<SocVector> {
    let n = a.order();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ca1ab1e);
    let value = |s: &[f64]| a.quad_form(&one_v(s));
    let mut best: Option<(f64, Vec<f64>)> = None;

    let mut block_norm = 0.0;
    for i in 1..n {
        for j in 1..n {
            block_norm += a.get(i, j) * a.get(i, j);
        }
    }
    let step = 0.5 / (1.0 + block_norm.sqrt());

    for _ in 0..20 {
        let mut s: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let ns = norm(&s);
        if ns > 1.0 {
            s = scale_vec(&s, 1.0 / ns);
        }
        for _ in 0..150 {
            let full = a.mat_vec(&one_v(&s));
            let grad: Vec<f64> = full[1..].iter().map(|g| 2.0 * g).collect();
            linalg::axpy(&mut s, -step, &grad);
            let ns = norm(&s);
            if ns > 1.0 {
                s = scale_vec(&s, 1.0 / ns);
            }
        }
        let f = value(&s);
        if best.as_ref().is_none_or(|(fb, _)| f < *fb) {
            best = Some((f, s));
        }
    }
    best.and_then(|(f, s)| {
        if f < -scale {
            Some(SocVector::new(one_v(&s)).expect("n >= 2"))
        } else {
            None
        }
    })
}

/// Endpoints of `{t >= 0 : λ_min(A - t J_n) >= -tol}` located by bisection
/// around the concave maximum.
pub fn feasible_t_interval(a: &SymMatrix, tol: f64) -> TInterval {
    let search = t_search(a, tol);
    let scale = tol * (1.0 + a.fro_norm());
    if search.g_best < -scale {
        return TInterval::Empty;
    }
    let g = |t: f64| lambda_min_shifted(a, t);
    let bisect = |mut bad: f64, mut good: f64| -> f64 {
        for _ in 0..100 {
            let mid = 0.5 * (bad + good);
            if g(mid) >= -scale {
                good = mid;
            } else {
                bad = mid;
            }
        }
        good
    };
    let lo = if g(0.0) >= -scale {
        0.0
    } else {
        bisect(0.0, search.t_best)
    };
    let hi = if g(search.hi) >= -scale {
        search.hi
    } else {
        bisect(search.hi, search.t_best)
    };
    TInterval::Interval { lo, hi }
}

/// `A` PSD within `tol` with `range(A) ⊆ X`: eigenvectors carrying
/// `|λ| > tol·(1 + max|λ|)` must project into `X` with residual at most
/// `tol`.
pub(crate) fn psd_with_range(a: &SymMatrix, x: &Subspace, tol: f64) -> bool {
    let eig = sym_eigen(a).expect("Jacobi convergence");
    let scale = tol * (1.0 + a.fro_norm());
    if eig.min() < -scale {
        return false;
    }
    let radius = eig.eigenvalues.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));
    let threshold = tol * (1.0 + radius);
    for (lam, vec) in eig.eigenvalues.iter().zip(&eig.eigenvectors) {
        if lam.abs() > threshold && x.residual_norm(vec) > tol {
            return false;
        }
    }
    true
}

/// Whether `A` belongs to the face.
///
/// `Full` defers to membership; `Psd` is the PSD-with-range test; `PsdPlusJ`
/// first accepts the degenerate PSD sub-case (`t = 0`) and otherwise tests
/// `A - t* J_n` at the maximizer `t*` of `λ_min(A - t J_n)`. For members the
/// `t`-component is unique, so the maximizer pins it; the tolerance window
/// `{t : λ_min >= -tol}` around it can be `O(sqrt(tol))` wide when the
/// crossing is tangential, which is why the test anchors on `t*` rather than
/// on the window width.
pub fn cop_face_contains(face: &CopFaceDescriptor, a: &SymMatrix, tol: f64) -> Result<bool> {
    if a.order() != face.n {
        return Err(Error::Dimension(format!(
            "matrix order {} does not match face ambient order {}",
            a.order(),
            face.n
        )));
    }
    match face.kind {
        CopFaceKind::Full => Ok(cop_membership(a, tol)?.is_member()),
        CopFaceKind::Psd => Ok(psd_with_range(a, face.x.as_ref().unwrap(), tol)),
        CopFaceKind::PsdPlusJ => {
            let x = face.x.as_ref().unwrap();
            if psd_with_range(a, x, tol) {
                return Ok(true);
            }
            let search = t_search(a, tol);
            let scale = tol * (1.0 + a.fro_norm());
            if search.g_best < -scale || search.t_best < -tol {
                return Ok(false);
            }
            Ok(psd_with_range(&a.sub_j_multiple(search.t_best), x, tol))
        }
    }
}

/// Atoms tied to their sum of tensor squares `H = Σ h h'`, exposing a face as
/// `cone ∩ {H}^⊥`.
#[derive(Debug, Clone)]
pub struct ExposingCertificate {
    pub atoms: Vec<SocVector>,
    pub h: SymMatrix,
    pub mode: CertificateMode,
}

impl Serialize for ExposingCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            atoms: Vec<&'a [f64]>,
            #[serde(rename = "H")]
            h: &'a SymMatrix,
            mode: CertificateMode,
        }
        Wire {
            atoms: self.atoms.iter().map(|a| a.as_slice()).collect(),
            h: &self.h,
            mode: self.mode,
        }
        .serialize(serializer)
    }
}

/// Whether the certificate's atoms are constrained to lie in `L^n` (the
/// copositive-side construction) or range over the ambient space (the
/// completely-positive-side construction, where `H` exposes within `CP`
/// only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateMode {
    ConeAtoms,
    AmbientAtoms,
}

impl ExposingCertificate {
    pub fn from_atoms(n: usize, atoms: Vec<SocVector>, mode: CertificateMode) -> Result<Self> {
        let mut h = SymMatrix::zeros(n);
        for atom in &atoms {
            if atom.dim() != n {
                return Err(Error::Dimension("atom dimension mismatch".into()));
            }
            h = h.add(&tensor_square(atom.as_slice()));
        }
        if mode == CertificateMode::ConeAtoms {
            for atom in &atoms {
                if classify_point(atom, crate::DEFAULT_TOL) == PointClass::Exterior {
                    return Err(Error::Numerical(
                        "cone-atom certificate holds an exterior atom".into(),
                    ));
                }
            }
            let j_inner = h.inner(&SymMatrix::j_matrix(n));
            if j_inner < -crate::DEFAULT_TOL * (1.0 + h.fro_norm()) {
                return Err(Error::Numerical(
                    "certificate matrix leaves the completely positive cone".into(),
                ));
            }
        }
        Ok(Self { atoms, h, mode })
    }
}

/// Outcome of a certificate request: non-exposed faces have none.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CertificateOutcome {
    Certificate(ExposingCertificate),
    NotExposed,
}

/// Builds the matrix `H` whose orthogonal slice of `COP(L^n)` is exactly the
/// face: interior atoms of `X^⊥` for the PSD families, boundary atoms for the
/// J-augmented family, the single atom `(1; v)` for the maximal faces, and no
/// atoms at all for the whole cone.
pub fn exposing_certificate(face: &CopFaceDescriptor) -> Result<CertificateOutcome> {
    if !face.exposed {
        return Ok(CertificateOutcome::NotExposed);
    }
    let n = face.n;
    let atoms: Vec<SocVector> = match face.kind {
        CopFaceKind::Full => vec![],
        _ => {
            let x = face.x.as_ref().unwrap();
            let v = face.v.as_ref().unwrap();
            if x.dim() == n - 1 {
                vec![SocVector::new(one_v(v)).expect("n >= 2")]
            } else {
                let perp = x.complement();
                match face.kind {
                    CopFaceKind::Psd => interior_basis(&perp)?,
                    CopFaceKind::PsdPlusJ => boundary_basis(&perp)?,
                    CopFaceKind::Full => unreachable!(),
                }
            }
        }
    };
    let cert = ExposingCertificate::from_atoms(n, atoms, CertificateMode::ConeAtoms)?;
    if face.kind == CopFaceKind::PsdPlusJ {
        let j_inner = cert.h.inner(&SymMatrix::j_matrix(n));
        if j_inner.abs() > 1e-8 * (1.0 + cert.h.fro_norm()) {
            return Err(Error::Numerical(
                "J-augmented certificate must be orthogonal to J".into(),
            ));
        }
    }
    Ok(CertificateOutcome::Certificate(cert))
}

/// The minimal exposed face containing the square of `(1; -v)` for a unit
/// `v`: the maximal face `S_+({(1; v)}^⊥) + R_+ J_n`.
pub fn minimal_exposed_face_of_boundary_square(v: &[f64]) -> Result<CopFaceDescriptor> {
    if !classify_v_norm(v)? {
        return Err(Error::Domain("v must be a unit vector".into()));
    }
    let x = Subspace::hyperplane_perp(&one_v(v));
    CopFaceDescriptor::psd_plus_j(v, x)
}

/// The trichotomy of extreme rays: squares of points outside
/// `L^n ∪ (-L^n)` (exposed), the ray through `J_n` (exposed), and squares of
/// boundary points (not exposed). Everything else in the cone is not
/// extreme.
#[derive(Debug, Clone, PartialEq)]
pub enum RayFamily {
    ExposedExtremeOutside(SocVector),
    ExtremeJ,
    NonExposedExtremeBoundary(SocVector),
    NotExtreme,
    NotMember,
}

impl RayFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            RayFamily::ExposedExtremeOutside(_) => "exposed_extreme_outside",
            RayFamily::ExtremeJ => "extreme_j",
            RayFamily::NonExposedExtremeBoundary(_) => "non_exposed_extreme_boundary",
            RayFamily::NotExtreme => "not_extreme",
            RayFamily::NotMember => "not_member",
        }
    }

    pub fn generator(&self) -> Option<&SocVector> {
        match self {
            RayFamily::ExposedExtremeOutside(x) | RayFamily::NonExposedExtremeBoundary(x) => {
                Some(x)
            }
            _ => None,
        }
    }
}

impl Serialize for RayFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            family: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            generator: Option<&'a [f64]>,
        }
        Wire {
            family: self.tag(),
            generator: self.generator().map(|g| g.as_slice()),
        }
        .serialize(serializer)
    }
}

/// Classifies the ray through `A` against the extreme-ray trichotomy.
pub fn ray_classify(a: &SymMatrix, tol: f64) -> Result<RayFamily> {
    if !cop_membership(a, tol)?.is_member() {
        return Ok(RayFamily::NotMember);
    }
    let n = a.order();
    let fro = a.fro_norm();
    if fro > 0.0 {
        let j = SymMatrix::j_matrix(n);
        let diff = a.scale(1.0 / fro).sub(&j.scale(1.0 / j.fro_norm()));
        if diff.fro_norm() <= tol {
            return Ok(RayFamily::ExtremeJ);
        }
    }
    if linalg::rank_of(a, tol) == 1 {
        let eig = sym_eigen(a)?;
        let lam = eig.max();
        if lam > 0.0 {
            let raw = eig.eigenvectors.last().unwrap().clone();
            let x = SocVector::new(scale_vec(&raw, lam.sqrt()))?;
            let (cls_pos, cls_neg) = (classify_point(&x, tol), classify_point(&x.neg(), tol));
            if cls_pos == PointClass::Interior || cls_neg == PointClass::Interior {
                return Ok(RayFamily::NotExtreme);
            }
            if cls_pos == PointClass::Boundary || cls_neg == PointClass::Boundary {
                let fixed = if cls_pos == PointClass::Boundary { x } else { x.neg() };
                return Ok(RayFamily::NonExposedExtremeBoundary(fixed));
            }
            let fixed = if x.head() >= 0.0 { x } else { x.neg() };
            return Ok(RayFamily::ExposedExtremeOutside(fixed));
        }
    }
    Ok(RayFamily::NotExtreme)
}

/// The pair of hyperplane parameters through a point `x` outside both cones:
/// `v_lt` with `||v_lt|| < 1` and (for `n >= 3`) `v_eq` with `||v_eq|| = 1`,
/// both satisfying `x' (1; v) = 0` and, for `v_eq`, `(1; -v_eq) ∉ R x`.
#[derive(Debug, Clone, Serialize)]
pub struct OrthogonalV {
    pub v_lt: Vec<f64>,
    /// Absent for `n = 2`: no unit vector in `R^1` is orthogonal to a
    /// nonzero scalar, so the unit-norm companion does not exist there.
    pub v_eq: Option<Vec<f64>>,
}

pub fn find_orthogonal_v(x: &SocVector, tol: f64) -> Result<OrthogonalV> {
    let scale = 1.0 + x.norm();
    let tail_norm = norm(x.tail());
    if tail_norm - x.head().abs() <= tol * scale {
        return Err(Error::Precondition(
            "x must satisfy |x_1| < ||x_{2:n}||".into(),
        ));
    }
    let v_lt = scale_vec(x.tail(), -x.head() / (tail_norm * tail_norm));
    let v_eq = if x.dim() < 3 {
        None
    } else if x.head().abs() > tol * scale {
        let w = scale_vec(x.tail(), 1.0 / x.head());
        let (_, v) = solve_uv(&w, tol)?;
        Some(v)
    } else {
        // x_1 = 0: any unit vector orthogonal to the tail works; take the
        // deterministic coordinate-projection choice.
        let k = x
            .tail()
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.abs().partial_cmp(&b.abs()).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let mut aux = unit_vector(x.dim() - 1, k);
        linalg::axpy(&mut aux, -x.tail()[k] / (tail_norm * tail_norm), x.tail());
        Some(scale_vec(&aux, 1.0 / norm(&aux)))
    };
    Ok(OrthogonalV { v_lt, v_eq })
}

/// Coordinate-aligned subspace ladder used by the chain constructions:
/// `X_i = span{e_3, ..., e_{i+2}}` for `i <= n-2` sits inside the head-zero
/// slice orthogonal to `v_0 = e_1`, and `X_{n-1} = {(1; v_0)}^⊥`.
fn chain_subspaces(n: usize) -> (Vec<f64>, Vec<Subspace>) {
    let v0 = unit_vector(n - 1, 0);
    let mut subspaces = Vec::new();
    for i in 1..=n.saturating_sub(2) {
        let cols: Vec<Vec<f64>> = (0..i).map(|j| unit_vector(n, j + 2)).collect();
        subspaces.push(Subspace::from_orthonormal(n, cols).expect("coordinate columns"));
    }
    subspaces.push(Subspace::hyperplane_perp(&one_v(&v0)));
    (v0, subspaces)
}

/// The longest chain of faces,
/// `{0} ⊊ S_+(X_1) ⊊ ... ⊊ S_+(X_{n-1}) ⊊ S_+(X_{n-1}) + R_+ J_n ⊊ COP(L^n)`,
/// of length `n + 2`, with a verified separating member at every step.
pub fn build_longest_chain_cop(n: usize) -> Result<ChainReport<CopFaceDescriptor>> {
    if n < 2 {
        return Err(Error::Dimension("need n >= 2".into()));
    }
    let (v0, subspaces) = chain_subspaces(n);
    let zero_v = vec![0.0; n - 1];

    let mut faces = vec![CopFaceDescriptor::psd(&zero_v, Subspace::zero(n))?];
    let mut separators: Vec<SymMatrix> = Vec::new();
    for (i, x) in subspaces.iter().enumerate() {
        let is_hyperplane = i + 1 == n - 1;
        if is_hyperplane {
            faces.push(CopFaceDescriptor::psd(&v0, x.clone())?);
            separators.push(tensor_square(&one_neg_v(&v0)));
        } else {
            faces.push(CopFaceDescriptor::psd(&zero_v, x.clone())?);
            separators.push(tensor_square(&unit_vector(n, i + 2)));
        }
    }
    faces.push(CopFaceDescriptor::psd_plus_j(
        &v0,
        subspaces.last().unwrap().clone(),
    )?);
    separators.push(SymMatrix::j_matrix(n));
    faces.push(CopFaceDescriptor::full(n)?);
    separators.push(SymMatrix::identity(n));

    let dims: Vec<usize> = faces.iter().map(|f| f.dim()).collect();
    let flags: Vec<bool> = faces.iter().map(|f| f.dim() > 2).collect();
    ChainReport::build(faces, dims, flags, separators, |f, m| {
        cop_face_contains(f, m, crate::DEFAULT_TOL)
    })
}

/// Witness chain for the distance to polyhedrality: a single non-polyhedral
/// face for `n = 2` and the sub-chain of the longest chain starting at
/// `S_+(X_2)` (length `n`) for `n >= 3`. Each face carries `m + 1` pairwise
/// non-proportional extreme generators.
pub fn poly_distance_witness_cop(n: usize, m: usize) -> Result<ChainReport<CopFaceDescriptor>> {
    if n < 2 {
        return Err(Error::Dimension("need n >= 2".into()));
    }
    if m < 1 {
        return Err(Error::Domain("need at least two generators".into()));
    }
    let report = if n == 2 {
        let faces = vec![CopFaceDescriptor::full(2)?];
        ChainReport::build(faces, vec![3], vec![true], vec![], |f, mat| {
            cop_face_contains(f, mat, crate::DEFAULT_TOL)
        })?
    } else {
        let full = build_longest_chain_cop(n)?;
        // Drop {0} and the one-dimensional S_+(X_1); the rest starts at the
        // S_+^2-isomorphic face.
        let skip = 2;
        let faces: Vec<CopFaceDescriptor> = full.faces.into_iter().skip(skip).collect();
        let dims: Vec<usize> = full.dims.into_iter().skip(skip).collect();
        let separators: Vec<SymMatrix> = full.separators.into_iter().skip(skip).collect();
        let flags = vec![true; faces.len()];
        ChainReport::build(faces, dims, flags, separators, |f, mat| {
            cop_face_contains(f, mat, crate::DEFAULT_TOL)
        })?
    };

    // Extreme generators shared by every face of the witness chain: squares
    // of points in the smallest face's two-dimensional slice, taken strictly
    // between the basis directions so each lies outside L^n ∪ (-L^n).
    let generators: Vec<SymMatrix> = if n == 2 {
        (0..=m)
            .map(|t| {
                let s = -0.9 + 1.8 * t as f64 / m as f64;
                tensor_square(&[s, 1.0])
            })
            .collect()
    } else {
        let small = &report.faces[0];
        let basis = small.subspace().unwrap().basis();
        let (b1, b2) = (&basis[0], &basis[1]);
        (0..=m)
            .map(|t| {
                let phi = std::f64::consts::FRAC_PI_2 * (t + 1) as f64 / (m + 2) as f64;
                let mut y = scale_vec(b1, phi.cos());
                linalg::axpy(&mut y, phi.sin(), b2);
                tensor_square(&y)
            })
            .collect()
    };
    for g in &generators {
        let fam = ray_classify(g, crate::DEFAULT_TOL)?;
        if !matches!(
            fam,
            RayFamily::ExposedExtremeOutside(_) | RayFamily::NonExposedExtremeBoundary(_)
        ) {
            return Err(Error::Numerical(format!(
                "witness generator classified {}, expected an extreme square",
                fam.tag()
            )));
        }
    }
    check_pairwise_non_proportional(&generators)?;
    let lists = vec![generators; report.faces.len()];
    report.with_witness_generators(lists)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::orthonormalize;

    const TOL: f64 = 1e-9;

    fn diag(entries: &[f64]) -> SymMatrix {
        SymMatrix::from_fn(entries.len(), |i, j| if i == j { entries[i] } else { 0.0 })
    }

    #[test]
    fn membership_j2() {
        match cop_membership(&SymMatrix::j_matrix(2), TOL).unwrap() {
            CopMembership::Member { t, p } => {
                assert!((t - 1.0).abs() <= 1e-9);
                assert!(p.fro_norm() <= 1e-8);
            }
            _ => panic!("J_2 is a member"),
        }
    }

    #[test]
    fn membership_identity() {
        match cop_membership(&SymMatrix::identity(3), TOL).unwrap() {
            CopMembership::Member { t, p } => {
                assert!(t.abs() <= 1e-9);
                assert!(p.sub(&SymMatrix::identity(3)).fro_norm() <= 1e-8);
            }
            _ => panic!("the identity is a member"),
        }
    }

    #[test]
    fn membership_indefinite_with_violator() {
        match cop_membership(&diag(&[1.0, -2.0]), TOL).unwrap() {
            CopMembership::NonMember { gap, violator } => {
                assert!(gap < -0.5);
                let v = violator.expect("the search finds (1, 1)");
                assert_ne!(classify_point(&v, TOL), PointClass::Exterior);
                assert!(diag(&[1.0, -2.0]).quad_form(v.as_slice()) < 0.0);
            }
            _ => panic!("diag(1, -2) is not copositive"),
        }
    }

    #[test]
    fn membership_boundary_dyad_matrix() {
        // 2 diag(1, -v v') for unit v = e1 in R^2: member with t = 2 and
        // P = diag(0, 0, 2).
        let a = diag(&[2.0, -2.0, 0.0]);
        match cop_membership(&a, TOL).unwrap() {
            CopMembership::Member { t, p } => {
                assert!((t - 2.0).abs() <= 1e-8);
                let expect = diag(&[0.0, 0.0, 2.0]);
                assert!(p.sub(&expect).fro_norm() <= 1e-7);
            }
            _ => panic!("expected membership"),
        }
    }

    #[test]
    fn t_interval_examples() {
        match feasible_t_interval(&SymMatrix::j_matrix(3), TOL) {
            TInterval::Interval { lo, hi } => {
                assert!((lo - 1.0).abs() <= 1e-6);
                assert!((hi - 1.0).abs() <= 1e-6);
            }
            TInterval::Empty => panic!("J is feasible at t = 1"),
        }
        match feasible_t_interval(&SymMatrix::identity(2), TOL) {
            TInterval::Interval { lo, hi } => {
                assert!(lo.abs() <= 1e-6);
                assert!((hi - 1.0).abs() <= 1e-6);
            }
            TInterval::Empty => panic!("I is feasible on [0, 1]"),
        }
        assert_eq!(
            feasible_t_interval(&SymMatrix::identity(4).scale(-1.0), TOL),
            TInterval::Empty
        );
    }

    fn hyperplane(v: &[f64]) -> Subspace {
        Subspace::hyperplane_perp(&one_v(v))
    }

    #[test]
    fn face_dims_and_exposedness() {
        // ||v|| = 0.5 along e1 in R^4: any 2-dim subspace of the hyperplane
        // gives an exposed T_2 = 3 dimensional face.
        let v = vec![0.5, 0.0, 0.0];
        let h = hyperplane(&v);
        let x = orthonormalize(4, &h.basis()[..2], 1e-10);
        let f = CopFaceDescriptor::psd(&v, x).unwrap();
        assert_eq!(f.dim(), 3);
        assert!(f.exposed());

        // ||v|| = 1 with X the line through (1; -v): a non-exposed ray.
        let v = vec![1.0, 0.0, 0.0];
        let x = orthonormalize(4, &[one_neg_v(&v)], 1e-10);
        let f = CopFaceDescriptor::psd(&v, x).unwrap();
        assert_eq!(f.dim(), 1);
        assert!(!f.exposed());

        // The ray through J: X = {0}, exposed, one-dimensional.
        let f = CopFaceDescriptor::psd_plus_j(&v, Subspace::zero(4)).unwrap();
        assert_eq!(f.dim(), 1);
        assert!(f.exposed());
    }

    #[test]
    fn face_rejects_bad_subspace() {
        let v = vec![0.5, 0.0];
        let x = orthonormalize(3, &[vec![1.0, 0.0, 0.0]], 1e-10);
        assert!(CopFaceDescriptor::psd(&v, x).is_err());
    }

    #[test]
    fn dead_zone_rejected() {
        let v = vec![1.0 - 5.0 * V_NORM_TOL, 0.0];
        let x = Subspace::zero(3);
        assert!(matches!(
            CopFaceDescriptor::psd(&v, x),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn contains_j_ray() {
        let v = vec![1.0, 0.0];
        let f = CopFaceDescriptor::psd_plus_j(&v, Subspace::zero(3)).unwrap();
        assert!(cop_face_contains(&f, &SymMatrix::j_matrix(3).scale(2.0), TOL).unwrap());
        assert!(!cop_face_contains(&f, &SymMatrix::identity(3), TOL).unwrap());
    }

    #[test]
    fn contains_boundary_square_in_line_face() {
        let v = vec![1.0, 0.0];
        let x = orthonormalize(3, &[one_neg_v(&v)], 1e-10);
        let f = CopFaceDescriptor::psd(&v, x).unwrap();
        let a = tensor_square(&one_neg_v(&v));
        assert!(cop_face_contains(&f, &a, TOL).unwrap());
    }

    #[test]
    fn contains_accepts_mixed_members_of_j_face() {
        // P + t J with P a boundary square inside X and t > 0: the tolerance
        // window around t is quadratically wide, the maximizer still pins it.
        let v = vec![1.0, 0.0];
        let x = hyperplane(&v);
        let f = CopFaceDescriptor::psd_plus_j(&v, x.clone()).unwrap();
        let p = tensor_square(&one_neg_v(&v));
        let a = p.add(&SymMatrix::j_matrix(3).scale(1.5));
        assert!(cop_face_contains(&f, &a, TOL).unwrap());
        assert!(cop_face_contains(&f, &p, TOL).unwrap());
        assert!(!cop_face_contains(&f, &SymMatrix::identity(3), TOL).unwrap());
    }

    #[test]
    fn certificate_maximal_face() {
        let v = vec![0.5, 0.2];
        let f = CopFaceDescriptor::psd(&v, hyperplane(&v)).unwrap();
        match exposing_certificate(&f).unwrap() {
            CertificateOutcome::Certificate(c) => {
                assert_eq!(c.atoms.len(), 1);
                let expect = tensor_square(&one_v(&v));
                assert!(c.h.sub(&expect).fro_norm() <= 1e-10);
            }
            CertificateOutcome::NotExposed => panic!("maximal faces are exposed"),
        }
    }

    #[test]
    fn certificate_j_ray_boundary_atoms() {
        let v = vec![1.0, 0.0, 0.0];
        let f = CopFaceDescriptor::psd_plus_j(&v, Subspace::zero(4)).unwrap();
        match exposing_certificate(&f).unwrap() {
            CertificateOutcome::Certificate(c) => {
                assert_eq!(c.atoms.len(), 4);
                for atom in &c.atoms {
                    assert_eq!(classify_point(atom, TOL), PointClass::Boundary);
                }
                let j = SymMatrix::j_matrix(4);
                assert!(c.h.inner(&j).abs() <= 1e-8 * (1.0 + c.h.fro_norm()));
                // PSD generators of the cone sit strictly on the positive
                // side of H.
                let mut rng = ChaCha8Rng::seed_from_u64(0x0001);
                for _ in 0..50 {
                    let g: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
                    let square = tensor_square(&g);
                    if square.fro_norm() < 1e-6 {
                        continue;
                    }
                    assert!(square.inner(&c.h) > 1e-10 * square.fro_norm() * c.h.fro_norm());
                }
            }
            CertificateOutcome::NotExposed => panic!("the J ray is exposed"),
        }
    }

    #[test]
    fn certificate_refused_for_non_exposed() {
        let v = vec![1.0, 0.0];
        let x = orthonormalize(3, &[one_neg_v(&v)], 1e-10);
        let f = CopFaceDescriptor::psd(&v, x).unwrap();
        assert!(matches!(
            exposing_certificate(&f).unwrap(),
            CertificateOutcome::NotExposed
        ));
    }

    #[test]
    fn minimal_exposed_face_dims() {
        let f = minimal_exposed_face_of_boundary_square(&[1.0]).unwrap();
        assert_eq!(f.dim(), 2);
        assert!(f.exposed());
        let f = minimal_exposed_face_of_boundary_square(&[0.6, 0.8]).unwrap();
        assert_eq!(f.dim(), 4);
        let a = tensor_square(&one_neg_v(&[0.6, 0.8]));
        assert!(cop_face_contains(&f, &a, TOL).unwrap());
    }

    #[test]
    fn ray_classification_families() {
        assert_eq!(
            ray_classify(&SymMatrix::j_matrix(3), TOL).unwrap(),
            RayFamily::ExtremeJ
        );
        let outside = ray_classify(&tensor_square(&[0.0, 1.0, 0.0]), TOL).unwrap();
        assert!(matches!(outside, RayFamily::ExposedExtremeOutside(_)));
        let boundary = ray_classify(&tensor_square(&[1.0, 1.0, 0.0]), TOL).unwrap();
        assert!(matches!(boundary, RayFamily::NonExposedExtremeBoundary(_)));
        assert_eq!(
            ray_classify(&SymMatrix::identity(3), TOL).unwrap(),
            RayFamily::NotExtreme
        );
        assert_eq!(
            ray_classify(&diag(&[1.0, -2.0]), TOL).unwrap(),
            RayFamily::NotMember
        );
    }

    #[test]
    fn orthogonal_v_head_zero() {
        let got = find_orthogonal_v(&SocVector::new(vec![0.0, 1.0]).unwrap(), TOL).unwrap();
        assert_eq!(got.v_lt, vec![0.0]);
        assert!(got.v_eq.is_none());
    }

    #[test]
    fn orthogonal_v_frozen_example() {
        let got = find_orthogonal_v(&SocVector::new(vec![1.0, 2.0]).unwrap(), TOL).unwrap();
        assert!((got.v_lt[0] + 0.5).abs() <= 1e-12);
        assert!(dot(&[1.0, 2.0], &one_v(&got.v_lt)).abs() <= 1e-12);
    }

    #[test]
    fn orthogonal_v_unit_companion() {
        let x = SocVector::new(vec![1.0, 2.0, 0.0]).unwrap();
        let got = find_orthogonal_v(&x, TOL).unwrap();
        let v_eq = got.v_eq.expect("n = 3 has a unit companion");
        assert!((norm(&v_eq) - 1.0).abs() <= 1e-10);
        assert!(dot(x.as_slice(), &one_v(&v_eq)).abs() <= 1e-10);
    }

    #[test]
    fn longest_chain_small_orders() {
        let r2 = build_longest_chain_cop(2).unwrap();
        assert_eq!(r2.length, 4);
        assert_eq!(r2.dims, vec![0, 1, 2, 3]);
        let r3 = build_longest_chain_cop(3).unwrap();
        assert_eq!(r3.length, 5);
        assert_eq!(r3.dims, vec![0, 1, 3, 4, 6]);
    }

    #[test]
    fn poly_witness_lengths() {
        assert_eq!(poly_distance_witness_cop(2, 11).unwrap().length, 1);
        let r3 = poly_distance_witness_cop(3, 11).unwrap();
        assert_eq!(r3.length, 3);
        assert_eq!(r3.dims[0], 3);
        let r5 = poly_distance_witness_cop(5, 11).unwrap();
        assert_eq!(r5.length, 5);
        assert_eq!(r5.dims[0], 3);
        let lists = r5.witness_generators.as_ref().unwrap();
        assert!(lists.iter().all(|l| l.len() == 12));
    }

    #[test]
    fn face_json_round_trip() {
        let v = vec![0.5, 0.1];
        let f = CopFaceDescriptor::psd(&v, hyperplane(&v)).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        let back: CopFaceDescriptor = serde_json::from_str(&s).unwrap();
        assert_eq!(back.dim(), f.dim());
        assert_eq!(back.exposed(), f.exposed());
        assert_eq!(back.kind(), f.kind());
    }

    #[test]
    fn face_json_rejects_inconsistent_claims() {
        let v = vec![0.5, 0.1];
        let f = CopFaceDescriptor::psd(&v, hyperplane(&v)).unwrap();
        let mut value: serde_json::Value = serde_json::to_value(&f).unwrap();
        value["dim"] = serde_json::json!(f.dim() + 1);
        assert!(serde_json::from_value::<CopFaceDescriptor>(value.clone()).is_err());
        value["dim"] = serde_json::json!(f.dim());
        value["exposed"] = serde_json::json!(!f.exposed());
        assert!(serde_json::from_value::<CopFaceDescriptor>(value).is_err());
    }

    /// Independent oracle in the plane: copositivity over L^2 is just
    /// nonnegativity of the form on the two-sided boundary fan, scanned on a
    /// dense grid of base points.
    #[test]
    fn membership_matches_plane_grid_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0c0b);
        for _ in 0..200 {
            let a = SymMatrix::from_fn(2, |_, _| rng.gen_range(-1.0..1.0));
            let verdict = cop_membership(&a, TOL).unwrap().is_member();
            let mut grid_min = f64::INFINITY;
            for k in 0..=20_000 {
                let s = -1.0 + k as f64 / 10_000.0;
                grid_min = grid_min.min(a.quad_form(&[1.0, s]));
            }
            let scale = 1e-6 * (1.0 + a.fro_norm());
            if verdict {
                assert!(grid_min >= -scale, "member with grid min {grid_min}");
            } else {
                assert!(grid_min <= scale, "non-member with grid min {grid_min}");
            }
        }
    }

    /// The interval endpoints agree with a direct scan of λ_min(A - tJ).
    #[test]
    fn t_interval_matches_eigenvalue_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7e57);
        for _ in 0..50 {
            let n = rng.gen_range(2..=5);
            let mut a = SymMatrix::zeros(n);
            for _ in 0..n {
                let g: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                a = a.add(&tensor_square(&g));
            }
            a = a.add(&SymMatrix::j_matrix(n).scale(rng.gen_range(0.0..0.5)));
            let scale = TOL * (1.0 + a.fro_norm());
            match feasible_t_interval(&a, TOL) {
                TInterval::Empty => {
                    for k in 0..=1000 {
                        let t = a.get(0, 0).max(0.0) * k as f64 / 1000.0;
                        assert!(sym_eigen(&a.sub_j_multiple(t)).unwrap().min() < -scale);
                    }
                }
                TInterval::Interval { lo, hi } => {
                    assert!(lo <= hi);
                    // Strictly inside: feasible. Clearly outside: not.
                    let inside = 0.5 * (lo + hi);
                    assert!(sym_eigen(&a.sub_j_multiple(inside)).unwrap().min() >= -2.0 * scale);
                    let below = lo - 0.1 * (1.0 + hi);
                    if below >= 0.0 {
                        assert!(sym_eigen(&a.sub_j_multiple(below)).unwrap().min() < -scale);
                    }
                    let above = hi + 0.1 * (1.0 + hi);
                    assert!(sym_eigen(&a.sub_j_multiple(above)).unwrap().min() < -scale);
                }
            }
        }
    }
}
