//! Seeded property suites covering every module's invariants; the CLI
//! `verify` subcommand and the acceptance tests both run through here.
//!
//! Each suite is an independent pure function of the configuration, seeded
//! from the run seed and the suite id, so the suites can be sharded across
//! threads and merged deterministically by id.

use crate::casebook;
use crate::cop::{self, CertificateOutcome, CopFaceDescriptor, CopFaceKind, CopMembership};
use crate::cp;
use crate::error::{Error, Result};
use crate::linalg::{
    self, dot, norm, scale_vec, svec, sym_eigen, tensor_square, Subspace, SymMatrix,
};
use crate::soc::{self, PointClass, SocVector, SubspaceConeClass};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Configuration of a verification run.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    /// Overrides the per-property sample counts when set.
    pub samples: Option<usize>,
}

impl VerifyConfig {
    pub fn new(seed: u64, n_max: usize) -> Result<Self> {
        let cfg = Self {
            seed,
            n_min: 2,
            n_max,
            samples: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min < 2 || self.n_max > 50 || self.n_min > self.n_max {
            return Err(Error::Domain(format!(
                "n range [{}, {}] must sit inside [2, 50]",
                self.n_min, self.n_max
            )));
        }
        if let Some(s) = self.samples {
            if s == 0 {
                return Err(Error::Domain("samples must be at least 1".into()));
            }
        }
        Ok(())
    }

    fn count(&self, default: usize) -> usize {
        self.samples.unwrap_or(default).max(1)
    }

    fn ns(&self) -> std::ops::RangeInclusive<usize> {
        self.n_min..=self.n_max
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub pass: bool,
    pub checked: usize,
    pub details: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub pass: bool,
    pub cases: Vec<CaseResult>,
}

/// Runs every suite, sharded across available parallelism; the merged report
/// is ordered by case id and independent of scheduling.
pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport> {
    config.validate()?;
    type SuiteFn = fn(&VerifyConfig, &mut ChaCha8Rng) -> std::result::Result<usize, String>;
    let suites: Vec<(&'static str, SuiteFn)> = vec![
        ("casebook/all_cases", suite_casebook_cases),
        ("casebook/cop2_grid_oracle", suite_cop2_oracle),
        ("cop/certificate_correctness", suite_cop_certificates),
        ("cop/duality_spot_check", suite_cop_duality),
        ("cop/exposedness_dichotomy", suite_exposedness_dichotomy),
        ("cop/membership_soundness", suite_cop_membership),
        ("cop/poly_bound", suite_cop_poly_bound),
        ("cop/ray_classify_roundtrip", suite_ray_roundtrip),
        ("cop/shifted_never_psd", suite_not_psd),
        ("cp/atom_roundtrip", suite_cp_atoms),
        ("cp/certificate_exactness", suite_cp_certificates),
        ("cp/chain_bound", suite_cp_chain_bound),
        ("cp/dimension_formulas", suite_cp_dimensions),
        ("cp/exposed_rays", suite_cp_exposed_rays),
        ("cp/rank_preservation", suite_rank_preservation),
        ("linalg/eigen_reconstruction", suite_eigen),
        ("linalg/orthonormalize_idempotent", suite_orthonormalize),
        ("linalg/svec_inner_product", suite_svec),
        ("soc/basis_constructions", suite_soc_bases),
        ("soc/classify_subspace_oracle", suite_classify_oracle),
        ("soc/peirce_reconstruction", suite_peirce),
        ("soc/solve_uv_residuals", suite_solve_uv),
        ("soc/unit_hyperplane_ray", suite_hyperplane_ray),
    ];

    let threads = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(suites.len());
    let jobs = std::sync::Mutex::new(suites.into_iter().collect::<Vec<_>>());
    let results = std::sync::Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let job = jobs.lock().unwrap().pop();
                let Some((id, run)) = job else { break };
                let mut rng = suite_rng(config.seed, id);
                let outcome = run(config, &mut rng);
                let result = match outcome {
                    Ok(checked) => CaseResult {
                        id: id.to_string(),
                        pass: true,
                        checked,
                        details: "ok".into(),
                    },
                    Err(details) => CaseResult {
                        id: id.to_string(),
                        pass: false,
                        checked: 0,
                        details,
                    },
                };
                results.lock().unwrap().push(result);
            });
        }
    });
    let mut cases = results.into_inner().unwrap();
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    let pass = cases.iter().all(|c| c.pass);
    Ok(VerifyReport {
        seed: config.seed,
        n_min: config.n_min,
        n_max: config.n_max,
        pass,
        cases,
    })
}

fn suite_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

// --- random generators -------------------------------------------------

pub fn gaussian_vec(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    (0..dim)
        .map(|_| {
            let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            let u2: f64 = rng.gen_range(0.0..1.0);
            (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
        })
        .collect()
}

pub fn unit_gaussian(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let v = gaussian_vec(rng, dim);
        let nv = norm(&v);
        if nv > 1e-6 {
            return scale_vec(&v, 1.0 / nv);
        }
    }
}

pub fn random_sym(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> SymMatrix {
    SymMatrix::from_fn(n, |_, _| scale * rng.gen_range(-1.0..1.0))
}

/// Interior point with a comfortable margin.
pub fn random_interior(rng: &mut ChaCha8Rng, n: usize) -> SocVector {
    let tail = gaussian_vec(rng, n - 1);
    let head = norm(&tail) * rng.gen_range(1.05..2.0) + 0.1;
    SocVector::concat(head, &tail).expect("n >= 2")
}

/// Nonzero boundary point.
pub fn random_boundary(rng: &mut ChaCha8Rng, n: usize) -> SocVector {
    let tail = scale_vec(&unit_gaussian(rng, n - 1), rng.gen_range(0.2..2.0));
    SocVector::concat(norm(&tail), &tail).expect("n >= 2")
}

/// Point outside both cones, margin bounded away from the boundary.
pub fn random_outside(rng: &mut ChaCha8Rng, n: usize) -> SocVector {
    let tail = scale_vec(&unit_gaussian(rng, n - 1), rng.gen_range(0.5..2.0));
    let head = norm(&tail) * rng.gen_range(-0.9..0.9);
    SocVector::concat(head, &tail).expect("n >= 2")
}

/// Sum of squares of `k` cone atoms, a generic member of `CP(L^n)`.
pub fn random_cp_member(rng: &mut ChaCha8Rng, n: usize, k: usize) -> SymMatrix {
    let mut acc = SymMatrix::zeros(n);
    for _ in 0..k {
        let atom = if rng.gen_bool(0.5) {
            random_interior(rng, n)
        } else {
            random_boundary(rng, n)
        };
        acc = acc.add(&tensor_square(atom.as_slice()));
    }
    acc
}

/// Generic member of `COP(L^n)`: a random PSD part plus a nonnegative
/// multiple of `J`.
pub fn random_cop_member(rng: &mut ChaCha8Rng, n: usize) -> SymMatrix {
    let mut acc = SymMatrix::zeros(n);
    for _ in 0..3 {
        acc = acc.add(&tensor_square(&gaussian_vec(rng, n)));
    }
    acc.add(&SymMatrix::j_matrix(n).scale(rng.gen_range(0.0..1.0)))
}

/// Random subspace of `{(1; v)}^⊥` of dimension `d`; when `force_one_neg_v`
/// is set (meaningful for unit `v`), the span includes `(1; -v)`.
pub fn random_face_subspace(
    rng: &mut ChaCha8Rng,
    v: &[f64],
    d: usize,
    force_one_neg_v: bool,
) -> Subspace {
    let n = v.len() + 1;
    let hyper = Subspace::hyperplane_perp(&cop::one_v(v));
    let mut vectors: Vec<Vec<f64>> = Vec::new();
    if force_one_neg_v && d > 0 {
        vectors.push(cop::one_neg_v(v));
    }
    while vectors.len() < d {
        let coeffs = gaussian_vec(rng, hyper.dim());
        let mut vec = vec![0.0; n];
        for (c, b) in coeffs.iter().zip(hyper.basis()) {
            linalg::axpy(&mut vec, *c, b);
        }
        vectors.push(vec);
    }
    let ordered = linalg::orthonormalize_in_order(n, &vectors, 1e-8);
    Subspace::from_orthonormal(n, ordered.basis().to_vec()).expect("orthonormalized")
}

/// Seeded face descriptor of the requested kind; the boolean picks whether a
/// unit-norm face is forced to contain `(1; -v)` (the non-exposed branch).
pub fn sample_cop_face(
    rng: &mut ChaCha8Rng,
    n: usize,
    kind: CopFaceKind,
    force_non_exposed: bool,
) -> Result<CopFaceDescriptor> {
    match kind {
        CopFaceKind::Full => CopFaceDescriptor::full(n),
        CopFaceKind::Psd => {
            let unit = force_non_exposed || rng.gen_bool(0.5);
            if unit {
                let v = unit_gaussian(rng, n - 1);
                let d_max = n - 1;
                let d = if force_non_exposed {
                    rng.gen_range(1..=d_max)
                } else {
                    rng.gen_range(0..=d_max)
                };
                let x = random_face_subspace(rng, &v, d, force_non_exposed);
                CopFaceDescriptor::psd(&v, x)
            } else {
                let v = scale_vec(&unit_gaussian(rng, n - 1), rng.gen_range(0.0..0.9));
                let d = rng.gen_range(0..=n - 1);
                let x = random_face_subspace(rng, &v, d, false);
                CopFaceDescriptor::psd(&v, x)
            }
        }
        CopFaceKind::PsdPlusJ => {
            let v = unit_gaussian(rng, n - 1);
            let d = if force_non_exposed {
                // Proper subspaces containing (1; -v) exist only for
                // 1 <= d < n - 1.
                if n == 2 {
                    return Err(Error::Domain(
                        "no non-exposed J-augmented face exists for n = 2".into(),
                    ));
                }
                rng.gen_range(1..n - 1)
            } else {
                rng.gen_range(0..=n - 1)
            };
            let x = random_face_subspace(rng, &v, d, force_non_exposed);
            CopFaceDescriptor::psd_plus_j(&v, x)
        }
    }
}

/// Spanning generators of a face: squares of the basis and of pairwise sums,
/// plus `J` for the augmented family.
pub fn face_spanning_generators(face: &CopFaceDescriptor) -> Vec<SymMatrix> {
    let mut out = Vec::new();
    if let Some(x) = face.subspace() {
        let basis = x.basis();
        for (i, b) in basis.iter().enumerate() {
            out.push(tensor_square(b));
            for c in basis.iter().skip(i + 1) {
                let mut s = b.clone();
                linalg::axpy(&mut s, 1.0, c);
                out.push(tensor_square(&s));
            }
        }
    }
    if face.kind() == CopFaceKind::PsdPlusJ {
        out.push(SymMatrix::j_matrix(face.ambient_order()));
    }
    out
}

fn fail(msg: String) -> std::result::Result<usize, String> {
    Err(msg)
}

// --- linalg suites ------------------------------------------------------

fn suite_eigen(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(200) {
        let n = rng.gen_range(1..=12);
        let a = random_sym(rng, n, 5.0);
        let eig = sym_eigen(&a).map_err(|e| e.to_string())?;
        let err = a.sub(&eig.reconstruct()).fro_norm();
        if err > 1e-9 * (1.0 + a.fro_norm()) {
            return fail(format!("reconstruction error {err:e} at n = {n}"));
        }
        for i in 0..n {
            for j in i..n {
                let expect = if i == j { 1.0 } else { 0.0 };
                let got = dot(&eig.eigenvectors[i], &eig.eigenvectors[j]);
                if (got - expect).abs() > 1e-9 {
                    return fail(format!("eigenvector orthonormality off by {got:e}"));
                }
            }
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_svec(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(1000) {
        let n = rng.gen_range(1..=8);
        let x = random_sym(rng, n, 3.0);
        let y = random_sym(rng, n, 3.0);
        let lhs = dot(&svec(&x), &svec(&y));
        let rhs = x.inner(&y);
        if (lhs - rhs).abs() > 1e-11 * (1.0 + rhs.abs()) {
            return fail(format!("svec inner product off: {lhs} vs {rhs}"));
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_orthonormalize(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(300) {
        let n = rng.gen_range(2..=10);
        let k = rng.gen_range(0..=n + 2);
        let vectors: Vec<Vec<f64>> = (0..k).map(|_| gaussian_vec(rng, n)).collect();
        let s1 = linalg::orthonormalize(n, &vectors, 1e-10);
        let s2 = linalg::orthonormalize(n, s1.basis(), 1e-10);
        if !s1.same_span(&s2, 1e-10) {
            return fail("orthonormalize is not idempotent on its own output".into());
        }
        checked += 1;
    }
    Ok(checked)
}

// --- soc suites ----------------------------------------------------------

fn suite_peirce(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(1000) {
        let n = rng.gen_range(*cfg.ns().start()..=cfg.n_max.min(10));
        let v = gaussian_vec(rng, n - 1);
        let x = SocVector::new(scale_vec(&gaussian_vec(rng, n), 3.0)).expect("n >= 2");
        let (alpha, beta, u) = soc::peirce_split(&v, &x).map_err(|e| e.to_string())?;
        let vv = dot(&v, &v);
        let mut rec = vec![alpha + beta * vv];
        for i in 0..v.len() {
            rec.push(alpha * v[i] - beta * v[i] + u[i]);
        }
        let err: f64 = rec
            .iter()
            .zip(x.as_slice())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        if err > 1e-12 * (1.0 + x.norm()) {
            return fail(format!("split reconstruction error {err:e}"));
        }
        // Mutual orthogonality of the three summands.
        let s1 = cop::one_v(&v);
        let mut s2 = vec![vv];
        s2.extend(v.iter().map(|c| -c));
        let mut s3 = vec![0.0];
        s3.extend_from_slice(&u);
        let bound = 1e-12 * (1.0 + x.norm()) * (1.0 + vv);
        if dot(&s1, &s2).abs() > bound
            || dot(&s1, &s3).abs() > bound
            || dot(&s2, &s3).abs() > bound
        {
            return fail("summands are not mutually orthogonal".into());
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_solve_uv(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(1000) {
        let dim = rng.gen_range((cfg.n_min - 1).max(2)..=cfg.n_max.max(3) - 1);
        let target = rng.gen_range(1.0_f64..10.0).max(1.0 + 1e-6);
        let w = scale_vec(&unit_gaussian(rng, dim), target);
        let (u, v) = soc::solve_uv(&w, 1e-9).map_err(|e| e.to_string())?;
        let scale = 1e-10 * (1.0 + norm(&w));
        let mut res = w.clone();
        linalg::axpy(&mut res, 1.0, &v);
        linalg::axpy(&mut res, -1.0, &u);
        if norm(&res) > scale || dot(&u, &v).abs() > scale || (norm(&v) - 1.0).abs() > scale {
            return fail("equation-system residuals exceed tolerance".into());
        }
        checked += 1;
    }
    Ok(checked)
}

/// Brute-force agreement on planes in R^3: sweep 10^5 directions of the
/// plane; the spectral classifier must agree with the sampled verdicts, and
/// ray verdicts leave every sample away from the ray strictly outside.
fn suite_classify_oracle(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    // The sweep needs enough resolution to be an oracle at all; the override
    // still scales the case count.
    let sweeps = cfg.count(100_000).max(2_000);
    let mut checked = 0;
    for case in 0..cfg.count(40).min(60) {
        // A mix of generic planes and planes built to be tangent.
        let x = if case % 3 == 2 {
            let b = random_boundary(rng, 3);
            let mut jb = b.as_slice().to_vec();
            for c in jb.iter_mut().skip(1) {
                *c = -*c;
            }
            // Tangent plane {y : y' (J b) = 0} contains b and misses the
            // interior.
            Subspace::hyperplane_perp(&jb)
        } else {
            linalg::orthonormalize(
                3,
                &[gaussian_vec(rng, 3), gaussian_vec(rng, 3)],
                1e-10,
            )
        };
        if x.dim() != 2 {
            continue;
        }
        let verdict = soc::classify_subspace(&x, 1e-9);
        let mut any_interior = false;
        let mut best_margin = f64::NEG_INFINITY;
        let mut off_ray_inside: Option<f64> = None;
        let witness_dir = verdict.witness().map(|w| {
            scale_vec(w.as_slice(), 1.0 / w.norm())
        });
        for k in 0..sweeps {
            let theta = std::f64::consts::PI * k as f64 / sweeps as f64;
            let mut p = scale_vec(&x.basis()[0], theta.cos());
            linalg::axpy(&mut p, theta.sin(), &x.basis()[1]);
            for q in [p.clone(), scale_vec(&p, -1.0)] {
                let pt = SocVector::new(q).expect("n = 3");
                best_margin = best_margin.max(pt.margin());
                let class = soc::classify_point(&pt, 1e-6);
                if class == PointClass::Interior {
                    any_interior = true;
                }
                if matches!(verdict, SubspaceConeClass::Ray(_))
                    && class != PointClass::Exterior
                {
                    let cosine = dot(pt.as_slice(), witness_dir.as_ref().unwrap());
                    if cosine.abs() < 0.99 {
                        off_ray_inside = Some(cosine);
                    }
                }
            }
        }
        match verdict {
            SubspaceConeClass::InteriorMeeting(_) => {
                if !any_interior {
                    return fail("spectral interior verdict unsupported by sampling".into());
                }
            }
            SubspaceConeClass::Ray(w) => {
                if any_interior {
                    return fail("ray verdict but sampling found interior points".into());
                }
                if soc::classify_point(&w, 1e-8) != PointClass::Boundary {
                    return fail("ray witness is not a boundary point".into());
                }
                if let Some(cosine) = off_ray_inside {
                    return fail(format!(
                        "non-exterior sample away from the ray (cosine {cosine})"
                    ));
                }
            }
            SubspaceConeClass::ZeroOnly => {
                if any_interior {
                    return fail("zero-only verdict but sampling found interior points".into());
                }
                if best_margin > 1e-6 {
                    return fail(format!(
                        "zero-only verdict with sampled margin {best_margin:e}"
                    ));
                }
            }
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_soc_bases(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(150) {
        let n = rng.gen_range(cfg.n_min..=cfg.n_max.min(8));
        let d = rng.gen_range(1..=n);
        // Force an interior-meeting subspace by seeding with an interior
        // point.
        let mut vectors = vec![random_interior(rng, n).as_slice().to_vec()];
        while vectors.len() < d {
            vectors.push(gaussian_vec(rng, n));
        }
        let x = linalg::orthonormalize(n, &vectors, 1e-10);
        if x.dim() != d {
            continue;
        }
        let interior = soc::interior_basis(&x).map_err(|e| e.to_string())?;
        if interior.len() != d {
            return fail("interior basis has the wrong cardinality".into());
        }
        let span = linalg::orthonormalize(
            n,
            &interior.iter().map(|v| v.as_slice().to_vec()).collect::<Vec<_>>(),
            1e-10,
        );
        if span.dim() != d {
            return fail("interior basis does not span X".into());
        }
        for p in &interior {
            if soc::classify_point(p, 1e-9) != PointClass::Interior {
                return fail("interior basis vector is not interior".into());
            }
        }
        if d >= 2 {
            let boundary = soc::boundary_basis(&x).map_err(|e| e.to_string())?;
            if boundary.len() != d {
                return fail("boundary basis has the wrong cardinality".into());
            }
            let span = linalg::orthonormalize(
                n,
                &boundary.iter().map(|v| v.as_slice().to_vec()).collect::<Vec<_>>(),
                1e-10,
            );
            if span.dim() != d {
                return fail("boundary basis does not span X".into());
            }
            for p in &boundary {
                if soc::classify_point(p, 1e-8) != PointClass::Boundary {
                    return fail("boundary basis vector is off the boundary".into());
                }
            }
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_hyperplane_ray(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(200) {
        let n = rng.gen_range(cfg.n_min..=cfg.n_max.min(8));
        let v = unit_gaussian(rng, n - 1);
        let hyper = Subspace::hyperplane_perp(&cop::one_neg_v(&v));
        match soc::classify_subspace(&hyper, 1e-9) {
            SubspaceConeClass::Ray(w) => {
                let expect = cop::one_v(&v);
                let cosine = dot(w.as_slice(), &expect) / (w.norm() * norm(&expect));
                if (cosine - 1.0).abs() > 1e-8 {
                    return fail("hyperplane ray does not point along (1; v)".into());
                }
            }
            other => {
                return fail(format!(
                    "expected the ray collapse, got {}",
                    other.tag()
                ))
            }
        }
        checked += 1;
    }
    Ok(checked)
}

// --- cop suites ----------------------------------------------------------

fn suite_cop_membership(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(500) {
        let n = rng.gen_range(cfg.n_min..=cfg.n_max.min(8));
        let member = rng.gen_bool(0.6);
        let a = if member {
            random_cop_member(rng, n)
        } else {
            random_sym(rng, n, 1.0)
        };
        match cop::cop_membership(&a, 1e-9).map_err(|e| e.to_string())? {
            CopMembership::Member { .. } => {
                for _ in 0..20 {
                    let x = if rng.gen_bool(0.5) {
                        random_interior(rng, n)
                    } else {
                        random_boundary(rng, n)
                    };
                    let q = a.quad_form(x.as_slice());
                    if q < -1e-8 * (1.0 + a.fro_norm()) * x.norm() * x.norm() {
                        return fail(format!("member with a cone violation {q:e}"));
                    }
                }
            }
            CopMembership::NonMember { violator, gap } => {
                if gap >= 0.0 {
                    return fail("non-member with a nonnegative gap".into());
                }
                if let Some(x) = violator {
                    if soc::classify_point(&x, 1e-6) == PointClass::Exterior {
                        return fail("violator lies outside the cone".into());
                    }
                    if a.quad_form(x.as_slice()) >= 0.0 {
                        return fail("violator does not violate".into());
                    }
                }
            }
        }
        checked += 1;
    }
    Ok(checked)
}

/// For PSD parts supported on a unit-norm hyperplane, any nonzero shift of
/// `J` destroys semidefiniteness.
fn suite_not_psd(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(200) {
        let n = rng.gen_range(cfg.n_min..=cfg.n_max.min(7));
        let v = unit_gaussian(rng, n - 1);
        let hyper = Subspace::hyperplane_perp(&cop::one_v(&v));
        let mut a = SymMatrix::zeros(n);
        for _ in 0..rng.gen_range(1..=n) {
            let coeffs = gaussian_vec(rng, hyper.dim());
            let mut vec = vec![0.0; n];
            for (c, b) in coeffs.iter().zip(hyper.basis()) {
                linalg::axpy(&mut vec, *c, b);
            }
            a = a.add(&tensor_square(&vec));
        }
        for k in [-3i32, -1, 0, 1, 3] {
            for sign in [-1.0, 1.0] {
                let t = sign * 10.0_f64.powi(k);
                let shifted = a.sub_j_multiple(t);
                let min = sym_eigen(&shifted).map_err(|e| e.to_string())?.min();
                if min >= 0.0 {
                    return fail(format!("A - ({t}) J came out PSD with λ_min {min:e}"));
                }
            }
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_cop_certificates(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    let per_n = cfg.count(8);
    for n in cfg.ns() {
        if n > 6 {
            break;
        }
        for _ in 0..per_n {
            let kind = match rng.gen_range(0..3) {
                0 => CopFaceKind::Psd,
                1 => CopFaceKind::PsdPlusJ,
                _ => CopFaceKind::Full,
            };
            let face = match sample_cop_face(rng, n, kind, false) {
                Ok(f) => f,
                Err(_) => continue,
            };
            if !face.exposed() {
                continue;
            }
            let cert = match cop::exposing_certificate(&face).map_err(|e| e.to_string())? {
                CertificateOutcome::Certificate(c) => c,
                CertificateOutcome::NotExposed => {
                    return fail("exposed face produced no certificate".into())
                }
            };
            // (a) H is completely positive.
            if !cp::cp_membership(&cert.h, 1e-9)
                .map_err(|e| e.to_string())?
                .is_member()
            {
                return fail("certificate matrix is not completely positive".into());
            }
            // (b) spanning generators of the face are annihilated.
            for g in face_spanning_generators(&face) {
                let ip = g.inner(&cert.h);
                if ip.abs() > 1e-9 * (1.0 + g.fro_norm() * cert.h.fro_norm()) {
                    return fail(format!("face generator sees the certificate: {ip:e}"));
                }
            }
            // (c) members outside the face see H strictly positively; the
            // whole cone has no outside, so the check is vacuous there.
            if face.kind() != CopFaceKind::Full {
                let target = cfg.count(100).min(100);
                let mut outside = 0;
                let mut attempts = 0;
                while outside < target && attempts < 40 * target {
                    attempts += 1;
                    let a = random_cop_member(rng, n);
                    if cop::cop_face_contains(&face, &a, 1e-9).map_err(|e| e.to_string())? {
                        continue;
                    }
                    outside += 1;
                    let ip = a.inner(&cert.h);
                    if ip <= 1e-10 * (1.0 + a.fro_norm() * cert.h.fro_norm()) {
                        return fail(format!(
                            "outside member sees the certificate non-positively: {ip:e}"
                        ));
                    }
                }
                if outside < target {
                    return fail("could not sample enough outside members".into());
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn suite_exposedness_dichotomy(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(150) {
        let n = rng.gen_range(cfg.n_min.max(3)..=cfg.n_max.min(7));
        let face = match sample_cop_face(rng, n, CopFaceKind::Psd, true) {
            Ok(f) => f,
            Err(_) => continue,
        };
        if face.subspace().map(|x| x.dim()) == Some(n - 1) {
            continue;
        }
        if face.exposed() {
            return fail("face forced to contain (1; -v) reported exposed".into());
        }
        // The computational content: every completely positive matrix
        // orthogonal to the boundary square is carried by the ray through
        // (1; v).
        let v = face.v().unwrap();
        let hyper = Subspace::hyperplane_perp(&cop::one_neg_v(v));
        match soc::classify_subspace(&hyper, 1e-9) {
            SubspaceConeClass::Ray(w) => {
                let expect = cop::one_v(v);
                let cosine = dot(w.as_slice(), &expect) / (w.norm() * norm(&expect));
                if (cosine - 1.0).abs() > 1e-8 {
                    return fail("collapse ray points the wrong way".into());
                }
            }
            other => return fail(format!("expected the ray collapse, got {}", other.tag())),
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_cop_duality(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(1000) {
        let n = rng.gen_range(cfg.n_min..=cfg.n_max.min(8));
        let a = match rng.gen_range(0..3) {
            0 => tensor_square(random_outside(rng, n).as_slice()),
            1 => SymMatrix::j_matrix(n).scale(rng.gen_range(0.1..2.0)),
            _ => tensor_square(random_boundary(rng, n).as_slice()),
        };
        let x = if rng.gen_bool(0.5) {
            random_interior(rng, n)
        } else {
            random_boundary(rng, n)
        };
        let b = tensor_square(x.as_slice());
        let ip = a.inner(&b);
        if ip < -1e-9 * (1.0 + a.fro_norm() * b.fro_norm()) {
            return fail(format!("duality violated: {ip:e}"));
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_cop_poly_bound(
    cfg: &VerifyConfig,
    _rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for n in cfg.ns() {
        if n > 8 {
            break;
        }
        let chain = cop::build_longest_chain_cop(n).map_err(|e| e.to_string())?;
        let poly = cop::poly_distance_witness_cop(n, 11).map_err(|e| e.to_string())?;
        if chain.length != n + 2 {
            return fail(format!("chain length {} at n = {n}", chain.length));
        }
        let expected_poly = if n == 2 { 1 } else { n };
        if poly.length != expected_poly {
            return fail(format!("poly witness length {} at n = {n}", poly.length));
        }
        if poly.length > chain.length - 2 {
            return fail("distance to polyhedrality exceeds the chain bound".into());
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_ray_roundtrip(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(400) {
        let n = rng.gen_range(cfg.n_min..=cfg.n_max.min(8));
        let (a, expect) = match rng.gen_range(0..4) {
            0 => {
                let x = random_outside(rng, n);
                // Round-trip through the hyperplane construction.
                let dirs = cop::find_orthogonal_v(&x, 1e-9).map_err(|e| e.to_string())?;
                let axis = cop::one_v(&dirs.v_lt);
                if dot(&axis, x.as_slice()).abs() > 1e-8 * (1.0 + x.norm()) {
                    return fail("v_lt hyperplane misses x".into());
                }
                if let Some(v_eq) = &dirs.v_eq {
                    if dot(&cop::one_v(v_eq), x.as_slice()).abs() > 1e-8 * (1.0 + x.norm()) {
                        return fail("v_eq hyperplane misses x".into());
                    }
                }
                (
                    tensor_square(x.as_slice()),
                    "exposed_extreme_outside",
                )
            }
            1 => (
                SymMatrix::j_matrix(n).scale(rng.gen_range(0.1..3.0)),
                "extreme_j",
            ),
            2 => (
                tensor_square(random_boundary(rng, n).as_slice()),
                "non_exposed_extreme_boundary",
            ),
            _ => (
                tensor_square(random_interior(rng, n).as_slice()),
                "not_extreme",
            ),
        };
        let got = cop::ray_classify(&a, 1e-9).map_err(|e| e.to_string())?;
        if got.tag() != expect {
            return fail(format!("expected {expect}, classified {}", got.tag()));
        }
        checked += 1;
    }
    Ok(checked)
}

// --- cp suites -----------------------------------------------------------

fn suite_cp_atoms(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(500) {
        let n = rng.gen_range(cfg.n_min..=cfg.n_max.min(8));
        let k = rng.gen_range(1..=n + 1);
        let a = random_cp_member(rng, n, k);
        let rank = linalg::rank_of(&a, 1e-9);
        let dec = cp::cp_atom_decomposition(&a, 1e-9).map_err(|e| e.to_string())?;
        if dec.atoms.len() != rank {
            return fail(format!(
                "atom count {} but rank {rank}",
                dec.atoms.len()
            ));
        }
        if dec.residual > 1e-8 * (1.0 + a.fro_norm()) {
            return fail(format!("reconstruction residual {:e}", dec.residual));
        }
        let target = a.inner(&SymMatrix::j_matrix(n)) / rank.max(1) as f64;
        for atom in &dec.atoms {
            if soc::classify_point(atom, 1e-9) == PointClass::Exterior {
                return fail("atom escaped the cone".into());
            }
            if (atom.j_form() - target).abs() > 1e-8 * (1.0 + a.fro_norm()) {
                return fail("atom balance deviation exceeds tolerance".into());
            }
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_rank_preservation(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(300) {
        let n = rng.gen_range(cfg.n_min..=cfg.n_max.min(9));
        let d = rng.gen_range(1..=n);
        let vectors: Vec<Vec<f64>> = (0..d).map(|_| gaussian_vec(rng, n)).collect();
        let x = linalg::orthonormalize(n, &vectors, 1e-10);
        if x.dim() != d {
            continue;
        }
        let r = rng.gen_range(1..=d);
        let mut a = SymMatrix::zeros(n);
        for _ in 0..r {
            let coeffs = gaussian_vec(rng, d);
            let mut vec = vec![0.0; n];
            for (c, b) in coeffs.iter().zip(x.basis()) {
                linalg::axpy(&mut vec, *c, b);
            }
            a = a.add(&tensor_square(&vec));
        }
        let compressed = a.congruence(x.basis());
        if linalg::rank_of(&a, 1e-9) != linalg::rank_of(&compressed, 1e-9) {
            return fail("rank changed under the face isomorphism".into());
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_cp_certificates(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(30) {
        let n = rng.gen_range(cfg.n_min..=cfg.n_max.min(7));
        let d = rng.gen_range(1..n);
        let mut vectors = vec![random_interior(rng, n).as_slice().to_vec()];
        while vectors.len() < d {
            vectors.push(gaussian_vec(rng, n));
        }
        let x = linalg::orthonormalize(n, &vectors, 1e-10);
        if x.dim() != d {
            continue;
        }
        let cert = cp::cp_face_certificate(&x).map_err(|e| e.to_string())?;
        let interior = soc::interior_basis(&x).map_err(|e| e.to_string())?;
        let target = cfg.count(100).min(100);
        for _ in 0..target {
            let mut p = vec![0.0; n];
            for b in &interior {
                linalg::axpy(&mut p, rng.gen_range(0.05..1.0), b.as_slice());
            }
            let member = tensor_square(&p);
            let ip = member.inner(&cert.h);
            if ip.abs() > 1e-9 * (1.0 + member.fro_norm() * cert.h.fro_norm()) {
                return fail(format!("face member sees the certificate: {ip:e}"));
            }
        }
        let mut outside = 0;
        let mut attempts = 0;
        while outside < target && attempts < 40 * target {
            attempts += 1;
            let p = random_interior(rng, n);
            if x.residual_norm(p.as_slice()) < 1e-3 {
                continue;
            }
            outside += 1;
            let member = tensor_square(p.as_slice());
            let ip = member.inner(&cert.h);
            if ip <= 1e-10 * (1.0 + member.fro_norm() * cert.h.fro_norm()) {
                return fail("range-escaping member is not separated".into());
            }
        }
        if outside < target {
            return fail("could not sample enough outside members".into());
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_cp_dimensions(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    let samples = cfg.count(200);
    for n in cfg.ns() {
        if n > 6 {
            break;
        }
        for boundary in [false, true] {
            // Interior-meeting subspaces of every dimension.
            for d in 1..=n {
                let cols: Vec<Vec<f64>> =
                    (0..d).map(|j| linalg::unit_vector(n, j)).collect();
                let x = Subspace::from_orthonormal(n, cols).expect("coordinate columns");
                let face = cp::make_cp_face(x, boundary).map_err(|e| e.to_string())?;
                let numeric = cp::numeric_face_dimension(&face, samples, cfg.seed ^ 0xd1);
                if numeric != face.dim() {
                    return fail(format!(
                        "interior n={n} d={d} boundary={boundary}: numeric {numeric} vs closed form {}",
                        face.dim()
                    ));
                }
                checked += 1;
            }
            // Ray subspaces.
            for d in 1..n {
                let mut cols = vec![{
                    let mut c = vec![0.0; n];
                    c[0] = 1.0 / 2.0_f64.sqrt();
                    c[1] = 1.0 / 2.0_f64.sqrt();
                    c
                }];
                for j in 0..d - 1 {
                    cols.push(linalg::unit_vector(n, j + 2));
                }
                if cols.len() > n {
                    continue;
                }
                let x = Subspace::from_orthonormal(n, cols).expect("orthonormal construction");
                let face = cp::make_cp_face(x, boundary).map_err(|e| e.to_string())?;
                if !matches!(face.cls(), SubspaceConeClass::Ray(_)) {
                    return fail(format!("ray construction misclassified at n={n} d={d}"));
                }
                let numeric = cp::numeric_face_dimension(&face, samples, cfg.seed ^ 0xd2);
                if numeric != 1 || face.dim() != 1 {
                    return fail(format!("ray n={n} d={d}: numeric {numeric}"));
                }
                checked += 1;
            }
            // Zero-only subspaces.
            for d in 0..n {
                let cols: Vec<Vec<f64>> =
                    (0..d).map(|j| linalg::unit_vector(n, j + 1)).collect();
                let x = Subspace::from_orthonormal(n, cols).expect("coordinate columns");
                let face = cp::make_cp_face(x, boundary).map_err(|e| e.to_string())?;
                let numeric = cp::numeric_face_dimension(&face, samples, cfg.seed ^ 0xd3);
                if numeric != 0 || face.dim() != 0 {
                    return fail(format!("zero-only n={n} d={d}: numeric {numeric}"));
                }
                checked += 1;
            }
        }
        let _ = rng;
    }
    Ok(checked)
}

fn suite_cp_chain_bound(
    cfg: &VerifyConfig,
    _rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for n in cfg.ns() {
        if n > 8 {
            break;
        }
        let chain = cp::build_longest_chain_cp(n).map_err(|e| e.to_string())?;
        if chain.length != n + 2 {
            return fail(format!("chain length {} at n = {n}", chain.length));
        }
        // Intersection bound: the PSD factor allows n + 1, the halfspace 2.
        if chain.length > (n + 1) + 2 - 1 {
            return fail("chain length exceeds the intersection bound".into());
        }
        let poly = cp::poly_distance_witness_cp(n, 11).map_err(|e| e.to_string())?;
        if poly.length != n - 1 {
            return fail(format!("poly witness length {} at n = {n}", poly.length));
        }
        if poly.length > chain.length - 2 {
            return fail("distance to polyhedrality exceeds the chain bound".into());
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_cp_exposed_rays(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(200) {
        let n = rng.gen_range(cfg.n_min..=cfg.n_max.min(8));
        let a = if rng.gen_bool(0.5) {
            random_interior(rng, n)
        } else {
            random_boundary(rng, n)
        };
        let line = Subspace::from_orthonormal(
            n,
            vec![scale_vec(a.as_slice(), 1.0 / a.norm())],
        )
        .expect("unit column");
        let cert = cp::cp_face_certificate(&line).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let b = if rng.gen_bool(0.5) {
                random_interior(rng, n)
            } else {
                random_boundary(rng, n)
            };
            let cosine = dot(a.as_slice(), b.as_slice()) / (a.norm() * b.norm());
            if cosine.abs() >= 1.0 - 1e-6 {
                continue;
            }
            let square = tensor_square(b.as_slice());
            let ip = square.inner(&cert.h);
            if ip <= 1e-10 * (1.0 + square.fro_norm() * cert.h.fro_norm()) {
                return fail("non-proportional square is not separated".into());
            }
        }
        checked += 1;
    }
    Ok(checked)
}

// --- casebook suites -----------------------------------------------------

fn suite_cop2_oracle(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for _ in 0..cfg.count(500) {
        let b = random_sym(rng, 2, 1.0);
        let verdict = casebook::cop2_copositive(&b).map_err(|e| e.to_string())?;
        let mut grid_min = f64::INFINITY;
        for k in 0..=10_000 {
            let alpha = k as f64 / 10_000.0;
            grid_min = grid_min.min(b.quad_form(&[alpha, 1.0 - alpha]));
        }
        let scale = 1e-6 * (1.0 + b.fro_norm());
        if verdict && grid_min < -scale {
            return fail(format!("criterion accepts, grid refutes at {grid_min:e}"));
        }
        if !verdict && grid_min > scale {
            return fail(format!("criterion rejects, grid min only {grid_min:e}"));
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_casebook_cases(
    _cfg: &VerifyConfig,
    _rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, String> {
    let reports = casebook::run_all().map_err(|e| e.to_string())?;
    for r in &reports {
        if !r.overall {
            let failing: Vec<&str> = r
                .claims
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.description.as_str())
                .collect();
            return fail(format!("case {} failed: {failing:?}", r.case_id));
        }
    }
    Ok(reports.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_small_run_passes() {
        let cfg = VerifyConfig {
            seed: 42,
            n_min: 2,
            n_max: 4,
            samples: Some(20),
        };
        let report = run_verify(&cfg).unwrap();
        for case in &report.cases {
            assert!(case.pass, "{}: {}", case.id, case.details);
        }
        assert!(report.pass);
    }

    #[test]
    fn verify_is_deterministic() {
        let cfg = VerifyConfig {
            seed: 7,
            n_min: 2,
            n_max: 3,
            samples: Some(10),
        };
        let a = serde_json::to_string(&run_verify(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&run_verify(&cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn config_validation() {
        assert!(VerifyConfig::new(0, 51).is_err());
        assert!(VerifyConfig::new(0, 1).is_err());
        assert!(VerifyConfig::new(0, 6).is_ok());
    }
}
